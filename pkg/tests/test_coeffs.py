import pytest

from cotame.coeffs import (
    QQ,
    NotAMonomialUnit,
    ParamField,
    Rational,
    ZeroDenominator,
    as_rational,
    evaluate_expression,
    format_coeff,
    format_rational,
)

K = ParamField(invertible=("c1", "c3", "P", "u"))
c1, c2, c3, P, T, b1 = K.symbols(["c1", "c2", "c3", "P", "T", "b1"])


def test_rational_basics():
    assert Rational(1, 2) + Rational(1, 3) == Rational(5, 6)
    q = Rational(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert format_rational(Rational(0)) == "0"
    assert format_rational(Rational(-3, 2)) == "-3/2"


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(3) == 3


def test_monomial_denominators_multiply():
    assert (c1 / P) * (c1 / P) == c1 ** 2 / P ** 2


def test_cross_multiplied_sum_normalizes():
    got = P * b1 / c1 + (-T / c1)
    assert got == (P * b1 - T) / c1


def test_invert_monomial():
    assert (P ** 2).invert_monomial() == 1 / P ** 2
    inv = (c1 * 4).invert_monomial()
    assert inv * c1 == Rational(1, 4)
    with pytest.raises(NotAMonomialUnit):
        (P + c1).invert_monomial()
    with pytest.raises(NotAMonomialUnit):
        c2.invert_monomial()


def test_equality_after_substitution():
    sub_c2 = -(c1 ** 2) / P
    sub_c3 = c1 ** 3 / P ** 2
    lhs = (P * sub_c2 + c1 ** 2) ** 2 / c1
    rhs = P ** 2 * sub_c3 + 2 * P * c1 * sub_c2 + c1 ** 3
    assert lhs == rhs
    assert K(0) == K(0) / P ** 5
    u = K.symbol("u")
    assert u ** 7 == u * u ** 6


def test_evaluate():
    assert (c1 ** 2 / P).evaluate({"c1": 3, "P": 2}) == Rational(9, 2)
    t_sub = c1 ** 5 / P ** 2
    assert t_sub.evaluate({"c1": 1, "P": 1}) == 1
    with pytest.raises(ZeroDenominator):
        (c1 / P).evaluate({"c1": 1, "P": 0})


def test_normalized_zero_has_trivial_denominator():
    z = c1 / P - c1 / P
    assert not z
    assert z.den == K.zero_exp


def test_fields_do_not_mix():
    other = ParamField(invertible=("u",))
    with pytest.raises(ValueError):
        c1 + other.symbol("c1")


def test_format_coeff_and_expressions():
    neg, body, is_one = format_coeff(Rational(-1))
    assert neg and is_one
    ns = {"x": Rational(2), "y": Rational(3)}
    assert evaluate_expression("x^3 - y/2", ns) == Rational(13, 2)
    assert QQ(5) == 5
