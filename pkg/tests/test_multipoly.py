import pytest

from cotame.coeffs import ParamField, Rational
from cotame.multipoly import (
    MAX_EXPONENT,
    NEG_INFINITY,
    NVARS_BIG,
    NVARS_SMALL,
    W1,
    W2,
    BudgetExceeded,
    ExponentOverflow,
    Polynomial,
    RingMismatch,
    jacobian_det3,
    monomial,
    pack,
    unpack,
)
from cotame.objects import base_polys, phi_prime

x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
X1, X2, X3, TR, TF, TG = Polynomial.gens(NVARS_BIG)
f, r, g = base_polys()


def test_pack_roundtrip():
    exps = (1, 2, 3, 4, 5, 511)
    assert unpack(pack(exps)) == exps
    assert pack((1, 0, 0, 0, 0, 0)) + pack((0, 2, 0, 0, 0, 0)) == pack((1, 2, 0, 0, 0, 0))


def test_exponent_overflow_detected():
    with pytest.raises(ExponentOverflow):
        pack((MAX_EXPONENT + 1, 0, 0, 0, 0, 0))
    with pytest.raises(ExponentOverflow):
        TF ** 300 * TF ** 300


def test_square_of_f():
    assert f * f == x1 ** 2 * x3 ** 2 - 2 * x1 * x2 ** 2 * x3 + x2 ** 4
    assert str(f) == "x1*x3 - x2^2"


def test_trivial_arithmetic():
    assert TF ** 0 == Polynomial.one(NVARS_BIG)
    p = TR * TF + X1
    assert (p + p.scale(-1)).is_zero()
    assert (p - p) == Polynomial.zero(NVARS_BIG)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        x1 + X1


def test_substitute_pi_on_t_f():
    images = [X1, X2, X3, r.embed(), f.embed(), g.embed()]
    assert TF.substitute(images) == f.embed()
    p = X1 * TG + TR ** 2
    assert p.substitute(Polynomial.gens(NVARS_BIG)) == p


def test_substitute_product_matches_brute_force():
    images = [X1, X2, X3, r.embed(), f.embed(), g.embed()]
    got = (TR * TF).substitute(images)
    want = (x2 * f + x1 ** 2) * (x1 * x3 - x2 ** 2)
    assert got == want.embed()
    assert got.total_degree() == 5
    # the expansion has 5 terms after x1*x2^3*x3 combines
    assert len(got) == 5


def test_partials():
    assert f.partial(1) == -2 * x2
    assert Polynomial.constant(7, NVARS_SMALL).partial(0).is_zero()
    want = f ** 2 + x3 * 2 * f * x1 + 2 * x1 * x2 * x1
    assert g.partial(2) == want


def test_weighted_degrees(u):
    assert (X1 * X2 ** 2 * TG).weighted_degree(W1) == 6
    assert (TF ** 5).weighted_degree(W1) == 0
    assert (TF ** 5).weighted_degree(W2) == 5
    p3 = phi_prime(u)[2]
    assert p3.weighted_degree(W1) == 3
    assert p3.weighted_degree(W2) == 4


def test_total_degree():
    assert (f.total_degree(), r.total_degree(), g.total_degree()) == (2, 3, 5)
    assert Polynomial.one(NVARS_SMALL).total_degree() == 0
    assert Polynomial.zero(NVARS_SMALL).total_degree() == NEG_INFINITY


def test_leading_term_order(u):
    p = TF ** 2 * TG + X3 * TG + X1 ** 5
    assert p.leading_term().exponent == (0, 0, 1, 0, 0, 1)
    pp = phi_prime(u)
    lt1 = pp[0].leading_term()
    assert lt1.exponent == (0, 0, 0, 0, 2, 1) and lt1.coefficient == u ** 2
    lt2 = pp[1].leading_term()
    assert lt2.exponent == (0, 0, 0, 0, 3, 2) and lt2.coefficient == -(u ** 4)


def test_support(u):
    pp = phi_prime(u)
    assert pp[0].support() == {(1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 1, 0), (0, 0, 0, 0, 2, 1)}
    assert Polynomial.zero(NVARS_BIG).support() == set()
    assert len(pp[2].support()) == 13


def test_jacobian():
    assert jacobian_det3(f, g, f).is_zero()
    assert jacobian_det3(f, g, x1) == -2 * r * f
    assert jacobian_det3(f, g, r) == -f * g


def test_parse_roundtrip(u):
    K = u.field
    p = phi_prime(u)[1]
    assert Polynomial.parse(str(p), NVARS_BIG, K) == p
    q = Polynomial.parse("3/2*x1^2*x3 - x2 + 7", NVARS_SMALL)
    assert q == Rational(3, 2) * x1 ** 2 * x3 - x2 + 7


def test_symbolic_coefficients_group():
    K = ParamField(invertible=("P", "c1"))
    P, c1 = K.symbols(["P", "c1"])
    p = Polynomial.gen(0, NVARS_SMALL, K) * (P / c1) + Polynomial.gen(0, NVARS_SMALL, K) * c1
    assert p.coefficient((1, 0, 0)) == P / c1 + c1
    assert len(p) == 1


def test_budget():
    s = x1 + x2 + x3 + 1
    with pytest.raises(BudgetExceeded):
        s.mul(s ** 6, budget=10)
    assert len(s.mul(s, budget=100)) == 10


def test_monomial_helper():
    assert monomial((0, 0, 0, 0, 2, 1), 3) == 3 * TF ** 2 * TG


def test_to_json_is_stable(u):
    p = phi_prime(u)[0]
    assert p.to_json() == Polynomial.parse(str(p), NVARS_BIG, u.field).to_json()
