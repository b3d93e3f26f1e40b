import random

import pytest

from cotame.coeffs import ParamField, Rational
from cotame.derivations import Endomorphism
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial
from cotame.objects import (
    AffineMap,
    AffineType,
    CaseConstraintViolated,
    TypeMismatch,
    UndecidableNonzero,
    affine_type,
    base_polys,
    beta,
    delta_prime,
    derived_params,
    hat_lift,
    in_B,
    is_lift,
    modified_lift,
)

X1, X2, X3, TR, TF, TG = Polynomial.gens(NVARS_BIG)
f, r, g = base_polys()


def _random_map(rng):
    while True:
        rows = [[Rational(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        d = [Rational(rng.randint(-3, 3)) for _ in range(3)]
        alpha = AffineMap(rows, d, check=False)
        if alpha.determinant():
            return alpha


def test_base_polys():
    x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
    assert len(f) == 2
    assert r == x1 * x2 * x3 - x2 ** 3 + x1 ** 2 and len(r) == 3


def test_delta_prime_on_t_f():
    assert delta_prime().images[4].is_zero()


def test_beta_scales_f_and_g(u):
    fk, gk = f.with_domain(u.field), g.with_domain(u.field)
    assert beta(u).apply(fk) == fk * u ** 4
    assert beta(u).apply(gk) == gk * u ** 9


def test_affine_types():
    assert affine_type(AffineMap.identity()) == AffineType(1, 2, 3)
    assert affine_type(AffineMap.diagonal(Rational(2))) == AffineType(1, 2, 3)
    rows = [[1, 2, 3], [0, 5, 0], [7, 0, 0]]
    assert affine_type(AffineMap(rows)) == AffineType(3, 2, 1)
    with pytest.raises(TypeMismatch):
        affine_type(AffineMap(rows), claimed=(3, 3, 1))


def test_symbolic_type_needs_decidable_pivots():
    K = ParamField(invertible=("c1",))
    s = dict(K.namespace())
    rows = [[s["a1"], s["a2"], s["a3"]], [s["b1"], s["b2"], K(0)], [s["c1"], K(0), K(0)]]
    alpha = AffineMap(rows, [K(0)] * 3, check=False)
    with pytest.raises(UndecidableNonzero):
        affine_type(alpha, claimed=(3, 2, 1))
    assert affine_type(alpha, claimed=(3, 2, 1), nonzero=[s["b2"], s["a3"]]) == AffineType(3, 2, 1)


def test_in_B():
    assert in_B(AffineMap.diagonal(Rational(2)))
    assert in_B(AffineMap.identity())
    c3 = Rational(3)
    degenerate = AffineMap([[c3 ** 3, 0, 0], [0, c3 ** 2, 0], [0, 0, c3]])
    assert in_B(degenerate)
    assert not in_B(AffineMap([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 1]))


def test_noninvertible_map_rejected():
    with pytest.raises(ValueError):
        AffineMap([[1, 0, 0], [0, 1, 0], [0, 0, 0]])


def test_hat_lift_identity():
    lift = hat_lift(AffineMap.identity())
    assert lift[4] == TF
    assert lift[3] == X2 * TF + X1 ** 2
    assert is_lift(lift, AffineMap.identity())
    assert is_lift(Endomorphism.identity(NVARS_BIG), AffineMap.identity())
    bad = Endomorphism([X1, X2, X3, TR, TF + 1, TG])
    assert not is_lift(bad, AffineMap.identity())


def test_hat_lift_is_lift_random():
    rng = random.Random(7)
    for _ in range(20):
        alpha = _random_map(rng)
        assert is_lift(hat_lift(alpha), alpha)


def test_derived_params():
    alpha = AffineMap([[1, 0, 2], [0, 1, 0], [3, 0, 1]], [1, 2, 3])
    dp = derived_params(alpha)
    assert dp.P == 3 * 3 - 0 + 1 * 1
    assert dp.T == dp.P * 0 - dp.Q * 3


def test_L5_iii_lift():
    c3, b3, a3 = Rational(2), Rational(3), Rational(5)
    a2 = b3 * c3 / 2
    a1 = c3 ** 3
    # a1*a3 - a2^2 = 0 fixes a3
    a3 = a2 ** 2 / a1
    alpha = AffineMap([[a1, a2, a3], [0, c3 ** 2, b3], [0, 0, c3]])
    lift = modified_lift(alpha, "L5_iii")
    assert lift[3] == X1 * TF * (b3 * c3 ** 5 / 2) + TR * c3 ** 6
    assert is_lift(lift, alpha)
    with pytest.raises(CaseConstraintViolated):
        modified_lift(AffineMap([[1, 0, 0], [1, 1, 0], [0, 0, 1]]), "L5_iii")


def test_L6_lift_from_case_chain():
    from cotame.verify.cases import get_case
    from cotame.verify.lemmas import sample_instance

    spec = get_case("L6.viii")
    inst = sample_instance(spec, spec.branches[0], random.Random(3))
    alpha = inst.alpha
    lift = modified_lift(alpha, "L6_vi_viii")
    hat = hat_lift(alpha)
    dp = derived_params(alpha)
    fx = f.embed()
    assert lift[3] == hat[3] - (TF - fx) * (dp.T ** 2 / dp.P ** 2)
    assert is_lift(lift, alpha)


def test_unknown_modified_lift():
    with pytest.raises(ValueError):
        modified_lift(AffineMap.identity(), "nope")
