import pytest

from cotame.coeffs import ParamField, Rational
from cotame.derivations import (
    CapExceeded,
    Derivation,
    Endomorphism,
    compose,
    derive,
    endo_equal,
    exp_apply,
    exp_endomorphism,
    nilpotency_index,
)
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial, RingMismatch
from cotame.objects import base_polys, beta, beta_inverse, delta, delta_prime, phi, phi_prime, pi_map

x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
X1, X2, X3, TR, TF, TG = Polynomial.gens(NVARS_BIG)
f, r, g = base_polys()
D, Dp = delta(), delta_prime()


def test_derive_on_generators():
    assert derive(Dp, TR) == -TF * TG
    assert derive(D, x2) == 4 * x1 * r - g
    assert derive(D, x3) == 6 * x2 * r + 2 * f ** 2
    assert derive(D, f).is_zero() and derive(D, g).is_zero()


def test_delta_prime_kills_t_f_and_t_g():
    assert Dp.images[4].is_zero() and Dp.images[5].is_zero()


def test_nilpotency_indices():
    assert nilpotency_index(Dp, TF) == 1
    assert nilpotency_index(Dp, TR) == 2
    # regression constants found by iterating the derivation to zero
    assert [nilpotency_index(D, x) for x in (x1, x2, x3)] == [3, 5, 7]
    assert [nilpotency_index(Dp, x) for x in Polynomial.gens(NVARS_BIG)] == [3, 5, 7, 2, 1, 1]


def test_cap_exceeded():
    d = Derivation([Polynomial.one(NVARS_SMALL), x1, x2])
    with pytest.raises(CapExceeded):
        nilpotency_index(d, x3, cap=2)
    non_nilpotent = Derivation([x1, x2, x3])
    with pytest.raises(CapExceeded):
        exp_apply(non_nilpotent, 1, x1, cap=8)


def test_exp_apply_matches_display(u):
    zero = Derivation([Polynomial.zero(NVARS_SMALL)] * 3)
    assert exp_apply(zero, u, x1 + x2) == x1 + x2
    K = u.field
    got = exp_apply(Dp, u, X1)
    assert got == Polynomial.parse("x1 - 2*u*tr*tf + u^2*tf^2*tg", NVARS_BIG, K)
    want2 = ("x2 + 4*u*x1*tr - u*tg - 4*u^2*tr^2*tf - 2*u^2*x1*tf*tg"
             " + 4*u^3*tr*tf^2*tg - u^4*tf^3*tg^2")
    got2 = exp_apply(Dp, u, X2)
    assert got2 == Polynomial.parse(want2, NVARS_BIG, K) and len(got2) == 7


def test_exp_endomorphism_on_t_variables(u):
    e = exp_endomorphism(Dp, u)
    assert e[3] == TR - TF * TG * u
    assert e[4] == TF and e[5] == TG
    ident = exp_endomorphism(D, 0)
    assert endo_equal(ident, Endomorphism.identity(NVARS_SMALL))
    assert exp_endomorphism(D, 1).apply(f) == f


def test_group_law():
    K = ParamField(invertible=("u", "v"))
    u, v = K.symbols(["u", "v"])
    # on six variables the images are small enough to compose symbolically
    ident = Endomorphism.identity(NVARS_BIG, K)
    assert endo_equal(compose(phi_prime(-u), phi_prime(u)), ident)
    assert endo_equal(compose(phi_prime(u), phi_prime(v)), phi_prime(u + v))
    # pi transports it: phi_u(phi_v(x_i)) = pi(phi'_u(phi'_v(x_i)))
    pi = pi_map()
    for i in range(3):
        lhs = pi.apply(phi_prime(u).apply(phi_prime(v)[i]))
        assert lhs == phi(u + v)[i]


def test_group_law_direct_on_x1():
    got = phi(Rational(1)).apply(phi(Rational(2))[0])
    assert got == phi(Rational(3))[0]


def test_pi_intertwines(u):
    lhs = compose(pi_map(), phi_prime(u))
    rhs = compose(phi(u), pi_map())
    assert endo_equal(lhs, rhs)


def test_conjugation_by_beta():
    K = ParamField(invertible=("u", "v"))
    u, v = K.symbols(["u", "v"])
    lhs = compose(beta(v), compose(phi(u), beta_inverse(v)))
    assert endo_equal(lhs, phi(u * v ** 7))


def test_endo_equal():
    ident = Endomorphism.identity(NVARS_SMALL)
    assert endo_equal(ident, ident)
    assert not endo_equal(phi(1), phi(2))
    with pytest.raises(RingMismatch):
        endo_equal(ident, Endomorphism.identity(NVARS_BIG))


def test_compose_checks_rings():
    with pytest.raises(RingMismatch):
        compose(phi(1), phi_prime(1))


def test_apply_substitutes(u):
    b = beta(Rational(2))
    assert b.apply(f) == f * 16
    assert b.apply(g) == g * 512
