"""Property suites, each on at least 50 seeded samples, all exact."""

from hypothesis import given, settings
from hypothesis import strategies as st

from cotame.coeffs import Rational
from cotame.derivations import derive, exp_apply
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial, ZeroPolynomial
from cotame.objects import base_polys, delta, delta_prime, phi, phi_prime, pi_map
from cotame.pclass import ClassIndex, classify, in_class, random_class_element

SAMPLES = settings(max_examples=50)
f, r, g = base_polys()

rationals = st.builds(
    Rational,
    st.integers(-7, 7).filter(bool),
    st.integers(1, 7),
)


def polys(nvars, max_exp=2, max_terms=4):
    monomial = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(monomial, rationals, min_size=1, max_size=max_terms).map(
        lambda d: Polynomial.from_dict(d, nvars))


@SAMPLES
@given(polys(NVARS_SMALL), polys(NVARS_SMALL))
def test_leibniz_delta(p, q):
    D = delta()
    assert derive(D, p * q) == derive(D, p) * q + p * derive(D, q)


@SAMPLES
@given(polys(NVARS_BIG, max_exp=2), polys(NVARS_BIG, max_exp=2))
def test_leibniz_delta_prime(p, q):
    D = delta_prime()
    assert derive(D, p * q) == derive(D, p) * q + p * derive(D, q)


@SAMPLES
@given(rationals, polys(NVARS_BIG, max_exp=2, max_terms=3), polys(NVARS_BIG, max_exp=2, max_terms=3))
def test_exp_is_a_homomorphism(u, p, q):
    D = delta_prime()
    assert exp_apply(D, u, p * q) == exp_apply(D, u, p) * exp_apply(D, u, q)
    assert exp_apply(D, u, p + q) == exp_apply(D, u, p) + exp_apply(D, u, q)


@SAMPLES
@given(rationals, polys(NVARS_SMALL, max_exp=1, max_terms=3))
def test_exp_of_delta_is_a_homomorphism(u, p):
    # the series and the ring map built from generator images agree
    assert exp_apply(delta(), u, p) == phi(u).apply(p)


@SAMPLES
@given(rationals)
def test_kernel_is_fixed(u):
    m = phi(u)
    assert m.apply(f) == f
    assert m.apply(g) == g


@SAMPLES
@given(rationals, rationals)
def test_one_parameter_law(u, v):
    # phi_u(phi_v(x_i)) computed through the lift: pi o phi'_u o phi'_v
    pi = pi_map()
    inner = phi_prime(v)
    outer = phi_prime(u)
    law = phi(u + v)
    for i in range(3):
        assert pi.apply(outer.apply(inner[i])) == law[i]
    for i in range(NVARS_BIG):
        assert outer.apply(inner[i]) == phi_prime(u + v)[i]


def _perturbed(seed, gamma, delta_, extra):
    p = random_class_element((gamma, delta_), seed)
    if extra is not None:
        p = p + Polynomial.from_dict({extra[0]: extra[1]}, NVARS_BIG)
    return p


@SAMPLES
@given(
    st.integers(0, 10 ** 6),
    st.integers(0, 4),
    st.integers(1, 4),
    st.none() | st.tuples(st.tuples(*[st.integers(0, 3)] * NVARS_BIG), rationals),
)
def test_classify_in_class_coherence(seed, gamma, delta_, extra):
    p = _perturbed(seed, gamma, delta_, extra)
    try:
        idx = classify(p)
    except ZeroPolynomial:
        return
    if idx is not None:
        assert in_class(p, idx)
    for cand in {(gamma, delta_), (gamma + 1, delta_), (gamma, delta_ + 1)}:
        if in_class(p, cand):
            assert idx == ClassIndex(*cand)
