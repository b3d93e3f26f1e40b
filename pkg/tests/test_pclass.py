import pytest

from cotame.coeffs import Rational
from cotame.derivations import Endomorphism
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial, RingMismatch, ZeroPolynomial
from cotame.objects import phi_prime, pi_map
from cotame.pclass import (
    ClassIndex,
    CWitness,
    classify,
    compose_class_bound,
    composed_in_class,
    condition_C,
    in_class,
    random_class_element,
    support_slots,
)

X1, X2, X3, TR, TF, TG = Polynomial.gens(NVARS_BIG)
L2_TUPLE = CWitness(8, 6, 15, 11, 8, 20)
L6_IV_TUPLE = CWitness(5, 3, 7, 8, 4, 12)


def test_classify_examples(u):
    assert classify(TF) == ClassIndex(0, 1)
    assert classify(phi_prime(u)[1]) == ClassIndex(2, 3)
    assert classify(X1) is None
    assert classify(TG) is None  # delta = 0
    with pytest.raises(ZeroPolynomial):
        classify(Polynomial.zero(NVARS_BIG))
    with pytest.raises(RingMismatch):
        classify(Polynomial.gen(0, NVARS_SMALL))


def test_classify_rejects_weight_excess():
    # lt is tf^2*tg but x1^2 has w1-degree 2 > 1
    p = TF ** 2 * TG + X1 ** 2
    assert classify(p) is None
    assert not in_class(p, (1, 2))


def test_in_class_examples(u):
    p3 = phi_prime(u)[2]
    assert in_class(p3, (3, 4))
    assert not in_class(p3, (4, 4))
    assert in_class(TF ** 2 * TG ** 2 + X1 ** 2, (2, 2))
    assert not in_class(Polynomial.zero(NVARS_BIG), (1, 1))


def test_class_index_validation():
    with pytest.raises(ValueError):
        ClassIndex(1, 0)
    assert tuple(ClassIndex(2, 3)) == (2, 3)
    assert str(ClassIndex(2, 3)) == "(2,3)"


def test_random_element_budget_zero():
    p = random_class_element((2, 3), rng_seed=5, term_budget=0)
    assert len(p) == 1
    assert classify(p) == ClassIndex(2, 3)


def test_support_slots_small_case():
    slots = set(support_slots(1, 1))
    assert (0, 0, 0, 0, 0, 1) in slots  # t_g
    assert (1, 0, 0, 0, 0, 0) in slots  # x1
    assert (0, 0, 0, 1, 0, 0) in slots  # t_r
    assert (0, 0, 0, 0, 0, 0) in slots  # constant
    assert (0, 1, 0, 0, 0, 0) not in slots  # x2 has weight 2


def test_random_elements_are_members():
    for seed in range(40):
        idx = (seed % 4, 1 + seed % 3)
        p = random_class_element(idx, rng_seed=seed)
        assert in_class(p, idx)
        assert classify(p) == ClassIndex(*idx)


def test_random_elements_are_seeded():
    assert random_class_element((2, 2), 9) == random_class_element((2, 2), 9)


def test_lemma_1_degree():
    pi = pi_map()
    for g in range(1, 4):
        for d in range(1, 4):
            p = random_class_element((g, d), rng_seed=100 * g + d)
            assert pi.apply(p).total_degree() == 5 * g + 2 * d


def test_witness_conditions():
    assert L6_IV_TUPLE.satisfies((3, 3, 3))
    assert L2_TUPLE.satisfies((3, 2, 3))
    bad = CWitness(5, 3, 2, 8, 4, 3)
    assert "m6 >= g1" in bad.violations((3, 3, 3))
    assert "n6-1 >= n4" in bad.violations((3, 3, 3))
    assert str(L2_TUPLE) == "(8,6,15;11,8,20)"
    assert L2_TUPLE.to_json() == [8, 6, 15, 11, 8, 20]


def test_compose_class_bound_examples():
    assert compose_class_bound(L2_TUPLE, (3, 4)) == ClassIndex(69, 92)
    assert compose_class_bound(L6_IV_TUPLE, (3, 4)) == ClassIndex(33, 52)
    assert compose_class_bound(L6_IV_TUPLE, (0, 1)) == ClassIndex(3, 4)


def test_condition_C_identity_lift_is_rejected():
    assert condition_C(Endomorphism.identity(NVARS_BIG), Rational(1), (1, 2, 3)) is None


def _small_images():
    # phi'_2 after the hat lift of a type (3,3,3) map; small enough to expand
    from cotame.objects import AffineMap, hat_lift

    alpha = AffineMap([[1, 0, 0], [0, 1, 0], [1, 1, 1]], [0, 0, 0])
    pp = phi_prime(Rational(2))
    lift = hat_lift(alpha)
    return [pp.apply(lift[i]) for i in range(6)]


def test_composed_in_class_matches_expansion():
    images = _small_images()
    w = CWitness.from_classes(*(classify(images[i]) for i in (3, 4, 5)))
    for seed in range(12):
        idx = ClassIndex(seed % 2, 1 + seed % 2)
        p = random_class_element(idx, rng_seed=seed, term_budget=3)
        q = p.substitute(images)
        for target in (compose_class_bound(w, idx), classify(q), ClassIndex(0, 1)):
            if target is None:
                continue
            assert composed_in_class(p, images, target) == in_class(q, target)


def test_composed_in_class_rejects_small_bounds():
    images = _small_images()
    p = random_class_element((1, 1), rng_seed=3)
    idx = classify(p.substitute(images))
    assert composed_in_class(p, images, idx)
    assert not composed_in_class(p, images, (idx.gamma - 1, idx.delta))
    assert not composed_in_class(p, images, (idx.gamma, idx.delta + 1))
    assert not composed_in_class(Polynomial.zero(NVARS_BIG), images, idx)
