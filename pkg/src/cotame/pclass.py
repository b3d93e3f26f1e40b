"""The classes P_{gamma,delta}, condition (C) and the class-composition bound.

A nonzero six-variable polynomial p lies in P_{gamma,delta} when its w1-degree
is at most gamma, its w2-degree is at most delta and its leading term is a
nonzero multiple of t_f^delta t_g^gamma.  The leading term pins the index, so
classification is a lookup rather than a search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from cotame.coeffs import Rational
from cotame.multipoly import (
    NEG_INFINITY,
    NVARS_BIG,
    W1,
    W2,
    Polynomial,
    RingMismatch,
    ZeroPolynomial,
    pack,
    unpack,
)

# coefficient heights for random class elements
MAX_NUMERATOR = 7
MAX_DENOMINATOR = 7


@dataclass(frozen=True, order=True)
class ClassIndex:
    gamma: int
    delta: int

    def __post_init__(self):
        if self.gamma < 0 or self.delta < 1:
            raise ValueError(f"class index needs gamma >= 0 and delta >= 1, got {tuple(self)}")

    def __iter__(self):
        return iter((self.gamma, self.delta))

    def __str__(self):
        return f"({self.gamma},{self.delta})"

    def to_json(self):
        return [self.gamma, self.delta]


def _index(idx) -> ClassIndex:
    return idx if isinstance(idx, ClassIndex) else ClassIndex(*idx)


def _check_ring(p: Polynomial):
    if p.nvars != NVARS_BIG:
        raise RingMismatch("classes live in the six-variable ring")


def classify(p: Polynomial) -> ClassIndex | None:
    """The unique index with p in P_index, or None if there is none."""
    _check_ring(p)
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial belongs to no class")
    i1, i2, i3, i4, delta, gamma = unpack(p.leading_key())
    if i1 or i2 or i3 or i4 or delta < 1:
        return None
    if p.weighted_degree(W1) > gamma or p.weighted_degree(W2) > delta:
        return None
    return ClassIndex(gamma, delta)


def in_class(p: Polynomial, idx) -> bool:
    idx = _index(idx)
    _check_ring(p)
    if p.is_zero():
        return False
    if p.leading_key() != pack((0, 0, 0, 0, idx.delta, idx.gamma)):
        return False
    return p.weighted_degree(W1) <= idx.gamma and p.weighted_degree(W2) <= idx.delta


@lru_cache(maxsize=None)
def support_slots(gamma: int, delta: int) -> tuple:
    """All exponents a non-leading term of an element of P_{gamma,delta} may use.

    These are the solutions of support conditions (a) and (b), in a fixed
    order so that seeded sampling is reproducible.
    """
    slots = [(0, 0, 0, 0, i5, gamma) for i5 in range(delta)]
    for i6 in range(gamma):
        room = gamma - i6
        for i1, i2, i3, i4 in product(range(room + 1), range(room // 2 + 1),
                                      range(room // 3 + 1), range(room + 1)):
            if i1 + 2 * i2 + 3 * i3 + i4 <= room:
                slots.extend((i1, i2, i3, i4, i5, i6) for i5 in range(delta + 1))
    return tuple(slots)


def _random_coefficient(rng: random.Random):
    while True:
        num = rng.randint(-MAX_NUMERATOR, MAX_NUMERATOR)
        if num:
            return Rational(num, rng.randint(1, MAX_DENOMINATOR))


def random_class_element(idx, rng_seed, term_budget: int = 6) -> Polynomial:
    """A seeded random element of P_idx with up to ``term_budget`` extra terms."""
    idx = _index(idx)
    rng = random.Random(rng_seed)
    slots = support_slots(idx.gamma, idx.delta)
    chosen = rng.sample(range(len(slots)), min(term_budget, len(slots)))
    terms = {pack((0, 0, 0, 0, idx.delta, idx.gamma)): _random_coefficient(rng)}
    for i in sorted(chosen):
        terms[pack(slots[i])] = _random_coefficient(rng)
    return Polynomial(terms, NVARS_BIG)


# -- condition (C) -------------------------------------------------------------

@dataclass(frozen=True)
class CWitness:
    """Indices of the images of t_r, t_f, t_g: (m4, n4), (m5, n5), (m6, n6)."""

    m4: int
    m5: int
    m6: int
    n4: int
    n5: int
    n6: int

    def __post_init__(self):
        if min(self.m4, self.m5, self.m6) < 0 or min(self.n4, self.n5, self.n6) < 1:
            raise ValueError(f"bad witness {self.as_tuple()}")

    @classmethod
    def from_classes(cls, r_idx, f_idx, g_idx) -> CWitness:
        r_idx, f_idx, g_idx = map(_index, (r_idx, f_idx, g_idx))
        return cls(r_idx.gamma, f_idx.gamma, g_idx.gamma,
                   r_idx.delta, f_idx.delta, g_idx.delta)

    def as_tuple(self) -> tuple:
        return (self.m4, self.m5, self.m6, self.n4, self.n5, self.n6)

    def violations(self, type_) -> list:
        """The inequalities of (c2) and (c3) that fail for the given type."""
        g1, g2, g3 = type_
        m4, m6, n4, n6 = self.m4, self.m6, self.n4, self.n6
        checks = (
            ("m6 >= g1", m6 >= g1),
            ("2*m6 >= g2", 2 * m6 >= g2),
            ("3*m6 >= g3", 3 * m6 >= g3),
            ("m6 >= m4", m6 >= m4),
            ("n6-1 >= g1+1", n6 - 1 >= g1 + 1),
            ("2*(n6-1) >= g2+1", 2 * (n6 - 1) >= g2 + 1),
            ("3*(n6-1) >= g3+1", 3 * (n6 - 1) >= g3 + 1),
            ("n6-1 >= n4", n6 - 1 >= n4),
        )
        return [label for label, ok in checks if not ok]

    def satisfies(self, type_) -> bool:
        return not self.violations(type_)

    def __str__(self):
        return "({},{},{};{},{},{})".format(*self.as_tuple())

    def to_json(self):
        return list(self.as_tuple())


def condition_C(lift, u, type_, images=None) -> CWitness | None:
    """Classify phi'_u(lift(t)) for t = t_r, t_f, t_g and test (c2), (c3).

    ``images`` may hold the three already computed images (R, F, G) to skip
    recomputing them.
    """
    if images is None:
        from cotame.objects import phi_prime

        if lift.source != NVARS_BIG:
            raise RingMismatch("condition (C) needs a six-variable lift")
        pp = phi_prime(u)
        images = [pp.apply(lift[i]) for i in (3, 4, 5)]
    classes = []
    for im in images:
        if im.is_zero():
            return None
        idx = classify(im)
        if idx is None:
            return None
        classes.append(idx)
    w = CWitness.from_classes(*classes)
    return w if w.satisfies(type_) else None


def compose_class_bound(w: CWitness, idx) -> ClassIndex:
    idx = _index(idx)
    return ClassIndex(w.m5 * idx.delta + w.m6 * idx.gamma,
                      w.n5 * idx.delta + w.n6 * idx.gamma)


def _degree_bound(p: Polynomial, image_degrees) -> int | float:
    best = NEG_INFINITY
    for exps, _ in p.items():
        used = [(e, d) for e, d in zip(exps, image_degrees) if e]
        if any(d == NEG_INFINITY for _, d in used):
            continue
        best = max(best, sum(e * d for e, d in used))
    return best


def composed_in_class(p: Polynomial, images, idx) -> bool:
    """Decide whether p(images) lies in P_idx without expanding p(images).

    The w1- and w2-degrees of p(images) are bounded by substituting the
    degrees of the images.  Under those bounds a term carrying t_g^gamma has
    no x or t_r factor, so the leading term is t_f^delta t_g^gamma exactly
    when that monomial survives in p(images) at x1 = x2 = x3 = t_r = 0, which
    only needs the (t_f, t_g) part of each image.
    """
    idx = _index(idx)
    _check_ring(p)
    images = list(images)
    for im in images:
        _check_ring(im)
    if p.is_zero():
        return False
    if _degree_bound(p, [im.weighted_degree(W1) for im in images]) > idx.gamma:
        return False
    if _degree_bound(p, [im.weighted_degree(W2) for im in images]) > idx.delta:
        return False
    tf, tg = Polynomial.gen(4, NVARS_BIG, p.domain), Polynomial.gen(5, NVARS_BIG, p.domain)
    zero = Polynomial.zero(NVARS_BIG, p.domain)
    corner = [zero, zero, zero, zero, tf, tg]
    low = p.substitute([im.substitute(corner) for im in images])
    return in_class(low, idx)
