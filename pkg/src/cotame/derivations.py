"""Derivations, exponentials of locally nilpotent ones, and ring maps."""

from __future__ import annotations

from cotame.coeffs import QQ, ParamFraction, Rational
from cotame.multipoly import NAMES, NVARS_BIG, Polynomial, RingMismatch, _unify_domain

DEFAULT_CAP = 64


class CapExceeded(RuntimeError):
    """D^l(p) was still nonzero at the iteration cap."""


def _common_domain(polys, start=QQ):
    dom = start
    for p in polys:
        dom = _unify_domain(dom, p.domain)
    return dom


class Derivation:
    """A derivation given by its values on the generators."""

    __slots__ = ("images", "nvars", "domain")

    def __init__(self, images):
        images = list(images)
        nvars = len(images)
        for im in images:
            if im.nvars != nvars:
                raise RingMismatch("derivation images must live in the source ring")
        self.domain = _common_domain(images)
        self.images = tuple(im.with_domain(self.domain) for im in images)
        self.nvars = nvars

    def __call__(self, p: Polynomial) -> Polynomial:
        return derive(self, p)

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def scaled(self, c) -> Derivation:
        return Derivation([im * c for im in self.images])

    def to_text(self) -> str:
        return "\n".join(f"{n} -> {im}" for n, im in zip(NAMES, self.images))

    def to_json(self) -> dict:
        return {n: str(im) for n, im in zip(NAMES, self.images)}


def derive(D: Derivation, p: Polynomial) -> Polynomial:
    if p.nvars != D.nvars:
        raise RingMismatch(f"derivation on {D.nvars} variables applied to {p.nvars}")
    total = Polynomial.zero(p.nvars, _unify_domain(D.domain, p.domain))
    for v, im in enumerate(D.images):
        if im:
            dp = p.partial(v)
            if dp:
                total = total + dp * im
    return total


def nilpotency_index(D: Derivation, p: Polynomial, cap: int = DEFAULT_CAP) -> int:
    """Smallest l <= cap with D^l(p) = 0."""
    q = p
    for l in range(cap + 1):
        if not q:
            return l
        if l < cap:
            q = derive(D, q)
    raise CapExceeded(f"D^{cap}(p) is nonzero")


def exp_apply(D: Derivation, u, p: Polynomial, cap: int = DEFAULT_CAP) -> Polynomial:
    """(exp uD)(p) = sum_i u^i D^i(p) / i!, summed until D^i(p) vanishes."""
    total = Polynomial.zero(p.nvars, _unify_domain(D.domain, p.domain))
    q = p
    coeff = Rational(1)
    upow = Rational(1)
    for i in range(cap + 1):
        if not q:
            return total
        if i == cap:
            break
        total = total + q * (upow * coeff)
        q = derive(D, q)
        upow = upow * u
        coeff = coeff / (i + 1)
        if isinstance(upow, ParamFraction) and not upow or upow == 0:
            return total
    raise CapExceeded(f"D^{cap}(p) is nonzero")


class Endomorphism:
    """A ring map given by generator images (source ring -> target ring).

    Powers of the images are cached, so applying the same map to many
    polynomials reuses the expensive image powers.
    """

    __slots__ = ("images", "source", "target", "domain", "_powers")

    def __init__(self, images):
        images = list(images)
        if len(images) not in (3, NVARS_BIG):
            raise ValueError("an endomorphism needs 3 or 6 images")
        target = images[0].nvars
        for im in images:
            if im.nvars != target:
                raise RingMismatch("endomorphism images live in different rings")
        self.domain = _common_domain(images)
        self.images = tuple(im.with_domain(self.domain) for im in images)
        self.source = len(images)
        self.target = target
        self._powers = {}

    @classmethod
    def identity(cls, nvars: int = NVARS_BIG, domain=QQ) -> Endomorphism:
        return cls(Polynomial.gens(nvars, domain))

    def apply(self, p: Polynomial, budget: int | None = None) -> Polynomial:
        if p.nvars != self.source:
            raise RingMismatch(f"map on {self.source} variables applied to {p.nvars}")
        if p.domain != self.domain and _unify_domain(p.domain, self.domain) != self.domain:
            return p.substitute(self.images, budget)
        return p.substitute(self.images, budget, self._powers)

    __call__ = apply

    def __getitem__(self, i: int) -> Polynomial:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Endomorphism) and endo_equal(self, other)

    def __hash__(self):
        return hash(self.images)

    def evaluate_params(self, assignment) -> Endomorphism:
        return Endomorphism([im.evaluate_params(assignment) for im in self.images])

    def to_text(self) -> str:
        return "\n".join(f"{n} -> {im}" for n, im in zip(NAMES, self.images))

    def to_json(self) -> dict:
        return {n: str(im) for n, im in zip(NAMES, self.images)}


def exp_endomorphism(D: Derivation, u, cap: int = DEFAULT_CAP) -> Endomorphism:
    gens = Polynomial.gens(D.nvars, D.domain)
    return Endomorphism([exp_apply(D, u, x, cap) for x in gens])


def compose(outer: Endomorphism, inner: Endomorphism, budget: int | None = None) -> Endomorphism:
    """outer o inner, i.e. x_i -> outer(inner(x_i))."""
    if inner.target != outer.source:
        raise RingMismatch(f"cannot compose: inner lands in {inner.target} variables, "
                           f"outer starts from {outer.source}")
    return Endomorphism([outer.apply(im, budget) for im in inner.images])


def endo_equal(a: Endomorphism, b: Endomorphism) -> bool:
    if a.source != b.source or a.target != b.target:
        raise RingMismatch("endomorphisms between different rings")
    return all(x == y for x, y in zip(a.images, b.images))
