"""Sparse polynomials in x1, x2, x3 (and optionally t_r, t_f, t_g).

Exponent vectors are packed into one Python int, a 10-bit field per
generator.  The layout puts t_g in the most significant field, then x1, x2,
x3, t_r, t_f, so comparing packed keys as integers *is* the sixth cyclic
lexicographic order: t_g decides first, ties are broken lexicographically on
(x1, x2, x3, t_r, t_f).  The leading monomial is the largest key, and adding
keys multiplies monomials.

Over a :class:`ParamField` a polynomial is stored as a rational polynomial
in the variables *and* the parameters, divided by one monomial in the
invertible parameters.  Parameter exponents occupy 8-bit fields below the
variable fields, so the order on variable monomials is untouched and every
product runs through the same rational kernel as numeric polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb
import operator

from cotame import kernel
from cotame.coeffs import (
    QQ,
    ParamField,
    ParamFraction,
    Rational,
    as_rational,
    coeff_to_json,
    evaluate_expression,
    format_coeff,
)

NEG_INFINITY = float("-inf")

NAMES = ("x1", "x2", "x3", "tr", "tf", "tg")
NVARS_SMALL = 3
NVARS_BIG = 6

W1 = (1, 2, 3, 1, 0, 1)
W2 = (0, 0, 0, 0, 1, 0)

VAR_BITS = 10
VAR_MASK = (1 << VAR_BITS) - 1
# generator index (x1..tg) -> bit shift of its field
SHIFT = (40, 30, 20, 10, 0, 50)
MAX_EXPONENT = (1 << (VAR_BITS - 1)) - 1
_VAR_GUARD = sum(1 << (s + VAR_BITS - 1) for s in SHIFT)
_T_FIELDS = sum(VAR_MASK << SHIFT[i] for i in (3, 4, 5))

PARAM_BITS = 8
PARAM_MASK = (1 << PARAM_BITS) - 1
MAX_PARAM_EXPONENT = (1 << (PARAM_BITS - 1)) - 1

_RATIONAL_TYPE = type(Rational(0))


class RingMismatch(ValueError):
    """Operands live in different rings (3 vs 6 variables, or different fields)."""


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial got zero."""


class BudgetExceeded(RuntimeError):
    """A computation would produce more terms than the caller allowed."""


class ExponentOverflow(OverflowError):
    pass


# -- key layout ----------------------------------------------------------------

def pack(exps) -> int:
    key = 0
    for e, s in zip(exps, SHIFT):
        if e < 0 or e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} out of range")
        key |= e << s
    return key


def unpack(vkey: int, nvars: int = NVARS_BIG) -> tuple:
    out = tuple((vkey >> s) & VAR_MASK for s in SHIFT)
    return out if nvars == NVARS_BIG else out[:NVARS_SMALL]


@lru_cache(maxsize=None)
class _Layout:
    """Bit layout of keys for one coefficient domain."""

    def __init__(self, domain):
        self.domain = domain
        if isinstance(domain, ParamField):
            n = len(domain.roster)
            self.pshift = PARAM_BITS * n
            self.nparams = n
            fields = [(s + self.pshift, VAR_BITS) for s in SHIFT]
            fields += [(PARAM_BITS * i, PARAM_BITS) for i in range(n)]
            self.kernel_layout = tuple(fields)
            pguard = sum(1 << (PARAM_BITS * i + PARAM_BITS - 1) for i in range(n))
            self.guard = (_VAR_GUARD << self.pshift) | pguard
            self.inv_positions = domain.inv_positions
        else:
            self.pshift = 0
            self.nparams = 0
            self.kernel_layout = None
            self.guard = _VAR_GUARD
            self.inv_positions = ()
        self.pmask = (1 << self.pshift) - 1

    def pack_params(self, exps) -> int:
        key = 0
        for i, e in enumerate(exps):
            if e:
                if e > MAX_PARAM_EXPONENT:
                    raise ExponentOverflow(f"parameter exponent {e} out of range")
                key |= e << (PARAM_BITS * i)
        return key

    def unpack_params(self, pkey: int) -> tuple:
        return tuple((pkey >> (PARAM_BITS * i)) & PARAM_MASK for i in range(self.nparams))


def _layout(domain) -> _Layout:
    return _Layout(domain)


def _check_overflow(terms: dict, lay: _Layout):
    if terms and reduce(operator.or_, terms) & lay.guard:
        raise ExponentOverflow("an exponent exceeded the packed field width")


def _unify_domain(d1, d2):
    if d1 == d2:
        return d1
    if d1 == QQ:
        return d2
    if d2 == QQ:
        return d1
    raise RingMismatch(f"coefficient fields differ: {d1!r} vs {d2!r}")


def _is_scalar(x) -> bool:
    if isinstance(x, (int, ParamFraction, _RATIONAL_TYPE)):
        return True
    return (not isinstance(x, Polynomial) and not isinstance(x, float)
            and hasattr(x, "numerator") and hasattr(x, "denominator"))


def _scalar_domain(c):
    return c.field if isinstance(c, ParamFraction) else QQ


def _zero_den(domain) -> tuple:
    return domain.zero_exp if isinstance(domain, ParamField) else ()


def _normalize(terms: dict, den: tuple, lay: _Layout):
    """Cancel invertible parameters dividing both numerator and denominator."""
    if not terms:
        return terms, _zero_den(lay.domain)
    if not den or not any(den):
        return terms, den
    cut = [0] * len(den)
    for i in lay.inv_positions:
        if den[i]:
            s = PARAM_BITS * i
            m = den[i]
            for k in terms:
                e = (k >> s) & PARAM_MASK
                if e < m:
                    m = e
                    if not m:
                        break
            cut[i] = m
    if not any(cut):
        return terms, den
    sub = lay.pack_params(cut)
    terms = {k - sub: c for k, c in terms.items()}
    return terms, tuple(d - c for d, c in zip(den, cut))


@dataclass(frozen=True)
class Term:
    exponent: tuple
    coefficient: object

    def __str__(self):
        return _term_text(self.coefficient, self.exponent, first=True)


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` maps packed keys to nonzero rationals.  ``nvars`` is 3 or 6.
    ``domain`` is ``QQ`` or a :class:`ParamField`.  For a parameter field,
    ``den`` is the exponent tuple of the shared denominator monomial.
    """

    __slots__ = ("terms", "nvars", "domain", "den")

    def __init__(self, terms: dict, nvars: int = NVARS_BIG, domain=QQ, den=None):
        if nvars not in (NVARS_SMALL, NVARS_BIG):
            raise ValueError("nvars must be 3 or 6")
        self.terms = terms
        self.nvars = nvars
        self.domain = domain
        self.den = _zero_den(domain) if den is None else den

    @classmethod
    def _make(cls, terms, nvars, domain, den=None, normalize=True):
        if den is not None and normalize and isinstance(domain, ParamField):
            terms, den = _normalize(terms, den, _layout(domain))
        return cls(terms, nvars, domain, den)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_dict(cls, mapping: dict, nvars: int = NVARS_BIG, domain=QQ) -> Polynomial:
        """Build from {exponent tuple: coefficient}, merging duplicates."""
        total = cls.zero(nvars, domain)
        for exps, c in mapping.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"bad exponent vector {exps}")
            total = total + cls.constant(c, nvars, domain)._shift(pack(exps))
        return total

    @classmethod
    def constant(cls, c, nvars: int = NVARS_BIG, domain=None) -> Polynomial:
        if domain is None:
            domain = _scalar_domain(c)
        if isinstance(domain, ParamField):
            c = domain(c)
            lay = _layout(domain)
            terms = {lay.pack_params(e): q for e, q in c.num.items()}
            return cls(terms, nvars, domain, c.den if terms else None)
        c = as_rational(c)
        return cls({0: c} if c else {}, nvars, domain)

    @classmethod
    def zero(cls, nvars: int = NVARS_BIG, domain=QQ) -> Polynomial:
        return cls({}, nvars, domain)

    @classmethod
    def one(cls, nvars: int = NVARS_BIG, domain=QQ) -> Polynomial:
        return cls({0: Rational(1)}, nvars, domain)

    @classmethod
    def gen(cls, i: int, nvars: int = NVARS_BIG, domain=QQ) -> Polynomial:
        if not 0 <= i < nvars:
            raise IndexError(f"generator {i} not in a {nvars}-variable ring")
        return cls({1 << (SHIFT[i] + _layout(domain).pshift): Rational(1)}, nvars, domain)

    @classmethod
    def gens(cls, nvars: int = NVARS_BIG, domain=QQ) -> tuple:
        return tuple(cls.gen(i, nvars, domain) for i in range(nvars))

    @classmethod
    def parse(cls, text: str, nvars: int = NVARS_BIG, domain=QQ, namespace=None) -> Polynomial:
        """Parse an expression such as ``"x1*x3 - x2^2"`` or ``"-2*u*tr*tf"``.

        Parameter symbols resolve to field elements when ``domain`` is a
        :class:`ParamField`.
        """
        env = {}
        if isinstance(domain, ParamField):
            env.update(domain.namespace())
        env.update(zip(NAMES[:nvars], cls.gens(nvars, domain)))
        if namespace:
            env.update(namespace)
        value = evaluate_expression(text, env, domain)
        if isinstance(value, Polynomial):
            return value.with_domain(domain) if value.domain == QQ else value
        return cls.constant(value, nvars, domain)

    def _shift(self, vkey: int) -> Polynomial:
        """Multiply by the monomial with packed variable key ``vkey``."""
        if not vkey:
            return self
        step = vkey << _layout(self.domain).pshift
        return Polynomial({k + step: c for k, c in self.terms.items()},
                          self.nvars, self.domain, self.den)

    # -- basic structure ---------------------------------------------------

    def __len__(self):
        """Number of distinct variable monomials."""
        if self.domain == QQ:
            return len(self.terms)
        ps = _layout(self.domain).pshift
        return len({k >> ps for k in self.terms})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        ps = _layout(self.domain).pshift
        return all(not (k >> ps) for k in self.terms)

    def _grouped(self) -> dict:
        """variable key -> coefficient (rational or ParamFraction)."""
        if self.domain == QQ:
            return dict(self.terms)
        lay = _layout(self.domain)
        groups = {}
        for k, c in self.terms.items():
            groups.setdefault(k >> lay.pshift, {})[lay.unpack_params(k & lay.pmask)] = c
        field = self.domain
        return {vk: ParamFraction(field, num, self.den, _trusted=True)
                for vk, num in groups.items()}

    def items(self):
        """(exponent tuple, coefficient) pairs, descending in the term order."""
        groups = self._grouped()
        for vk in sorted(groups, reverse=True):
            yield unpack(vk, self.nvars), groups[vk]

    def coefficient(self, exps) -> object:
        vk = pack(tuple(exps) + (0,) * (NVARS_BIG - len(exps)))
        if self.domain == QQ:
            return self.terms.get(vk, Rational(0))
        return self._grouped().get(vk, self.domain.zero)

    def var_keys(self):
        ps = _layout(self.domain).pshift
        if not ps:
            return self.terms.keys()
        return {k >> ps for k in self.terms}

    def support(self) -> set:
        return {unpack(k, self.nvars) for k in self.var_keys()}

    def embed(self, nvars: int = NVARS_BIG) -> Polynomial:
        """Move between the three- and six-variable rings."""
        if nvars == self.nvars:
            return self
        if nvars == NVARS_SMALL and any(k & _T_FIELDS for k in self.var_keys()):
            raise RingMismatch("polynomial involves t-variables")
        return Polynomial(self.terms, nvars, self.domain, self.den)

    def with_domain(self, domain) -> Polynomial:
        if domain == self.domain:
            return self
        if self.domain != QQ:
            raise RingMismatch(f"cannot move {self.domain!r} coefficients to {domain!r}")
        ps = _layout(domain).pshift
        return Polynomial({k << ps: c for k, c in self.terms.items()}, self.nvars, domain)

    def evaluate_params(self, assignment) -> Polynomial:
        """Instantiate parameter coefficients at rational values."""
        if self.domain == QQ:
            return self
        lay = _layout(self.domain)
        roster = self.domain.roster
        values = {}

        def value(i):
            if i not in values:
                name = roster[i]
                if name not in assignment:
                    raise KeyError(f"no value assigned to {name}")
                values[i] = as_rational(assignment[name])
            return values[i]

        den = Rational(1)
        for i, e in enumerate(self.den):
            if e:
                if not value(i):
                    from cotame.coeffs import ZeroDenominator
                    raise ZeroDenominator(f"{roster[i]} assigned 0 but is a denominator")
                den *= value(i) ** e
        powcache = {}
        out = {}
        for k, c in self.terms.items():
            pk = k & lay.pmask
            if pk not in powcache:
                v = Rational(1)
                for i, e in enumerate(lay.unpack_params(pk)):
                    if e:
                        v *= value(i) ** e
                powcache[pk] = v / den
            w = c * powcache[pk]
            if w:
                vk = k >> lay.pshift
                s = out.get(vk, 0) + w
                if s:
                    out[vk] = s
                else:
                    out.pop(vk, None)
        return Polynomial(out, self.nvars, QQ)

    # -- arithmetic --------------------------------------------------------

    def _align(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise RingMismatch(f"{self.nvars}- and {other.nvars}-variable polynomials")
        dom = _unify_domain(self.domain, other.domain)
        return self.with_domain(dom), other.with_domain(dom), dom

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if _is_scalar(other):
            return Polynomial.constant(other, self.nvars)
        return None

    def _common_den(self, other):
        """Rewrite both numerators over the larger of the two denominators."""
        if self.den == other.den:
            return self.terms, other.terms, self.den
        lay = _layout(self.domain)
        den = tuple(max(x, y) for x, y in zip(self.den, other.den))

        def lift(p):
            step = lay.pack_params([d - e for d, e in zip(den, p.den)])
            if not step:
                return p.terms
            return {k + step: c for k, c in p.terms.items()}

        return lift(self), lift(other), den

    def _addsub(self, other, sign):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, dom = self._align(other)
        if not b.terms:
            return a
        if not a.terms:
            return b if sign > 0 else -b
        ta, tb, den = a._common_den(b)
        if len(ta) < len(tb) and sign > 0:
            ta, tb = tb, ta
        terms = dict(ta)
        kernel.addmul_terms(terms, tb, sign)
        if den and any(den):
            return Polynomial._make(terms, a.nvars, dom, den)
        return Polynomial(terms, a.nvars, dom, den or None)

    def __add__(self, other):
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Polynomial({k: -c for k, c in self.terms.items()}, self.nvars,
                          self.domain, self.den)

    def scale(self, c) -> Polynomial:
        if isinstance(c, ParamFraction):
            return self.mul(Polynomial.constant(c, self.nvars))
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.nvars, self.domain)
        return Polynomial({k: v * c for k, v in self.terms.items()}, self.nvars,
                          self.domain, self.den)

    def mul(self, other: Polynomial, budget: int | None = None) -> Polynomial:
        """Product, optionally refusing results larger than ``budget`` terms."""
        a, b, dom = self._align(other)
        if budget is not None:
            _check_budget(a, b, budget)
        lay = _layout(dom)
        if len(a.terms) == 1 or len(b.terms) == 1:
            if len(b.terms) != 1:
                a, b = b, a
            ((kb, cb),) = b.terms.items()
            terms = {k + kb: c * cb for k, c in a.terms.items()}
        else:
            terms = kernel.mul_terms(a.terms, b.terms, lay.kernel_layout)
        _check_overflow(terms, lay)
        if budget is not None and len(terms) > budget:
            raise BudgetExceeded(f"product has {len(terms)} terms (> {budget})")
        if lay.nparams:
            den = tuple(x + y for x, y in zip(a.den, b.den))
            return Polynomial._make(terms, a.nvars, dom, den)
        return Polynomial(terms, a.nvars, dom)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul(other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                return NotImplemented
            ((_, other),) = other._grouped().items()
        if not _is_scalar(other):
            return NotImplemented
        if isinstance(other, ParamFraction):
            return self.scale(other.field.one / other)
        q = as_rational(other)
        if not q:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / q)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.one(self.nvars, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if self.nvars != other.nvars:
                return False
            if self.domain != other.domain:
                try:
                    a, b, _ = self._align(other)
                except RingMismatch:
                    return False
                return a.den == b.den and a.terms == b.terms
            return self.den == other.den and self.terms == other.terms
        if _is_scalar(other):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.den, frozenset(self.terms.items())))

    # -- calculus and substitution -----------------------------------------

    def partial(self, var: int) -> Polynomial:
        if not 0 <= var < self.nvars:
            raise IndexError(f"no generator {var} in a {self.nvars}-variable ring")
        s = SHIFT[var] + _layout(self.domain).pshift
        one = 1 << s
        out = {}
        for k, c in self.terms.items():
            e = (k >> s) & VAR_MASK
            if e:
                out[k - one] = c * e
        if self.den and any(self.den):
            return Polynomial._make(out, self.nvars, self.domain, self.den)
        return Polynomial(out, self.nvars, self.domain, self.den if out else None)

    def substitute(self, images, budget: int | None = None, powers: dict | None = None) -> Polynomial:
        """Apply the ring map sending generator i to ``images[i]``.

        Evaluation is a multivariate Horner scheme over the generators in
        term-order significance, so each image is multiplied in as few times
        as the exponent gaps require.  ``powers`` is an optional cache of
        image powers shared across calls with the same images.
        """
        images = list(images)
        if len(images) != self.nvars:
            raise RingMismatch(f"{len(images)} images for {self.nvars} generators")
        target = images[0].nvars
        dom = self.domain
        for im in images:
            if im.nvars != target:
                raise RingMismatch("images live in different rings")
            dom = _unify_domain(dom, im.domain)
        images = [im.with_domain(dom) for im in images]
        if powers is None:
            powers = {}
        src = self.with_domain(dom)
        lay = _layout(dom)
        leaves = {}
        for k, c in src.terms.items():
            leaves.setdefault(k >> lay.pshift, {})[k & lay.pmask] = c
        items = [(unpack(vk, self.nvars), Polynomial._make(t, target, dom, src.den))
                 for vk, t in leaves.items()]
        order = sorted(range(self.nvars), key=lambda i: SHIFT[i], reverse=True)
        if not items:
            return Polynomial.zero(target, dom)
        return _horner(items, order, 0, images, budget, powers)

    # -- degrees and order -------------------------------------------------

    def weighted_degree(self, w) -> int | float:
        if not self.terms:
            return NEG_INFINITY
        pairs = [(s, wi) for s, wi in zip(SHIFT[:self.nvars], w) if wi]
        if not pairs:
            return 0
        return max(sum(wi * ((k >> s) & VAR_MASK) for s, wi in pairs)
                   for k in self.var_keys())

    def total_degree(self) -> int | float:
        return self.weighted_degree((1,) * self.nvars)

    def degree_in(self, var: int) -> int | float:
        if not self.terms:
            return NEG_INFINITY
        s = SHIFT[var]
        return max((k >> s) & VAR_MASK for k in self.var_keys())

    def leading_key(self) -> int:
        """Packed variable key of the leading monomial."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return max(self.terms) >> _layout(self.domain).pshift

    def leading_term(self) -> Term:
        vk = self.leading_key()
        if self.domain == QQ:
            return Term(unpack(vk, self.nvars), self.terms[vk])
        lay = _layout(self.domain)
        num = {lay.unpack_params(k & lay.pmask): c for k, c in self.terms.items()
               if k >> lay.pshift == vk}
        return Term(unpack(vk, self.nvars),
                    ParamFraction(self.domain, num, self.den, _trusted=True))

    # -- text --------------------------------------------------------------

    def __str__(self):
        parts = []
        for exps, c in self.items():
            parts.append(_term_text(c, exps, first=not parts))
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"Polynomial({self}, nvars={self.nvars})"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [[list(e), coeff_to_json(c)] for e, c in self.items()],
        }


def _monomial_text(exps) -> str:
    parts = []
    for name, e in zip(NAMES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _term_text(c, exps, first: bool) -> str:
    negative, body, is_one = format_coeff(c)
    mono = _monomial_text(exps)
    if mono:
        text = mono if is_one else f"{body}*{mono}"
    else:
        text = body
    if first:
        return f"-{text}" if negative else text
    return f" - {text}" if negative else f" + {text}"


def _check_budget(a: Polynomial, b: Polynomial, budget: int):
    bound = len(a.terms) * len(b.terms)
    if bound > budget and a.domain == QQ:
        nv = sum(1 for s in SHIFT[:a.nvars]
                 if any((k >> s) & VAR_MASK for k in a.terms)
                 or any((k >> s) & VAR_MASK for k in b.terms))
        deg = a.total_degree() + b.total_degree()
        bound = min(bound, comb(int(deg) + nv, nv))
    if bound > budget:
        raise BudgetExceeded(f"product may reach {bound} terms (> {budget})")


def _power(images, powers, var, e, budget):
    key = (var, e)
    if key not in powers:
        if e == 1:
            powers[key] = images[var]
        else:
            half = _power(images, powers, var, e // 2, budget)
            p = half.mul(half, budget)
            if e & 1:
                p = p.mul(images[var], budget)
            powers[key] = p
    return powers[key]


def _horner(items, order, level, images, budget, powers):
    if level == len(order):
        ((_, leaf),) = items
        return leaf
    var = order[level]
    groups = {}
    for exps, leaf in items:
        groups.setdefault(exps[var], []).append((exps, leaf))
    acc = None
    prev = None
    for e in sorted(groups, reverse=True):
        inner = _horner(groups[e], order, level + 1, images, budget, powers)
        if acc is None:
            acc = inner
        else:
            acc = acc.mul(_power(images, powers, var, prev - e, budget), budget) + inner
        prev = e
    if prev:
        acc = acc.mul(_power(images, powers, var, prev, budget), budget)
    if budget is not None and len(acc.terms) > budget:
        raise BudgetExceeded(f"substitution reached {len(acc.terms)} terms (> {budget})")
    return acc


def jacobian_det3(h1: Polynomial, h2: Polynomial, h3: Polynomial) -> Polynomial:
    """det of the Jacobian matrix of (h1, h2, h3) with respect to (x1, x2, x3)."""
    for h in (h1, h2, h3):
        if h.nvars != NVARS_SMALL:
            raise RingMismatch("jacobian_det3 expects three-variable polynomials")
    m = [[h.partial(j) for j in range(3)] for h in (h1, h2, h3)]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def monomial(exps, coeff=1, nvars: int = NVARS_BIG, domain=None) -> Polynomial:
    if domain is None:
        domain = _scalar_domain(coeff)
    return Polynomial.from_dict({tuple(exps): coeff}, nvars, domain)


def gens(nvars: int = NVARS_BIG, domain=QQ) -> tuple:
    return Polynomial.gens(nvars, domain)


def cyclic_lex_key(exps) -> tuple:
    """Sort key realizing the sixth cyclic lexicographic order on tuples."""
    exps = tuple(exps) + (0,) * (NVARS_BIG - len(exps))
    return (exps[5],) + exps[:5]


def weighted_degree(p: Polynomial, w) -> int | float:
    return p.weighted_degree(w)


def total_degree(p: Polynomial) -> int | float:
    return p.total_degree()


def leading_term(p: Polynomial) -> Term:
    return p.leading_term()


def support(p: Polynomial) -> set:
    return p.support()
