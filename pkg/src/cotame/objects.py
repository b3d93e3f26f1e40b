"""The concrete objects: f, r, g, the derivations, phi_u, beta_u, pi, affine
maps with their types, and the lifts of affine maps to six variables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from cotame.coeffs import QQ, ParamField, ParamFraction, as_rational, format_coeff
from cotame.derivations import Derivation, Endomorphism, exp_endomorphism
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial, jacobian_det3

BETA_WEIGHTS = (3, 2, 1, 6, 4, 9)


class NonInvertibleScale(ValueError):
    pass


class TypeMismatch(ValueError):
    pass


class UndecidableNonzero(ValueError):
    pass


class CaseConstraintViolated(ValueError):
    pass


def _domain_of(*values):
    for v in values:
        if isinstance(v, ParamFraction):
            return v.field
    return QQ


# -- base polynomials and derivations ---------------------------------------

@lru_cache(maxsize=None)
def base_polys(nvars: int = NVARS_SMALL):
    """(f, r, g) expanded; in six variables they are still polynomials in x."""
    x1, x2, x3 = Polynomial.gens(nvars)[:3]
    f = x1 * x3 - x2 ** 2
    r = x2 * f + x1 ** 2
    g = x3 * f ** 2 + 2 * x1 * x2 * f + x1 ** 3
    return f, r, g


@lru_cache(maxsize=None)
def delta() -> Derivation:
    """The Jacobian derivation h -> det d(f, g, h)/d(x1, x2, x3)."""
    f, _, g = base_polys()
    return Derivation([jacobian_det3(f, g, x) for x in Polynomial.gens(NVARS_SMALL)])


@lru_cache(maxsize=None)
def delta_prime() -> Derivation:
    x1, x2, x3, tr, tf, tg = Polynomial.gens(NVARS_BIG)
    zero = Polynomial.zero(NVARS_BIG)
    return Derivation([
        -2 * tr * tf,
        4 * x1 * tr - tg,
        6 * x2 * tr + 2 * tf ** 2,
        -tf * tg,
        zero,
        zero,
    ])


def phi(u) -> Endomorphism:
    """phi_u = exp(u Delta) on k[x1, x2, x3]."""
    return exp_endomorphism(delta(), u)


def phi_prime(u) -> Endomorphism:
    """phi'_u = exp(u Delta') on the six-variable ring."""
    return exp_endomorphism(delta_prime(), u)


def beta(u, nvars: int = NVARS_SMALL) -> Endomorphism:
    """beta_u = (u^3 x1, u^2 x2, u x3); in six variables t_r, t_f, t_g scale
    by u^6, u^4, u^9 so that pi commutes with it."""
    if isinstance(u, ParamFraction):
        if not u.is_unit():
            raise NonInvertibleScale(f"beta_u needs an invertible u, got {u}")
    elif not as_rational(u):
        raise NonInvertibleScale("beta_0 is not an automorphism")
    dom = _domain_of(u)
    gens = Polynomial.gens(nvars, dom)
    return Endomorphism([x * (u ** w) for x, w in zip(gens, BETA_WEIGHTS)])


def beta_inverse(u, nvars: int = NVARS_SMALL) -> Endomorphism:
    return beta(1 / u if not isinstance(u, ParamFraction) else u.invert_monomial(), nvars)


@lru_cache(maxsize=None)
def pi_map() -> Endomorphism:
    """Substitution t_r -> r, t_f -> f, t_g -> g (six variables to three)."""
    x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
    f, r, g = base_polys()
    return Endomorphism([x1, x2, x3, r, f, g])


# -- affine maps -------------------------------------------------------------

@dataclass(frozen=True)
class AffineType:
    g1: int
    g2: int
    g3: int

    def __iter__(self):
        return iter((self.g1, self.g2, self.g3))

    def __str__(self):
        return f"({self.g1},{self.g2},{self.g3})"


@dataclass(frozen=True)
class DerivedParams:
    P: object
    Q: object
    S: object
    T: object


class AffineMap:
    """x_j -> a_j x1 + b_j x2 + c_j x3 + d_j.

    ``rows`` is the 3x3 matrix (a_{i,j}) given row by row, so rows[0] is the
    a-row (a1, a2, a3), rows[1] the b-row and rows[2] the c-row.
    """

    __slots__ = ("rows", "d", "domain")

    def __init__(self, rows, d=(0, 0, 0), check: bool = True):
        values = [v for row in rows for v in row] + list(d)
        dom = _domain_of(*values)
        self.domain = dom
        self.rows = tuple(tuple(dom(v) for v in row) for row in rows)
        self.d = tuple(dom(v) for v in d)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows) or len(self.d) != 3:
            raise ValueError("an affine map needs a 3x3 matrix and 3 translations")
        if check and not self.determinant():
            raise ValueError("affine matrix is singular")

    @classmethod
    def identity(cls, domain=QQ):
        o, z = domain.one, domain.zero
        return cls(((o, z, z), (z, o, z), (z, z, o)), (z, z, z))

    @classmethod
    def diagonal(cls, u):
        dom = _domain_of(u)
        z = dom.zero
        return cls(((u ** 3, z, z), (z, u ** 2, z), (z, z, u)), (z, z, z))

    @property
    def a(self):
        return self.rows[0]

    @property
    def b(self):
        return self.rows[1]

    @property
    def c(self):
        return self.rows[2]

    def entry(self, i: int, j: int):
        """a_{i,j} with 1-based indices as in the matrix display."""
        return self.rows[i - 1][j - 1]

    def determinant(self):
        (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = self.rows
        return (a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1)
                + a3 * (b1 * c2 - b2 * c1))

    def image(self, j: int, nvars: int = NVARS_SMALL) -> Polynomial:
        """alpha(x_j) for j = 0, 1, 2."""
        x1, x2, x3 = Polynomial.gens(nvars, self.domain)[:3]
        return (x1 * self.a[j] + x2 * self.b[j] + x3 * self.c[j]
                + Polynomial.constant(self.d[j], nvars, self.domain))

    def images(self, nvars: int = NVARS_SMALL):
        return [self.image(j, nvars) for j in range(3)]

    def endomorphism(self) -> Endomorphism:
        return Endomorphism(self.images(NVARS_SMALL))

    def evaluate_params(self, assignment) -> AffineMap:
        if self.domain == QQ:
            return self
        ev = lambda v: v.evaluate(assignment)  # noqa: E731
        return AffineMap([[ev(v) for v in row] for row in self.rows],
                         [ev(v) for v in self.d], check=False)

    def __eq__(self, other):
        return isinstance(other, AffineMap) and self.rows == other.rows and self.d == other.d

    def __hash__(self):
        return hash((self.rows, self.d))

    def to_json(self) -> dict:
        return {"matrix": [[_coeff_text(v) for v in row] for row in self.rows],
                "translation": [_coeff_text(v) for v in self.d]}

    def to_text(self) -> str:
        lines = [" ".join(_coeff_text(v) for v in row) for row in self.rows]
        lines.append("+ " + " ".join(_coeff_text(v) for v in self.d))
        return "\n".join(lines)


def _coeff_text(c) -> str:
    neg, body, _ = format_coeff(c)
    return f"-{body}" if neg else body


def derived_params(alpha: AffineMap) -> DerivedParams:
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = alpha.rows
    d1, d2, d3 = alpha.d
    P = c1 * d3 - 2 * c2 * d2 + c3 * d1
    Q = b1 * d3 - 2 * b2 * d2 + b3 * d1
    S = a1 * d3 - 2 * a2 * d2 + a3 * d1
    return DerivedParams(P, Q, S, P * b1 - Q * c1)


def _decidably_nonzero(v, nonzero) -> bool:
    if not isinstance(v, ParamFraction):
        return bool(v)
    if not v:
        return False
    if v.is_unit():
        return True
    return any(v == h or v == -h for h in nonzero)


def affine_type(alpha: AffineMap, claimed=None, nonzero=()) -> AffineType:
    """gamma_j = largest row index i with a_{i,j} != 0.

    Symbolic maps need ``claimed``; entries below each claimed pivot must be
    identically zero and the pivot must be a unit or one of ``nonzero``.
    """
    if claimed is not None and not isinstance(claimed, AffineType):
        claimed = AffineType(*claimed)
    if alpha.domain == QQ:
        found = []
        for j in range(3):
            found.append(max(i + 1 for i in range(3) if alpha.rows[i][j]))
        t = AffineType(*found)
        if claimed is not None and claimed != t:
            raise TypeMismatch(f"claimed type {claimed}, matrix has {t}")
        return t
    if claimed is None:
        raise UndecidableNonzero("symbolic maps need a claimed type")
    for j, gj in enumerate(claimed):
        for i in range(gj, 3):
            if alpha.rows[i][j]:
                raise TypeMismatch(f"entry a_{i + 1},{j + 1} = {alpha.rows[i][j]} should vanish "
                                   f"for claimed type {claimed}")
        pivot = alpha.rows[gj - 1][j]
        if not pivot:
            raise TypeMismatch(f"pivot a_{gj},{j + 1} vanishes for claimed type {claimed}")
        if not _decidably_nonzero(pivot, nonzero):
            raise UndecidableNonzero(f"cannot decide a_{gj},{j + 1} = {pivot} != 0")
    return claimed


def in_B(alpha: AffineMap) -> bool:
    """True iff alpha = beta_u for some nonzero u."""
    if any(alpha.d):
        return False
    for i in range(3):
        for j in range(3):
            if i != j and alpha.rows[i][j]:
                return False
    u = alpha.rows[2][2]
    if not u:
        return False
    return alpha.rows[1][1] == u ** 2 and alpha.rows[0][0] == u ** 3


# -- lifts -------------------------------------------------------------------

def hat_lift(alpha: AffineMap) -> Endomorphism:
    dom = alpha.domain
    X1, X2, X3 = alpha.images(NVARS_BIG)
    _, _, _, tr, tf, tg = Polynomial.gens(NVARS_BIG, dom)
    f, _, _ = base_polys(NVARS_BIG)
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = alpha.rows
    K = a1 * c3 - 2 * a2 * c2 + a3 * c1
    img_f = X1 * X3 - X2 ** 2 + (tf - f) * K
    img_r = X2 * img_f + X1 ** 2
    img_g = X3 * img_f ** 2 + 2 * X1 * X2 * img_f + X1 ** 3
    return Endomorphism([X1, X2, X3, img_r, img_f, img_g])


def _require_zero(label, value):
    if value:
        raise CaseConstraintViolated(f"{label} = {value}, expected 0")


def modified_lift(alpha: AffineMap, case: str) -> Endomorphism:
    """The corrected lifts used when the hat lift is not good enough.

    ``case`` is ``"L5_iii"`` or ``"L6_vi_viii"``; the constraints that the
    correction relies on are checked and CaseConstraintViolated is raised if
    they fail.
    """
    hat = hat_lift(alpha)
    dom = alpha.domain
    x1, x2, x3, tr, tf, tg = Polynomial.gens(NVARS_BIG, dom)
    f, r, g = base_polys(NVARS_BIG)
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = alpha.rows
    if case == "L5_iii":
        for label, v in (("c1", c1), ("c2", c2), ("b1", b1), ("b2 - c3^2", b2 - c3 ** 2),
                         ("a1 - c3^3", a1 - c3 ** 3), ("2*a2 - b3*c3", 2 * a2 - b3 * c3),
                         ("a1*a3 - a2^2", a1 * a3 - a2 ** 2)):
            _require_zero(label, v)
        for i, d in enumerate(alpha.d):
            _require_zero(f"d{i + 1}", d)
        r_form = x2 * tf + x1 ** 2
        g_form = x3 * tf ** 2 + 2 * x1 * x2 * tf + x1 ** 3
        img_g = hat[5] + (tf * (tr - r_form)) * (b3 * c3 ** 8) + (tg - g_form) * c3 ** 9
        img_r = hat[3] + (tr - r_form) * c3 ** 6
        return Endomorphism([hat[0], hat[1], hat[2], img_r, hat[4], img_g])
    if case == "L6_vi_viii":
        dp = derived_params(alpha)
        P, Q = dp.P, dp.Q
        checks = (
            ("c1*c3 - c2^2", c1 * c3 - c2 ** 2),
            ("b1*c3 - 2*b2*c2 + b3*c1", b1 * c3 - 2 * b2 * c2 + b3 * c1),
            ("a1*c3 - 2*a2*c2 + a3*c1 + b1*b3 - b2^2",
             a1 * c3 - 2 * a2 * c2 + a3 * c1 + b1 * b3 - b2 ** 2),
            ("a1*b3 - 2*a2*b2 + a3*b1", a1 * b3 - 2 * a2 * b2 + a3 * b1),
            ("P*c2 + c1^2", P * c2 + c1 ** 2),
            ("a1*a3 - a2^2", a1 * a3 - a2 ** 2),
            ("P^2*b2 + 2*P*b1*c1 - Q*c1^2", P ** 2 * b2 + 2 * P * b1 * c1 - Q * c1 ** 2),
        )
        for label, v in checks:
            _require_zero(label, v)
        if not P:
            raise CaseConstraintViolated("P must be nonzero")
        k = dp.T ** 2 / P ** 2
        img_g = hat[5] + x3 * (tf - f) * (k * c1)
        img_r = hat[3] - (tf - f) * k
        return Endomorphism([hat[0], hat[1], hat[2], img_r, hat[4], img_g])
    raise ValueError(f"unknown modified lift {case!r}")


def is_lift(lift: Endomorphism, alpha: AffineMap) -> bool:
    """alpha'(x_i) = alpha(x_i) and pi o alpha' = alpha o pi on all generators."""
    if lift.source != NVARS_BIG or lift.target != NVARS_BIG:
        return False
    for j, im in enumerate(alpha.images(NVARS_BIG)):
        if lift[j] != im:
            return False
    pi = pi_map()
    a3 = alpha.endomorphism()
    for j in range(NVARS_BIG):
        if pi.apply(lift[j]) != a3.apply(pi[j]):
            return False
    return True
