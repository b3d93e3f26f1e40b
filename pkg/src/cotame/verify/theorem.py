"""Degree growth of short words in phi and affine maps, and the centralizer check.

For s = 2 the word is theta = phi_{u1} o alpha1 o phi_{u2} with alpha1 of the
L2 shape.  Expanding theta(x2) and theta(x3) runs into tens of millions of
terms, so the exact degree is pinned between two cheap bounds:

* above, by the largest sum e1*9 + e2*16 + e3*23 over the monomials of
  h = alpha1(phi_{u2}(x_i)), since phi_{u1}(x_j) has degree 9, 16, 23;
* below, by the degree in t of theta(x_i) restricted to a random line
  x_j = p_j + q_j*t, which never exceeds the true degree.

When both equal the class prediction the degree is certified exactly.
theta(x1) is also expanded in full under the term budget.
"""

from __future__ import annotations

import random
import time
from math import lcm

from cotame.coeffs import ParamField, Rational
from cotame.derivations import compose, endo_equal, exp_apply
from cotame.multipoly import NVARS_SMALL, BudgetExceeded, Polynomial
from cotame.objects import (
    AffineMap,
    affine_type,
    base_polys,
    beta,
    beta_inverse,
    delta,
    hat_lift,
    in_B,
    phi,
    phi_prime,
)
from cotame.pclass import ClassIndex, CWitness, classify, compose_class_bound
from cotame.verify.report import Report

DEFAULT_BUDGET = 5_000_000
S1_TRIALS = 10
PHI_DEGREES = (9, 16, 23)
L2_TYPE = (3, 2, 3)
FULL_EXPANSION = (1,)
LINE_TRIES = 3
LINE_PRIME = (1 << 61) - 1
ENTRY_BOUND = 3


def _nonzero(rng: random.Random, bound: int = ENTRY_BOUND) -> Rational:
    return Rational(rng.choice([k for k in range(-bound, bound + 1) if k]))


def _rational(rng: random.Random) -> Rational:
    while True:
        v = Rational(rng.randint(-7, 7), rng.randint(1, 7))
        if v:
            return v


def sample_l2_map(rng: random.Random) -> AffineMap:
    """An integer affine map of type (3,2,3) with c2 = 0, never in B."""
    while True:
        a = [Rational(rng.randint(-ENTRY_BOUND, ENTRY_BOUND)) for _ in range(3)]
        b = [Rational(rng.randint(-ENTRY_BOUND, ENTRY_BOUND)), _nonzero(rng),
             Rational(rng.randint(-ENTRY_BOUND, ENTRY_BOUND))]
        c = [_nonzero(rng), Rational(0), _nonzero(rng)]
        d = [Rational(rng.randint(-ENTRY_BOUND, ENTRY_BOUND)) for _ in range(3)]
        alpha = AffineMap([a, b, c], d, check=False)
        if alpha.determinant() and not in_B(alpha):
            return alpha


def upper_bound(h: Polynomial, degrees=PHI_DEGREES) -> int:
    return max(sum(e * w for e, w in zip(exps, degrees)) for exps, _ in h.items())


def _eval_mod(poly: Polynomial, point, prime: int) -> int:
    total = 0
    for exps, c in poly.items():
        term = int(c.numerator) * pow(int(c.denominator), -1, prime)
        for x, e in zip(point, exps):
            if e:
                term = term * pow(x, e, prime)
        total += term
    return total % prime


def line_degree(h: Polynomial, outer, rng: random.Random, bound: int) -> int:
    """deg_t of h(outer(x)) on a random line x = p + q*t, reduced mod a prime.

    The restriction has degree at most ``bound``, so bound + 1 values fix it;
    Newton's divided differences then read off its degree over F_p, which
    cannot exceed the degree over the rationals.
    """
    prime = LINE_PRIME
    base = [rng.randint(-9, 9) for _ in range(3)]
    step = [int(_nonzero(rng, 9)) for _ in range(3)]
    values = []
    for t in range(bound + 1):
        x = [(b + q * t) % prime for b, q in zip(base, step)]
        y = [_eval_mod(im, x, prime) for im in outer.images]
        values.append(_eval_mod(h, y, prime))
    # divided differences on the nodes 0, 1, ..., bound
    deg = 0 if values[0] else -1
    for k in range(1, bound + 1):
        inv = pow(k, -1, prime)
        values = [(values[j + 1] - values[j]) * inv % prime for j in range(len(values) - 1)]
        if values[0]:
            deg = k
    return deg


def _theorem1_s1(seed: int, report: Report):
    rng = random.Random(f"theorem1|1|{seed}")
    degrees = []
    for k in range(S1_TRIALS):
        u = _rational(rng)
        got = tuple(phi(u)[i].total_degree() for i in range(3))
        degrees.append(list(got))
        report.add(f"u = {u}: deg phi_u(x_i)", got == PHI_DEGREES, PHI_DEGREES, got)
        report.add(f"u = {u}: not affine", min(got) >= 9, ">= 9", min(got))
    report.classes = {"degrees": degrees}


def _theorem1_s2(seed: int, budget: int, report: Report):
    rng = random.Random(f"theorem1|2|{seed}")
    alpha = sample_l2_map(rng)
    u1, u2 = _nonzero(rng), _nonzero(rng)
    report.add("alpha1 type", tuple(affine_type(alpha)) == L2_TYPE,
               L2_TYPE, tuple(affine_type(alpha)))
    report.add("alpha1 not in B", not in_B(alpha), "true", str(not in_B(alpha)).lower())
    pp = phi_prime(u1)
    lift = hat_lift(alpha)
    classes = [classify(pp.apply(lift[i])) for i in (3, 4, 5)]
    if None in classes:
        report.add("classes of (t_r, t_f, t_g) images", False, "classified",
                   ", ".join(map(str, classes)))
        return
    w = CWitness.from_classes(*classes)
    report.witness = w.to_json()
    report.add("condition (C)", w.satisfies(L2_TYPE), "(c2) and (c3) hold",
               ", ".join(w.violations(L2_TYPE)) or "hold")
    report.add("sample", True, "", f"alpha1 = {alpha.to_json()}, u1 = {u1}, u2 = {u2}")
    outer, inner = phi(u1), phi(u2)
    images = alpha.images()
    for i in range(1, 4):
        start = ClassIndex(i, i + 1)
        idx = compose_class_bound(w, start)
        predicted = 5 * idx.gamma + 2 * idx.delta
        report.classes[f"x{i}"] = idx.to_json()
        h = inner[i - 1].substitute(images)
        hi = upper_bound(h)
        lo = -1
        for _ in range(LINE_TRIES):
            lo = max(lo, line_degree(h, outer, rng, hi))
            if lo == hi:
                break
        report.add(f"deg theta(x{i}) bracket", lo == hi == predicted,
                   f"{predicted} = 5*{idx.gamma} + 2*{idx.delta}", f"[{lo}, {hi}]")
        report.add(f"deg theta(x{i}) >= 9", lo >= 9, ">= 9", lo)
        if i in FULL_EXPANSION:
            try:
                theta = h.substitute(outer.images, budget=budget)
            except BudgetExceeded as exc:
                report.add(f"full expansion theta(x{i})", False, f"within {budget} terms",
                           f"BudgetExceeded: {exc}")
            else:
                got = theta.total_degree()
                report.add(f"full expansion theta(x{i})", got == predicted, predicted,
                           f"{got} ({len(theta)} terms)")


def verify_theorem1(s: int, seed: int = 0, budget: int = DEFAULT_BUDGET,
                    timing: bool = False) -> Report:
    """Degrees of theta(x_i) for a word of length s in {1, 2}."""
    if s not in (1, 2):
        raise ValueError("word length s must be 1 or 2")
    start = time.perf_counter()
    report = Report(f"theorem1 s={s}", seed=seed)
    if s == 1:
        _theorem1_s1(seed, report)
    else:
        _theorem1_s2(seed, budget, report)
    if timing:
        report.millis = int((time.perf_counter() - start) * 1000)
    return report.finish()


# -- centralizer --------------------------------------------------------------

def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_rem(a: list, b: list) -> list:
    a = list(a)
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] -= q * c
        _poly_trim(a)
    return a


def univariate_gcd(polys) -> list:
    """Monic gcd of univariate rational polynomials given low degree first."""
    g = []
    for p in polys:
        p = _poly_trim(list(p))
        while p:
            g, p = p, _poly_rem(g, p)
    if not g:
        return g
    lead = g[-1]
    return [c / lead for c in g]


def rational_roots(p: list) -> list:
    """Rational roots of a monic polynomial with rational coefficients."""
    den = lcm(*(int(c.denominator) for c in p))
    ints = [int(c * den) for c in p]
    while ints and ints[0] == 0:
        ints.pop(0)
    roots = {Rational(0)} if len(ints) < len(p) else set()
    if len(ints) <= 1:
        return sorted(roots)

    def divisors(n):
        n = abs(n)
        return [k for k in range(1, n + 1) if n % k == 0]

    for num in divisors(ints[0]):
        for d in divisors(ints[-1]):
            for cand in (Rational(num, d), Rational(-num, d)):
                if sum(c * cand ** k for k, c in enumerate(ints)) == 0:
                    roots.add(cand)
    return sorted(roots)


def _coefficients_in(poly: Polynomial, symbol: str) -> list:
    """Coefficients of poly, each a univariate polynomial in ``symbol``."""
    field = poly.domain
    pos = field.roster.index(symbol)
    out = []
    for _, c in poly.items():
        if not c.den == field.zero_exp:
            raise ValueError("coefficient is not polynomial in the parameter")
        coeffs = {}
        for exps, q in c.num.items():
            coeffs[exps[pos]] = coeffs.get(exps[pos], 0) + q
        out.append([Rational(coeffs.get(k, 0)) for k in range(max(coeffs) + 1)])
    return out


def verify_centralizer(timing: bool = False) -> Report:
    start = time.perf_counter()
    report = Report("centralizer")
    K = ParamField(invertible=("u",))
    u = K.symbol("u")
    lhs = compose(beta(u), compose(phi(Rational(1)), beta_inverse(u)))
    report.add("beta_u phi beta_u^-1 = phi_(u^7)", endo_equal(lhs, phi(u ** 7)))

    Kw = ParamField(invertible=())
    w = Kw.symbol("v")
    f, r, g = (p.with_domain(Kw) for p in base_polys())
    x1 = Polynomial.gen(0, NVARS_SMALL, Kw)
    phi_w_x1 = exp_apply(delta(), w, x1)
    phi_1_x1 = phi(Rational(1))[0].with_domain(Kw)
    want = x1 - r * f * w * 2 + f ** 2 * g * w ** 2
    report.add("phi_w(x1) = x1 - 2w rf + w^2 f^2 g", phi_w_x1 == want, str(want), str(phi_w_x1))
    diff = phi_w_x1 - phi_1_x1
    gcd = univariate_gcd(_coefficients_in(diff, "v"))
    roots = rational_roots(gcd) if gcd else None
    report.add("phi_w = phi only at w = 1", roots == [Rational(1)], "[1]",
               "every w" if roots is None else "[" + ", ".join(map(str, roots)) + "]")
    conj = compose(beta(Rational(2)), compose(phi(Rational(1)), beta_inverse(Rational(2))))
    report.add("beta_2 phi beta_2^-1 != phi", not endo_equal(conj, phi(Rational(1))),
               "differs", "differs" if not endo_equal(conj, phi(Rational(1))) else "equal")
    report.add("beta_2 phi beta_2^-1 = phi_128", endo_equal(conj, phi(Rational(128))))
    if timing:
        report.millis = int((time.perf_counter() - start) * 1000)
    return report.finish()
