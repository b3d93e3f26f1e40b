"""The displayed identities about f, r, g, Delta, phi_u, beta_u and pi."""

from __future__ import annotations

import time
from importlib import resources

from cotame.coeffs import ParamField
from cotame.derivations import compose, endo_equal, exp_apply
from cotame.multipoly import NVARS_BIG, NVARS_SMALL, Polynomial
from cotame.objects import base_polys, beta, beta_inverse, delta, phi, phi_prime, pi_map
from cotame.pclass import ClassIndex, classify
from cotame.verify.report import Report

# phi'_u on x1, x2, x3 as displayed, term for term
PHI_PRIME_DISPLAY = (
    "x1 - 2*u*tr*tf + u^2*tf^2*tg",
    "x2 + 4*u*x1*tr - u*tg - 4*u^2*tr^2*tf - 2*u^2*x1*tf*tg + 4*u^3*tr*tf^2*tg"
    " - u^4*tf^3*tg^2",
    "x3 + 6*u*x2*tr + 2*u*tf^2 - 3*u^2*x2*tf*tg + 12*u^2*x1*tr^2 - 3*u^2*tr*tg"
    " + 2*u^3*tf*tg^2 - 8*u^3*tr^3*tf - 12*u^3*x1*tr*tf*tg + 3*u^4*x1*tf^2*tg^2"
    " + 12*u^4*tr^2*tf^2*tg - 6*u^5*tr*tf^3*tg^2 + u^6*tf^4*tg^3",
)
PHI_PRIME_TERMS = (3, 7, 13)
T_DISPLAY = ("tr - u*tf*tg", "tf", "tg")


def golden(name: str) -> str:
    return resources.files("cotame").joinpath("golden", name).read_text()


def image_lines(images) -> list:
    names = ("x1", "x2", "x3", "tr", "tf", "tg")
    return [f"{n} -> {im}" for n, im in zip(names, images)]


def verify_foundations(timing: bool = False) -> list:
    start = time.perf_counter()
    reports = []

    def new(rid):
        r = Report(rid)
        reports.append(r)
        return r

    f, r, g = base_polys()
    x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
    D = delta()
    rep = new("delta")
    for name, lhs, rhs in (
        ("Delta(x1) = -2rf", D(x1), -2 * r * f),
        ("Delta(r) = -fg", D(r), -f * g),
        ("Delta(x2) = 4x1r - g", D(x2), 4 * x1 * r - g),
        ("Delta(x3) = 6x2r + 2f^2", D(x3), 6 * x2 * r + 2 * f ** 2),
    ):
        rep.add(name, lhs == rhs, str(rhs), str(lhs))

    K = ParamField(invertible=("u", "v"))
    u, v = K.symbols(["u", "v"])
    fk, rk, gk = (p.with_domain(K) for p in (f, r, g))
    bu = beta(u)
    rep = new("beta scales f, r, g")
    for name, p, w in (("f", fk, 4), ("r", rk, 6), ("g", gk, 9)):
        lhs, rhs = bu.apply(p), p * u ** w
        rep.add(f"beta_u({name}) = u^{w}{name}", lhs == rhs, str(rhs), str(lhs))
    rep = new("beta conjugates Delta")
    for i, xi in enumerate(Polynomial.gens(NVARS_SMALL, K)):
        lhs = bu.apply(D(xi))
        rhs = D(bu.apply(xi)) * u ** 7
        rep.add(f"(beta_u Delta)(x{i + 1}) = u^7 (Delta beta_u)(x{i + 1})", lhs == rhs)

    rep = new("beta conjugates phi")
    lhs = compose(beta(v), compose(phi(u), beta_inverse(v)))
    rhs = phi(u * v ** 7)
    rep.add("beta_v phi_u beta_v^-1 = phi_(u v^7)", endo_equal(lhs, rhs))

    Ku = ParamField(invertible=("u",))
    uu = Ku.symbol("u")
    pp = phi_prime(uu)
    rep = new("phi' images")
    gold = golden("phi_prime.txt").splitlines()
    computed = image_lines(pp.images)
    for i in range(3):
        want = Polynomial.parse(PHI_PRIME_DISPLAY[i], NVARS_BIG, Ku)
        rep.add(f"phi'_u(x{i + 1}) = display", pp[i] == want, str(want), str(pp[i]))
        rep.add(f"phi'_u(x{i + 1}) term count", len(pp[i]) == PHI_PRIME_TERMS[i],
                PHI_PRIME_TERMS[i], len(pp[i]))
    for j, text in enumerate(T_DISPLAY):
        want = Polynomial.parse(text, NVARS_BIG, Ku)
        name = ("tr", "tf", "tg")[j]
        rep.add(f"phi'_u({name}) = {text}", pp[3 + j] == want, str(want), str(pp[3 + j]))
    rep.add("golden phi_prime.txt", computed == gold, "\n".join(gold), "\n".join(computed))

    rep = new("phi' leading terms")
    for i in range(1, 4):
        lt = pp[i - 1].leading_term()
        coeff = uu ** (2 * i) * (-1) ** (i + 1)
        exps = (0, 0, 0, 0, i + 1, i)
        rep.add(f"lt(phi'_u(x{i}))", lt.exponent == exps and lt.coefficient == coeff,
                f"{exps} {coeff}", f"{lt.exponent} {lt.coefficient}")
        idx = classify(pp[i - 1])
        rep.add(f"classify(phi'_u(x{i}))", idx == ClassIndex(i, i + 1), f"({i},{i + 1})", str(idx))

    rep = new("pi commutes")
    pi = pi_map()
    fu, ru, gu = (p.with_domain(Ku) for p in (f, r, g))
    # phi_u on r, f, g straight from the exponential series
    phi_u = phi(uu)
    phi_pi = [phi_u[0], phi_u[1], phi_u[2],
              exp_apply(D, uu, ru), exp_apply(D, uu, fu), exp_apply(D, uu, gu)]
    for j, name in enumerate(("x1", "x2", "x3", "tr", "tf", "tg")):
        lhs = pi.apply(pp[j])
        rep.add(f"pi(phi'_u({name})) = phi_u(pi({name}))", lhs == phi_pi[j])
    rep.add("phi_u(f) = f", phi_pi[4] == fu)
    rep.add("phi_u(g) = g", phi_pi[5] == gu)

    millis = int((time.perf_counter() - start) * 1000) if timing else None
    for rep in reports:
        rep.millis = millis
        rep.finish()
    return reports
