"""Replay the case lemmas symbolically and on random rational instances."""

from __future__ import annotations

import random
import time
from functools import lru_cache
from importlib import resources

from cotame.coeffs import QQ, ParamField, Rational, evaluate_expression, format_coeff
from cotame.multipoly import NVARS_BIG, Polynomial, Term, _term_text
from cotame.objects import (
    AffineMap,
    AffineType,
    CaseConstraintViolated,
    TypeMismatch,
    UndecidableNonzero,
    affine_type,
    derived_params,
    hat_lift,
    in_B,
    modified_lift,
    phi_prime,
)
from cotame.pclass import CWitness, classify
from cotame.verify.cases import CASE_IDS, Branch, CaseSpec, get_case
from cotame.verify.report import Report

DEFAULT_TRIALS = 20
MAX_ATTEMPTS = 2000
IMAGE_NAMES = ("R", "F", "G")

# numeric samples: numerator and denominator bounds
SAMPLE_NUM = 7
SAMPLE_DEN = 7


class SamplingFailed(RuntimeError):
    pass


def _text(c) -> str:
    neg, body, _ = format_coeff(c)
    return f"-{body}" if neg else body


def lt_text(term: Term) -> str:
    return _term_text(term.coefficient, term.exponent, first=True)


class Instance:
    """The affine map of one case branch, symbolic or at sampled values."""

    def __init__(self, spec: CaseSpec, branch: Branch, values: dict | None = None):
        self.spec = spec
        self.branch = branch
        if values is None:
            self.field = ParamField(spec.invertible, spec.roster)
            ns = dict(self.field.namespace())
            self.convert = self.field
        else:
            self.field = QQ
            ns = dict(values)
            self.convert = Rational
        for name, expr in branch.subs:
            ns[name] = self.eval(expr, ns)
        rows = [[ns[f"{r}{j}"] for j in (1, 2, 3)] for r in "abc"]
        d = [ns[f"d{j}"] for j in (1, 2, 3)]
        self.alpha = AffineMap(rows, d, check=False)
        self.derived = derived_params(self.alpha)
        bound = {name for name, _ in branch.subs} | set(spec.params)
        for name in ("P", "Q", "S", "T"):
            if name not in bound:
                ns[name] = getattr(self.derived, name)
        self.bound = bound
        self.ns = ns

    def eval(self, expr: str, ns=None):
        return evaluate_expression(expr, self.ns if ns is None else ns, self.convert)

    @property
    def symbolic(self) -> bool:
        return self.field != QQ


def _lift(inst: Instance):
    kind = inst.spec.lift
    if kind == "hat":
        return hat_lift(inst.alpha)
    if kind == "L5_iii":
        return modified_lift(inst.alpha, "L5_iii")
    if kind == "L6_vi_viii":
        return modified_lift(inst.alpha, "L6_vi_viii")
    raise ValueError(f"case {inst.spec.id} has no lift")


def _is_zero(v) -> bool:
    return not v


def check_branch(inst: Instance, report: Report, prefix: str = "", lts: dict | None = None) -> dict:
    """Run every check of one branch; returns the computed class indices.

    Computed leading terms are written to ``lts`` by image name when given.
    """
    spec, br = inst.spec, inst.branch
    add = lambda name, *a: report.add(prefix + name, *a)  # noqa: E731
    for expr in br.vanishing:
        v = inst.eval(expr)
        add(f"vanish {expr}", _is_zero(v), "0", _text(v))
    for name in ("P", "T"):
        if name in inst.bound:
            got = getattr(inst.derived, name)
            add(f"closure {name}", got == inst.ns[name], _text(inst.ns[name]), _text(got))
    for lhs, rhs in br.identities:
        a, b = inst.eval(lhs), inst.eval(rhs)
        add(f"identity {lhs} = {rhs}", a == b, _text(b), _text(a))
    hyps = [inst.eval(h) for h in br.hypotheses]
    if inst.symbolic:
        for h, v in zip(br.hypotheses, hyps):
            add(f"hypothesis {h} not identically 0", not _is_zero(v), "nonzero", _text(v))
    det = inst.alpha.determinant()
    add("determinant nonzero", not _is_zero(det), "nonzero", _text(det))
    try:
        t = affine_type(inst.alpha, claimed=spec.type if inst.symbolic else None, nonzero=hyps)
        add("type", tuple(t) == spec.type, str(AffineType(*spec.type)), str(t))
    except (TypeMismatch, UndecidableNonzero) as exc:
        add("type", False, str(AffineType(*spec.type)), str(exc))
    if spec.check_in_B:
        add("alpha in B", in_B(inst.alpha), "true", str(in_B(inst.alpha)).lower())
        return {}
    try:
        lift = _lift(inst)
    except CaseConstraintViolated as exc:
        add("lift constraints", False, "satisfied", str(exc))
        return {}
    u = inst.ns["u"]
    pp = phi_prime(u)
    images = dict(zip(IMAGE_NAMES, (pp.apply(lift[i]) for i in (3, 4, 5))))
    classes = {}
    for name in IMAGE_NAMES:
        p = images[name]
        if p.is_zero():
            add(f"class {name}", False, str(br.classes.get(name)), "zero")
            continue
        idx = classify(p)
        classes[name] = None if idx is None else list(idx)
        want = br.classes.get(name)
        if want is not None:
            add(f"class {name}", idx is not None and tuple(idx) == tuple(want),
                f"({want[0]},{want[1]})", str(idx))
    for name, expr in br.leading.items():
        gamma, delta = br.classes[name]
        want = Term((0, 0, 0, 0, delta, gamma), inst.eval(expr))
        got = images[name].leading_term() if images[name] else None
        ok = got is not None and got.exponent == want.exponent and got.coefficient == want.coefficient
        add(f"lt {name}", ok, lt_text(want), lt_text(got) if got else "0")
        if lts is not None:
            lts[name] = lt_text(got) if got else "0"
    if br.images:
        env = dict(inst.ns)
        for i in range(3):
            env[f"X{i + 1}"] = pp.apply(lift[i])
            env[f"Y{i + 1}"] = pp[i]
        env["Tr"] = pp[3]
        for name, expr in br.images.items():
            want = Polynomial.parse(expr, NVARS_BIG, inst.field, env)
            add(f"image {name} = {expr}", images[name] == want, "equal",
                "equal" if images[name] == want else "differs")
    if br.witness is not None and len(classes) == 3 and None not in classes.values():
        w = CWitness.from_classes(classes["R"], classes["F"], classes["G"])
        add("witness", w.as_tuple() == tuple(br.witness),
            str(CWitness(*br.witness)), str(w))
        bad = w.violations(spec.type)
        add("condition (C)", not bad, "(c2) and (c3) hold", ", ".join(bad) or "hold")
    return classes


def _sample_values(spec: CaseSpec, branch: Branch, rng: random.Random) -> dict:
    values = {}
    for name in spec.free_symbols(branch):
        while True:
            v = Rational(rng.randint(-SAMPLE_NUM, SAMPLE_NUM), rng.randint(1, SAMPLE_DEN))
            if v or name not in spec.invertible:
                break
        values[name] = v
    return values


def sample_instance(spec: CaseSpec, branch: Branch, rng: random.Random) -> Instance:
    """Rejection-sample a rational instance meeting the branch hypotheses."""
    for _ in range(MAX_ATTEMPTS):
        values = _sample_values(spec, branch, rng)
        try:
            inst = Instance(spec, branch, values)
            if any(not inst.eval(h) for h in branch.hypotheses):
                continue
        except ZeroDivisionError:
            continue
        if not inst.alpha.determinant():
            continue
        if tuple(affine_type(inst.alpha)) != spec.type:
            continue
        if not spec.check_in_B and in_B(inst.alpha):
            continue
        return inst
    raise SamplingFailed(f"no admissible sample for {spec.id} {branch.label}")


def _branch_key(spec: CaseSpec, branch: Branch) -> str:
    return branch.label or spec.id


def _store(report: Report, spec: CaseSpec, branch: Branch, classes: dict):
    if len(spec.branches) == 1:
        report.classes.update(classes)
        if branch.witness is not None:
            report.witness = list(branch.witness)
    else:
        report.classes[branch.label] = classes
        if branch.witness is not None:
            report.witness = dict(report.witness or {})
            report.witness[branch.label] = list(branch.witness)


def leading_term_lines() -> list:
    """'<case> [<branch>] <image>: <lt>' for every displayed leading term."""
    lines = []
    for case_id in CASE_IDS:
        spec = get_case(case_id)
        for br in spec.branches:
            prefix = f"{br.label} " if br.label else ""
            for name, expr in br.leading.items():
                inst = Instance(spec, br)
                gamma, delta = br.classes[name]
                term = Term((0, 0, 0, 0, delta, gamma), inst.eval(expr))
                lines.append(f"{case_id} {prefix}{name}: {lt_text(term)}")
    return lines


@lru_cache(maxsize=None)
def golden_leading_terms() -> dict:
    text = resources.files("cotame").joinpath("golden", "leading_terms.txt").read_text()
    return dict(line.split(": ", 1) for line in text.splitlines() if line)


def verify_lemma(case_id: str, mode: str = "symbolic", seed: int = 0,
                 trials: int = DEFAULT_TRIALS, timing: bool = False) -> Report:
    """Check one case; ``mode`` is "symbolic" or "numeric"."""
    spec = get_case(case_id)
    start = time.perf_counter()
    if mode == "symbolic":
        report = Report(case_id)
        gold = golden_leading_terms()
        for br in spec.branches:
            prefix = f"{br.label} " if br.label else ""
            lts = {}
            classes = check_branch(Instance(spec, br), report, prefix, lts)
            for name, text in lts.items():
                key = f"{case_id} {prefix}{name}"
                report.add(f"{prefix}golden lt {name}", gold.get(key) == text,
                           gold.get(key, "missing"), text)
            _store(report, spec, br, classes)
    elif mode == "numeric":
        report = Report(f"{case_id} numeric", seed=seed)
        for br in spec.branches:
            prefix = f"{br.label} " if br.label else ""
            rng = random.Random(f"{case_id}|{br.label}|{seed}")
            failures = 0
            classes = {}
            for k in range(trials):
                scratch = Report(case_id)
                try:
                    inst = sample_instance(spec, br, rng)
                except SamplingFailed as exc:
                    report.add(f"{prefix}sampling", False, "admissible sample", str(exc))
                    failures += 1
                    break
                classes = check_branch(inst, scratch, f"{prefix}trial {k}: ")
                bad = [c for c in scratch.checks if not c.ok]
                if bad:
                    failures += 1
                    report.checks.extend(bad)
            report.add(f"{prefix}{trials} trials", failures == 0,
                       f"{trials} passing", f"{trials - failures} passing")
            _store(report, spec, br, classes)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if timing:
        report.millis = int((time.perf_counter() - start) * 1000)
    return report.finish()
