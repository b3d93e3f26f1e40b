"""Command line entry point: ``cotame <subcommand>``.

Exit status is 0 exactly when every selected check passes.
"""

from __future__ import annotations

import argparse
import sys

from cotame.coeffs import ParamField
from cotame.objects import base_polys, beta, beta_inverse, delta, delta_prime, phi, phi_prime, pi_map
from cotame.verify import (
    CASE_IDS,
    DEFAULT_BUDGET,
    UnknownCase,
    emit,
    verify_centralizer,
    verify_foundations,
    verify_lemma,
    verify_theorem1,
)
from cotame.verify.lemmas import DEFAULT_TRIALS


def _symbolic_u():
    return ParamField(invertible=("u",)).symbol("u")


EMITTABLE = {
    "f": lambda: base_polys()[0],
    "r": lambda: base_polys()[1],
    "g": lambda: base_polys()[2],
    "delta": delta,
    "delta-prime": delta_prime,
    "phi": lambda: phi(_symbolic_u()),
    "phi-prime": lambda: phi_prime(_symbolic_u()),
    "beta": lambda: beta(_symbolic_u()),
    "beta-inverse": lambda: beta_inverse(_symbolic_u()),
    "pi": pi_map,
}


def _global_flags(parser, defaults: bool):
    # the subcommand copies suppress their defaults so a flag given before
    # the subcommand is not overwritten
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--report", metavar="PATH", default=d(None),
                        help="also write the structured report to PATH")
    parser.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET), metavar="TERMS",
                        help=f"term budget for word expansions (default {DEFAULT_BUDGET})")
    parser.add_argument("--timing", action="store_true", default=d(False),
                        help="record elapsed milliseconds (reports stop being reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cotame", description=__doc__.splitlines()[0])
    _global_flags(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)
    sub = parser.add_subparsers(dest="command", required=True)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)  # noqa: E731

    add("foundations", help="identities for Delta, beta_u, phi'_u and pi")
    lemma = add("lemma", help="one case lemma")
    lemma.add_argument("case", metavar="ID", help=", ".join(CASE_IDS))
    lemma.add_argument("--numeric", action="store_true", help="random rational instances")
    lemma.add_argument("--seed", type=int, default=0)
    lemma.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    th = add("theorem1", help="degrees of short words")
    th.add_argument("--s", type=int, choices=(1, 2), default=1)
    th.add_argument("--seed", type=int, default=0)
    add("centralizer", help="beta conjugation and phi_w = phi")
    em = add("emit", help="print a named object in canonical form")
    em.add_argument("object", choices=sorted(EMITTABLE))
    em.add_argument("--format", choices=("text", "structured"), default="text")
    run_all = add("all", help="every check")
    run_all.add_argument("--seed", type=int, default=0)
    run_all.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    return parser


def collect(args) -> list:
    t = args.timing
    if args.command == "foundations":
        return verify_foundations(timing=t)
    if args.command == "lemma":
        mode = "numeric" if args.numeric else "symbolic"
        return [verify_lemma(args.case, mode, seed=args.seed, trials=args.trials, timing=t)]
    if args.command == "theorem1":
        return [verify_theorem1(args.s, seed=args.seed, budget=args.budget, timing=t)]
    if args.command == "centralizer":
        return [verify_centralizer(timing=t)]
    reports = verify_foundations(timing=t)
    for case_id in CASE_IDS:
        reports.append(verify_lemma(case_id, timing=t))
        reports.append(verify_lemma(case_id, "numeric", seed=args.seed,
                                    trials=args.trials, timing=t))
    for s in (1, 2):
        reports.append(verify_theorem1(s, seed=args.seed, budget=args.budget, timing=t))
    reports.append(verify_centralizer(timing=t))
    return reports


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout.buffer
    if args.command == "emit":
        data = emit(EMITTABLE[args.object](), args.format)
        out.write(data)
        out.flush()
        if args.report:
            with open(args.report, "wb") as fh:
                fh.write(data)
        return 0
    try:
        reports = collect(args)
    except UnknownCase as exc:
        print(f"cotame: {exc}", file=sys.stderr)
        return 2
    out.write(emit(reports, "text"))
    failed = [r.id for r in reports if not r.passed]
    summary = f"{len(reports) - len(failed)}/{len(reports)} reports pass"
    if failed:
        summary += "; failing: " + ", ".join(failed)
    out.write((summary + "\n").encode())
    out.flush()
    if args.report:
        with open(args.report, "wb") as fh:
            fh.write(emit(reports, "structured"))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
