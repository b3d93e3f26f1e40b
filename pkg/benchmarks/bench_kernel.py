"""Compare the compiled kernel with the pure-Python fallback.

Each backend runs in its own interpreter, since the kernel is chosen at import
time.  Usage:

    python3 benchmarks/bench_kernel.py [--repeat N] [--quick]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    "mul": "dense product of two phi(x3) images",
    "exp": "phi_u(x3) from the exponential series, symbolic u",
    "substitute": "alpha(phi_2(x3)) for a fixed integer alpha",
    "lemma": "symbolic replay of the L6.iii case",
    "compose": "phi_1(phi_2(x1)), which collapses to phi_3(x1)",
}
QUICK = ("mul", "exp")


def _workload(name: str):
    from cotame.coeffs import ParamField, Rational
    from cotame.derivations import exp_apply
    from cotame.multipoly import NVARS_SMALL, Polynomial
    from cotame.objects import AffineMap, delta, phi

    if name == "mul":
        p = phi(Rational(2))[2]
        q = phi(Rational(-3))[2]
        return lambda: p * q
    if name == "exp":
        u = ParamField(invertible=("u",)).symbol("u")
        x3 = Polynomial.gen(2, NVARS_SMALL, u.field)
        return lambda: exp_apply(delta(), u, x3)
    if name == "substitute":
        alpha = AffineMap([[1, 2, 0], [0, 1, 1], [1, 0, 2]], [1, -1, 0])
        p = phi(Rational(2))[2]
        return lambda: p.substitute(alpha.images())
    if name == "compose":
        outer = phi(Rational(1))
        p = phi(Rational(2))[0]
        return lambda: outer.apply(p)
    if name == "lemma":
        from cotame.verify import verify_lemma

        return lambda: verify_lemma("L6.iii")
    raise KeyError(name)


def child(names, repeat: int):
    from cotame.kernel import BACKEND

    out = {"backend": BACKEND}
    for name in names:
        fn = _workload(name)
        best = float("inf")
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        out[name] = best
    print(json.dumps(out))


def run_backend(pure: bool, names, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("COTAME_PURE_PYTHON", None)
    if pure:
        env["COTAME_PURE_PYTHON"] = "1"
    cmd = [sys.executable, __file__, "--child", "--repeat", str(repeat), *names]
    res = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1, help="best of N runs")
    parser.add_argument("--quick", action="store_true", help="only the small workloads")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("workloads", nargs="*")
    args = parser.parse_args(argv)
    names = args.workloads or (QUICK if args.quick else tuple(WORKLOADS))
    if args.child:
        child(names, args.repeat)
        return
    compiled = run_backend(False, names, args.repeat)
    pure = run_backend(True, names, args.repeat)
    if compiled["backend"] != "cython":
        print("compiled kernel not available; both runs use pure Python")
    print(f"{'workload':<12} {'compiled s':>11} {'python s':>10} {'speedup':>8}  description")
    for name in names:
        c, p = compiled[name], pure[name]
        print(f"{name:<12} {c:>11.4f} {p:>10.4f} {p / c:>7.1f}x  {WORKLOADS[name]}")


if __name__ == "__main__":
    main()
