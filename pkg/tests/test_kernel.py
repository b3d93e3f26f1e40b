"""The compiled and pure-Python kernels must agree term for term."""

import os
import random
import subprocess
import sys

import pytest

from cotame import _pykernel, kernel
from cotame.coeffs import ParamField, Rational
from cotame.multipoly import NVARS_BIG, Polynomial, _layout, pack

ckernel = pytest.importorskip("cotame._ckernel")


def _random_terms(rng, n, maxexp=6, den=5):
    terms = {}
    for _ in range(n):
        key = pack(tuple(rng.randint(0, maxexp) for _ in range(NVARS_BIG)))
        terms[key] = Rational(rng.randint(-20, 20) or 1, rng.randint(1, den))
    return terms


@pytest.mark.parametrize("seed", range(12))
def test_mul_agrees_on_rationals(seed):
    rng = random.Random(seed)
    a = _random_terms(rng, rng.randint(1, 60))
    b = _random_terms(rng, rng.randint(1, 60))
    assert ckernel.mul_terms(a, b) == _pykernel.mul_terms(a, b)


def test_mul_agrees_with_wide_layout():
    K = ParamField(invertible=("u", "P", "c1"))
    u, P, c1 = K.symbols(["u", "P", "c1"])
    x = Polynomial.gens(NVARS_BIG, K)
    p = (x[0] * u ** 3 + x[4] * P - x[5] * c1 ** 2 + 1) ** 3
    q = (x[3] * u - x[1] * P ** 2 + c1) ** 4
    lay = _layout(K).kernel_layout
    assert ckernel.mul_terms(p.terms, q.terms, lay) == _pykernel.mul_terms(p.terms, q.terms, lay)


def test_mul_handles_large_coefficients():
    a = {pack((1, 0, 0, 0, 0, 0)): Rational(3 ** 200, 7 ** 50), pack((0,) * 6): Rational(-1)}
    b = {pack((0, 1, 0, 0, 0, 0)): Rational(2 ** 300), pack((1, 0, 0, 0, 0, 0)): Rational(5, 3)}
    assert ckernel.mul_terms(a, b) == _pykernel.mul_terms(a, b)


def test_cancellation_drops_terms():
    one = pack((0,) * 6)
    x = pack((1, 0, 0, 0, 0, 0))
    a = {x: Rational(1), one: Rational(1)}
    b = {x: Rational(1), one: Rational(-1)}
    assert ckernel.mul_terms(a, b) == {2 * x: 1, one: -1}


def test_addmul_agrees():
    rng = random.Random(3)
    a = _random_terms(rng, 40)
    acc1 = _random_terms(rng, 40)
    acc2 = dict(acc1)
    ckernel.addmul_terms(acc1, a, Rational(-2, 3))
    _pykernel.addmul_terms(acc2, a, Rational(-2, 3))
    assert acc1 == acc2


def test_backend_selection_env():
    env = dict(os.environ, COTAME_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from cotame.kernel import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernel.BACKEND in ("python", "cython")


def test_dispatch_small_products_match():
    rng = random.Random(11)
    for _ in range(20):
        a = _random_terms(rng, rng.randint(1, 30))
        b = _random_terms(rng, rng.randint(1, 30))
        assert kernel.mul_terms(a, b) == _pykernel.mul_terms(a, b)
