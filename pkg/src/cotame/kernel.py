"""Kernel selection: the compiled extension when built, else pure Python.

Set ``COTAME_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the kernel-agreement tests).
"""

import os

from cotame import _pykernel

BACKEND = "python"
mul_terms = _pykernel.mul_terms
addmul_terms = _pykernel.addmul_terms

# The compiled product pays per-term conversion on the way in and out, so
# it only wins when the smaller factor is large enough to amortize that.
MIN_FACTOR = int(os.environ.get("COTAME_MIN_FACTOR", 16))

if not os.environ.get("COTAME_PURE_PYTHON"):
    try:
        from cotame import _ckernel
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        _slow_mul = _pykernel.mul_terms
        _fast_mul = _ckernel.mul_terms

        def mul_terms(a: dict, b: dict, layout=None) -> dict:
            if min(len(a), len(b)) < MIN_FACTOR:
                return _slow_mul(a, b, layout)
            return _fast_mul(a, b, layout)
