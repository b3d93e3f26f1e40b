"""Pure-Python sparse multiplication kernel.

Terms are dicts from packed exponent keys to nonzero coefficients.  Keys are
packed so that adding two keys adds the exponent vectors; the caller
guarantees no field overflows.
"""


def mul_terms(a: dict, b: dict, layout=None) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    a_items = list(a.items())
    for kb, cb in b.items():
        for ka, ca in a_items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def addmul_terms(acc: dict, a: dict, scale) -> None:
    """acc += scale * a, in place, dropping cancelled terms."""
    get = acc.get
    for k, c in a.items():
        s = get(k, 0) + c * scale
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
