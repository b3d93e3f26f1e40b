# distutils: language = c++
# distutils: libraries = gmp
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse multiplication kernel.

Term dicts map packed exponent keys (Python ints whose bit fields never
carry into each other) to coefficients.  Keys below 2**64 are used as is.
Wider keys, such as those with parameter exponents in their low fields, are
repacked into 128 bits, with each field sized to the largest exponent sum the
product can produce.  Rational coefficients are cleared to a common
denominator and accumulated with GMP's fused multiply-add in an
open-addressing table.  Any other coefficient type goes through a generic
object loop.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, realloc, free
from libc.string cimport memset

from gmpy2 import mpq as _mpq

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    ctypedef const __mpz_struct* mpz_srcptr
    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_neg(mpz_ptr, mpz_srcptr)
    void mpz_addmul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void*)
    void* mpz_export(void*, size_t*, int, size_t, int, size_t, mpz_srcptr)
    size_t mpz_sizeinbase(mpz_srcptr, int)
    int mpz_sgn(mpz_srcptr)

cdef extern from *:
    """
    typedef unsigned __int128 ck_u128;

    static inline uint64_t ck_lo(ck_u128 x) { return (uint64_t)x; }
    static inline uint64_t ck_hi(ck_u128 x) { return (uint64_t)(x >> 64); }
    static inline ck_u128 ck_make(uint64_t hi, uint64_t lo) {
        return (((ck_u128)hi) << 64) | (ck_u128)lo;
    }
    static inline uint64_t ck_mix(ck_u128 x) {
        uint64_t z = (uint64_t)x ^ ((uint64_t)(x >> 64) * 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /* read `width` (<= 16) bits starting at bit `shift` of a little-endian buffer */
    static inline uint64_t ck_read(const unsigned char* buf, int shift, int width) {
        const unsigned char* p = buf + (shift >> 3);
        uint64_t v = (uint64_t)p[0] | ((uint64_t)p[1] << 8) | ((uint64_t)p[2] << 16);
        return (v >> (shift & 7)) & ((1ULL << width) - 1);
    }
    static inline void ck_write(unsigned char* buf, int shift, uint64_t v) {
        unsigned char* p = buf + (shift >> 3);
        v <<= (shift & 7);
        p[0] |= (unsigned char)v;
        p[1] |= (unsigned char)(v >> 8);
        p[2] |= (unsigned char)(v >> 16);
    }
    static inline ck_u128 ck_field(ck_u128 key, int shift, int width) {
        return (key >> shift) & ((((ck_u128)1) << width) - 1);
    }
    static inline ck_u128 ck_shl(uint64_t v, int shift) {
        return ((ck_u128)v) << shift;
    }
    """
    ctypedef unsigned long long ck_u128
    uint64_t ck_lo(ck_u128)
    uint64_t ck_hi(ck_u128)
    ck_u128 ck_make(uint64_t, uint64_t)
    uint64_t ck_mix(ck_u128)
    uint64_t ck_read(const unsigned char*, int, int)
    void ck_write(unsigned char*, int, uint64_t)
    ck_u128 ck_field(ck_u128, int, int)
    ck_u128 ck_shl(uint64_t, int)

DEF MAXFIELDS = 64
DEF PAD = 4

_MPQ_TYPE = type(_mpq(0))
_TWO64 = 1 << 64


cdef int _bit_length(uint64_t v):
    cdef int n = 0
    while v:
        n += 1
        v >>= 1
    return n


cdef void _set_from_int(mpz_ptr z, object v):
    cdef bint neg = v < 0
    if neg:
        v = -v
    cdef bytes raw = v.to_bytes((v.bit_length() + 7) // 8 or 1, "big")
    mpz_import(z, len(raw), 1, 1, 1, 0, <const char*> raw)
    if neg:
        mpz_neg(z, z)


cdef object _to_int(mpz_srcptr z):
    cdef size_t size = (mpz_sizeinbase(z, 2) + 7) // 8
    cdef size_t count = 0
    cdef unsigned char* buf = <unsigned char*> malloc(size + 1)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_export(buf, &count, 1, 1, 1, 0, z)
        v = int.from_bytes(buf[:count], "big")
    finally:
        free(buf)
    return -v if mpz_sgn(z) < 0 else v


cdef class _Codec:
    """Maps Python keys to 128-bit machine keys and back."""

    cdef bint direct
    cdef int nfields
    cdef int src_shift[MAXFIELDS]
    cdef int src_width[MAXFIELDS]
    cdef int dst_shift[MAXFIELDS]
    cdef int dst_width[MAXFIELDS]
    cdef int nbytes
    cdef unsigned char* buf

    def __cinit__(self):
        self.buf = NULL

    def __dealloc__(self):
        free(self.buf)

    cdef ck_u128 encode(self, object key) except *:
        cdef int j
        cdef ck_u128 out = 0
        cdef bytes raw
        cdef const unsigned char* p
        if self.direct:
            return <ck_u128> (<uint64_t> key)
        raw = key.to_bytes(self.nbytes, "little")
        memset(self.buf, 0, self.nbytes + PAD)
        p = <const unsigned char*> raw
        for j in range(len(raw)):
            self.buf[j] = p[j]
        for j in range(self.nfields):
            if self.dst_width[j]:
                out |= ck_shl(ck_read(self.buf, self.src_shift[j], self.src_width[j]),
                              self.dst_shift[j])
        return out

    cdef object decode(self, ck_u128 key):
        cdef int j
        if self.direct:
            return ck_lo(key)
        memset(self.buf, 0, self.nbytes + PAD)
        for j in range(self.nfields):
            if self.dst_width[j]:
                ck_write(self.buf, self.src_shift[j],
                         <uint64_t> ck_field(key, self.dst_shift[j], self.dst_width[j]))
        return int.from_bytes(self.buf[:self.nbytes], "little")


cdef _Codec _make_codec(dict a, dict b, object layout):
    """Return a codec, or None when the product keys do not fit in 128 bits."""
    cdef _Codec codec = _Codec()
    cdef int j, off = 0, w, top = 0
    cdef list amax, bmax
    if layout is None:
        if max(a) + max(b) >= _TWO64:
            return None
        codec.direct = True
        return codec
    codec.direct = False
    codec.nfields = len(layout)
    if codec.nfields > MAXFIELDS:
        return None
    amax = _field_max(a, layout)
    bmax = _field_max(b, layout)
    for j, (shift, width) in enumerate(layout):
        codec.src_shift[j] = shift
        codec.src_width[j] = width
        if shift + width > top:
            top = shift + width
        w = _bit_length(<uint64_t> (amax[j] + bmax[j]))
        codec.dst_shift[j] = off
        codec.dst_width[j] = w
        off += w
    if off > 128:
        return None
    codec.nbytes = (top + 7) // 8
    codec.buf = <unsigned char*> calloc(codec.nbytes + PAD, 1)
    if codec.buf == NULL:
        raise MemoryError()
    return codec


cdef list _field_max(dict terms, object layout):
    cdef list mx = [0] * len(layout)
    cdef int j
    fields = list(layout)
    for key in terms:
        for j in range(len(fields)):
            shift, width = fields[j]
            f = (key >> shift) & ((1 << width) - 1)
            if f > mx[j]:
                mx[j] = f
    return mx


cdef bint _all_rational(dict terms):
    for c in terms.values():
        if type(c) is not _MPQ_TYPE and type(c) is not int:
            return False
    return True


cdef tuple _clear_denominators(dict terms):
    cdef object den = 1
    for c in terms.values():
        d = c.denominator
        if d != 1:
            den = den * d // _gcd(den, d)
    nums = [(c.numerator * (den // c.denominator)) for c in terms.values()]
    return den, nums


cdef object _gcd(object a, object b):
    while b:
        a, b = b, a % b
    return a


cdef class _Table:
    """Open-addressing map from 128-bit keys to dense slot indices."""

    cdef ck_u128* keys
    cdef int64_t* slots
    cdef uint64_t cap
    cdef uint64_t used

    def __cinit__(self, uint64_t hint):
        self.cap = 1024
        while self.cap < 2 * hint:
            self.cap <<= 1
        self.keys = <ck_u128*> malloc(self.cap * sizeof(ck_u128))
        self.slots = <int64_t*> malloc(self.cap * sizeof(int64_t))
        if self.keys == NULL or self.slots == NULL:
            raise MemoryError()
        memset(self.slots, 0xFF, self.cap * sizeof(int64_t))
        self.used = 0

    def __dealloc__(self):
        free(self.keys)
        free(self.slots)

    cdef int grow(self) except -1:
        cdef uint64_t old_cap = self.cap, i, h, mask
        cdef ck_u128* old_keys = self.keys
        cdef int64_t* old_slots = self.slots
        self.cap = old_cap * 2
        self.keys = <ck_u128*> malloc(self.cap * sizeof(ck_u128))
        self.slots = <int64_t*> malloc(self.cap * sizeof(int64_t))
        if self.keys == NULL or self.slots == NULL:
            free(old_keys)
            free(old_slots)
            raise MemoryError()
        memset(self.slots, 0xFF, self.cap * sizeof(int64_t))
        mask = self.cap - 1
        for i in range(old_cap):
            if old_slots[i] >= 0:
                h = ck_mix(old_keys[i]) & mask
                while self.slots[h] >= 0:
                    h = (h + 1) & mask
                self.keys[h] = old_keys[i]
                self.slots[h] = old_slots[i]
        free(old_keys)
        free(old_slots)
        return 0

    cdef int64_t find_or_add(self, ck_u128 key, int64_t fresh) except -2:
        """Slot for ``key``; inserts ``fresh`` and returns -1 if it was absent."""
        cdef uint64_t mask, h
        if 2 * (self.used + 1) > self.cap:
            self.grow()
        mask = self.cap - 1
        h = ck_mix(key) & mask
        while self.slots[h] >= 0:
            if self.keys[h] == key:
                return self.slots[h]
            h = (h + 1) & mask
        self.keys[h] = key
        self.slots[h] = fresh
        self.used += 1
        return -1


def mul_terms(dict a, dict b, layout=None):
    """Product of two term dicts; same contract as the pure-Python kernel.

    ``layout`` lists the (shift, width) of every exponent field when keys may
    exceed 64 bits; ``None`` means keys are already machine-sized.
    """
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    cdef _Codec codec = _make_codec(a, b, layout)
    if codec is None:
        from cotame._pykernel import mul_terms as slow
        return slow(a, b)
    if _all_rational(a) and _all_rational(b):
        return _mul_rational(codec, a, b)
    return _mul_objects(codec, a, b)


cdef dict _mul_objects(_Codec codec, dict a, dict b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef int64_t idx
    cdef ck_u128* ka = <ck_u128*> malloc(na * sizeof(ck_u128))
    cdef ck_u128* kb = <ck_u128*> malloc(nb * sizeof(ck_u128))
    cdef _Table table = _Table(na)
    cdef list order = []
    cdef list acc = []
    cdef ck_u128 k
    if ka == NULL or kb == NULL:
        free(ka); free(kb)
        raise MemoryError()
    try:
        ca = list(a.values())
        cb = list(b.values())
        for i, key in enumerate(a):
            ka[i] = codec.encode(key)
        for j, key in enumerate(b):
            kb[j] = codec.encode(key)
        for j in range(nb):
            y = cb[j]
            for i in range(na):
                k = ka[i] + kb[j]
                idx = table.find_or_add(k, len(acc))
                if idx < 0:
                    acc.append(ca[i] * y)
                    order.append((ck_hi(k), ck_lo(k)))
                else:
                    acc[idx] = acc[idx] + ca[i] * y
    finally:
        free(ka)
        free(kb)
    out = {}
    for idx in range(len(acc)):
        c = acc[idx]
        if c:
            hi, lo = order[idx]
            out[codec.decode(ck_make(hi, lo))] = c
    return out


cdef dict _mul_rational(_Codec codec, dict a, dict b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n = 0, cap = 0
    cdef int64_t idx
    cdef ck_u128 k
    cdef _Table table = _Table(na)
    cdef ck_u128* ka = <ck_u128*> malloc(na * sizeof(ck_u128))
    cdef ck_u128* kb = <ck_u128*> malloc(nb * sizeof(ck_u128))
    cdef __mpz_struct* za = <__mpz_struct*> malloc(na * sizeof(__mpz_struct))
    cdef __mpz_struct* zb = <__mpz_struct*> malloc(nb * sizeof(__mpz_struct))
    cdef __mpz_struct* acc = NULL
    cdef __mpz_struct* grown
    cdef ck_u128* keys = NULL
    cdef ck_u128* grown_keys
    if ka == NULL or kb == NULL or za == NULL or zb == NULL:
        free(ka); free(kb); free(za); free(zb)
        raise MemoryError()
    da, nums_a = _clear_denominators(a)
    db, nums_b = _clear_denominators(b)
    for i in range(na):
        mpz_init(&za[i])
        _set_from_int(&za[i], nums_a[i])
    for j in range(nb):
        mpz_init(&zb[j])
        _set_from_int(&zb[j], nums_b[j])
    try:
        for i, key in enumerate(a):
            ka[i] = codec.encode(key)
        for j, key in enumerate(b):
            kb[j] = codec.encode(key)
        for j in range(nb):
            for i in range(na):
                k = ka[i] + kb[j]
                idx = table.find_or_add(k, n)
                if idx < 0:
                    if n == cap:
                        cap = cap * 2 if cap else 1024
                        grown = <__mpz_struct*> realloc(acc, cap * sizeof(__mpz_struct))
                        if grown == NULL:
                            raise MemoryError()
                        acc = grown
                        grown_keys = <ck_u128*> realloc(keys, cap * sizeof(ck_u128))
                        if grown_keys == NULL:
                            raise MemoryError()
                        keys = grown_keys
                    mpz_init(&acc[n])
                    keys[n] = k
                    idx = n
                    n += 1
                mpz_addmul(&acc[idx], &za[i], &zb[j])
        den = da * db
        out = {}
        for idx in range(n):
            if mpz_sgn(&acc[idx]) != 0:
                out[codec.decode(keys[idx])] = _mpq(_to_int(&acc[idx]), den)
        return out
    finally:
        for i in range(na):
            mpz_clear(&za[i])
        for j in range(nb):
            mpz_clear(&zb[j])
        for idx in range(n):
            mpz_clear(&acc[idx])
        free(acc)
        free(keys)
        free(ka)
        free(kb)
        free(za)
        free(zb)


def addmul_terms(dict acc, dict a, scale):
    """acc += scale * a, in place, dropping cancelled terms."""
    for k, c in a.items():
        s = acc.get(k, 0) + c * scale
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
