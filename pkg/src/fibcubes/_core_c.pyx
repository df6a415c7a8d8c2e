# cython: language_level=3
"""Compiled kernel primitives on GMP integers.

Same contract as fibcubes._core_py; selected by fibcubes._backend when this
extension is importable.  Python ints cross the boundary once per call, so
the loops below run entirely on mpz_t values.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct mpz_t[1]
    void mpz_init(mpz_t)
    void mpz_clear(mpz_t)
    void mpz_set(mpz_t, mpz_t)
    void mpz_set_ui(mpz_t, unsigned long)
    void mpz_swap(mpz_t, mpz_t)
    void mpz_add(mpz_t, mpz_t, mpz_t)
    void mpz_sub(mpz_t, mpz_t, mpz_t)
    void mpz_mul(mpz_t, mpz_t, mpz_t)
    void mpz_addmul(mpz_t, mpz_t, mpz_t)
    void mpz_mul_2exp(mpz_t, mpz_t, unsigned long)
    void mpz_neg(mpz_t, mpz_t)
    int mpz_sgn(mpz_t)
    size_t mpz_sizeinbase(mpz_t, int)
    void mpz_import(mpz_t, size_t, int, size_t, int, size_t, const void *)
    void *mpz_export(void *, size_t *, int, size_t, int, size_t, mpz_t)


cdef int _mpz_from_int(mpz_t z, obj) except -1:
    cdef bint neg = obj < 0
    cdef object mag = -obj if neg else obj
    cdef Py_ssize_t nbytes = (mag.bit_length() + 7) // 8
    if nbytes == 0:
        mpz_set_ui(z, 0)
        return 0
    raw = mag.to_bytes(nbytes, "little")
    mpz_import(z, nbytes, -1, 1, 0, 0, <const void *> PyBytes_AS_STRING(raw))
    if neg:
        mpz_neg(z, z)
    return 0


cdef object _int_from_mpz(mpz_t z):
    cdef int sign = mpz_sgn(z)
    cdef size_t nbytes, written = 0
    if sign == 0:
        return 0
    nbytes = (mpz_sizeinbase(z, 2) + 7) // 8
    buf = PyBytes_FromStringAndSize(NULL, nbytes)
    mpz_export(PyBytes_AS_STRING(buf), &written, -1, 1, 0, 0, z)
    assert written == nbytes
    val = int.from_bytes(buf, "little")
    return -val if sign < 0 else val


def fib_pair(m):
    """(F_m, F_{m+1}) for m >= 0, by binary doubling on mpz values."""
    cdef unsigned long long mm = m
    cdef int i
    cdef mpz_t a, b, c, d, t
    if mm == 0:
        return 0, 1
    mpz_init(a)
    mpz_init(b)
    mpz_init(c)
    mpz_init(d)
    mpz_init(t)
    try:
        mpz_set_ui(a, 0)
        mpz_set_ui(b, 1)
        i = 63
        while not (mm >> i) & 1:
            i -= 1
        while i >= 0:
            mpz_mul_2exp(t, b, 1)
            mpz_sub(t, t, a)
            mpz_mul(c, a, t)          # F_2k = a*(2b - a)
            mpz_mul(d, a, a)
            mpz_mul(t, b, b)
            mpz_add(d, d, t)          # F_2k+1 = a^2 + b^2
            if (mm >> i) & 1:
                mpz_add(b, c, d)
                mpz_swap(a, d)
            else:
                mpz_swap(a, c)
                mpz_swap(b, d)
            i -= 1
        return _int_from_mpz(a), _int_from_mpz(b)
    finally:
        mpz_clear(a)
        mpz_clear(b)
        mpz_clear(c)
        mpz_clear(d)
        mpz_clear(t)


def pair_step_sum(p, q, a, b, n, bint lucas, bint cube):
    """Sum n terms by fixed-stride pair stepping; see _core_py for semantics."""
    cdef unsigned long long k, nn = n
    cdef mpz_t zp, zq, zpq, za, zb, zt, zu, zna, acc
    mpz_init(zp)
    mpz_init(zq)
    mpz_init(zpq)
    mpz_init(za)
    mpz_init(zb)
    mpz_init(zt)
    mpz_init(zu)
    mpz_init(zna)
    mpz_init(acc)
    try:
        _mpz_from_int(zp, p)
        _mpz_from_int(zq, q)
        _mpz_from_int(za, a)
        _mpz_from_int(zb, b)
        mpz_add(zpq, zp, zq)
        mpz_set_ui(acc, 0)
        for k in range(nn):
            if lucas:
                mpz_mul_2exp(zt, zb, 1)
                mpz_sub(zt, zt, za)   # L_j = 2*F_{j+1} - F_j
            else:
                mpz_set(zt, za)
            if cube:
                mpz_mul(zu, zt, zt)
                mpz_mul(zu, zu, zt)
                mpz_add(acc, acc, zu)
            else:
                mpz_add(acc, acc, zt)
            mpz_mul(zna, zq, zb)
            mpz_addmul(zna, zp, za)   # F_{j+m} = q*b + p*a
            mpz_mul(zt, zpq, zb)
            mpz_addmul(zt, zq, za)    # F_{j+m+1} = (p+q)*b + q*a
            mpz_swap(za, zna)
            mpz_swap(zb, zt)
        return _int_from_mpz(acc)
    finally:
        mpz_clear(zp)
        mpz_clear(zq)
        mpz_clear(zpq)
        mpz_clear(za)
        mpz_clear(zb)
        mpz_clear(zt)
        mpz_clear(zu)
        mpz_clear(zna)
        mpz_clear(acc)


def per_term_power_sum(stride, n, bint lucas, bint cube):
    """Literal term-by-term sum with a full doubling pass per term."""
    cdef bint neg = stride < 0
    cdef unsigned long long s = -stride if neg else stride
    cdef unsigned long long k, mm, nn = n
    cdef int i
    cdef mpz_t a, b, c, d, t, u, acc
    if s % 2:
        raise ValueError("per_term_power_sum requires an even stride")
    mpz_init(a)
    mpz_init(b)
    mpz_init(c)
    mpz_init(d)
    mpz_init(t)
    mpz_init(u)
    mpz_init(acc)
    try:
        mpz_set_ui(acc, 0)
        for k in range(1, nn + 1):
            mm = s * k
            mpz_set_ui(a, 0)
            mpz_set_ui(b, 1)
            if mm > 0:
                i = 63
                while not (mm >> i) & 1:
                    i -= 1
                while i >= 0:
                    mpz_mul_2exp(t, b, 1)
                    mpz_sub(t, t, a)
                    mpz_mul(c, a, t)
                    mpz_mul(d, a, a)
                    mpz_mul(t, b, b)
                    mpz_add(d, d, t)
                    if (mm >> i) & 1:
                        mpz_add(b, c, d)
                        mpz_swap(a, d)
                    else:
                        mpz_swap(a, c)
                        mpz_swap(b, d)
                    i -= 1
            if lucas:
                mpz_mul_2exp(t, b, 1)
                mpz_sub(t, t, a)
            else:
                mpz_set(t, a)
            if cube:
                mpz_mul(u, t, t)
                mpz_mul(u, u, t)
                mpz_add(acc, acc, u)
            else:
                mpz_add(acc, acc, t)
        if neg and not lucas:
            mpz_neg(acc, acc)
        return _int_from_mpz(acc)
    finally:
        mpz_clear(a)
        mpz_clear(b)
        mpz_clear(c)
        mpz_clear(d)
        mpz_clear(t)
        mpz_clear(u)
        mpz_clear(acc)
