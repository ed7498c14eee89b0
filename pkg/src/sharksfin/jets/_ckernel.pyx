# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled truncated-product and composition kernels.

Same graded layout as ``_pykernel``.  Integer inputs run on int64 with
overflow detection; on overflow (or inputs that do not fit) the call is
handed to the pure-Python kernel, which uses arbitrary precision.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

from sharksfin.jets import _pykernel

cdef extern from *:
    """
    static inline int sf_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sf_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int sf_mul_ovf(long long a, long long b, long long *r) nogil
    int sf_add_ovf(long long a, long long b, long long *r) nogil

BACKEND = "cython"


cdef inline Py_ssize_t _size(int order) nogil:
    return (order + 1) * (order + 2) // 2


cdef int _mul_ll(const long long *a, const long long *b, long long *out, int order) nogil:
    cdef int d1, j1, d2, j2, base1, base2, basec
    cdef long long x, y, t
    memset(out, 0, _size(order) * sizeof(long long))
    for d1 in range(order + 1):
        base1 = d1 * (d1 + 1) // 2
        for j1 in range(d1 + 1):
            x = a[base1 + j1]
            if x == 0:
                continue
            for d2 in range(order - d1 + 1):
                base2 = d2 * (d2 + 1) // 2
                basec = (d1 + d2) * (d1 + d2 + 1) // 2 + j1
                for j2 in range(d2 + 1):
                    y = b[base2 + j2]
                    if y == 0:
                        continue
                    if sf_mul_ovf(x, y, &t):
                        return 1
                    if sf_add_ovf(out[basec + j2], t, &out[basec + j2]):
                        return 1
    return 0


cdef void _mul_d(const double *a, const double *b, double *out, int order) nogil:
    cdef int d1, j1, d2, j2, base1, base2, basec
    cdef double x
    memset(out, 0, _size(order) * sizeof(double))
    for d1 in range(order + 1):
        base1 = d1 * (d1 + 1) // 2
        for j1 in range(d1 + 1):
            x = a[base1 + j1]
            if x == 0.0:
                continue
            for d2 in range(order - d1 + 1):
                base2 = d2 * (d2 + 1) // 2
                basec = (d1 + d2) * (d1 + d2 + 1) // 2 + j1
                for j2 in range(d2 + 1):
                    out[basec + j2] += x * b[base2 + j2]


cdef int _compose_ll(const long long *outer, const long long *g1, const long long *g2,
                     long long *out, int order) nogil:
    cdef Py_ssize_t n = _size(order)
    cdef long long *pow2 = <long long *> malloc((order + 1) * n * sizeof(long long))
    cdef long long *sums = <long long *> malloc((order + 1) * n * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(n * sizeof(long long))
    cdef int status = 0
    cdef int i, j, d, k, m
    cdef long long c, t
    if pow2 == NULL or sums == NULL or tmp == NULL:
        status = 2
    else:
        memset(pow2, 0, (order + 1) * n * sizeof(long long))
        memset(sums, 0, (order + 1) * n * sizeof(long long))
        pow2[0] = 1
        for j in range(1, order + 1):
            if _mul_ll(pow2 + (j - 1) * n, g2, pow2 + j * n, order):
                status = 1
                break
        if status == 0:
            for d in range(order + 1):
                for j in range(d + 1):
                    c = outer[d * (d + 1) // 2 + j]
                    if c == 0:
                        continue
                    i = d - j
                    for k in range(n):
                        if pow2[j * n + k] == 0:
                            continue
                        if sf_mul_ovf(c, pow2[j * n + k], &t) or sf_add_ovf(sums[i * n + k], t, &sums[i * n + k]):
                            status = 1
                            break
                    if status:
                        break
                if status:
                    break
        if status == 0:
            memcpy(out, sums + order * n, n * sizeof(long long))
            for i in range(order - 1, -1, -1):
                if _mul_ll(out, g1, tmp, order):
                    status = 1
                    break
                for k in range(n):
                    if sf_add_ovf(tmp[k], sums[i * n + k], &out[k]):
                        status = 1
                        break
                if status:
                    break
    free(pow2)
    free(sums)
    free(tmp)
    return status


cdef void _compose_d(const double *outer, const double *g1, const double *g2,
                     double *out, double *pow2, double *sums, double *tmp, int order) nogil:
    cdef Py_ssize_t n = _size(order)
    cdef int i, j, d, k
    cdef double c
    memset(pow2, 0, (order + 1) * n * sizeof(double))
    memset(sums, 0, (order + 1) * n * sizeof(double))
    pow2[0] = 1.0
    for j in range(1, order + 1):
        _mul_d(pow2 + (j - 1) * n, g2, pow2 + j * n, order)
    for d in range(order + 1):
        for j in range(d + 1):
            c = outer[d * (d + 1) // 2 + j]
            if c == 0.0:
                continue
            i = d - j
            for k in range(n):
                sums[i * n + k] += c * pow2[j * n + k]
    memcpy(out, sums + order * n, n * sizeof(double))
    for i in range(order - 1, -1, -1):
        _mul_d(out, g1, tmp, order)
        for k in range(n):
            out[k] = tmp[k] + sums[i * n + k]


cdef int _load_ll(seq, long long *buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t k
    if len(seq) != n:
        raise ValueError("coefficient vector has the wrong length")
    for k in range(n):
        buf[k] = seq[k]
    return 0


cdef int _load_d(seq, double *buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t k
    if len(seq) != n:
        raise ValueError("coefficient vector has the wrong length")
    for k in range(n):
        buf[k] = seq[k]
    return 0


def mul_int(a, b, int order):
    cdef Py_ssize_t n = _size(order)
    cdef long long *buf = <long long *> malloc(3 * n * sizeof(long long))
    cdef int status
    if buf == NULL:
        raise MemoryError()
    try:
        try:
            _load_ll(a, buf, n)
            _load_ll(b, buf + n, n)
        except OverflowError:
            return _pykernel.mul(a, b, order)
        with nogil:
            status = _mul_ll(buf, buf + n, buf + 2 * n, order)
        if status:
            return _pykernel.mul(a, b, order)
        return [buf[2 * n + k] for k in range(n)]
    finally:
        free(buf)


def compose_int(outer, g1, g2, int order):
    cdef Py_ssize_t n = _size(order)
    cdef long long *buf = <long long *> malloc(4 * n * sizeof(long long))
    cdef int status
    if buf == NULL:
        raise MemoryError()
    try:
        try:
            _load_ll(outer, buf, n)
            _load_ll(g1, buf + n, n)
            _load_ll(g2, buf + 2 * n, n)
        except OverflowError:
            return _pykernel.compose(outer, g1, g2, order)
        with nogil:
            status = _compose_ll(buf, buf + n, buf + 2 * n, buf + 3 * n, order)
        if status == 2:
            raise MemoryError()
        if status:
            return _pykernel.compose(outer, g1, g2, order)
        return [buf[3 * n + k] for k in range(n)]
    finally:
        free(buf)


def mul_float(a, b, int order):
    cdef Py_ssize_t n = _size(order)
    cdef double *buf = <double *> malloc(3 * n * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    try:
        _load_d(a, buf, n)
        _load_d(b, buf + n, n)
        with nogil:
            _mul_d(buf, buf + n, buf + 2 * n, order)
        return [buf[2 * n + k] for k in range(n)]
    finally:
        free(buf)


def compose_float(outer, g1, g2, int order):
    cdef Py_ssize_t n = _size(order)
    cdef double *buf = <double *> malloc((4 + 2 * (order + 1) + 1) * n * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    try:
        _load_d(outer, buf, n)
        _load_d(g1, buf + n, n)
        _load_d(g2, buf + 2 * n, n)
        with nogil:
            _compose_d(buf, buf + n, buf + 2 * n, buf + 3 * n,
                       buf + 4 * n, buf + (5 + order) * n, buf + (6 + 2 * order) * n, order)
        return [buf[3 * n + k] for k in range(n)]
    finally:
        free(buf)
