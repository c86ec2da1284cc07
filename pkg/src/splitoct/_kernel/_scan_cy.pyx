# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive octonion scan.

Identical contract to the numpy fallback: walk indices in odometer
order, decode base-q coordinates, evaluate the polynomial with flat
scalar add/sub/mul tables, collect the indices hitting the target.
The hot loop runs without the GIL so range partitions can be scanned
from worker threads.
"""

import numpy as np


cdef inline long _t(long q, const long[::1] table, long x, long y) nogil:
    return table[x * q + y]


cdef void _omul(long q, const long[::1] add_t, const long[::1] sub_t,
                const long[::1] mul_t, long* a, long* b, long* r) nogil:
    # Zorn matrix product on scalar codes: diagonal gets dot products,
    # the corners mix scalar multiples with cross products
    cdef long c1, c2, c3
    r[0] = _t(q, add_t, _t(q, mul_t, a[0], b[0]),
              _t(q, add_t, _t(q, mul_t, a[1], b[4]),
                 _t(q, add_t, _t(q, mul_t, a[2], b[5]),
                    _t(q, mul_t, a[3], b[6]))))
    r[7] = _t(q, add_t, _t(q, mul_t, a[7], b[7]),
              _t(q, add_t, _t(q, mul_t, a[4], b[1]),
                 _t(q, add_t, _t(q, mul_t, a[5], b[2]),
                    _t(q, mul_t, a[6], b[3]))))
    c1 = _t(q, sub_t, _t(q, mul_t, a[5], b[6]), _t(q, mul_t, a[6], b[5]))
    c2 = _t(q, sub_t, _t(q, mul_t, a[6], b[4]), _t(q, mul_t, a[4], b[6]))
    c3 = _t(q, sub_t, _t(q, mul_t, a[4], b[5]), _t(q, mul_t, a[5], b[4]))
    r[1] = _t(q, sub_t, _t(q, add_t, _t(q, mul_t, a[0], b[1]),
                           _t(q, mul_t, b[7], a[1])), c1)
    r[2] = _t(q, sub_t, _t(q, add_t, _t(q, mul_t, a[0], b[2]),
                           _t(q, mul_t, b[7], a[2])), c2)
    r[3] = _t(q, sub_t, _t(q, add_t, _t(q, mul_t, a[0], b[3]),
                           _t(q, mul_t, b[7], a[3])), c3)
    c1 = _t(q, sub_t, _t(q, mul_t, a[2], b[3]), _t(q, mul_t, a[3], b[2]))
    c2 = _t(q, sub_t, _t(q, mul_t, a[3], b[1]), _t(q, mul_t, a[1], b[3]))
    c3 = _t(q, sub_t, _t(q, mul_t, a[1], b[2]), _t(q, mul_t, a[2], b[1]))
    r[4] = _t(q, add_t, _t(q, add_t, _t(q, mul_t, b[0], a[4]),
                           _t(q, mul_t, a[7], b[4])), c1)
    r[5] = _t(q, add_t, _t(q, add_t, _t(q, mul_t, b[0], a[5]),
                           _t(q, mul_t, a[7], b[5])), c2)
    r[6] = _t(q, add_t, _t(q, add_t, _t(q, mul_t, b[0], a[6]),
                           _t(q, mul_t, a[7], b[6])), c3)


cdef long _scan_chunk(long q, const long[::1] coeffs, const long[::1] c_codes,
                      const long[::1] add_t, const long[::1] sub_t,
                      const long[::1] mul_t, long start, long stop,
                      long[::1] out) nogil:
    cdef long x[8]
    cdef long power[8]
    cdef long acc[8]
    cdef long tmp[8]
    cdef long idx, rem, i, j, coef, count
    cdef long ncoef = coeffs.shape[0]
    cdef bint ok
    count = 0
    for idx in range(start, stop):
        rem = idx
        for j in range(7, -1, -1):
            x[j] = rem % q
            rem = rem // q
        power[0] = 1
        power[7] = 1
        for j in range(1, 7):
            power[j] = 0
        for j in range(8):
            acc[j] = 0
        for i in range(ncoef):
            coef = coeffs[i]
            if coef != 0:
                for j in range(8):
                    acc[j] = _t(q, add_t, acc[j], _t(q, mul_t, coef, power[j]))
            if i < ncoef - 1:
                _omul(q, add_t, sub_t, mul_t, x, power, tmp)
                for j in range(8):
                    power[j] = tmp[j]
        ok = True
        for j in range(8):
            if acc[j] != c_codes[j]:
                ok = False
                break
        if ok:
            out[count] = idx
            count += 1
    return count


def scan_range(long q, coeffs, c_codes, add_t, sub_t, mul_t,
               long start, long stop):
    """Indices in [start, stop) whose octonion satisfies f(x) = c."""
    cdef const long[::1] coeffs_v = np.ascontiguousarray(coeffs, dtype=np.int64)
    cdef const long[::1] c_v = np.ascontiguousarray(c_codes, dtype=np.int64)
    cdef const long[::1] add_v = np.ascontiguousarray(add_t, dtype=np.int64)
    cdef const long[::1] sub_v = np.ascontiguousarray(sub_t, dtype=np.int64)
    cdef const long[::1] mul_v = np.ascontiguousarray(mul_t, dtype=np.int64)
    cdef long chunk = 1 << 16
    cdef long lo = start, hi, n, i
    buf_arr = np.empty(chunk, dtype=np.int64)
    cdef long[::1] buf = buf_arr
    out = []
    while lo < stop:
        hi = lo + chunk
        if hi > stop:
            hi = stop
        with nogil:
            n = _scan_chunk(q, coeffs_v, c_v, add_v, sub_v, mul_v, lo, hi, buf)
        for i in range(n):
            out.append(buf[i])
        lo = hi
    return out
