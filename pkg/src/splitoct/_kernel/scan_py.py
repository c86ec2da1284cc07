"""Numpy fallback for the exhaustive octonion scan.

Same contract as the compiled kernel: indices encode the 8 coordinates
base q (coordinate 0 most significant), scalars are canonical codes
0..q-1, and arithmetic goes through flat q*q lookup tables so the one
loop serves every finite backend.
"""

import numpy as np

_CHUNK = 1 << 15


def _omul(add2, sub2, mul2, a, b):
    """Zorn matrix product on arrays of scalar codes."""
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    b0, b1, b2, b3, b4, b5, b6, b7 = b
    r0 = add2[mul2[a0, b0],
              add2[mul2[a1, b4], add2[mul2[a2, b5], mul2[a3, b6]]]]
    r7 = add2[mul2[a7, b7],
              add2[mul2[a4, b1], add2[mul2[a5, b2], mul2[a6, b3]]]]
    # u-part: alpha*u' + beta'*u - v x v'
    c1 = sub2[mul2[a5, b6], mul2[a6, b5]]
    c2 = sub2[mul2[a6, b4], mul2[a4, b6]]
    c3 = sub2[mul2[a4, b5], mul2[a5, b4]]
    r1 = sub2[add2[mul2[a0, b1], mul2[b7, a1]], c1]
    r2 = sub2[add2[mul2[a0, b2], mul2[b7, a2]], c2]
    r3 = sub2[add2[mul2[a0, b3], mul2[b7, a3]], c3]
    # v-part: alpha'*v + beta*v' + u x u'
    d1 = sub2[mul2[a2, b3], mul2[a3, b2]]
    d2 = sub2[mul2[a3, b1], mul2[a1, b3]]
    d3 = sub2[mul2[a1, b2], mul2[a2, b1]]
    r4 = add2[add2[mul2[b0, a4], mul2[a7, b4]], d1]
    r5 = add2[add2[mul2[b0, a5], mul2[a7, b5]], d2]
    r6 = add2[add2[mul2[b0, a6], mul2[a7, b6]], d3]
    return (r0, r1, r2, r3, r4, r5, r6, r7)


def scan_range(q, coeffs, c_codes, add_t, sub_t, mul_t, start, stop):
    """Indices in [start, stop) whose octonion satisfies f(x) = c."""
    add2 = np.asarray(add_t, dtype=np.int64).reshape(q, q)
    sub2 = np.asarray(sub_t, dtype=np.int64).reshape(q, q)
    mul2 = np.asarray(mul_t, dtype=np.int64).reshape(q, q)
    coeffs = list(coeffs)
    c_codes = list(c_codes)
    weights = [q ** (7 - j) for j in range(8)]
    out: list[int] = []
    for lo in range(start, stop, _CHUNK):
        hi = min(stop, lo + _CHUNK)
        idx = np.arange(lo, hi, dtype=np.int64)
        x = tuple((idx // w) % q for w in weights)
        ones = np.ones(hi - lo, dtype=np.int64)
        zeros = np.zeros(hi - lo, dtype=np.int64)
        power = (ones, zeros, zeros, zeros, zeros, zeros, zeros, ones)
        acc = (zeros,) * 8
        for i, coef in enumerate(coeffs):
            if coef != 0:
                acc = tuple(add2[acc[j], mul2[coef, power[j]]]
                            for j in range(8))
            if i < len(coeffs) - 1:
                power = _omul(add2, sub2, mul2, x, power)
        match = np.ones(hi - lo, dtype=bool)
        for j in range(8):
            match &= acc[j] == c_codes[j]
        out.extend(int(v) for v in idx[match])
    return out
