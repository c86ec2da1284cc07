"""Independent brute-force ground truth.

Everything here recomputes the algebra from the displayed Zorn matrix
formula on raw 8-tuples, on purpose not sharing code with the main
octonion module: a correlated bug would defeat the point.  The
exhaustive scan over O(F_q) additionally rebuilds scalar arithmetic as
plain integer tables (digit arithmetic mod p) so the kernel never
touches the field backends at all.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .fields import (Elem, Field, FieldTooLarge, UnsupportedBackend)
from .g2 import orbit_member
from .octonion import Octonion
from .polyeq import SolutionSet, UnivariatePolynomial

DEFAULT_Q_CAP = 9

Tup8 = tuple


# ---------------------------------------------------------------------------
# Naive arithmetic on raw coordinate tuples
# ---------------------------------------------------------------------------


def naive_mul(f: Field, a: Tup8, b: Tup8) -> Tup8:
    """The Zorn product written out entry by entry."""
    r0 = f.add(f.mul(a[0], b[0]),
               f.add(f.mul(a[1], b[4]),
                     f.add(f.mul(a[2], b[5]), f.mul(a[3], b[6]))))
    r7 = f.add(f.mul(a[7], b[7]),
               f.add(f.mul(a[4], b[1]),
                     f.add(f.mul(a[5], b[2]), f.mul(a[6], b[3]))))
    # u-part: alpha u' + beta' u - v x v'
    r1 = f.sub(f.add(f.mul(a[0], b[1]), f.mul(b[7], a[1])),
               f.sub(f.mul(a[5], b[6]), f.mul(a[6], b[5])))
    r2 = f.sub(f.add(f.mul(a[0], b[2]), f.mul(b[7], a[2])),
               f.sub(f.mul(a[6], b[4]), f.mul(a[4], b[6])))
    r3 = f.sub(f.add(f.mul(a[0], b[3]), f.mul(b[7], a[3])),
               f.sub(f.mul(a[4], b[5]), f.mul(a[5], b[4])))
    # v-part: alpha' v + beta v' + u x u'
    r4 = f.add(f.add(f.mul(b[0], a[4]), f.mul(a[7], b[4])),
               f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2])))
    r5 = f.add(f.add(f.mul(b[0], a[5]), f.mul(a[7], b[5])),
               f.sub(f.mul(a[3], b[1]), f.mul(a[1], b[3])))
    r6 = f.add(f.add(f.mul(b[0], a[6]), f.mul(a[7], b[6])),
               f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])))
    return (r0, r1, r2, r3, r4, r5, r6, r7)


def naive_conj(f: Field, a: Tup8) -> Tup8:
    return (a[7], f.neg(a[1]), f.neg(a[2]), f.neg(a[3]),
            f.neg(a[4]), f.neg(a[5]), f.neg(a[6]), a[0])


def naive_trace(f: Field, a: Tup8) -> Elem:
    return f.add(a[0], a[7])


def naive_norm(f: Field, a: Tup8) -> Elem:
    dot = f.add(f.mul(a[1], a[4]),
                f.add(f.mul(a[2], a[5]), f.mul(a[3], a[6])))
    return f.sub(f.mul(a[0], a[7]), dot)


def naive_qform(f: Field, a: Tup8, b: Tup8) -> Elem:
    diag = f.add(f.mul(a[0], b[7]), f.mul(b[0], a[7]))
    off = f.add(
        f.add(f.mul(a[1], b[4]), f.add(f.mul(a[2], b[5]), f.mul(a[3], b[6]))),
        f.add(f.mul(b[1], a[4]), f.add(f.mul(b[2], a[5]), f.mul(b[3], a[6]))))
    return f.sub(diag, off)


def naive_one(f: Field) -> Tup8:
    z, o = f.zero, f.one
    return (o, z, z, z, z, z, z, o)


def naive_zero(f: Field) -> Tup8:
    return (f.zero,) * 8


def naive_add(f: Field, a: Tup8, b: Tup8) -> Tup8:
    return tuple(f.add(x, y) for x, y in zip(a, b))


def naive_scale(f: Field, s: Elem, a: Tup8) -> Tup8:
    return tuple(f.mul(s, x) for x in a)


def naive_power(f: Field, a: Tup8, n: int) -> Tup8:
    acc = naive_one(f)
    for _ in range(n):
        acc = naive_mul(f, a, acc)
    return acc


def naive_eval(f: Field, coeffs, a: Tup8) -> Tup8:
    """Polynomial evaluation with every power recomputed from scratch."""
    acc = naive_zero(f)
    for i, coef in enumerate(coeffs):
        acc = naive_add(f, acc, naive_scale(f, coef, naive_power(f, a, i)))
    return acc


def tuples_eq(f: Field, a: Tup8, b: Tup8) -> bool:
    return all(f.eq(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Scalar tables for the scan kernel
# ---------------------------------------------------------------------------

_TABLE_CACHE: dict = {}


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


def _digit_mul(x: int, y: int, p: int, k: int, modulus) -> int:
    """Product of canonical codes: schoolbook convolution, then strip
    powers >= k by repeatedly subtracting shifted multiples of the
    monic modulus."""
    a = _digits(x, p, k)
    b = _digits(y, p, k)
    prod = [0] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            prod[i + j] += a[i] * b[j]
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d] % p
        prod[d] = 0
        if c:
            for t in range(k + 1):
                prod[d - k + t] -= c * modulus[t]
    return _undigits([v % p for v in prod[:k]], p)


def scalar_tables(field: Field):
    """Flat q*q add/sub/mul tables over canonical codes, rebuilt from
    digit arithmetic rather than the field backend."""
    if not field.is_finite:
        raise UnsupportedBackend("scalar tables need a finite field")
    q, p = field.size, field.char
    k = getattr(field, "k", 1)
    modulus = getattr(field, "modulus", None)
    key = (p, k, modulus)
    if key in _TABLE_CACHE:
        return _TABLE_CACHE[key]
    add = np.zeros(q * q, dtype=np.int64)
    sub = np.zeros(q * q, dtype=np.int64)
    mul = np.zeros(q * q, dtype=np.int64)
    for x in range(q):
        dx = _digits(x, p, k)
        for y in range(q):
            dy = _digits(y, p, k)
            add[x * q + y] = _undigits([(i + j) % p for i, j in zip(dx, dy)], p)
            sub[x * q + y] = _undigits([(i - j) % p for i, j in zip(dx, dy)], p)
            if k == 1:
                mul[x * q + y] = (x * y) % p
            else:
                mul[x * q + y] = _digit_mul(x, y, p, k, modulus)
    _TABLE_CACHE[key] = (add, sub, mul)
    return add, sub, mul


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationReport:
    field: Field
    poly: UnivariatePolynomial
    rhs: Octonion
    found: tuple
    scanned: int
    elapsed: float
    engine: str

    def to_json(self):
        return {
            "field": self.field.name,
            "poly": self.poly.to_json(),
            "rhs": self.rhs.to_json(),
            "found": [x.to_json() for x in self.found],
            "count": len(self.found),
            "scanned": self.scanned,
            "elapsed_seconds": round(self.elapsed, 6),
            "engine": self.engine,
        }


def enumerate_solutions(f: UnivariatePolynomial, c: Octonion,
                        cap: int = DEFAULT_Q_CAP, engine: str = "auto",
                        jobs: int = 1) -> EnumerationReport:
    """Every x in O(F_q) with f(x) = c, by scanning all q^8 candidates
    in odometer order."""
    field = f.field
    if not field.is_finite:
        raise UnsupportedBackend("enumeration needs a finite field")
    q = field.size
    if q > cap:
        raise FieldTooLarge(
            f"enumeration over {field.name} scans {q}^8 octonions; the cap "
            f"is q <= {cap} (pass a larger cap to opt in)")
    scan, engine_name = _kernel.get_engine(engine)
    add_t, sub_t, mul_t = scalar_tables(field)
    coeffs = np.array([field.encode(co) for co in f.coeffs] or [0],
                      dtype=np.int64)
    c_codes = np.array([field.encode(co) for co in c.coords], dtype=np.int64)
    total = q ** 8
    started = time.perf_counter()
    if jobs <= 1:
        hits = scan(q, coeffs, c_codes, add_t, sub_t, mul_t, 0, total)
    else:
        step = -(-total // (jobs * 4))
        ranges = [(lo, min(total, lo + step))
                  for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda r: scan(q, coeffs, c_codes, add_t, sub_t, mul_t, *r),
                ranges)
            hits = [i for part in parts for i in part]
    elapsed = time.perf_counter() - started
    weights = [q ** (7 - j) for j in range(8)]
    found = tuple(
        Octonion(field, tuple(field.decode((idx // w) % q) for w in weights))
        for idx in sorted(hits))
    return EnumerationReport(field, f, c, found, total, elapsed, engine_name)


# ---------------------------------------------------------------------------
# Comparison against solver output
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompareVerdict:
    match: bool
    unexplained: tuple  # enumerated solutions no point/orbit accounts for
    unconfirmed: tuple  # solver points the enumeration never saw
    checked: int

    def to_json(self):
        return {
            "match": self.match,
            "unexplained": [x.to_json() for x in self.unexplained],
            "unconfirmed": [x.to_json() for x in self.unconfirmed],
            "checked": self.checked,
        }


def compare(report: EnumerationReport, sol: SolutionSet) -> CompareVerdict:
    """Match iff every enumerated solution is a solver point or lies in
    a returned orbit family, and every solver point was enumerated."""
    point_keys = {p.coords for p in sol.points}
    enum_keys = {x.coords for x in report.found}
    unexplained = []
    for x in report.found:
        if x.coords in point_keys:
            continue
        if any(orbit_member(lab, x) for lab in sol.orbits):
            continue
        unexplained.append(x)
    unconfirmed = [p for p in sol.points if p.coords not in enum_keys]
    return CompareVerdict(not unexplained and not unconfirmed,
                          tuple(unexplained), tuple(unconfirmed),
                          len(report.found))


# ---------------------------------------------------------------------------
# Identity fuzzing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzReport:
    passed: bool
    trials: int
    failures: tuple

    def to_json(self):
        return {"passed": self.passed, "trials": self.trials,
                "failures": list(self.failures)}


def fuzz_identities(field: Field, trials: int, seed: int) -> FuzzReport:
    """Check the defining identities on random octonions using only the
    naive routines: trace/norm multiplicativity, the rank-2 minimal
    polynomial, alternativity, the conjugate identities, and inverses."""
    rng = random.Random(seed)
    failures: list[str] = []

    def fail(name, a, b=None):
        if len(failures) < 10:
            msg = f"{name}: a=({','.join(field.fmt(x) for x in a)})"
            if b is not None:
                msg += f" b=({','.join(field.fmt(x) for x in b)})"
            failures.append(msg)

    for _ in range(trials):
        a = tuple(field.rand(rng) for _ in range(8))
        b = tuple(field.rand(rng) for _ in range(8))
        ab = naive_mul(field, a, b)
        ba = naive_mul(field, b, a)
        na = naive_norm(field, a)
        if not field.eq(naive_trace(field, ab), naive_trace(field, ba)):
            fail("trace(ab) != trace(ba)", a, b)
        if not field.eq(naive_norm(field, ab),
                        field.mul(na, naive_norm(field, b))):
            fail("norm(ab) != norm(a)norm(b)", a, b)
        aa = naive_mul(field, a, a)
        quad = naive_add(
            field, aa,
            naive_add(field,
                      naive_scale(field, field.neg(naive_trace(field, a)), a),
                      naive_scale(field, na, naive_one(field))))
        if not tuples_eq(field, quad, naive_zero(field)):
            fail("a^2 - tr(a)a + n(a) != 0", a)
        if not tuples_eq(field, naive_mul(field, a, ab),
                         naive_mul(field, aa, b)):
            fail("a(ab) != (aa)b", a, b)
        if not tuples_eq(field, naive_mul(field, ba, a),
                         naive_mul(field, b, aa)):
            fail("(ba)a != b(aa)", a, b)
        cj = naive_conj(field, a)
        nb_scaled = naive_scale(field, na, b)
        if not tuples_eq(field, naive_mul(field, cj, ab), nb_scaled):
            fail("conj(a)(ab) != n(a)b", a, b)
        if not tuples_eq(field, naive_mul(field, ba, cj), nb_scaled):
            fail("(ba)conj(a) != n(a)b", a, b)
        if not tuples_eq(field, naive_conj(field, ab),
                         naive_mul(field, naive_conj(field, b), cj)):
            fail("conj(ab) != conj(b)conj(a)", a, b)
        if not field.is_zero(na):
            ainv = naive_scale(field, field.inv(na), cj)
            if not tuples_eq(field, naive_mul(field, ainv, ab), b):
                fail("a^-1(ab) != b", a, b)
            if not tuples_eq(field, naive_mul(field, ba, ainv), b):
                fail("(ba)a^-1 != b", a, b)
    return FuzzReport(not failures, trials, tuple(failures))
