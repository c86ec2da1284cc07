"""Coefficient-field backends.

Four backends sit behind one duck-typed contract: approximate complex
numbers (binary64 pairs, tolerance equality), exact rationals, prime
fields F_p and extension fields F_{p^k}.  Field *elements* are plain
Python values (``complex``, ``Fraction``, ``int`` residue, tuple of
residues); the field object carries the arithmetic, equality and the
fixed total order used for canonical labels.

The finite backends also provide exhaustive univariate root finding with
exact multiplicities, the complex backend a Durand-Kerner simultaneous
root finder with scale-aware root clustering, and the rationals a
rational-root-theorem search that flags incompleteness.
"""

from __future__ import annotations

import cmath
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Iterator, Optional, Sequence

Elem = Any  # raw field element; representation depends on the backend

DEFAULT_EPSILON = 1e-9

# Exhaustive searches (root finding, square roots, lift embeddings) are
# capped at this many field elements.
ROOT_SEARCH_CAP = 1 << 16


class SplitOctError(Exception):
    """Base class for library errors."""


class BackendMismatch(SplitOctError):
    """Operands live in different coefficient fields."""


class FieldTooLarge(SplitOctError):
    """An exhaustive search over the field would exceed the configured cap."""


class UnsupportedBackend(SplitOctError):
    """The requested operation is not available on this backend."""


class RootFindingError(SplitOctError):
    """The numeric root finder failed to converge; carries diagnostics."""


# ---------------------------------------------------------------------------
# Field specification
# ---------------------------------------------------------------------------

_SPEC_RE = re.compile(r"^F:(\d+)(?:\^(\d+))?(?::([0-9,\s]+))?$")


@dataclass(frozen=True)
class FieldSpec:
    """Parsed form of a field description.

    kind is one of ``complex``, ``rational``, ``prime``, ``extension``.
    For finite kinds ``p`` is the (prime) characteristic, ``k`` the
    extension degree and ``modulus`` the monic irreducible defining
    polynomial as an ascending coefficient tuple (length k+1); a missing
    modulus means "auto-select the canonically least irreducible".
    """

    kind: str
    p: int = 0
    k: int = 1
    modulus: Optional[tuple[int, ...]] = None
    epsilon: float = DEFAULT_EPSILON

    @staticmethod
    def parse(text: str, epsilon: float = DEFAULT_EPSILON) -> "FieldSpec":
        """Parse the textual forms C, Q, F:p, F:p^k, F:p^k:c0,c1,...,1."""
        text = text.strip()
        if text == "C":
            return FieldSpec("complex", epsilon=epsilon)
        if text == "Q":
            return FieldSpec("rational")
        m = _SPEC_RE.match(text)
        if not m:
            raise ValueError(f"malformed field spec {text!r}")
        p = int(m.group(1))
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime; use F:p^k for prime powers")
        k = int(m.group(2)) if m.group(2) else 1
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = None
        if m.group(3) is not None:
            modulus = tuple(int(c) % p for c in m.group(3).split(","))
            if len(modulus) != k + 1:
                raise ValueError(
                    f"modulus must list {k + 1} ascending coefficients")
        if k == 1 and modulus is None:
            return FieldSpec("prime", p=p)
        return FieldSpec("extension", p=p, k=k, modulus=modulus)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Backends
# ---------------------------------------------------------------------------


class Field:
    """Shared helpers; concrete backends fill in the arithmetic."""

    char: int = 0
    size: Optional[int] = None  # None for infinite fields
    name: str = "?"

    # -- arithmetic -------------------------------------------------------
    def add(self, a: Elem, b: Elem) -> Elem:
        raise NotImplementedError

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def mul(self, a: Elem, b: Elem) -> Elem:
        raise NotImplementedError

    def neg(self, a: Elem) -> Elem:
        raise NotImplementedError

    def inv(self, a: Elem) -> Elem:
        raise NotImplementedError

    def div(self, a: Elem, b: Elem) -> Elem:
        if self.is_zero(b):
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return self.mul(a, self.inv(b))

    def pow_(self, a: Elem, n: int) -> Elem:
        """a**n by square-and-multiply; n < 0 goes through inv."""
        if n < 0:
            return self.pow_(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------
    def eq(self, a: Elem, b: Elem) -> bool:
        raise NotImplementedError

    def is_zero(self, a: Elem) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a: Elem) -> bool:
        return self.eq(a, self.one)

    def from_int(self, n: int) -> Elem:
        raise NotImplementedError

    def lt(self, a: Elem, b: Elem) -> bool:
        """The fixed total order used for canonical orbit labels."""
        raise NotImplementedError

    def sort_key(self, a: Elem):
        raise NotImplementedError

    def rand(self, rng) -> Elem:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def elements(self) -> Iterator[Elem]:
        raise UnsupportedBackend(f"{self.name} is not finite")

    # -- text / json -------------------------------------------------------
    def fmt(self, a: Elem) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Elem:
        raise NotImplementedError

    def to_json(self, a: Elem):
        raise NotImplementedError

    def from_json(self, v) -> Elem:
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.name}>"


class ComplexField(Field):
    """Binary64 complex numbers with scale-aware tolerance equality."""

    char = 0
    size = None

    def __init__(self, epsilon: float = DEFAULT_EPSILON):
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        self.epsilon = epsilon
        self.name = "C"
        self.zero = 0j
        self.one = 1 + 0j

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in C")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in C")
        return a / b

    def eq(self, a, b):
        return abs(a - b) <= self.epsilon * max(1.0, abs(a), abs(b))

    def from_int(self, n):
        return complex(n)

    def lt(self, a, b):
        # lexicographic on (re, im), compatible with eq: equal-ish values
        # compare as neither-less
        if self.eq(a, b):
            return False
        scale = self.epsilon * max(1.0, abs(a), abs(b))
        if abs(a.real - b.real) > scale:
            return a.real < b.real
        return a.imag < b.imag

    def sort_key(self, a):
        return (a.real, a.imag)

    def rand(self, rng):
        return complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))

    def fmt(self, a):
        re_, im = a.real, a.imag
        if im == 0:
            return repr(re_)
        if re_ == 0:
            return f"{im!r}i"
        sign = "+" if im >= 0 else "-"
        return f"{re_!r}{sign}{abs(im)!r}i"

    def parse(self, text):
        return _parse_complex(text)

    def to_json(self, a):
        return [a.real, a.imag]

    def from_json(self, v):
        if isinstance(v, (int, float)):
            return complex(v)
        if isinstance(v, list) and len(v) == 2:
            return complex(float(v[0]), float(v[1]))
        raise ValueError(f"bad complex literal {v!r}")

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.epsilon == self.epsilon

    def __hash__(self):
        return hash(("C", self.epsilon))


_NUM_RE = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
# Either "real[+-imag]i" (sign mandatory when both parts appear) or a pure
# imaginary literal; otherwise "2i" would parse as real 2 plus imaginary 1.
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_NUM_RE})(?P<im1>[+-](?:{_NUM_RE})?i)?"
    rf"|(?P<im2>[+-]?(?:{_NUM_RE})?i))$"
)


def _parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    m = _COMPLEX_RE.match(t)
    if not m:
        raise ValueError(f"malformed complex literal {text!r}")
    re_part = float(m.group("re")) if m.group("re") else 0.0
    im_text = m.group("im1") or m.group("im2")
    if im_text is None:
        return complex(re_part, 0.0)
    im_text = im_text[:-1]  # strip the i
    if im_text in ("", "+"):
        im_part = 1.0
    elif im_text == "-":
        im_part = -1.0
    else:
        im_part = float(im_text)
    return complex(re_part, im_part)


class RationalField(Field):
    """Exact rationals; meant for identity testing rather than solving."""

    char = 0
    size = None

    def __init__(self):
        self.name = "Q"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return Fraction(n)

    def lt(self, a, b):
        return a < b

    def sort_key(self, a):
        return a

    def rand(self, rng):
        return Fraction(rng.randint(-8, 8), rng.randint(1, 6))

    def fmt(self, a):
        return str(a)

    def parse(self, text):
        return Fraction(text.strip())

    def to_json(self, a):
        return str(a)

    def from_json(self, v):
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise ValueError(f"bad rational literal {v!r}")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """F_p with residues 0..p-1 as elements."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.size = p
        self.k = 1
        self.name = f"F:{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, self.p - 2, self.p)

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def lt(self, a, b):
        return a < b

    def sort_key(self, a):
        return a

    def rand(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return iter(range(self.p))

    def encode(self, a) -> int:
        return a

    def decode(self, i: int):
        return i

    def fmt(self, a):
        return str(a)

    def parse(self, text):
        return int(text.strip(), 10) % self.p

    def to_json(self, a):
        return a

    def from_json(self, v):
        if isinstance(v, int):
            return v % self.p
        raise ValueError(f"bad {self.name} literal {v!r}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


class ExtensionField(Field):
    """F_{p^k} as F_p[x] modulo a monic irreducible of degree k.

    Elements are length-k tuples of residues, ascending powers of x.
    The canonical integer encoding reads the tuple as a base-p number.
    """

    def __init__(self, p: int, k: int, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("extension degree must be >= 2; use PrimeField")
        self.p = p
        self.k = k
        self.char = p
        self.size = p ** k
        if modulus is None:
            modulus = _auto_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not _is_irreducible(modulus, p):
            raise ValueError(
                f"modulus {list(modulus)} is reducible over F_{p}")
        self.modulus = modulus
        self.name = f"F:{p}^{k}"
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return tuple(_poly_mod(prod, self.modulus, p))

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError(f"division by zero in {self.name}")
        inv = _poly_inverse(list(a), list(self.modulus), self.p)
        inv = inv + [0] * (self.k - len(inv))
        return tuple(inv[: self.k])

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def lt(self, a, b):
        return self.encode(a) < self.encode(b)

    def sort_key(self, a):
        return self.encode(a)

    def rand(self, rng):
        p = self.p
        return tuple(rng.randrange(p) for _ in range(self.k))

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.k):
            # digits come most-significant-first; flip to ascending powers
            yield tuple(reversed(digits))

    def encode(self, a) -> int:
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def decode(self, i: int):
        digits = []
        for _ in range(self.k):
            i, r = divmod(i, self.p)
            digits.append(r)
        return tuple(digits)

    def fmt(self, a):
        return str(self.encode(a))

    def parse(self, text):
        n = int(text.strip(), 10)
        if not 0 <= n < self.size:
            raise ValueError(
                f"{n} is outside the canonical range of {self.name}")
        return self.decode(n)

    def to_json(self, a):
        return self.encode(a)

    def from_json(self, v):
        if isinstance(v, int):
            if not 0 <= v < self.size:
                raise ValueError(f"bad {self.name} literal {v!r}")
            return self.decode(v)
        if isinstance(v, list) and len(v) == self.k:
            return tuple(int(c) % self.p for c in v)
        raise ValueError(f"bad {self.name} literal {v!r}")

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("F", self.p, self.k, self.modulus))


# -- F_p[x] helpers (plain int lists, ascending) ----------------------------


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f: list[int], m: Sequence[int], p: int) -> list[int]:
    """f mod m over F_p; returns a list of len(m)-1 coefficients."""
    f = list(f)
    k = len(m) - 1
    for d in range(len(f) - 1, k - 1, -1):
        c = f[d]
        if c:
            for j in range(k + 1):
                f[d - k + j] = (f[d - k + j] - c * m[j]) % p
    out = f[:k]
    return out + [0] * (k - len(out))


def _poly_divmod(a: list[int], b: list[int], p: int):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    lb_inv = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for d in range(len(a) - 1, db - 1, -1):
        c = (a[d] * lb_inv) % p
        if c:
            q[d - db] = c
            for j in range(db + 1):
                a[d - db + j] = (a[d - db + j] - c * b[j]) % p
    return _poly_trim(q), _poly_trim(a[:db])


def _poly_inverse(a: list[int], m: list[int], p: int) -> list[int]:
    """Inverse of a modulo m over F_p via the extended Euclid algorithm."""
    r0, r1 = list(m), _poly_trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        # s_next = s0 - q*s1
        qs = [0] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                qs[i + j] = (qs[i + j] + x * y) % p
        s_next = [(x - y) % p for x, y in itertools.zip_longest(s0, qs, fillvalue=0)]
        s0, s1 = s1, _poly_trim(s_next)
    # r0 is now gcd(a, m), a nonzero constant since m is irreducible
    c_inv = pow(r0[0], p - 2, p)
    return [(x * c_inv) % p for x in s0]


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    k = len(m) - 1
    if k < 1 or m[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            _, rem = _poly_divmod(list(m), divisor, p)
            if not rem:
                return False
    return True


@lru_cache(maxsize=None)
def _auto_modulus(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k with the least base-p encoding."""
    for n in range(p ** k):
        digits = []
        t = n
        for _ in range(k):
            t, r = divmod(t, p)
            digits.append(r)
        candidate = tuple(digits) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

_FIELD_CACHE: dict[tuple, Field] = {}


def make_field(spec: FieldSpec) -> Field:
    """Build (or fetch from cache) the backend described by spec."""
    key = (spec.kind, spec.p, spec.k, spec.modulus, spec.epsilon)
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    if spec.kind == "complex":
        field: Field = ComplexField(spec.epsilon)
    elif spec.kind == "rational":
        field = RationalField()
    elif spec.kind == "prime":
        field = PrimeField(spec.p)
    elif spec.kind == "extension":
        field = ExtensionField(spec.p, spec.k, spec.modulus)
    else:
        raise ValueError(f"unknown field kind {spec.kind!r}")
    _FIELD_CACHE[key] = field
    return field


def field_from_string(text: str, epsilon: float = DEFAULT_EPSILON) -> Field:
    return make_field(FieldSpec.parse(text, epsilon=epsilon))


def characteristic(spec: FieldSpec | Field) -> int:
    """Characteristic of the described field: 0 or p."""
    if isinstance(spec, Field):
        return spec.char
    return 0 if spec.kind in ("complex", "rational") else spec.p


def arith(field: Field, a: Elem, b: Elem, op: str) -> Elem:
    """Dispatch one of add/sub/mul/div by name."""
    try:
        fn = {"add": field.add, "sub": field.sub,
              "mul": field.mul, "div": field.div}[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(a, b)


def check_same_field(f1: Field, f2: Field):
    if f1 is not f2 and f1 != f2:
        raise BackendMismatch(f"mixed field backends: {f1.name} vs {f2.name}")


# ---------------------------------------------------------------------------
# Square roots and quadratic lifts
# ---------------------------------------------------------------------------


def sqrt_char2(field: Field, a: Elem) -> Elem:
    """The unique square root in F_{2^k}, computed as a^(2^(k-1))."""
    if field.char != 2 or not field.is_finite:
        raise UnsupportedBackend("sqrt_char2 requires an F_{2^k} backend")
    k = getattr(field, "k", 1)
    return field.pow_(a, 1 << (k - 1))


@dataclass(frozen=True)
class QuadraticLift:
    """F_q embedded in F_{q^2}, with a section and the q-power Frobenius."""

    base: Field
    ext: Field
    _images: dict  # encode(base elem) -> ext elem
    _section: dict  # ext elem -> base elem

    def embed(self, a: Elem) -> Elem:
        return self._images[self.base.encode(a)]

    def section(self, b: Elem) -> Optional[Elem]:
        """Preimage in the base field, or None if b lies outside it."""
        return self._section.get(b)

    def frobenius(self, b: Elem) -> Elem:
        return self.ext.pow_(b, self.base.size)


@lru_cache(maxsize=None)
def quadratic_lift(field: Field) -> QuadraticLift:
    """Construct F_{q^2} over a finite working field F_q."""
    if not field.is_finite:
        raise UnsupportedBackend("quadratic_lift needs a finite field")
    q = field.size
    if q * q > ROOT_SEARCH_CAP:
        raise FieldTooLarge(
            f"quadratic lift of {field.name} has {q * q} elements, "
            f"beyond the exhaustive-search cap {ROOT_SEARCH_CAP}")
    p = field.char
    if isinstance(field, PrimeField):
        ext = make_field(FieldSpec("extension", p=p, k=2))
        images = {c: ext.from_int(c) for c in range(p)}
    else:
        assert isinstance(field, ExtensionField)
        ext = make_field(FieldSpec("extension", p=p, k=2 * field.k))
        root = _modulus_root_in(field.modulus, ext)
        images = {}
        for a in field.elements():
            acc = ext.zero
            power = ext.one
            for c in a:
                if c:
                    acc = ext.add(acc, ext.mul(ext.from_int(c), power))
                power = ext.mul(power, root)
            images[field.encode(a)] = acc
    section = {img: field.decode(enc) for enc, img in images.items()}
    return QuadraticLift(field, ext, images, section)


def _modulus_root_in(modulus: Sequence[int], ext: ExtensionField) -> Elem:
    """Least root of the base modulus inside the lift field."""
    coeffs = [ext.from_int(c) for c in modulus]
    for x in ext.elements():
        acc = ext.zero
        for c in reversed(coeffs):
            acc = ext.add(ext.mul(acc, x), c)
        if ext.is_zero(acc):
            return x
    raise RuntimeError("base modulus has no root in the quadratic lift")


def sqrt_in_field(field: Field, a: Elem) -> Optional[Elem]:
    """Some square root of a in a finite field, or None; exhaustive."""
    if not field.is_finite:
        raise UnsupportedBackend("sqrt_in_field needs a finite field")
    if field.size > ROOT_SEARCH_CAP:
        raise FieldTooLarge(f"{field.name} exceeds the square-root scan cap")
    if field.char == 2:
        return sqrt_char2(field, a)
    best = None
    for x in field.elements():
        if field.eq(field.mul(x, x), a):
            if best is None or field.lt(x, best):
                best = x
    return best


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootList:
    """Roots with multiplicities; the flag records whether they exhaust
    the polynomial degree over this backend."""

    roots: tuple[tuple[Elem, int], ...]
    complete_over_field: bool

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)


def poly_trim(field: Field, coeffs: Sequence[Elem]) -> tuple[Elem, ...]:
    coeffs = list(coeffs)
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_eval(field: Field, coeffs: Sequence[Elem], x: Elem) -> Elem:
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_derivative(field: Field, coeffs: Sequence[Elem]) -> tuple[Elem, ...]:
    out = [field.mul(field.from_int(i), c) for i, c in enumerate(coeffs)][1:]
    return poly_trim(field, out)


def synth_div(field: Field, coeffs: Sequence[Elem], r: Elem):
    """Divide by (x - r); returns (quotient coefficients, remainder)."""
    quot: list[Elem] = []
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, r), c)
        quot.append(acc)
    rem = quot.pop()
    quot.reverse()
    return tuple(quot), rem


def roots_with_multiplicity(field: Field, coeffs: Sequence[Elem]) -> RootList:
    """All roots of the polynomial lying in the backend field.

    Complex backend: all deg(f) roots (the field is effectively closed).
    Finite fields: exhaustive scan, exact multiplicities via synthetic
    division.  Rationals: rational-root theorem only.
    """
    coeffs = poly_trim(field, coeffs)
    if not coeffs:
        raise ValueError("zero polynomial has no well-defined root set")
    degree = len(coeffs) - 1
    if degree == 0:
        return RootList((), True)
    if isinstance(field, ComplexField):
        return _complex_roots(field, coeffs)
    if field.is_finite:
        return _finite_roots(field, coeffs)
    if isinstance(field, RationalField):
        return _rational_roots(field, coeffs)
    raise UnsupportedBackend(f"no root finder for {field.name}")


def _multiplicity(field: Field, coeffs, r) -> int:
    mult = 0
    current = coeffs
    while len(current) > 1:
        quot, rem = synth_div(field, current, r)
        if not field.is_zero(rem):
            break
        mult += 1
        current = quot
    return mult


def _finite_roots(field: Field, coeffs) -> RootList:
    if field.size > ROOT_SEARCH_CAP:
        raise FieldTooLarge(
            f"exhaustive root search over {field.name} ({field.size} elements) "
            f"exceeds the cap {ROOT_SEARCH_CAP}")
    degree = len(coeffs) - 1
    found = []
    total = 0
    for x in field.elements():
        if field.is_zero(poly_eval(field, coeffs, x)):
            m = _multiplicity(field, coeffs, x)
            found.append((x, m))
            total += m
    found.sort(key=lambda rm: field.sort_key(rm[0]))
    return RootList(tuple(found), total == degree)


def _rational_roots(field: RationalField, coeffs) -> RootList:
    degree = len(coeffs) - 1
    # strip exact zero roots first
    zero_mult = 0
    work = list(coeffs)
    while field.is_zero(work[0]):
        zero_mult += 1
        work = work[1:]
    found = []
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if len(work) > 1:
        denom_lcm = math.lcm(*(c.denominator for c in work))
        ints = [int(c * denom_lcm) for c in work]
        a0, an = abs(ints[0]), abs(ints[-1])
        seen = set()
        for num in _divisors(a0):
            for den in _divisors(an):
                if gcd(num, den) != 1:
                    continue
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if field.is_zero(poly_eval(field, work, cand)):
                        found.append((cand, _multiplicity(field, work, cand)))
    found.sort(key=lambda rm: rm[0])
    total = sum(m for _, m in found)
    return RootList(tuple(found), total == degree)


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    out = set()
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


# -- Durand-Kerner simultaneous iteration ------------------------------------

_DK_MAX_ITER = 200

# A k-fold root is only determined to about machine_eps**(1/k) by
# binary64 coefficients, so root clustering needs a radius well above
# the backend comparison tolerance or multiple roots fragment.
_CLUSTER_RADIUS = 1e-7


def _complex_roots(field: ComplexField, coeffs) -> RootList:
    radius = max(field.epsilon, _CLUSTER_RADIUS)
    monic = [c / coeffs[-1] for c in coeffs]
    # exact zero roots split off cheaply and keep the iteration conditioned
    zero_mult = 0
    while monic and monic[0] == 0:
        zero_mult += 1
        monic = monic[1:]
    approx = _durand_kerner(monic)
    approx.extend([0j] * zero_mult)
    clusters = _cluster_roots(field, approx, radius)
    clusters.sort(key=field.sort_key)
    merged: list[tuple[complex, int]] = []
    for center in clusters:
        count = sum(1 for z in approx if _close(z, center, radius))
        merged.append((center, count))
    # the greedy clustering assigns every approximation to exactly one center
    total = sum(m for _, m in merged)
    if total != len(approx):  # overlapping clusters; re-merge conservatively
        merged = _recount(field, approx, radius)
    return RootList(tuple(merged), True)


def _close(a: complex, b: complex, radius: float) -> bool:
    return abs(a - b) <= radius * max(1.0, abs(a), abs(b))


def _cluster_roots(field: ComplexField, zs: list[complex],
                   radius: float) -> list[complex]:
    """Greedy transitive clustering; returns one center per cluster."""
    remaining = sorted(zs, key=field.sort_key)
    centers = []
    used = [False] * len(remaining)
    for i, z in enumerate(remaining):
        if used[i]:
            continue
        members = [z]
        used[i] = True
        changed = True
        while changed:
            changed = False
            for j, w in enumerate(remaining):
                if not used[j] and any(_close(w, m, radius) for m in members):
                    members.append(w)
                    used[j] = True
                    changed = True
        centers.append(sum(members) / len(members))
    return centers


def _recount(field: ComplexField, zs: list[complex],
             radius: float) -> list[tuple[complex, int]]:
    out: list[tuple[complex, int]] = []
    for z in sorted(zs, key=field.sort_key):
        for idx, (c, m) in enumerate(out):
            if _close(z, c, radius):
                out[idx] = ((c * m + z) / (m + 1), m + 1)
                break
        else:
            out.append((z, 1))
    return out


def _durand_kerner(monic: list[complex]) -> list[complex]:
    """Simultaneous iteration for all roots of a monic polynomial."""
    n = len(monic) - 1
    if n <= 0:
        return []
    if n == 1:
        return [-monic[0]]
    if n == 2:
        # closed form; better conditioned than iterating on quadratics
        b, c = monic[1], monic[0]
        s = cmath.sqrt(b * b - 4 * c)
        return [(-b - s) / 2, (-b + s) / 2]
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = [radius * 0.9 * cmath.exp(1j * (2 * math.pi * k / n + 0.4))
         for k in range(n)]
    deriv = [i * c for i, c in enumerate(monic)][1:]
    converged = False
    for _ in range(_DK_MAX_ITER):
        max_step = 0.0
        for i in range(n):
            zi = z[i]
            p = monic[-1]
            for c in reversed(monic[:-1]):
                p = p * zi + c
            denom = 1 + 0j
            for j in range(n):
                if j != i:
                    denom *= zi - z[j]
            if denom == 0:
                denom = 1e-30 + 0j
            step = p / denom
            z[i] = zi - step
            max_step = max(max_step, abs(step))
        if max_step <= 1e-14 * max(1.0, radius):
            converged = True
            break
    if not converged:
        # accept anyway when the residuals are tiny (typical for multiple
        # roots, which only converge linearly)
        scale = max(1.0, max(abs(c) for c in monic)) * max(1.0, radius) ** n
        residuals = [abs(_horner(monic, zi)) for zi in z]
        if max(residuals) > 1e-8 * scale:
            raise RootFindingError(
                f"Durand-Kerner did not converge in {_DK_MAX_ITER} iterations; "
                f"residuals {['%.3g' % r for r in residuals]}")
    # one Newton polish pass for well-separated roots
    for i in range(n):
        fp = _horner(deriv, z[i])
        if abs(fp) > 1e-8:
            z[i] -= _horner(monic, z[i]) / fp
    return z


def _horner(coeffs: list[complex], x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
