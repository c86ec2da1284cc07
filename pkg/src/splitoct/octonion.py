"""Split octonions as Zorn vector matrices.

An element is stored as the flat coordinate tuple
``(alpha, u1, u2, u3, v1, v2, v3, beta)`` standing for the 2x2 array
[[alpha, u], [v, beta]] with scalar diagonal and 3-vector corners.
The product mixes dot and cross products:

    [[a, u], [v, b]] * [[a', u'], [v', b']]
        = [[a a' + u.v',  a u' + b' u - v x v'],
           [a' v + b v' + u x u',  b b' + v.u']]

Values are immutable; all arithmetic returns fresh objects and never
normalizes anything, so the byte-level coordinates stay predictable.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Elem, Field, check_same_field

Vec3 = tuple[Elem, Elem, Elem]


def _dot(field: Field, x: Vec3, y: Vec3) -> Elem:
    acc = field.zero
    for a, b in zip(x, y):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _cross(field: Field, x: Vec3, y: Vec3) -> Vec3:
    return (
        field.sub(field.mul(x[1], y[2]), field.mul(x[2], y[1])),
        field.sub(field.mul(x[2], y[0]), field.mul(x[0], y[2])),
        field.sub(field.mul(x[0], y[1]), field.mul(x[1], y[0])),
    )


def _vec_add(field: Field, x: Vec3, y: Vec3) -> Vec3:
    return tuple(field.add(a, b) for a, b in zip(x, y))  # type: ignore[return-value]


def _vec_scale(field: Field, s: Elem, x: Vec3) -> Vec3:
    return tuple(field.mul(s, a) for a in x)  # type: ignore[return-value]


class Octonion:
    """One split octonion over a fixed coefficient field."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Sequence[Elem]):
        coords = tuple(coords)
        if len(coords) != 8:
            raise ValueError("an octonion needs exactly 8 coordinates")
        self.field = field
        self.coords = coords

    # -- component views ----------------------------------------------------
    @property
    def alpha(self) -> Elem:
        return self.coords[0]

    @property
    def u(self) -> Vec3:
        return self.coords[1:4]

    @property
    def v(self) -> Vec3:
        return self.coords[4:7]

    @property
    def beta(self) -> Elem:
        return self.coords[7]

    @staticmethod
    def from_parts(field: Field, alpha: Elem, u: Sequence[Elem],
                   v: Sequence[Elem], beta: Elem) -> "Octonion":
        return Octonion(field, (alpha, *u, *v, beta))

    @staticmethod
    def scalar(field: Field, s: Elem) -> "Octonion":
        z = field.zero
        return Octonion(field, (s, z, z, z, z, z, z, s))

    # -- ring structure -------------------------------------------------------
    def __add__(self, other: "Octonion") -> "Octonion":
        check_same_field(self.field, other.field)
        f = self.field
        return Octonion(f, tuple(f.add(a, b)
                                 for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        check_same_field(self.field, other.field)
        f = self.field
        return Octonion(f, tuple(f.sub(a, b)
                                 for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Octonion":
        f = self.field
        return Octonion(f, tuple(f.neg(a) for a in self.coords))

    def scale(self, s: Elem) -> "Octonion":
        f = self.field
        return Octonion(f, tuple(f.mul(s, a) for a in self.coords))

    def __mul__(self, other: "Octonion") -> "Octonion":
        check_same_field(self.field, other.field)
        f = self.field
        a1, b1, u1, v1 = self.alpha, self.beta, self.u, self.v
        a2, b2, u2, v2 = other.alpha, other.beta, other.u, other.v
        alpha = f.add(f.mul(a1, a2), _dot(f, u1, v2))
        beta = f.add(f.mul(b1, b2), _dot(f, v1, u2))
        u = tuple(f.sub(f.add(f.mul(a1, x2), f.mul(b2, x1)), cx)
                  for x1, x2, cx in zip(u1, u2, _cross(f, v1, v2)))
        v = tuple(f.add(f.add(f.mul(a2, x1), f.mul(b1, x2)), cx)
                  for x1, x2, cx in zip(v1, v2, _cross(f, u1, u2)))
        return Octonion(f, (alpha, *u, *v, beta))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        if self.field != other.field:
            return False
        f = self.field
        return all(f.eq(a, b) for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        # tolerance-equal complex octonions may hash apart; finite/rational
        # backends hash consistently with eq
        return hash((self.field, self.coords))

    # -- involution and forms ---------------------------------------------
    def conj(self) -> "Octonion":
        f = self.field
        a, b = self.alpha, self.beta
        return Octonion(f, (b, *(f.neg(x) for x in self.u),
                            *(f.neg(x) for x in self.v), a))

    def trace(self) -> Elem:
        return self.field.add(self.alpha, self.beta)

    def norm(self) -> Elem:
        f = self.field
        return f.sub(f.mul(self.alpha, self.beta), _dot(f, self.u, self.v))

    def qform(self, other: "Octonion") -> Elem:
        check_same_field(self.field, other.field)
        f = self.field
        diag = f.add(f.mul(self.alpha, other.beta),
                     f.mul(other.alpha, self.beta))
        off = f.add(_dot(f, self.u, other.v), _dot(f, other.u, self.v))
        return f.sub(diag, off)

    def power(self, n: int) -> "Octonion":
        if n < 0:
            raise ValueError("power requires a nonnegative exponent")
        acc = one(self.field)
        for _ in range(n):
            acc = self * acc
        return acc

    def inverse(self):
        """The two-sided inverse conj/norm, or None when norm vanishes."""
        f = self.field
        n = self.norm()
        if f.is_zero(n):
            return None
        return self.conj().scale(f.inv(n))

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(c) for c in self.coords)

    def is_scalar(self) -> bool:
        """True iff the element lies on the line F*one."""
        f = self.field
        return (f.eq(self.alpha, self.beta)
                and all(f.is_zero(c) for c in self.coords[1:7]))

    # -- text / json ----------------------------------------------------------
    def __repr__(self):
        f = self.field
        return "Octonion(%s; %s)" % (f.name,
                                     ", ".join(f.fmt(c) for c in self.coords))

    def fmt(self) -> str:
        f = self.field
        return ",".join(f.fmt(c) for c in self.coords)

    def to_json(self):
        f = self.field
        return [f.to_json(c) for c in self.coords]

    @staticmethod
    def from_json(field: Field, v) -> "Octonion":
        if not isinstance(v, list) or len(v) != 8:
            raise ValueError("octonion JSON form is an array of 8 literals")
        return Octonion(field, tuple(field.from_json(c) for c in v))

    def sort_key(self):
        f = self.field
        return tuple(f.sort_key(c) for c in self.coords)


def parse_octonion(field: Field, text: str) -> Octonion:
    """Parse 8 comma-separated field literals in coordinate order."""
    parts = text.strip().split(",")
    if len(parts) != 8:
        raise ValueError(
            f"octonion literal needs 8 comma-separated coordinates, "
            f"got {len(parts)}")
    return Octonion(field, tuple(field.parse(p) for p in parts))


# -- distinguished basis ------------------------------------------------------


def zero(field: Field) -> Octonion:
    return Octonion(field, (field.zero,) * 8)


def one(field: Field) -> Octonion:
    z, o = field.zero, field.one
    return Octonion(field, (o, z, z, z, z, z, z, o))


def _unit(field: Field, index: int) -> Octonion:
    coords = [field.zero] * 8
    coords[index] = field.one
    return Octonion(field, tuple(coords))


class Basis:
    """The eight distinguished basis elements over one field."""

    def __init__(self, field: Field):
        self.field = field
        self.e1 = _unit(field, 0)
        self.e2 = _unit(field, 7)
        self.u1 = _unit(field, 1)
        self.u2 = _unit(field, 2)
        self.u3 = _unit(field, 3)
        self.v1 = _unit(field, 4)
        self.v2 = _unit(field, 5)
        self.v3 = _unit(field, 6)
        self.one = one(field)
        self.zero = zero(field)

    def units(self):
        return (self.e1, self.u1, self.u2, self.u3,
                self.v1, self.v2, self.v3, self.e2)


def basis(field: Field) -> Basis:
    return Basis(field)


def random_octonion(field: Field, rng) -> Octonion:
    return Octonion(field, tuple(field.rand(rng) for _ in range(8)))
