"""Automorphisms of the split octonions and orbit classification.

The automorphism group is generated by three families acting on Zorn
matrices [[alpha, u], [v, beta]] (u, v row vectors):

  * an SL3 embedding      a -> [[alpha, u.g], [v.g^{-T}, beta]]
  * shears delta1(u), delta2(v) given by explicit formulas below
  * the swap hbar         a -> [[beta, -v], [-u, alpha]]

Orbits are classified by the eigenvalue pair (the roots of
xi^2 - tr(a) xi + n(a)) together with the scalar test: Scalar(alpha) for
alpha*one, O2(l1, l2) for distinct eigenvalues, O3(l) for a repeated
eigenvalue off the scalar line.  Over a finite field the eigenvalues may
live in the quadratic extension; labels record that through `lift`.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .fields import (Elem, Field, QuadraticLift, SplitOctError,
                     UnsupportedBackend, BackendMismatch, check_same_field,
                     quadratic_lift, roots_with_multiplicity)
from .octonion import Octonion, Basis, basis, one as oct_one, zero as oct_zero

Vec3 = tuple[Elem, Elem, Elem]
Mat3 = tuple[Vec3, Vec3, Vec3]


# ---------------------------------------------------------------------------
# 3x3 matrix helpers over a field
# ---------------------------------------------------------------------------


def mat3_identity(f: Field) -> Mat3:
    z, o = f.zero, f.one
    return ((o, z, z), (z, o, z), (z, z, o))


def mat3_mul(f: Field, a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(
            f.add(f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j])),
                  f.mul(a[i][2], b[2][j]))
            for j in range(3))
        for i in range(3))  # type: ignore[return-value]


def mat3_det(f: Field, g: Mat3) -> Elem:
    t1 = f.mul(g[0][0], f.sub(f.mul(g[1][1], g[2][2]), f.mul(g[1][2], g[2][1])))
    t2 = f.mul(g[0][1], f.sub(f.mul(g[1][0], g[2][2]), f.mul(g[1][2], g[2][0])))
    t3 = f.mul(g[0][2], f.sub(f.mul(g[1][0], g[2][1]), f.mul(g[1][1], g[2][0])))
    return f.add(f.sub(t1, t2), t3)


def mat3_cofactor(f: Field, g: Mat3) -> Mat3:
    def minor(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        return f.sub(f.mul(g[rows[0]][cols[0]], g[rows[1]][cols[1]]),
                     f.mul(g[rows[0]][cols[1]], g[rows[1]][cols[0]]))

    out = []
    for i in range(3):
        row = []
        for j in range(3):
            m = minor(i, j)
            row.append(m if (i + j) % 2 == 0 else f.neg(m))
        out.append(tuple(row))
    return tuple(out)  # type: ignore[return-value]


def mat3_transpose(g: Mat3) -> Mat3:
    return tuple(tuple(g[i][j] for i in range(3)) for j in range(3))  # type: ignore[return-value]


def mat3_inv(f: Field, g: Mat3) -> Mat3:
    det = mat3_det(f, g)
    if f.is_zero(det):
        raise ZeroDivisionError("singular 3x3 matrix")
    inv_det = f.inv(det)
    adj = mat3_transpose(mat3_cofactor(f, g))
    return tuple(tuple(f.mul(inv_det, x) for x in row) for row in adj)  # type: ignore[return-value]


def _row_times(f: Field, u: Vec3, g: Mat3) -> Vec3:
    return tuple(
        f.add(f.add(f.mul(u[0], g[0][j]), f.mul(u[1], g[1][j])),
              f.mul(u[2], g[2][j]))
        for j in range(3))  # type: ignore[return-value]


def _dot(f: Field, x: Vec3, y: Vec3) -> Elem:
    return f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])),
                 f.mul(x[2], y[2]))


def _cross(f: Field, x: Vec3, y: Vec3) -> Vec3:
    return (
        f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
        f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
        f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0])),
    )


# ---------------------------------------------------------------------------
# Generator tokens and their raw actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SL3Token:
    g: Mat3


@dataclass(frozen=True)
class Delta1Token:
    u: Vec3


@dataclass(frozen=True)
class Delta2Token:
    v: Vec3


@dataclass(frozen=True)
class HBarToken:
    pass


Token = SL3Token | Delta1Token | Delta2Token | HBarToken


def act_token(f: Field, tok: Token, x: Octonion) -> Octonion:
    """Apply one generator directly to an octonion."""
    a, b = x.alpha, x.beta
    u, v = x.u, x.v
    if isinstance(tok, SL3Token):
        nu = _row_times(f, u, tok.g)
        # with det g = 1 the inverse-transpose is the cofactor matrix
        nv = _row_times(f, v, mat3_cofactor(f, tok.g))
        return Octonion.from_parts(f, a, nu, nv, b)
    if isinstance(tok, Delta1Token):
        w = tok.u
        s = _dot(f, w, v)
        coef = f.sub(f.sub(a, b), s)
        nu = tuple(f.add(f.mul(coef, wi), ui) for wi, ui in zip(w, u))
        cr = _cross(f, u, w)
        nv = tuple(f.sub(vi, ci) for vi, ci in zip(v, cr))
        return Octonion.from_parts(f, f.sub(a, s), nu, nv, f.add(b, s))
    if isinstance(tok, Delta2Token):
        w = tok.v
        s = _dot(f, u, w)
        cr = _cross(f, v, w)
        nu = tuple(f.add(ui, ci) for ui, ci in zip(u, cr))
        coef = f.sub(f.sub(b, a), s)
        nv = tuple(f.add(f.mul(coef, wi), vi) for wi, vi in zip(w, v))
        return Octonion.from_parts(f, f.add(a, s), nu, nv, f.sub(b, s))
    if isinstance(tok, HBarToken):
        return Octonion.from_parts(f, b, tuple(f.neg(c) for c in v),
                                   tuple(f.neg(c) for c in u), a)
    raise TypeError(f"unknown generator token {tok!r}")


def invert_token(f: Field, tok: Token) -> Token:
    if isinstance(tok, SL3Token):
        # det g = 1, so the inverse is the adjugate: exact on every backend
        return SL3Token(mat3_transpose(mat3_cofactor(f, tok.g)))
    if isinstance(tok, Delta1Token):
        return Delta1Token(tuple(f.neg(c) for c in tok.u))  # type: ignore[arg-type]
    if isinstance(tok, Delta2Token):
        return Delta2Token(tuple(f.neg(c) for c in tok.v))  # type: ignore[arg-type]
    return HBarToken()


def apply_word(f: Field, word: Sequence[Token], x: Octonion) -> Octonion:
    """Apply a word right-to-left (function-composition order)."""
    for tok in reversed(word):
        x = act_token(f, tok, x)
    return x


def token_to_json(f: Field, tok: Token):
    if isinstance(tok, SL3Token):
        return {"kind": "SL3",
                "g": [[f.to_json(c) for c in row] for row in tok.g]}
    if isinstance(tok, Delta1Token):
        return {"kind": "Delta1", "u": [f.to_json(c) for c in tok.u]}
    if isinstance(tok, Delta2Token):
        return {"kind": "Delta2", "v": [f.to_json(c) for c in tok.v]}
    return {"kind": "HBar"}


def token_from_json(f: Field, obj) -> Token:
    kind = obj.get("kind")
    if kind == "SL3":
        g = tuple(tuple(f.from_json(c) for c in row) for row in obj["g"])
        return SL3Token(g)  # type: ignore[arg-type]
    if kind == "Delta1":
        return Delta1Token(tuple(f.from_json(c) for c in obj["u"]))  # type: ignore[arg-type]
    if kind == "Delta2":
        return Delta2Token(tuple(f.from_json(c) for c in obj["v"]))  # type: ignore[arg-type]
    if kind == "HBar":
        return HBarToken()
    raise ValueError(f"unknown token kind {kind!r}")


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

Mat8 = tuple  # 8 rows of 8 field elements


def _mat8_identity(f: Field) -> Mat8:
    return tuple(tuple(f.one if i == j else f.zero for j in range(8))
                 for i in range(8))


def _mat8_mul(f: Field, a: Mat8, b: Mat8) -> Mat8:
    out = []
    for i in range(8):
        row = []
        ai = a[i]
        for j in range(8):
            acc = f.zero
            for k in range(8):
                aik = ai[k]
                if not f.is_zero(aik):
                    acc = f.add(acc, f.mul(aik, b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _token_matrix(f: Field, tok: Token) -> Mat8:
    cols = []
    for j in range(8):
        coords = [f.zero] * 8
        coords[j] = f.one
        cols.append(act_token(f, tok, Octonion(f, coords)).coords)
    return tuple(tuple(cols[j][i] for j in range(8)) for i in range(8))


class Automorphism:
    """A composable element of the automorphism group.

    `word` lists generator tokens in function-composition order (the
    rightmost acts first); `matrix` is the product of the generator
    matrices acting on the 8 octonion coordinates.
    """

    __slots__ = ("field", "word", "matrix")

    def __init__(self, field: Field, word: tuple, matrix: Mat8):
        self.field = field
        self.word = word
        self.matrix = matrix

    @staticmethod
    def from_word(field: Field, word: Sequence[Token]) -> "Automorphism":
        m = _mat8_identity(field)
        for tok in word:
            m = _mat8_mul(field, m, _token_matrix(field, tok))
        return Automorphism(field, tuple(word), m)

    def apply(self, x: Octonion) -> Octonion:
        check_same_field(self.field, x.field)
        f = self.field
        coords = x.coords
        out = []
        for i in range(8):
            acc = f.zero
            row = self.matrix[i]
            for j in range(8):
                rij = row[j]
                if not f.is_zero(rij):
                    acc = f.add(acc, f.mul(rij, coords[j]))
            out.append(acc)
        return Octonion(f, tuple(out))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: apply(compose(A,B), x) = apply(A, apply(B, x))."""
        check_same_field(self.field, other.field)
        return Automorphism(self.field, self.word + other.word,
                            _mat8_mul(self.field, self.matrix, other.matrix))

    def invert(self) -> "Automorphism":
        f = self.field
        inv_word = tuple(invert_token(f, t) for t in reversed(self.word))
        return Automorphism.from_word(f, inv_word)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        if self.field != other.field:
            return False
        f = self.field
        return all(f.eq(a, b)
                   for ra, rb in zip(self.matrix, other.matrix)
                   for a, b in zip(ra, rb))

    def __repr__(self):
        return f"<automorphism over {self.field.name}, word length {len(self.word)}>"

    def to_json(self):
        f = self.field
        return {
            "word": [token_to_json(f, t) for t in self.word],
            "matrix": [[f.to_json(c) for c in row] for row in self.matrix],
        }

    @staticmethod
    def from_json(field: Field, obj) -> "Automorphism":
        word = tuple(token_from_json(field, t) for t in obj["word"])
        return Automorphism.from_word(field, word)


def identity(field: Field) -> Automorphism:
    return Automorphism(field, (), _mat8_identity(field))


def sl3(field: Field, g: Sequence[Sequence[Elem]]) -> Automorphism:
    g = tuple(tuple(row) for row in g)
    if len(g) != 3 or any(len(r) != 3 for r in g):
        raise ValueError("sl3 needs a 3x3 matrix")
    det = mat3_det(field, g)
    if not field.is_one(det):
        raise ValueError(f"sl3 matrix must have determinant 1, "
                         f"got {field.fmt(det)}")
    return Automorphism.from_word(field, (SL3Token(g),))


def delta1(field: Field, u: Sequence[Elem]) -> Automorphism:
    u = tuple(u)
    if len(u) != 3:
        raise ValueError("delta1 needs a 3-vector")
    return Automorphism.from_word(field, (Delta1Token(u),))


def delta2(field: Field, v: Sequence[Elem]) -> Automorphism:
    v = tuple(v)
    if len(v) != 3:
        raise ValueError("delta2 needs a 3-vector")
    return Automorphism.from_word(field, (Delta2Token(v),))


def hbar(field: Field) -> Automorphism:
    return Automorphism.from_word(field, (HBarToken(),))


# ---------------------------------------------------------------------------
# Random words
# ---------------------------------------------------------------------------


def _random_sl3(field: Field, rng: random.Random) -> Mat3:
    """Product of unit-triangular elementary matrices: det exactly 1."""
    g = mat3_identity(field)
    for _ in range(rng.randint(2, 4)):
        i = rng.randrange(3)
        j = (i + rng.randint(1, 2)) % 3
        t = field.rand(rng)
        e = [[field.one if r == c else field.zero for c in range(3)]
             for r in range(3)]
        e[i][j] = t
        g = mat3_mul(field, g, tuple(tuple(r) for r in e))
    return g


def random_token(field: Field, rng: random.Random) -> Token:
    pick = rng.randrange(4)
    if pick == 0:
        return SL3Token(_random_sl3(field, rng))
    if pick == 1:
        return Delta1Token(tuple(field.rand(rng) for _ in range(3)))
    if pick == 2:
        return Delta2Token(tuple(field.rand(rng) for _ in range(3)))
    return HBarToken()


def random_word(field: Field, rng: random.Random,
                min_len: int = 4, max_len: int = 12) -> tuple:
    return tuple(random_token(field, rng)
                 for _ in range(rng.randint(min_len, max_len)))


def random_automorphism(field: Field, rng: random.Random,
                        min_len: int = 4, max_len: int = 12) -> Automorphism:
    return Automorphism.from_word(field, random_word(field, rng,
                                                     min_len, max_len))


# ---------------------------------------------------------------------------
# Eigenvalues and orbit labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eigenpair:
    """Ordered roots of xi^2 - tr(a) xi + n(a).

    `field` is where the values live: the working field when
    in_base_field, otherwise its quadratic extension (with `lift`
    carrying the embedding).
    """

    lam1: Elem
    lam2: Elem
    in_base_field: bool
    field: Field
    lift: Optional[QuadraticLift] = None

    @property
    def repeated(self) -> bool:
        return self.field.eq(self.lam1, self.lam2)


def eigenvalues(a: Octonion) -> Eigenpair:
    f = a.field
    t, n = a.trace(), a.norm()
    eps = getattr(f, "epsilon", None)
    if eps is not None:
        # Closed form on the complex backend.  The repeated test is on the
        # discriminant, scaled to the squared coordinate magnitude: that is
        # the absolute accuracy to which trace and norm are known, and a
        # double eigenvalue perturbs as the square root of it.
        disc = t * t - 4 * n
        scale = max(1.0, max(abs(c) for c in a.coords) ** 2)
        if abs(disc) <= eps * scale:
            lam = t / 2
            return Eigenpair(lam, lam, True, f)
        s = cmath.sqrt(disc)
        l1, l2 = (t - s) / 2, (t + s) / 2
        if f.lt(l2, l1):
            l1, l2 = l2, l1
        return Eigenpair(l1, l2, True, f)
    quad = (n, f.neg(t), f.one)
    rl = roots_with_multiplicity(f, quad)
    lams = [r for r, m in rl for _ in range(m)]
    if len(lams) == 2:
        l1, l2 = lams
        if f.lt(l2, l1):
            l1, l2 = l2, l1
        return Eigenpair(l1, l2, True, f)
    if not f.is_finite:
        raise UnsupportedBackend(
            f"eigenvalues of this octonion are irrational over {f.name}")
    lift = quadratic_lift(f)
    ext = lift.ext
    quad_e = (lift.embed(n), ext.neg(lift.embed(t)), ext.one)
    rle = roots_with_multiplicity(ext, quad_e)
    lams = [r for r, m in rle for _ in range(m)]
    if len(lams) != 2:
        raise SplitOctError("quadratic failed to split in the quadratic "
                            "extension; this is a defect")
    l1, l2 = lams
    if ext.lt(l2, l1):
        l1, l2 = l2, l1
    return Eigenpair(l1, l2, False, ext, lift)


@dataclass(frozen=True, eq=False)
class OrbitLabel:
    """Canonical-form label: Scalar(a), O2(a1, a2) or O3(a).

    `field` hosts the parameters; `lift` is set when they live in the
    quadratic extension of the working field (possible for O2 only).
    """

    kind: str  # "Scalar" | "O2" | "O3"
    params: tuple
    field: Field
    lift: Optional[QuadraticLift] = None

    @property
    def in_base_field(self) -> bool:
        return self.lift is None

    def __eq__(self, other):
        if not isinstance(other, OrbitLabel):
            return NotImplemented
        if self.kind != other.kind or self.field != other.field:
            return False
        if len(self.params) != len(other.params):
            return False
        return all(self.field.eq(a, b)
                   for a, b in zip(self.params, other.params))

    def __hash__(self):
        return hash((self.kind, len(self.params)))

    def __repr__(self):
        f = self.field
        return "%s(%s)" % (self.kind, ", ".join(f.fmt(p) for p in self.params))

    def to_json(self):
        f = self.field
        return {"kind": self.kind,
                "params": [f.to_json(p) for p in self.params],
                "in_working_field": self.in_base_field}

    def sort_key(self):
        order = {"Scalar": 0, "O2": 1, "O3": 2}
        return (order[self.kind], 0 if self.in_base_field else 1,
                tuple(self.field.sort_key(p) for p in self.params))


def scalar_label(field: Field, alpha: Elem) -> OrbitLabel:
    return OrbitLabel("Scalar", (alpha,), field)


def o2_label(field: Field, a1: Elem, a2: Elem,
             lift: Optional[QuadraticLift] = None) -> OrbitLabel:
    if field.eq(a1, a2):
        raise ValueError("O2 labels need two distinct eigenvalues")
    if field.lt(a2, a1):
        a1, a2 = a2, a1
    return OrbitLabel("O2", (a1, a2), field, lift)


def o3_label(field: Field, alpha: Elem) -> OrbitLabel:
    return OrbitLabel("O3", (alpha,), field)


def classify(a: Octonion) -> OrbitLabel:
    if a.is_scalar():
        return scalar_label(a.field, a.alpha)
    pair = eigenvalues(a)
    if pair.repeated:
        # a repeated eigenvalue always lies in the working field
        lam = pair.lam1 if pair.in_base_field else pair.lift.section(pair.lam1)
        if lam is None:
            raise SplitOctError("repeated eigenvalue escaped the working "
                                "field; this is a defect")
        return o3_label(a.field, lam)
    return o2_label(pair.field, pair.lam1, pair.lam2,
                    None if pair.in_base_field else pair.lift)


def canonical_rep(label: OrbitLabel) -> Octonion:
    f = label.field
    bs = basis(f)
    if label.kind == "Scalar":
        return bs.one.scale(label.params[0])
    if label.kind == "O2":
        a1, a2 = label.params
        return bs.e1.scale(a1) + bs.e2.scale(a2)
    return bs.one.scale(label.params[0]) + bs.u1


def orbit_member(label: OrbitLabel, x: Octonion) -> bool:
    """Membership via the complete invariant: eigenpair plus scalar test."""
    f = label.field
    if x.field == f:
        tr, nm = x.trace(), x.norm()
    elif label.lift is not None and x.field == label.lift.base:
        tr = label.lift.embed(x.trace())
        nm = label.lift.embed(x.norm())
    else:
        raise BackendMismatch(
            f"octonion over {x.field.name} cannot be tested against a "
            f"label over {f.name}")
    if label.kind == "Scalar":
        return x.is_scalar() and f.eq(tr, f.add(label.params[0],
                                                label.params[0])) \
            and f.eq(nm, f.mul(label.params[0], label.params[0]))
    if x.is_scalar():
        return False
    if label.kind == "O2":
        a1, a2 = label.params
        return f.eq(tr, f.add(a1, a2)) and f.eq(nm, f.mul(a1, a2))
    lam = label.params[0]
    return f.eq(tr, f.add(lam, lam)) and f.eq(nm, f.mul(lam, lam))


# On the complex backend, words whose coordinates blow up past this cap are
# redrawn: float64 loses roughly (magnitude)^2 * 1e-16 of absolute accuracy
# in downstream products, so wilder samples could not even certify their own
# orbit membership at the backend tolerance.
_TAME_SAMPLE_CAP = 100.0
_TAME_SAMPLE_TRIES = 200


def sample_orbit(label: OrbitLabel, count: int, seed: int) -> list[Octonion]:
    """Seeded random orbit members: random words applied to the
    canonical representative."""
    if label.kind == "Scalar":
        raise ValueError("Scalar orbits are single points; nothing to sample")
    f = label.field
    rep = canonical_rep(label)
    rng = random.Random(seed)
    tame = getattr(f, "epsilon", None) is not None
    out = []
    for _ in range(count):
        x = None
        for attempt in range(_TAME_SAMPLE_TRIES):
            word = random_word(f, rng)
            x = apply_word(f, word, rep)
            if not tame or max(abs(c) for c in x.coords) <= _TAME_SAMPLE_CAP:
                break
        out.append(x)
    return out


# ---------------------------------------------------------------------------
# Transporter to canonical form
# ---------------------------------------------------------------------------


def _sl3_sending_to_c1(f: Field, u: Vec3) -> Mat3:
    """A det-1 matrix M with u.M = (1,0,0), for nonzero u."""
    j0 = next(j for j in range(3) if not f.is_zero(u[j]))
    rows = [u]
    for k in range(3):
        if k != j0:
            rows.append(tuple(f.one if c == k else f.zero for c in range(3)))
    b = tuple(rows)
    det = mat3_det(f, b)
    b_inv = mat3_inv(f, b)
    scaling = ((f.one, f.zero, f.zero),
               (f.zero, det, f.zero),
               (f.zero, f.zero, f.one))
    return mat3_mul(f, b_inv, scaling)


def _push(f: Field, steps: list, tok: Token, x: Octonion) -> Octonion:
    steps.append(tok)
    return act_token(f, tok, x)


def _squarezero_to_u1_steps(m: Octonion) -> list:
    """Generator steps (in application order) sending a nonzero
    square-zero octonion to u1."""
    f = m.field
    steps: list = []
    x = m
    if all(f.is_zero(c) for c in x.u):
        x = _push(f, steps, HBarToken(), x)
    g = _sl3_sending_to_c1(f, x.u)
    x = _push(f, steps, SL3Token(g), x)
    # now x = [[alpha, c1], [v, -alpha]] with v1 = -alpha^2
    if not f.is_zero(x.alpha):
        w = tuple(f.div(c, x.alpha) for c in x.v)
        x = _push(f, steps, Delta2Token(w), x)
    else:
        w = (f.zero, x.v[2], f.neg(x.v[1]))
        if not all(f.is_zero(c) for c in w):
            x = _push(f, steps, Delta1Token(w), x)
    return steps


def _idempotent_to_e1_steps(b: Octonion) -> list:
    """Generator steps (in application order) sending a trace-1
    rank-one idempotent to e1."""
    f = b.field
    steps: list = []
    x = b
    if all(f.is_zero(c) for c in x.u) and all(f.is_zero(c) for c in x.v):
        if not f.is_one(x.alpha):  # x = e2
            _push(f, steps, HBarToken(), x)
        return steps
    if all(f.is_zero(c) for c in x.u):
        x = _push(f, steps, HBarToken(), x)
    g = _sl3_sending_to_c1(f, x.u)
    x = _push(f, steps, SL3Token(g), x)
    # now x = [[alpha, c1], [v, 1-alpha]] with v1 = alpha(1-alpha)
    if not f.is_zero(x.alpha):
        w = tuple(f.div(c, x.alpha) for c in x.v)
        x = _push(f, steps, Delta2Token(w), x)
        # x = e1 + u1
        x = _push(f, steps, Delta1Token((f.neg(f.one), f.zero, f.zero)), x)
    else:
        w = (f.zero, x.v[2], f.neg(x.v[1]))
        if not all(f.is_zero(c) for c in w):
            x = _push(f, steps, Delta1Token(w), x)
        g2_ = _sl3_sending_to_c1(f, x.u)
        x = _push(f, steps, SL3Token(g2_), x)
        # x = e2 + u1
        x = _push(f, steps, HBarToken(), x)
        # x = e1 - v1
        x = _push(f, steps, Delta2Token((f.neg(f.one), f.zero, f.zero)), x)
    return steps


def _is_noop_token(f: Field, tok: Token) -> bool:
    if isinstance(tok, Delta1Token):
        return all(f.is_zero(c) for c in tok.u)
    if isinstance(tok, Delta2Token):
        return all(f.is_zero(c) for c in tok.v)
    if isinstance(tok, SL3Token):
        return all(f.eq(tok.g[i][j], f.one if i == j else f.zero)
                   for i in range(3) for j in range(3))
    return False


def transporter(a: Octonion) -> tuple[Automorphism, Octonion]:
    """An explicit automorphism carrying `a` to its canonical form.

    Requires the eigenvalues to lie in the working field.  The result is
    checked against the canonical representative before returning.
    """
    f = a.field
    label = classify(a)
    if not label.in_base_field:
        raise UnsupportedBackend(
            "transporter needs eigenvalues inside the working field")
    if label.kind == "Scalar":
        return identity(f), a
    if label.kind == "O2":
        l1, l2 = label.params
        b = (a - oct_one(f).scale(l2)).scale(f.inv(f.sub(l1, l2)))
        steps = _idempotent_to_e1_steps(b)
    else:
        lam = label.params[0]
        m = a - oct_one(f).scale(lam)
        steps = _squarezero_to_u1_steps(m)
    steps = [t for t in steps if not _is_noop_token(f, t)]
    auto = Automorphism.from_word(f, tuple(reversed(steps)))
    target = canonical_rep(label)
    if auto.apply(a) != target:
        raise SplitOctError("transporter construction missed the canonical "
                            "representative; this is a defect")
    return auto, target
