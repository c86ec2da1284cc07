"""Scalar-coefficient polynomials over octonions and the complete solver.

For f with coefficients in the field and a right-hand side c, the
solution set of f(x) = c decomposes by the orbit class of c (after
folding the constant term into c):

  * c scalar gamma*one: scalar points f(xi)=gamma, one O2 family per
    pair of distinct roots, one O3 family per multiple root;
  * c with distinct eigenvalues gamma1, gamma2: finitely many points
    xi1*b + xi2*(one-b) through the idempotent b = (c-gamma2)/(gamma1-gamma2);
  * c with a repeated eigenvalue gamma off the scalar line: points
    xi*one + m/f'(xi) over simple roots only, with m = c - gamma*one.

Infinite families are returned as orbit labels (membership predicate
plus sampler), never materialized.  Over a finite working field the
search runs in the field and its quadratic extension, and the result is
flagged complete_over_working_field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import (ComplexField, Elem, Field, RationalField, SplitOctError,
                     UnsupportedBackend, check_same_field, poly_eval,
                     poly_trim, quadratic_lift, roots_with_multiplicity)
from .g2 import OrbitLabel, classify, o2_label, o3_label
from .octonion import Octonion, one as oct_one, zero as oct_zero


class UnivariatePolynomial:
    """Ascending-coefficient polynomial with field scalars."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = poly_trim(field, list(coeffs))

    @staticmethod
    def from_string(field: Field, text: str) -> "UnivariatePolynomial":
        parts = [p for p in text.strip().split(",")]
        if not parts or parts == [""]:
            raise ValueError("empty polynomial literal")
        return UnivariatePolynomial(field, [field.parse(p) for p in parts])

    @staticmethod
    def monomial(field: Field, n: int) -> "UnivariatePolynomial":
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return UnivariatePolynomial(field, [field.zero] * n + [field.one])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Elem:
        return self.coeffs[0] if self.coeffs else self.field.zero

    def eval_scalar(self, x: Elem) -> Elem:
        return poly_eval(self.field, self.coeffs, x)

    def evaluate(self, x: Octonion) -> Octonion:
        """f(x) as the sum of coeff_i * x^i; x^0 enters as one."""
        check_same_field(self.field, x.field)
        f = self.field
        acc = oct_zero(f)
        power = oct_one(f)
        for i, coef in enumerate(self.coeffs):
            if not f.is_zero(coef):
                acc = acc + power.scale(coef)
            if i < len(self.coeffs) - 1:
                power = x * power
        return acc

    def derivative(self) -> "UnivariatePolynomial":
        f = self.field
        return UnivariatePolynomial(
            f, [f.mul(f.from_int(i), c)
                for i, c in enumerate(self.coeffs)][1:])

    def minus_constant(self, gamma: Elem) -> "UnivariatePolynomial":
        """The polynomial f - gamma."""
        f = self.field
        if not self.coeffs:
            return UnivariatePolynomial(f, [f.neg(gamma)])
        coeffs = list(self.coeffs)
        coeffs[0] = f.sub(coeffs[0], gamma)
        return UnivariatePolynomial(f, coeffs)

    def map_coeffs(self, target: Field, fn) -> "UnivariatePolynomial":
        return UnivariatePolynomial(target, [fn(c) for c in self.coeffs])

    def fmt(self) -> str:
        f = self.field
        if not self.coeffs:
            return f.fmt(f.zero)
        return ",".join(f.fmt(c) for c in self.coeffs)

    def to_json(self):
        f = self.field
        return [f.to_json(c) for c in self.coeffs]

    @staticmethod
    def from_json(field: Field, v) -> "UnivariatePolynomial":
        if not isinstance(v, list):
            raise ValueError("polynomial JSON form is an ascending array")
        return UnivariatePolynomial(field, [field.from_json(c) for c in v])

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        if self.field != other.field or len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.field.eq(a, b)
                   for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"UnivariatePolynomial({self.field.name}; {self.fmt()})"


def lemma_eval(f: UnivariatePolynomial, alpha: Elem, beta: Elem) -> Octonion:
    """f(alpha*one + beta*u1) in closed form:
    f(alpha)*one + f'(alpha)*beta*u1."""
    fld = f.field
    value = f.eval_scalar(alpha)
    slope = fld.mul(f.derivative().eval_scalar(alpha), beta)
    coords = [value, slope] + [fld.zero] * 5 + [value]
    return Octonion(fld, coords)


# ---------------------------------------------------------------------------
# Solution sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolutionSet:
    """Everything the solver knows about { x : f(x) = c }."""

    field: Field
    points: tuple
    orbits: tuple
    cardinality: str          # "empty" | "finite(n)" | "infinite"
    completeness: str         # "complete" | "complete_over_working_field"
    warnings: tuple

    def to_json(self):
        return {
            "cardinality": self.cardinality,
            "completeness": self.completeness,
            "points": [p.to_json() for p in self.points],
            "orbits": [lab.to_json() for lab in self.orbits],
            "warnings": list(self.warnings),
        }

    def __repr__(self):
        return (f"SolutionSet({self.cardinality}, {len(self.points)} points, "
                f"{len(self.orbits)} orbit families)")


def _build_solution_set(field: Field, points, orbits, warnings) -> SolutionSet:
    points = sorted(points, key=lambda p: p.sort_key())
    orbits = sorted(orbits, key=lambda lab: lab.sort_key())
    if orbits:
        cardinality = "infinite"
    elif points:
        cardinality = f"finite({len(points)})"
    else:
        cardinality = "empty"
    completeness = ("complete" if isinstance(field, ComplexField)
                    else "complete_over_working_field")
    return SolutionSet(field, tuple(points), tuple(orbits), cardinality,
                       completeness, tuple(sorted(set(warnings))))


def _root_flags(field: Field, h: UnivariatePolynomial,
                deriv: UnivariatePolynomial, warnings: list):
    """Roots of h with a per-root is_multiple flag.

    Exact backends use the multiplicity alone.  The complex backend also
    treats a root as multiple when the derivative is below tolerance,
    and reports the disagreement cases.
    """
    rl = roots_with_multiplicity(field, h.coeffs)
    out = []
    if isinstance(field, ComplexField):
        scale = max([1.0] + [abs(c) for c in deriv.coeffs])
        for root, mult in rl:
            dv = deriv.eval_scalar(root)
            deriv_small = abs(dv) <= field.epsilon * scale
            multiple = mult >= 2 or deriv_small
            if mult == 1 and deriv_small:
                warnings.append(
                    "root %s reclassified as multiple: derivative %.3g "
                    "below tolerance" % (field.fmt(root), abs(dv)))
            elif mult >= 2 and not deriv_small:
                warnings.append(
                    "root %s has cluster multiplicity %d but derivative "
                    "%.3g above tolerance; treating as multiple"
                    % (field.fmt(root), mult, abs(dv)))
            out.append((root, multiple))
    else:
        for root, mult in rl:
            out.append((root, mult >= 2))
    return out


def _solve_scalar_case(g: UnivariatePolynomial, gamma: Elem, warnings: list):
    """c = gamma*one: scalar points plus O2/O3 families."""
    field = g.field
    h = g.minus_constant(gamma)
    deriv = g.derivative()
    flagged = _root_flags(field, h, deriv, warnings)
    points = [oct_one(field).scale(r) for r, _ in flagged]
    orbits = []
    roots = [r for r, _ in flagged]
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            orbits.append(o2_label(field, roots[i], roots[j]))
    for r, multiple in flagged:
        if multiple:
            orbits.append(o3_label(field, r))
    if field.is_finite:
        orbits.extend(_conjugate_pair_labels(field, h))
    return points, orbits


def _conjugate_pair_labels(field: Field, h: UnivariatePolynomial):
    """O2 families whose eigenvalues are conjugate over the working
    field: pairs {rho, rho^q} of extension roots outside the field."""
    lift = quadratic_lift(field)
    ext = lift.ext
    h_ext = h.map_coeffs(ext, lift.embed)
    labels = []
    for rho, _ in roots_with_multiplicity(ext, h_ext.coeffs):
        if lift.section(rho) is not None:
            continue
        rho_q = lift.frobenius(rho)
        if ext.lt(rho, rho_q):
            labels.append(o2_label(ext, rho, rho_q, lift))
    return labels


def _solve_distinct_case(g: UnivariatePolynomial, label: OrbitLabel,
                         d: Octonion, warnings: list):
    """c with eigenvalues gamma1 != gamma2: pull back through the
    idempotent b = (c - gamma2*one)/(gamma1 - gamma2)."""
    field = g.field
    g1, g2 = label.params
    if label.in_base_field:
        b = (d - oct_one(field).scale(g2)).scale(field.inv(field.sub(g1, g2)))
        comp = oct_one(field) - b
        roots1 = [r for r, _ in roots_with_multiplicity(
            field, g.minus_constant(g1).coeffs)]
        roots2 = [r for r, _ in roots_with_multiplicity(
            field, g.minus_constant(g2).coeffs)]
        points = [b.scale(x1) + comp.scale(x2)
                  for x1 in roots1 for x2 in roots2]
        return points, []
    # eigenvalues live in the quadratic extension as a conjugate pair;
    # rational points come from extension roots xi paired with xi^q
    lift = label.lift
    ext = lift.ext
    d_ext = Octonion(ext, tuple(lift.embed(co) for co in d.coords))
    b = (d_ext - oct_one(ext).scale(g2)).scale(ext.inv(ext.sub(g1, g2)))
    comp = oct_one(ext) - b
    h = g.map_coeffs(ext, lift.embed).minus_constant(g1)
    points = []
    for xi, _ in roots_with_multiplicity(ext, h.coeffs):
        x_ext = b.scale(xi) + comp.scale(lift.frobenius(xi))
        coords = [lift.section(co) for co in x_ext.coords]
        if any(co is None for co in coords):
            raise SplitOctError("conjugate-pair point escaped the working "
                                "field; this is a defect")
        points.append(Octonion(g.field, tuple(coords)))
    return points, []


def _solve_repeated_case(g: UnivariatePolynomial, label: OrbitLabel,
                         d: Octonion, warnings: list):
    """c = gamma*one + m with m nonzero square-zero: one point per
    simple root, xi*one + m/f'(xi)."""
    field = g.field
    gamma = label.params[0]
    m = d - oct_one(field).scale(gamma)
    deriv = g.derivative()
    flagged = _root_flags(field, g.minus_constant(gamma), deriv, warnings)
    points = []
    for root, multiple in flagged:
        if multiple:
            continue
        dv = deriv.eval_scalar(root)
        points.append(oct_one(field).scale(root) + m.scale(field.inv(dv)))
    return points, []


def solve(f: UnivariatePolynomial, c: Octonion) -> SolutionSet:
    """The full solution set of f(x) = c, with the constant term of f
    folded into the right-hand side."""
    check_same_field(f.field, c.field)
    field = f.field
    if isinstance(field, RationalField):
        raise UnsupportedBackend(
            "solving needs all scalar roots; use the complex or a finite "
            "backend instead of Q")
    if f.is_zero():
        raise ValueError("cannot solve with the zero polynomial")
    a0 = f.constant_term()
    g = f.minus_constant(a0)
    if g.degree < 1:
        raise ValueError("polynomial must have degree >= 1 after moving "
                         "the constant term to the right-hand side")
    d = c - oct_one(field).scale(a0)
    label = classify(d)
    warnings: list = []
    if label.kind == "Scalar":
        points, orbits = _solve_scalar_case(g, label.params[0], warnings)
    elif label.kind == "O2":
        points, orbits = _solve_distinct_case(g, label, d, warnings)
    else:
        points, orbits = _solve_repeated_case(g, label, d, warnings)
    for p in points:
        if g.evaluate(p) != d:
            raise SplitOctError(
                f"solver produced a non-solution {p!r}; this is a defect")
    return _build_solution_set(field, points, orbits, warnings)


def count_solutions(f: UnivariatePolynomial, c: Octonion) -> str:
    """Cardinality of the solution set over the complex backend, with
    the count bounds checked: at most n points for a repeated
    eigenvalue, between 1 and n^2 for distinct eigenvalues, infinite
    exactly when c collapses to a scalar."""
    if not isinstance(f.field, ComplexField):
        raise UnsupportedBackend("count bounds presuppose an algebraically "
                                 "closed field; use the complex backend")
    a0 = f.constant_term()
    n = f.minus_constant(a0).degree
    if n <= 1:
        raise ValueError("count bounds need degree > 1")
    sol = solve(f, c)
    d = c - oct_one(f.field).scale(a0)
    label = classify(d)
    npts = len(sol.points)
    if label.kind == "Scalar":
        if sol.cardinality != "infinite":
            raise SplitOctError("scalar right-hand side must give an "
                                "infinite solution set; this is a defect")
    elif label.kind == "O2":
        if sol.cardinality == "infinite" or not 1 <= npts <= n * n:
            raise SplitOctError(
                f"distinct-eigenvalue count {npts} violates 1 <= |X| <= n^2")
    else:
        if sol.cardinality == "infinite" or npts > n:
            raise SplitOctError(
                f"repeated-eigenvalue count {npts} violates |X| <= {n}")
    return sol.cardinality


def nth_root(c: Octonion, n: int) -> SolutionSet:
    """All solutions of x^n = c."""
    if n <= 1:
        raise ValueError("nth_root needs n > 1")
    return solve(UnivariatePolynomial.monomial(c.field, n), c)
