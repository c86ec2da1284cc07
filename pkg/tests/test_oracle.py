"""Brute-force ground truth: the naive multiplication routines, the
encoded scalar tables, exhaustive enumeration, solver comparison, and
identity fuzzing.  These paths deliberately share no code with the main
library's arithmetic so that agreement is evidence, not tautology.
"""

import random

import numpy as np
import pytest

from conftest import random_oct

from splitoct import _kernel
from splitoct.fields import (FieldTooLarge, UnsupportedBackend,
                             field_from_string)
from splitoct.g2 import o2_label, o3_label
from splitoct.octonion import Octonion, basis, one, zero
from splitoct.oracle import (CompareVerdict, compare, enumerate_solutions,
                             fuzz_identities, naive_conj, naive_eval,
                             naive_mul, naive_norm, naive_power, naive_qform,
                             naive_trace, scalar_tables, tuples_eq)
from splitoct.polyeq import SolutionSet, UnivariatePolynomial, solve

# ---------------------------------------------------------------------------
# Naive routines vs the main library (the dual-route check)
# ---------------------------------------------------------------------------


def test_naive_mul_matches_main_on_basis(any_field):
    f = any_field
    units = list(basis(f).units())
    for a in units:
        for b in units:
            want = (a * b).coords
            got = naive_mul(f, a.coords, b.coords)
            assert tuples_eq(f, got, want), (a.fmt(), b.fmt())


def test_naive_routines_match_main_random(any_field, rng):
    f = any_field
    for _ in range(300):
        a, b = random_oct(f, rng), random_oct(f, rng)
        assert tuples_eq(f, naive_mul(f, a.coords, b.coords), (a * b).coords)
        assert tuples_eq(f, naive_conj(f, a.coords), a.conj().coords)
        assert f.eq(naive_trace(f, a.coords), a.trace())
        assert f.eq(naive_norm(f, a.coords), a.norm())
        assert f.eq(naive_qform(f, a.coords, b.coords), a.qform(b))


def test_naive_power_and_eval(any_field, rng):
    f = any_field
    for _ in range(20):
        a = random_oct(f, rng)
        for n in range(6):
            assert tuples_eq(f, naive_power(f, a.coords, n),
                             a.power(n).coords)
        coeffs = [f.rand(rng) for _ in range(4)]
        p = UnivariatePolynomial(f, coeffs)
        assert tuples_eq(f, naive_eval(f, coeffs, a.coords),
                         p.evaluate(a).coords)


def test_tuples_eq(any_field):
    f = any_field
    a = tuple(f.from_int(i) for i in range(8))
    assert tuples_eq(f, a, a)
    b = a[:7] + (f.add(a[7], f.one),)
    assert not tuples_eq(f, a, b)


# ---------------------------------------------------------------------------
# Scalar tables (independent digit arithmetic)
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("spec", ["F:2", "F:3", "F:5", "F:2^2", "F:2^3", "F:3^2"])
def test_scalar_tables_match_field_backend(spec):
    f = field_from_string(spec)
    q = f.size
    add_t, sub_t, mul_t = scalar_tables(f)
    assert len(add_t) == q * q
    for i in range(q):
        for j in range(q):
            a, b = f.decode(i), f.decode(j)
            assert add_t[i * q + j] == f.encode(f.add(a, b))
            assert sub_t[i * q + j] == f.encode(f.sub(a, b))
            assert mul_t[i * q + j] == f.encode(f.mul(a, b))


def test_scalar_tables_reject_infinite_fields():
    with pytest.raises(UnsupportedBackend):
        scalar_tables(field_from_string("C"))


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def test_enumerate_identity_poly():
    f = field_from_string("F:2")
    u1 = basis(f).u1
    rep = enumerate_solutions(UnivariatePolynomial.monomial(f, 1), u1)
    assert rep.scanned == 2 ** 8
    assert len(rep.found) == 1
    assert rep.found[0] == u1


def test_enumerate_square_zero_count_f2():
    # x^2 = 0 over F_2: x = 0 plus every nonzero square-zero octonion.
    # Square-zero means trace = norm = 0: a quadric pair of conditions
    # leaving 2^6 elements, so 64 solutions in total.
    f = field_from_string("F:2")
    rep = enumerate_solutions(UnivariatePolynomial.monomial(f, 2), zero(f))
    assert len(rep.found) == 64
    for x in rep.found:
        assert (x * x).is_zero()
        assert f.is_zero(x.trace()) and f.is_zero(x.norm())


def test_enumerate_matches_naive_filter_f3_linear():
    # independent recount: filter all 3^8 tuples with naive_eval directly
    f = field_from_string("F:3")
    p = UnivariatePolynomial(f, [1, 2])  # 2x + 1
    c = Octonion(f, (2, 1, 0, 0, 0, 2, 0, 1))
    rep = enumerate_solutions(p, c)
    brute = []
    for idx in range(3 ** 8):
        coords = []
        r = idx
        for _ in range(8):
            coords.append(r % 3)
            r //= 3
        coords = tuple(reversed(coords))
        if tuples_eq(f, naive_eval(f, list(p.coeffs), coords), c.coords):
            brute.append(coords)
    assert sorted(x.coords for x in rep.found) == sorted(brute)
    assert len(rep.found) == 1  # 2x = c - 1 has the single solution (c-1)/2


def test_enumerate_engines_agree():
    f = field_from_string("F:3")
    p = UnivariatePolynomial(f, [0, 1, 1])  # x^2 + x
    c = one(f)
    base = enumerate_solutions(p, c, engine="python")
    assert base.engine == "python"
    auto = enumerate_solutions(p, c, engine="auto")
    assert [x.coords for x in auto.found] == [x.coords for x in base.found]
    if _kernel.ENGINE == "cython":
        cy = enumerate_solutions(p, c, engine="cython")
        assert cy.engine == "cython"
        assert [x.coords for x in cy.found] == [x.coords for x in base.found]


def test_enumerate_parallel_agrees():
    f = field_from_string("F:2")
    p = UnivariatePolynomial.monomial(f, 2)
    c = basis(f).e1 + basis(f).e2  # one
    seq = enumerate_solutions(p, c, jobs=1)
    par = enumerate_solutions(p, c, jobs=4)
    assert [x.coords for x in seq.found] == [x.coords for x in par.found]


def test_enumerate_respects_cap():
    f16 = field_from_string("F:2^4")
    with pytest.raises(FieldTooLarge):
        enumerate_solutions(UnivariatePolynomial.monomial(f16, 2), one(f16))
    with pytest.raises(UnsupportedBackend):
        c = field_from_string("C")
        enumerate_solutions(UnivariatePolynomial.monomial(c, 2), one(c))


def test_enumeration_report_json():
    f = field_from_string("F:2")
    rep = enumerate_solutions(UnivariatePolynomial.monomial(f, 1),
                              basis(f).v2)
    obj = rep.to_json()
    assert obj["count"] == 1 and obj["scanned"] == 256
    assert obj["engine"] in ("python", "cython")
    assert obj["found"] == [[0, 0, 0, 0, 0, 1, 0, 0]]


# ---------------------------------------------------------------------------
# Solver-vs-oracle comparison
# ---------------------------------------------------------------------------


def test_compare_match_and_negative_control():
    f = field_from_string("F:2")
    p = UnivariatePolynomial.monomial(f, 2)
    c = one(f)
    rep = enumerate_solutions(p, c)
    sol = solve(p, c)
    verdict = compare(rep, sol)
    assert verdict.match
    assert verdict.checked == len(rep.found)
    assert not verdict.unexplained and not verdict.unconfirmed

    # negative control 1: drop the orbit labels -> enumerated non-scalar
    # solutions become unexplained
    crippled = SolutionSet(f, sol.points, (), "finite(%d)" % len(sol.points),
                           sol.completeness, ())
    v1 = compare(rep, crippled)
    assert not v1.match and v1.unexplained

    # negative control 2: inject a non-solution point -> unconfirmed
    # (e1 squares to e1, not one)
    bogus = SolutionSet(f, sol.points + (basis(f).e1,), sol.orbits,
                        sol.cardinality, sol.completeness, ())
    v2 = compare(rep, bogus)
    assert not v2.match and v2.unconfirmed


def test_compare_full_f2_quadratic_sweep():
    # a slice of the full acceptance sweep, kept here as a fast regression
    f = field_from_string("F:2")
    p = UnivariatePolynomial(f, [0, 1, 1])  # x^2 + x
    for idx in range(16):  # the 16 rhs with only diagonal/u1/v1 support
        coords = [0] * 8
        coords[0], coords[1], coords[4], coords[7] = (
            idx & 1, (idx >> 1) & 1, (idx >> 2) & 1, (idx >> 3) & 1)
        c = Octonion(f, tuple(coords))
        verdict = compare(enumerate_solutions(p, c), solve(p, c))
        assert verdict.match, c.fmt()


# ---------------------------------------------------------------------------
# Identity fuzzing
# ---------------------------------------------------------------------------


def test_fuzz_identities_pass(any_field):
    rep = fuzz_identities(any_field, trials=250, seed=7)
    assert rep.passed and rep.trials == 250
    assert rep.failures == ()


def test_fuzz_zero_trials_vacuous(any_field):
    rep = fuzz_identities(any_field, trials=0, seed=7)
    assert rep.passed and rep.trials == 0


def test_fuzz_deterministic(any_field):
    a = fuzz_identities(any_field, trials=50, seed=3).to_json()
    b = fuzz_identities(any_field, trials=50, seed=3).to_json()
    assert a == b
