"""Command-line front end.

Every verb takes --field (C, Q, F:p, F:p^k, or F:p^k:c0,...,1), reads
octonions as 8 comma-separated field literals in the fixed coordinate
order and polynomials as ascending coefficient lists, and prints one
JSON document with sorted keys, so identical invocations produce
identical bytes.  Exit codes: 0 success, 1 mathematical failure (or an
oracle mismatch / fuzz failure), 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fields import (DEFAULT_EPSILON, FieldSpec, SplitOctError, make_field)
from .g2 import (OrbitLabel, classify, eigenvalues, o2_label, o3_label,
                 sample_orbit, scalar_label)
from .octonion import Octonion, one as oct_one, parse_octonion
from .oracle import DEFAULT_Q_CAP, compare, enumerate_solutions, fuzz_identities
from .polyeq import UnivariatePolynomial, count_solutions, nth_root, solve

SCHEMA = 1


def _common(sp: argparse.ArgumentParser):
    sp.add_argument("--field", required=True,
                    help="coefficient field: C, Q, F:p, F:p^k, F:p^k:c0,...,1")
    sp.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                    help="complex-backend comparison tolerance")
    sp.add_argument("--closure-degree", type=int, default=None,
                    dest="closure_degree",
                    help="work in F:p^k instead of a prime field F:p")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for any randomized part of the verb")
    sp.add_argument("--output", choices=["json", "pretty"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitoct",
        description="split-octonion arithmetic and polynomial equation "
                    "solving over pluggable coefficient fields")
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("mul", help="multiply two octonions")
    _common(sp)
    sp.add_argument("--a", required=True, help="octonion literal")
    sp.add_argument("--b", required=True, help="octonion literal")

    sp = sub.add_parser("eval", help="evaluate a polynomial at an octonion")
    _common(sp)
    sp.add_argument("--poly", required=True, help="ascending coefficients")
    sp.add_argument("--x", required=True, help="octonion literal")

    sp = sub.add_parser("solve", help="solve f(x) = c completely")
    _common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--count-bounds", action="store_true",
                    dest="count_bounds",
                    help="also check the solution-count bounds (complex only)")

    sp = sub.add_parser("nth-root", help="solve x^n = c")
    _common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rhs", required=True)

    sp = sub.add_parser("classify", help="orbit label of an octonion")
    _common(sp)
    sp.add_argument("--x", required=True)

    sp = sub.add_parser("eigen", help="eigenvalue pair of an octonion")
    _common(sp)
    sp.add_argument("--x", required=True)

    sp = sub.add_parser("sample", help="sample random members of an orbit")
    _common(sp)
    sp.add_argument("--kind", required=True, choices=["Scalar", "O2", "O3"])
    sp.add_argument("--params", required=True,
                    help="comma-separated label parameters")
    sp.add_argument("--count", type=int, default=5)

    sp = sub.add_parser("verify", help="check one candidate solution")
    _common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--candidate", required=True)

    sp = sub.add_parser("oracle",
                        help="exhaustive enumeration compared against solve")
    _common(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_Q_CAP,
                    help="largest allowed field size q")
    sp.add_argument("--engine", choices=["auto", "python", "cython"],
                    default="auto")
    sp.add_argument("--jobs", type=int, default=1,
                    help="parallel scan partitions")

    sp = sub.add_parser("fuzz", help="fuzz the algebra identities with the "
                                     "independent naive multiplication")
    _common(sp)
    sp.add_argument("--trials", type=int, default=1000)

    return parser


def _resolve_field(args):
    spec = FieldSpec.parse(args.field, epsilon=args.epsilon)
    if args.closure_degree is not None:
        if spec.kind != "prime":
            raise ValueError("--closure-degree only applies to prime fields")
        if args.closure_degree < 2:
            raise ValueError("--closure-degree must be at least 2")
        spec = FieldSpec("extension", p=spec.p, k=args.closure_degree)
    return make_field(spec)


def _label_from_args(field, kind: str, params_text: str) -> OrbitLabel:
    params = [field.parse(p) for p in params_text.split(",")]
    if kind == "Scalar":
        if len(params) != 1:
            raise ValueError("Scalar labels take one parameter")
        return scalar_label(field, params[0])
    if kind == "O2":
        if len(params) != 2:
            raise ValueError("O2 labels take two parameters")
        return o2_label(field, params[0], params[1])
    if len(params) != 1:
        raise ValueError("O3 labels take one parameter")
    return o3_label(field, params[0])


def _run(args) -> tuple[int, dict]:
    field = _resolve_field(args)
    verb = args.verb
    payload: dict = {"field": field.name}
    if verb == "mul":
        a = parse_octonion(field, args.a)
        b = parse_octonion(field, args.b)
        payload["result"] = (a * b).to_json()
        return 0, payload
    if verb == "eval":
        f = UnivariatePolynomial.from_string(field, args.poly)
        x = parse_octonion(field, args.x)
        payload["result"] = f.evaluate(x).to_json()
        return 0, payload
    if verb == "solve":
        f = UnivariatePolynomial.from_string(field, args.poly)
        c = parse_octonion(field, args.rhs)
        sol = solve(f, c)
        payload["solution"] = sol.to_json()
        if args.count_bounds:
            payload["count_bounds_checked"] = count_solutions(f, c)
        return 0, payload
    if verb == "nth-root":
        c = parse_octonion(field, args.rhs)
        payload["n"] = args.n
        payload["solution"] = nth_root(c, args.n).to_json()
        return 0, payload
    if verb == "classify":
        x = parse_octonion(field, args.x)
        payload["label"] = classify(x).to_json()
        return 0, payload
    if verb == "eigen":
        x = parse_octonion(field, args.x)
        pair = eigenvalues(x)
        payload["eigenvalues"] = {
            "lambda1": pair.field.to_json(pair.lam1),
            "lambda2": pair.field.to_json(pair.lam2),
            "in_working_field": pair.in_base_field,
            "values_field": pair.field.name,
        }
        return 0, payload
    if verb == "sample":
        label = _label_from_args(field, args.kind, args.params)
        if label.kind == "Scalar":
            # a scalar orbit is the single point itself
            samples = [oct_one(field).scale(label.params[0])]
        else:
            samples = sample_orbit(label, args.count, args.seed)
        payload["label"] = label.to_json()
        payload["samples"] = [x.to_json() for x in samples]
        return 0, payload
    if verb == "verify":
        f = UnivariatePolynomial.from_string(field, args.poly)
        c = parse_octonion(field, args.rhs)
        x = parse_octonion(field, args.candidate)
        payload["solves"] = bool(f.evaluate(x) == c)
        return 0, payload
    if verb == "oracle":
        f = UnivariatePolynomial.from_string(field, args.poly)
        c = parse_octonion(field, args.rhs)
        sol = solve(f, c)
        report = enumerate_solutions(f, c, cap=args.cap, engine=args.engine,
                                     jobs=args.jobs)
        verdict = compare(report, sol)
        payload["report"] = report.to_json()
        payload["solution"] = sol.to_json()
        payload["compare"] = verdict.to_json()
        return (0 if verdict.match else 1), payload
    if verb == "fuzz":
        report = fuzz_identities(field, args.trials, args.seed)
        payload["fuzz"] = report.to_json()
        return (0 if report.passed else 1), payload
    raise ValueError(f"unknown verb {verb!r}")


def _emit(payload: dict, pretty: bool):
    doc = {"schema": SCHEMA, **payload}
    if pretty:
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = _run(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (SplitOctError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _emit(payload, args.output == "pretty")
    return code


if __name__ == "__main__":
    sys.exit(main())
