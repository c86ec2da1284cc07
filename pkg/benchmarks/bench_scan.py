#!/usr/bin/env python3
"""Benchmark the exhaustive-scan kernel: compiled vs pure-python engine.

The scan walks all q^8 octonion coordinate tuples over F_q and keeps the
ones solving f(x) = c.  Both engines implement the same table-driven
evaluation; this script times them on identical workloads and reports
throughput and speedup.

Usage:
    python3 benchmarks/bench_scan.py                # F:3 and F:5, jobs=1
    python3 benchmarks/bench_scan.py --fields F:7 --jobs 4
"""

import argparse
import time

from splitoct import _kernel
from splitoct.fields import field_from_string
from splitoct.octonion import basis
from splitoct.oracle import enumerate_solutions
from splitoct.polyeq import UnivariatePolynomial


def workload(spec: str):
    """x^2 = e1: solvable in every characteristic (e1 is idempotent), so
    the scan always returns a non-empty solution set."""
    f = field_from_string(spec)
    poly = UnivariatePolynomial.monomial(f, 2)
    return poly, basis(f).e1


def run(spec: str, engine: str, jobs: int, repeats: int):
    poly, rhs = workload(spec)
    q = poly.field.size
    best = None
    found = scanned = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        report = enumerate_solutions(poly, rhs, engine=engine, jobs=jobs)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
        found, scanned = len(report.found), report.scanned
    assert scanned == q ** 8
    return best, found, scanned


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", nargs="+", default=["F:3", "F:5"],
                    help="field specs to scan (default: F:3 F:5)")
    ap.add_argument("--jobs", type=int, default=1,
                    help="parallel chunks per scan (default 1)")
    ap.add_argument("--repeats", type=int, default=3,
                    help="timing repeats, best-of (default 3)")
    args = ap.parse_args()

    engines = ["python"]
    try:
        _kernel.get_engine("cython")
        engines.append("cython")
    except RuntimeError:
        print("note: compiled kernel not available in this build; "
              "timing the python engine only")

    print(f"{'field':>8} {'engine':>8} {'tuples':>12} {'found':>7} "
          f"{'seconds':>9} {'tuples/s':>12} {'speedup':>8}")
    for spec in args.fields:
        base = None
        for engine in engines:
            secs, found, scanned = run(spec, engine, args.jobs, args.repeats)
            if engine == "python":
                base = secs
            speedup = f"{base / secs:7.1f}x" if base else "       -"
            print(f"{spec:>8} {engine:>8} {scanned:>12} {found:>7} "
                  f"{secs:>9.3f} {scanned / secs:>12.0f} {speedup}")


if __name__ == "__main__":
    main()
