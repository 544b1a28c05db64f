#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python
fallback on the three hot loops: exhaustive minimum distance, the
brute-force hull oracle, and the square-class purity scan.

Usage:
    python benchmarks/bench_backends.py [--heavy] [--repeat N]

Both backends are imported directly (the HULLFORGE_BACKEND selection is
bypassed), run on identical seeded workloads, and checked for agreement.
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from hullforge import FieldSpec, LinearCode, _purecore
from hullforge.purelcd import pure_family

try:
    from hullforge import _fastcore
except ImportError:
    _fastcore = None


def _kernel_args(code):
    spec = code.spec
    mul, add, neg, inv = spec.kernel_tables()
    gen = array("H", (v for row in code.G.rows_values() for v in row))
    return gen, code.k, code.n, spec.q, mul, add, neg, inv


def _scan_args(code):
    spec = code.spec
    rows = code.G.rows_values()
    terms = array("H", (spec.mul(rows[i][t], rows[j][t])
                        for t in range(code.n)
                        for i in range(code.k)
                        for j in range(code.k)))
    classes = array("H", spec.nonzero_square_values())
    return terms, classes


def _random_code(rng, spec, n, k):
    while True:
        rows = [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)]
        code = LinearCode(spec, rows)
        if code.k == k:
            return code


def build_workloads(heavy: bool):
    rng = random.Random(97)
    if heavy:
        dist_code = _random_code(rng, FieldSpec(5), 16, 8)    # 390625 msgs
        oracle_code = _random_code(rng, FieldSpec(7), 12, 6)  # 117649 msgs
        scan_code = pure_family(FieldSpec(11), 4, verify_budget=0)  # 5^8 classes
    else:
        dist_code = _random_code(rng, FieldSpec(5), 14, 7)    # 78125 msgs
        oracle_code = _random_code(rng, FieldSpec(5), 12, 6)  # 15625 msgs
        scan_code = pure_family(FieldSpec(11), 3, verify_budget=0)  # 5^6 classes

    workloads = []

    gen, k, n, q, mul, add, neg, _ = _kernel_args(dist_code)
    workloads.append((
        f"min_weight      [{n},{k}] GF({q}) ({q ** k - 1} codewords)",
        lambda b: b.min_weight(gen, k, n, q, mul, add, neg)))

    gen2, k2, n2, q2, mul2, add2, neg2, _ = _kernel_args(oracle_code)
    workloads.append((
        f"orthogonal_count [{n2},{k2}] GF({q2}) ({q2 ** k2} codewords)",
        lambda b: b.orthogonal_count(gen2, k2, n2, q2, mul2, add2, neg2)))

    gen3, k3, n3, q3, mul3, add3, neg3, inv3 = _kernel_args(scan_code)
    terms, classes = _scan_args(scan_code)
    total = len(classes) ** n3
    workloads.append((
        f"purity_scan     [{n3},{k3}] GF({q3}) ({total} classes, no early exit)",
        lambda b: b.first_singular_class(terms, n3, k3, q3, classes,
                                         mul3, add3, neg3, inv3, 0, total)))
    return workloads


def run(backend, fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true",
                        help="larger workloads (pure backend takes minutes)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    args = parser.parse_args()

    if _fastcore is None:
        print("compiled backend not built; timing the pure backend only\n")

    print(f"{'workload':<55} {'pure':>10} {'fast':>10} {'speedup':>9}")
    for name, fn in build_workloads(args.heavy):
        pure_result, pure_t = run(_purecore, fn, args.repeat)
        if _fastcore is not None:
            fast_result, fast_t = run(_fastcore, fn, args.repeat)
            assert fast_result == pure_result, \
                f"backend disagreement on {name}: {fast_result} != {pure_result}"
            print(f"{name:<55} {pure_t * 1e3:>8.1f}ms {fast_t * 1e3:>8.1f}ms "
                  f"{pure_t / fast_t:>8.1f}x")
        else:
            print(f"{name:<55} {pure_t * 1e3:>8.1f}ms {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
