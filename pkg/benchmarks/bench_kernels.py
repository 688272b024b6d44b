#!/usr/bin/env python3
"""Benchmark the oracle hot loops: compiled extension vs pure Python.

The three kernels dominate the runtime of the brute-force verification
suite; the closed-form genus layer is negligible by comparison.  Run as

    python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import statistics
import time

from skabelund._kernels import available_backends
from skabelund.catalog import enumerate_standard_exponents
from skabelund.curves import Family, make_params


def timed(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def workloads():
    suzuki4 = make_params(Family.SUZUKI, 4)  # m = 481
    ree2 = make_params(Family.REE, 2)  # m = 217
    suzuki_triples = enumerate_standard_exponents(suzuki4.m)[:64]
    ree_triples = enumerate_standard_exponents(ree2.m)[:64]

    def delta_counts(impl):
        for se in suzuki_triples:
            impl.sigma_cm_iota_counts(suzuki4.m, se.n1, se.n2, se.a, suzuki4.q_powers)
        for se in ree_triples:
            impl.sigma_cm_iota_counts(ree2.m, se.n1, se.n2, se.a, ree2.q_powers)

    def congruence(impl):
        for se in suzuki_triples[:16]:
            for d in range(4):
                rhs = (se.n1 * suzuki4.q_powers[d] - se.a) % suzuki4.m
                impl.congruence_count(suzuki4.m, se.n1, se.n2, rhs)

    def closure(impl):
        impl.cm_subgroups(48)
        impl.cm_subgroups(60)

    yield "delta element counts (128 subgroups, m=481/217)", delta_counts
    yield "congruence pair counts (64 loops, m=481)", congruence
    yield "subgroup closure (m=48 and m=60)", closure


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    header = f"{'workload':<52}" + "".join(f"{name:>12}" for name in backends)
    if "compiled" in backends and "pure" in backends:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, workload in workloads():
        row = f"{label:<52}"
        times = {}
        for name, impl in backends.items():
            times[name] = timed(lambda: workload(impl), args.repeats)
            row += f"{times[name] * 1000:>10.1f}ms"
        if "compiled" in times and "pure" in times:
            row += f"{times['pure'] / times['compiled']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
