#!/usr/bin/env python3
"""Benchmark the geometric product across kernel backends.

Builds deterministic random multivectors of increasing term counts and times
the same product through the numba kernel, the numpy kernel and the per-pair
Python path.  Run from the repository root:

    python benchmarks/bench_products.py
    python benchmarks/bench_products.py --sizes 16,64,256 --repeats 7
"""

import argparse
import time

from cliffcalc import Signature, geometric_product
from cliffcalc import kernels
from cliffcalc.rand import RandomSpec, random_multivector

SIG = Signature(6, 4)


def build(num_terms: int, seed: int):
    return random_multivector(
        RandomSpec(
            dimension=10,
            max_grade=5,
            num_terms=num_terms,
            include_fewer=True,
            seed=seed,
        )
    )


def time_backend(backend: str, a, b, repeats: int) -> float:
    previous = kernels.set_backend(backend)
    try:
        geometric_product(a, b, SIG)  # warmup: JIT compile, caches
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            geometric_product(a, b, SIG)
            best = min(best, time.perf_counter() - start)
        return best
    finally:
        kernels.set_backend(previous)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,32,128,512", help="comma-separated term counts")
    parser.add_argument("--repeats", type=int, default=9, help="timed repetitions per cell")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = ["python", "numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if not kernels.HAVE_NUMBA:
        print("numba not importable; benchmarking numpy and python only")

    header = f"{'terms':>7} {'pairs':>9}" + "".join(f"{b:>14}" for b in backends)
    print(header)
    print("-" * len(header))
    for size in sizes:
        a = build(size, seed=2 * size)
        b = build(size, seed=2 * size + 1)
        pairs = a.num_terms() * b.num_terms()
        row = f"{a.num_terms():>7} {pairs:>9}"
        timings = {}
        for backend in backends:
            timings[backend] = time_backend(backend, a, b, args.repeats)
            row += f"{timings[backend] * 1e6:>12.1f}us"
        if "numba" in timings:
            row += f"   numba {timings['python'] / timings['numba']:.1f}x vs python"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
