#!/usr/bin/env python3
"""Benchmark the bijection-search kernels: compiled extension vs pure Python.

The search for matrix-preserving bijections is the hot inner loop behind
``verify-corpus``, the extension counts and exceptional detection.  This
script times the full self-bijection search (no limit) on each corpus
matrix with both kernels and prints the speedup.

Usage: python benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

from trimat import intersection_matrix, standard
from trimat.catalog import CLOSED_SURFACES
from trimat.intersection import _compatibility
from trimat.kernels import AVAILABLE


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    if "compiled" not in AVAILABLE:
        print("compiled kernel not built; benchmarking pure Python only")
    header = f"{'matrix':14s} {'n':>3s} {'maps':>5s}"
    for backend in sorted(AVAILABLE):
        header += f" {backend + ' (ms)':>14s}"
    if len(AVAILABLE) > 1:
        header += f" {'speedup':>8s}"
    print(header)
    for name in CLOSED_SURFACES:
        M = intersection_matrix(standard(name))
        allowed = _compatibility(M, M)
        times = {}
        count = None
        for backend, kernel in sorted(AVAILABLE.items()):
            start = time.perf_counter()
            for _ in range(repeats):
                found = kernel.search_bijections(M.entries, M.entries, allowed, None)
            times[backend] = (time.perf_counter() - start) / repeats
            if count is None:
                count = len(found)
            elif count != len(found):
                print(f"  kernel disagreement on {name}!")
                return 1
        line = f"{name:14s} {M.n:3d} {count:5d}"
        for backend in sorted(times):
            line += f" {times[backend] * 1000:14.3f}"
        if len(times) > 1:
            line += f" {times['python'] / times['compiled']:7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
