"""Benchmark the mod-p elimination kernels: numba loops vs pure numpy.

Usage: python benchmarks/bench_kernels.py [--trials N]

Times rank and determinant over F_p (p = 2**31 - 1) on random dense
matrices at the sizes the oracle actually sees (small) and a few larger
ones, for both implementations.  The numba path is compiled on first call;
a warmup run keeps compilation out of the timings.
"""

import argparse
import time

import numpy as np

from quivercone import kernels

P = 2_147_483_647
RANK_SIZES = [(8, 8), (16, 24), (48, 48), (128, 128), (256, 256)]
DET_SIZES = [8, 16, 48, 128, 256]


def bench(fn, matrices, trials):
    best = float("inf")
    for _ in range(trials):
        t0 = time.perf_counter()
        for a in matrices:
            fn(a.copy(), np.int64(P))
        best = min(best, time.perf_counter() - t0)
    return best / len(matrices)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=5)
    args = parser.parse_args()

    impls = {}
    for name in ("numba", "numpy"):
        try:
            impls[name] = kernels.load_implementation(name)
        except ImportError:
            print(f"{name}: unavailable, skipped")
    rng = np.random.default_rng(0)

    print(f"{'kernel':<10} {'size':>10} " + "".join(f"{n:>12}" for n in impls) + "   speedup")
    for m, n in RANK_SIZES:
        matrices = [
            rng.integers(0, P, size=(m, n)).astype(np.int64) for _ in range(8)
        ]
        times = {}
        for name, (rank_fn, _) in impls.items():
            rank_fn(matrices[0].copy(), np.int64(P))  # warmup / jit
            times[name] = bench(rank_fn, matrices, args.trials)
        cols = "".join(f"{times[name] * 1e6:>10.1f}us" for name in impls)
        ratio = times.get("numpy", 0) / times["numba"] if "numba" in times else float("nan")
        print(f"{'rank':<10} {f'{m}x{n}':>10} {cols}   {ratio:>6.1f}x")
    for n in DET_SIZES:
        matrices = [
            rng.integers(0, P, size=(n, n)).astype(np.int64) for _ in range(8)
        ]
        times = {}
        for name, (_, det_fn) in impls.items():
            det_fn(matrices[0].copy(), np.int64(P))
            times[name] = bench(det_fn, matrices, args.trials)
        cols = "".join(f"{times[name] * 1e6:>10.1f}us" for name in impls)
        ratio = times.get("numpy", 0) / times["numba"] if "numba" in times else float("nan")
        print(f"{'det':<10} {f'{n}x{n}':>10} {cols}   {ratio:>6.1f}x")

    # cross-check: both implementations must agree exactly
    a = rng.integers(0, P, size=(40, 40)).astype(np.int64)
    results = {
        name: (int(r(a.copy(), np.int64(P))), int(d(a.copy(), np.int64(P))))
        for name, (r, d) in impls.items()
    }
    assert len(set(results.values())) == 1, results
    print("agreement check: ok", results.popitem()[1])


if __name__ == "__main__":
    main()
