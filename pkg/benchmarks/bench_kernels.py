"""Time the numba and pure-numpy GF(2) kernels side by side.

Both kernel modules are imported directly, so the backend flag does not
matter here. Every timed call is also cross-checked for equal results.

    python3 benchmarks/bench_kernels.py [--runs N] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from gf2cycles.gf2 import _kernels_numpy
from gf2cycles.gf2.bits import nwords, pack_dense

try:
    from gf2cycles.gf2 import _kernels_numba
except ImportError:  # numba missing
    _kernels_numba = None


def random_words(rng, nrows, ncols):
    dense = rng.integers(0, 2, size=(nrows, ncols), dtype=np.uint8)
    return pack_dense(dense, ncols)


def _identity(n):
    t = np.zeros((n, nwords(n)), dtype=np.uint64)
    idx = np.arange(n)
    t[idx, idx >> 6] = np.uint64(1) << (idx & 63).astype(np.uint64)
    return t


def _time(fn, runs):
    fn()  # warmup (and jit compile)
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        samples.append((time.perf_counter_ns() - t0) / 1e6)
    s = np.asarray(samples)
    return {"mean_ms": float(s.mean()), "std_ms": float(s.std()),
            "min_ms": float(s.min()), "max_ms": float(s.max())}


def bench_rref(mod, words, ncols):
    def run():
        a = words.copy()
        return mod.rref(a, _identity(a.shape[0]), ncols)
    return run


def bench_reduce(mod, words, ncols, targets):
    a = words.copy()
    t = _identity(a.shape[0])
    pivots = mod.rref(a, t, ncols)

    def run():
        return [mod.reduce_vector(a, t, pivots, v) for v in targets]
    return run


def bench_zero_sums(mod, cols):
    return lambda: mod.count_zero_sums(cols)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 512],
                    help="square matrix sizes for rref and reduce")
    ap.add_argument("--subsets", type=int, nargs="+", default=[12, 16, 20],
                    help="row counts for the zero-sum enumeration")
    ap.add_argument("--json", dest="json_out", default=None)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    mods = {"numpy": _kernels_numpy}
    if _kernels_numba is not None:
        mods["numba"] = _kernels_numba

    results = {}
    for size in args.sizes:
        words = random_words(rng, size, size)
        targets = list(random_words(rng, 32, size))
        ref_rank = None
        for name, mod in mods.items():
            rank = len(mod.rref(words.copy(), _identity(size), size))
            if ref_rank is None:
                ref_rank = rank
            assert rank == ref_rank, f"{name} rank mismatch at n={size}"
            results[f"rref/{size}/{name}"] = _time(bench_rref(mod, words, size), args.runs)
            results[f"reduce/{size}/{name}"] = _time(
                bench_reduce(mod, words, size, targets), args.runs)

    for n in args.subsets:
        cols = random_words(rng, n, 8)
        counts = {name: mod.count_zero_sums(cols) for name, mod in mods.items()}
        assert len(set(counts.values())) == 1, counts
        for name, mod in mods.items():
            results[f"zero_sums/{n}/{name}"] = _time(bench_zero_sums(mod, cols), args.runs)

    for key, r in results.items():
        print(f"{key:24s} {r['mean_ms']:10.3f} ms  (min {r['min_ms']:.3f})")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
