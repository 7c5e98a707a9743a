"""Pure-numpy GF(2) kernels on uint64 word-packed rows.

Column ``c`` of a packed row lives in word ``c >> 6`` at bit ``c & 63``.
Every function here has a twin with the same signature in
``_kernels_numba``.
"""

from __future__ import annotations

import numpy as np

ONE = np.uint64(1)


def rref(a: np.ndarray, t: np.ndarray, ncols: int) -> np.ndarray:
    """Gauss-Jordan reduce ``a`` in place, applying the same row ops to ``t``.

    Returns the pivot columns; row ``i`` of the reduced ``a`` has its pivot
    at ``pivots[i]`` and rows past ``len(pivots)`` are zero.
    """
    nrows = a.shape[0]
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        w = col >> 6
        bit = ONE << np.uint64(col & 63)
        hits = np.flatnonzero(a[rank:, w] & bit)
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
            t[[rank, piv]] = t[[piv, rank]]
        mask = (a[:, w] & bit) != 0
        mask[rank] = False
        if mask.any():
            a[mask, w:] ^= a[rank, w:]
            t[mask] ^= t[rank]
        pivots.append(col)
        rank += 1
    return np.asarray(pivots, dtype=np.int64)


def reduce_vector(a: np.ndarray, t: np.ndarray, pivots: np.ndarray,
                  v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce ``v`` by the reduced rows; return (residual, combination)."""
    v = v.copy()
    combo = np.zeros(t.shape[1], dtype=np.uint64)
    for i in range(pivots.shape[0]):
        col = int(pivots[i])
        if (v[col >> 6] >> np.uint64(col & 63)) & ONE:
            v ^= a[i]
            combo ^= t[i]
    return v, combo


def count_zero_sums(cols: np.ndarray) -> int:
    """Count subsets of the rows of ``cols`` whose XOR is zero (brute force).

    Builds all ``2**n`` partial sums by doubling, so ``n`` must stay small.
    """
    n, w = cols.shape
    sums = np.zeros((1, w), dtype=np.uint64)
    for i in range(n):
        sums = np.concatenate([sums, sums ^ cols[i]])
    return int(np.count_nonzero(~sums.any(axis=1)))
