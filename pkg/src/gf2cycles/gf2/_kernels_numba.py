"""numba-compiled twins of the kernels in ``_kernels_numpy``."""

from __future__ import annotations

import numpy as np
from numba import njit

ONE = np.uint64(1)


@njit(cache=True)
def rref(a, t, ncols):
    nrows = a.shape[0]
    nwords = a.shape[1]
    twords = t.shape[1]
    pivots = np.empty(min(nrows, ncols), dtype=np.int64)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        w = col >> 6
        bit = ONE << np.uint64(col & 63)
        piv = -1
        for r in range(rank, nrows):
            if a[r, w] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(nwords):
                tmp = a[rank, k]
                a[rank, k] = a[piv, k]
                a[piv, k] = tmp
            for k in range(twords):
                tmp = t[rank, k]
                t[rank, k] = t[piv, k]
                t[piv, k] = tmp
        for r in range(nrows):
            if r != rank and (a[r, w] & bit):
                # pivot row is zero left of word w
                for k in range(w, nwords):
                    a[r, k] ^= a[rank, k]
                for k in range(twords):
                    t[r, k] ^= t[rank, k]
        pivots[rank] = col
        rank += 1
    return pivots[:rank].copy()


@njit(cache=True)
def reduce_vector(a, t, pivots, v):
    v = v.copy()
    combo = np.zeros(t.shape[1], dtype=np.uint64)
    for i in range(pivots.shape[0]):
        col = pivots[i]
        if (v[col >> 6] >> np.uint64(col & 63)) & ONE:
            for k in range(v.shape[0]):
                v[k] ^= a[i, k]
            for k in range(combo.shape[0]):
                combo[k] ^= t[i, k]
    return v, combo


@njit(cache=True)
def count_zero_sums(cols):
    n, w = cols.shape
    acc = np.zeros(w, dtype=np.uint64)
    count = 1  # the empty subset
    total = np.int64(1) << np.int64(n)
    for step in range(1, total):
        # Gray code: flip the lowest set bit of the step counter
        i = 0
        s = step
        while (s & 1) == 0:
            s >>= 1
            i += 1
        zero = True
        for k in range(w):
            acc[k] ^= cols[i, k]
            if acc[k] != 0:
                zero = False
        if zero:
            count += 1
    return count
