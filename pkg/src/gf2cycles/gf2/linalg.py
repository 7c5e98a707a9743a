"""Rank, span membership and null spaces over GF(2).

All heavy lifting goes through the kernels selected in ``gf2cycles._accel``.
"""

from __future__ import annotations

import numpy as np

from .. import _accel
from . import _kernels_numpy
from .bits import BitMatrix, BitVector, nwords

if _accel.USE_NUMBA:
    from . import _kernels_numba as kernels
else:
    kernels = _kernels_numpy


def _identity_words(n: int) -> np.ndarray:
    t = np.zeros((n, nwords(n)), dtype=np.uint64)
    idx = np.arange(n)
    t[idx, idx >> 6] = np.uint64(1) << (idx & 63).astype(np.uint64)
    return t


class RowSpace:
    """A row-reduced copy of a matrix, kept around for repeated queries.

    With ``track=True`` every reduced row remembers which original rows it
    combines, so :meth:`solve` can return coefficients over the input rows.
    """

    def __init__(self, m: BitMatrix, track: bool = True):
        self.ncols = m.ncols
        self.nrows = m.nrows
        self._a = np.array(m.words, dtype=np.uint64, copy=True)
        if track:
            self._t = _identity_words(m.nrows)
        else:
            self._t = np.zeros((m.nrows, 0), dtype=np.uint64)
        self.tracked = track
        self.pivots = kernels.rref(self._a, self._t, m.ncols)
        self.rank = int(self.pivots.shape[0])

    def reduced(self) -> BitMatrix:
        """The nonzero rows of the reduced row echelon form."""
        return BitMatrix(self.ncols, self._a[: self.rank])

    def _reduce(self, target: BitVector) -> tuple[np.ndarray, np.ndarray]:
        if target.dimension != self.ncols:
            raise ValueError(
                f"target dimension {target.dimension} != row dimension {self.ncols}")
        a = self._a[: self.rank]
        t = self._t[: self.rank]
        return kernels.reduce_vector(a, t, self.pivots, np.asarray(target.words))

    def residual(self, target: BitVector) -> BitVector:
        res, _ = self._reduce(target)
        return BitVector(self.ncols, res)

    def contains(self, target: BitVector) -> bool:
        res, _ = self._reduce(target)
        return not res.any()

    __contains__ = contains

    def solve(self, target: BitVector) -> BitVector | None:
        """Coefficients ``c`` over the original rows with ``sum c_i row_i == target``."""
        if not self.tracked:
            raise RuntimeError("RowSpace was built with track=False")
        res, combo = self._reduce(target)
        if res.any():
            return None
        return BitVector(self.nrows, combo)


def rank(m: BitMatrix) -> int:
    """Dimension of the row space of ``m``."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return RowSpace(m, track=False).rank


def solve_in_span(m: BitMatrix, target: BitVector) -> BitVector | None:
    """Coefficients expressing ``target`` as a sum of rows of ``m``, or None."""
    if target.dimension != m.ncols:
        raise ValueError(f"target dimension {target.dimension} != row dimension {m.ncols}")
    return RowSpace(m).solve(target)


def in_span(m: BitMatrix, target: BitVector) -> bool:
    if target.dimension != m.ncols:
        raise ValueError(f"target dimension {target.dimension} != row dimension {m.ncols}")
    return RowSpace(m, track=False).contains(target)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of ``{x : m x = 0}``; it has ``ncols - rank(m)`` rows.

    Free columns are taken in increasing order, and each basis vector has a
    single free coordinate set.
    """
    n = m.ncols
    if m.nrows == 0:
        return BitMatrix.identity(n)
    rs = RowSpace(m, track=False)
    pivots = rs.pivots.tolist()
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return BitMatrix(n)
    dense = np.zeros((len(free), n), dtype=np.uint8)
    dense[np.arange(len(free)), free] = 1
    if pivots:
        reduced = rs.reduced().to_dense()
        dense[:, pivots] = reduced[:, free].T
    return BitMatrix.from_dense(dense)


def nullity(m: BitMatrix) -> int:
    return m.ncols - rank(m)


def extend_basis(base: BitMatrix, candidates: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Pick candidates that extend the row space of ``base``, greedily in order.

    Returns the chosen rows and their candidate indices.
    """
    chosen: list[int] = []
    rows = list(base.rows)
    current = RowSpace(base, track=False) if base.nrows else None
    for i, v in enumerate(candidates.rows):
        if current is not None and current.contains(v):
            continue
        chosen.append(i)
        rows.append(v)
        current = RowSpace(BitMatrix.from_rows(rows, base.ncols), track=False)
    picked = BitMatrix.from_rows([candidates.row(i) for i in chosen], candidates.ncols)
    return picked, chosen


def count_zero_sums(vectors: BitMatrix) -> int:
    """Brute-force count of row subsets summing to zero (all ``2**nrows`` of them).

    Independent of elimination: this is the enumeration oracle for kernel
    sizes. Keep ``nrows`` at or below about 24.
    """
    if vectors.nrows > 30:
        raise ValueError("brute force over more than 2**30 subsets refused")
    if vectors.nrows == 0:
        return 1
    return int(kernels.count_zero_sums(np.array(vectors.words, dtype=np.uint64)))
