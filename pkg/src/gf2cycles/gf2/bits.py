"""Word-packed GF(2) vectors and matrices."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

WORD = 64


def nwords(dimension: int) -> int:
    return (dimension + WORD - 1) // WORD


def pack_dense(dense: np.ndarray, ncols: int) -> np.ndarray:
    """Pack a 2-D 0/1 array into uint64 words, one packed row per row."""
    dense = np.asarray(dense, dtype=np.uint8).reshape(-1, ncols) & 1
    w = nwords(ncols)
    padded = np.zeros((dense.shape[0], w * WORD), dtype=np.uint8)
    padded[:, :ncols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_words(words: np.ndarray, ncols: int) -> np.ndarray:
    """Inverse of :func:`pack_dense`; returns a uint8 array of shape (rows, ncols)."""
    words = np.ascontiguousarray(np.atleast_2d(words).astype("<u8"))
    bits = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :ncols]


class BitVector:
    """An immutable vector over GF(2) of fixed dimension.

    Addition is symmetric difference of supports. Bits past ``dimension``
    are always zero, so equality and hashing compare the words directly.
    """

    __slots__ = ("dimension", "words", "_hash")

    def __init__(self, dimension: int, words: np.ndarray | None = None):
        if dimension < 0:
            raise ValueError("dimension must be non-negative")
        self.dimension = dimension
        if words is None:
            words = np.zeros(nwords(dimension), dtype=np.uint64)
        else:
            words = np.array(words, dtype=np.uint64).reshape(-1)
            if words.shape[0] != nwords(dimension):
                raise ValueError("word count does not match dimension")
            tail = dimension % WORD
            if tail and words[-1] >> np.uint64(tail):
                raise ValueError("bits set beyond dimension")
        words.setflags(write=False)
        self.words = words
        self._hash = None

    @classmethod
    def zeros(cls, dimension: int) -> BitVector:
        return cls(dimension)

    @classmethod
    def from_indices(cls, dimension: int, indices: Iterable[int]) -> BitVector:
        """Vector with bit ``i`` set an odd number of times for ``i`` in indices."""
        words = np.zeros(nwords(dimension), dtype=np.uint64)
        for i in indices:
            i = int(i)
            if not 0 <= i < dimension:
                raise IndexError(f"index {i} out of range for dimension {dimension}")
            words[i >> 6] ^= np.uint64(1) << np.uint64(i & 63)
        return cls(dimension, words)

    @classmethod
    def from_bits(cls, bits: Sequence[int] | str) -> BitVector:
        """Build from a 0/1 sequence or a string such as ``"101"`` (bit 0 first)."""
        if isinstance(bits, str):
            bits = [int(ch) for ch in bits if ch in "01"]
        dense = np.asarray(bits, dtype=np.uint8)
        return cls(len(dense), pack_dense(dense[None, :], len(dense))[0]
                   if len(dense) else None)

    @classmethod
    def unit(cls, dimension: int, i: int) -> BitVector:
        return cls.from_indices(dimension, [i])

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dimension:
            raise IndexError(i)
        return int((self.words[i >> 6] >> np.uint64(i & 63)) & np.uint64(1))

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.dimension and bool(self[i])

    def indices(self) -> list[int]:
        if self.dimension == 0:
            return []
        return np.flatnonzero(unpack_words(self.words, self.dimension)[0]).tolist()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def weight(self) -> int:
        return int(sum(int(w).bit_count() for w in self.words))

    def __len__(self) -> int:
        return self.weight()

    def __bool__(self) -> bool:
        return bool(self.words.any())

    def _check(self, other: BitVector) -> None:
        if not isinstance(other, BitVector):
            raise TypeError(f"expected BitVector, got {type(other).__name__}")
        if other.dimension != self.dimension:
            raise ValueError(f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.dimension, self.words ^ other.words)

    __xor__ = __add__
    __sub__ = __add__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.dimension, self.words & other.words)

    def dot(self, other: BitVector) -> int:
        return (self & other).weight() & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.dimension == other.dimension and bool(
            np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dimension, self.words.tobytes()))
        return self._hash

    def to_string(self) -> str:
        if self.dimension == 0:
            return ""
        return "".join(map(str, unpack_words(self.words, self.dimension)[0]))

    def __repr__(self) -> str:
        if self.dimension <= 64:
            return f"BitVector('{self.to_string()}')"
        return f"BitVector(dim={self.dimension}, support={self.indices()})"


class BitMatrix:
    """Rows of equal-dimension bit vectors, stored as a (rows, words) array."""

    __slots__ = ("ncols", "words")

    def __init__(self, ncols: int, words: np.ndarray | None = None):
        self.ncols = ncols
        if words is None:
            words = np.zeros((0, nwords(ncols)), dtype=np.uint64)
        words = np.array(words, dtype=np.uint64)
        if words.ndim != 2 or words.shape[1] != nwords(ncols):
            # reshape(-1, 0) is ambiguous, so zero-width input keeps its row count only when 2-D
            words = words.reshape(-1, nwords(ncols)) if ncols else np.zeros((0, 0), dtype=np.uint64)
        words.setflags(write=False)
        self.words = words

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector], ncols: int | None = None) -> BitMatrix:
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty row list")
            ncols = rows[0].dimension
        for r in rows:
            if r.dimension != ncols:
                raise ValueError(f"row dimension {r.dimension} != {ncols}")
        if not rows:
            return cls(ncols)
        return cls(ncols, np.stack([r.words for r in rows]))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]] | np.ndarray,
                   ncols: int | None = None) -> BitMatrix:
        arr = np.asarray(dense, dtype=np.uint8)
        if arr.size == 0:
            return cls(ncols if ncols is not None else (arr.shape[1] if arr.ndim == 2 else 0))
        arr = np.atleast_2d(arr)
        return cls(arr.shape[1], pack_dense(arr, arr.shape[1]))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        return cls.from_rows([BitVector.from_bits(r) for r in rows])

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_rows([BitVector.unit(n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(ncols, np.zeros((nrows, nwords(ncols)), dtype=np.uint64))

    @property
    def nrows(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __len__(self) -> int:
        return self.nrows

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.words[i].copy())

    def __getitem__(self, i: int) -> BitVector:
        return self.row(i)

    @property
    def rows(self) -> list[BitVector]:
        return [self.row(i) for i in range(self.nrows)]

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def to_dense(self) -> np.ndarray:
        if self.nrows == 0:
            return np.zeros((0, self.ncols), dtype=np.uint8)
        return unpack_words(self.words, self.ncols)

    def transpose(self) -> BitMatrix:
        dense = self.to_dense().T
        if dense.shape[1] == 0:
            return BitMatrix.zeros(self.ncols, 0)
        return BitMatrix(self.nrows, pack_dense(dense, self.nrows))

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def dot(self, x: BitVector) -> BitVector:
        """Matrix-vector product: bit ``i`` is the parity of row_i AND x."""
        if x.dimension != self.ncols:
            raise ValueError("dimension mismatch")
        masked = self.words & x.words
        parities = [sum(int(w).bit_count() for w in r) & 1 for r in masked]
        return BitVector.from_indices(self.nrows, [i for i, p in enumerate(parities) if p])

    def combine(self, coefficients: BitVector) -> BitVector:
        """Sum of the rows selected by ``coefficients``."""
        if coefficients.dimension != self.nrows:
            raise ValueError("coefficient dimension mismatch")
        sel = coefficients.indices()
        if not sel:
            return BitVector.zeros(self.ncols)
        return BitVector(self.ncols, np.bitwise_xor.reduce(self.words[sel], axis=0))

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.ncols, np.concatenate([self.words, other.words]))

    def select_columns(self, columns: Sequence[int]) -> BitMatrix:
        dense = self.to_dense()[:, list(columns)]
        return BitMatrix(len(columns), pack_dense(dense, len(columns)) if len(dense) else None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.ncols == other.ncols and np.array_equal(self.words, other.words)

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"
