"""Exact linear algebra over the two-element field on bit-packed rows."""

from .bits import BitMatrix, BitVector
from .linalg import (
    RowSpace,
    count_zero_sums,
    extend_basis,
    in_span,
    kernel_basis,
    nullity,
    rank,
    solve_in_span,
)

__all__ = [
    "BitMatrix",
    "BitVector",
    "RowSpace",
    "count_zero_sums",
    "extend_basis",
    "in_span",
    "kernel_basis",
    "nullity",
    "rank",
    "solve_in_span",
]
