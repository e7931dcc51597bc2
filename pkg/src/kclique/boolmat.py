"""Boolean matrix products over bit-packed rows, with witness recovery.

A row is a Python int: bit j set means entry (i, j) is true.  The product
row i is the OR of Y's rows selected by X's row i, so every inner step is a
word-parallel OR over a whole row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .graph import SplitMix64, bits_list

WORD = 64


@dataclass
class BoolMatrix:
    rows: int
    cols: int
    bits: List[int]
    row_index: Optional[Sequence] = None
    col_index: Optional[Sequence] = None

    def __post_init__(self) -> None:
        if len(self.bits) != self.rows:
            raise ValueError("bit rows do not match the row count")
        limit = 1 << self.cols
        for r in self.bits:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BoolMatrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "BoolMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        bits = []
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            b = 0
            for j, v in enumerate(row):
                if v:
                    b |= 1 << j
            bits.append(b)
        return cls(rows, cols, bits)

    @classmethod
    def random(cls, rows: int, cols: int, density: float, rng: SplitMix64) -> "BoolMatrix":
        bits = []
        for _ in range(rows):
            b = 0
            for j in range(cols):
                if rng.random() < density:
                    b |= 1 << j
            bits.append(b)
        return cls(rows, cols, bits)

    def get(self, i: int, j: int) -> bool:
        return bool(self.bits[i] >> j & 1)

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.bits]

    def transpose(self) -> "BoolMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.bits):
            for j in bits_list(r):
                out[j] |= 1 << i
        return BoolMatrix(self.cols, self.rows, out, self.col_index, self.row_index)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BoolMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.bits == other.bits)


@dataclass
class WitnessProduct:
    exists: BoolMatrix
    witness: List[Dict[int, int]] = field(default_factory=list)

    def get(self, i: int, j: int) -> Optional[int]:
        return self.witness[i].get(j)


def _check(X: BoolMatrix, Y: BoolMatrix) -> None:
    if X.cols != Y.rows:
        raise ValueError(f"dimension mismatch: {X.rows}x{X.cols} times {Y.rows}x{Y.cols}")


def bool_multiply(X: BoolMatrix, Y: BoolMatrix) -> BoolMatrix:
    _check(X, Y)
    ybits = Y.bits
    out = []
    for r in X.bits:
        acc = 0
        while r:
            low = r & -r
            acc |= ybits[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BoolMatrix(X.rows, Y.cols, out, X.row_index, Y.col_index)


def witness_multiply(X: BoolMatrix, Y: BoolMatrix) -> WitnessProduct:
    """Product plus, for every true entry, its lowest connecting inner index."""
    _check(X, Y)
    ybits = Y.bits
    out = []
    wit: List[Dict[int, int]] = []
    for r in X.bits:
        acc = 0
        w: Dict[int, int] = {}
        while r:
            low = r & -r
            kk = low.bit_length() - 1
            r ^= low
            new = ybits[kk] & ~acc
            if new:
                acc |= new
                for j in bits_list(new):
                    w[j] = kk
        out.append(acc)
        wit.append(w)
    return WitnessProduct(BoolMatrix(X.rows, Y.cols, out, X.row_index, Y.col_index), wit)


def masked_witness_multiply(X: BoolMatrix, Y: BoolMatrix, masks: Sequence[int]) -> WitnessProduct:
    """witness_multiply restricted to entries (i, j) with bit j of masks[i] set.

    Entries outside the mask come back false, which saves the witness
    bookkeeping when only a sparse set of entries is needed.
    """
    _check(X, Y)
    if len(masks) != X.rows:
        raise ValueError("one mask per row of X is needed")
    ybits = Y.bits
    out = []
    wit: List[Dict[int, int]] = []
    for r, want in zip(X.bits, masks):
        acc = 0
        w: Dict[int, int] = {}
        while r and want & ~acc:
            low = r & -r
            kk = low.bit_length() - 1
            r ^= low
            new = ybits[kk] & want & ~acc
            if new:
                acc |= new
                for j in bits_list(new):
                    w[j] = kk
        out.append(acc)
        wit.append(w)
    return WitnessProduct(BoolMatrix(X.rows, Y.cols, out, X.row_index, Y.col_index), wit)


def count_multiply(X: BoolMatrix, Y: BoolMatrix) -> List[List[int]]:
    """Integer product: entry (i, j) counts connecting inner indices."""
    _check(X, Y)
    cols = Y.transpose().bits
    return [[(r & c).bit_count() for c in cols] for r in X.bits]


def naive_multiply(X: BoolMatrix, Y: BoolMatrix) -> BoolMatrix:
    """Reference triple loop."""
    _check(X, Y)
    a, b = X.to_lists(), Y.to_lists()
    out = [[int(any(a[i][t] and b[t][j] for t in range(X.cols))) for j in range(Y.cols)]
           for i in range(X.rows)]
    if not out:
        return BoolMatrix(X.rows, Y.cols, [])
    return BoolMatrix.from_lists(out) if Y.cols else BoolMatrix(X.rows, 0, [0] * X.rows)


def mm_cost(A: int, B: int, C: int, backend: str = "cubic", wordsize: int = WORD,
            omega: float = 2.807354922057604) -> float:
    """Estimated word operations for an A x B by B x C product.

    ``cubic`` is the bit-parallel default (A*B*C / wordsize).  ``recursive``
    splits into (mid/lo)(hi/lo) square products of side lo, each lo^omega.
    """
    if backend == "cubic":
        return A * B * C / wordsize
    if backend == "recursive":
        lo, mid, hi = sorted((A, B, C))
        if lo == 0:
            return 0.0
        return (mid / lo) * (hi / lo) * lo ** omega
    raise ValueError(f"unknown backend {backend!r}")
