"""Polynomial matrices and exact determinants."""

from __future__ import annotations

from .errors import KernelError
from .poly import Polynomial

DET_SIZE_BUDGET = 8


def _subsets(size, limit):
    """Bitmasks of all `size`-element subsets of range(limit), ascending."""
    if size == 0:
        yield 0
        return
    for top in range(size - 1, limit):
        for rest in _subsets(size - 1, top):
            yield rest | (1 << top)


class PolyMatrix:
    """Row-major grid of polynomials sharing one RingContext."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries):
        if rows < 1 or cols < 1:
            raise KernelError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise KernelError("entry count must equal rows*cols")
        for f in entries:
            ring.check_same(f.ring)
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    def __getitem__(self, rc):
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise KernelError(f"index {rc} out of range")
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def submatrix(self, row_idx, col_idx):
        ents = [self[r, c] for r in row_idx for c in col_idx]
        return PolyMatrix(self.ring, len(row_idx), len(col_idx), ents)

    def transpose(self):
        ents = [self[r, c] for c in range(self.cols) for r in range(self.rows)]
        return PolyMatrix(self.ring, self.cols, self.rows, ents)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(f) for f in self.row(r)) for r in range(self.rows)
        )
        return f"PolyMatrix({self.rows}x{self.cols}: {body})"


def poly_det(M):
    """Determinant by expansion along rows with minors memoized on column sets.

    Exact over F_p; the size cap keeps the 2^n subset table at desk scale.
    """
    if M.rows != M.cols:
        raise KernelError("determinant of a non-square matrix")
    n = M.rows
    if n > DET_SIZE_BUDGET:
        raise KernelError(f"determinant size {n} exceeds the budget {DET_SIZE_BUDGET}")
    ring = M.ring
    # table[S] = det of the submatrix on rows 0..k-1 and column bitmask S, |S| = k
    table = {0: Polynomial.one(ring)}
    for k in range(1, n + 1):
        new = {}
        for S in _subsets(k, n):
            acc = Polynomial.zero(ring)
            sign = 1 if (k - 1) % 2 == 0 else -1  # expansion along the last row
            for c in range(n):
                if S & (1 << c):
                    term = M[k - 1, c] * table[S & ~(1 << c)]
                    acc = acc + term if sign > 0 else acc - term
                    sign = -sign
            new[S] = acc
        table = new
    return table[(1 << n) - 1]
