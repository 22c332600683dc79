"""Exact sparse linear algebra over Q: rank, reduced echelon form, kernels.

Rows are sparse dicts column -> rational.  Elimination is exact rational
Gaussian elimination; the pivot within a column is the entry of smallest
absolute value (ties broken by row index), which keeps intermediate
numerators small on the integer matrices that dominate this package.
Results are deterministic functions of the matrix content.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .exact import QQ, format_rational

Row = dict  # dict[int, rational]


class RationalMatrix:
    """Sparse matrix with arbitrary-precision rational entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[Row] = [{} for _ in range(nrows)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        m = cls(nrows, ncols)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                m.set(i, j, v)
        return m

    def set(self, i: int, j: int, v) -> None:
        if not 0 <= i < self.nrows and 0 <= j < self.ncols:
            raise IndexError((i, j))
        v = QQ(v)
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def get(self, i: int, j: int):
        return self.rows[i].get(j, QQ(0))

    def to_lists(self) -> list[list]:
        return [[self.get(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def copy(self) -> "RationalMatrix":
        m = RationalMatrix(self.nrows, self.ncols)
        m.rows = [dict(r) for r in self.rows]
        return m

    def transpose(self) -> "RationalMatrix":
        m = RationalMatrix(self.ncols, self.nrows)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                m.rows[j][i] = v
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = RationalMatrix(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc: Row = {}
            for k, v in row.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, QQ(0)) + v * w
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def scale(self, c) -> "RationalMatrix":
        c = QQ(c)
        out = RationalMatrix(self.nrows, self.ncols)
        if c:
            out.rows = [{j: c * v for j, v in row.items()} for row in self.rows]
        return out

    def __str__(self) -> str:
        return "\n".join(
            "[" + " ".join(format_rational(self.get(i, j)).rjust(6) for j in range(self.ncols)) + "]"
            for i in range(self.nrows)
        )

    # -- elimination ----------------------------------------------------

    def rref(self) -> tuple[list[int], list[Row]]:
        """Reduced row-echelon form.

        Returns (pivot_columns, rows) where rows[r] is the sparse reduced
        row whose leading entry 1 sits in pivot_columns[r].
        """
        work = [dict(r) for r in self.rows if r]
        pivots: list[int] = []
        reduced: list[Row] = []
        for col in range(self.ncols):
            best = None
            for idx, row in enumerate(work):
                v = row.get(col)
                if v:
                    key = (abs(v), idx)
                    if best is None or key < best[0]:
                        best = (key, idx)
            if best is None:
                continue
            idx = best[1]
            piv = work.pop(idx)
            inv = QQ(1) / piv[col]
            piv = {j: inv * v for j, v in piv.items()}
            for prow in reduced:
                f = prow.get(col)
                if f:
                    _axpy(prow, -f, piv)
            nxt = []
            for row in work:
                f = row.get(col)
                if f:
                    _axpy(row, -f, piv)
                if row:
                    nxt.append(row)
            work = nxt
            pivots.append(col)
            reduced.append(piv)
        return pivots, reduced

    def rank(self) -> int:
        return len(self.rref()[0])

    def kernel_basis(self) -> list[list]:
        """Basis of the right kernel as dense column vectors, one per free
        column, deterministic for fixed input."""
        pivots, rows = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = [QQ(0)] * self.ncols
            vec[f] = QQ(1)
            for pcol, row in zip(pivots, rows):
                v = row.get(f)
                if v:
                    vec[pcol] = -v
            basis.append(vec)
        return basis


def _axpy(target: Row, c, source: Row) -> None:
    for j, v in source.items():
        cur = target.get(j)
        nv = c * v if cur is None else cur + c * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


def rank_and_kernel(m: RationalMatrix) -> tuple[int, list[list]]:
    """Exact rank over Q and a kernel basis with M v = 0 exactly."""
    pivots, _ = m.rref()
    return len(pivots), m.kernel_basis()


class RowSpan:
    """Incremental row space: feed sparse rows, track rank cheaply.

    Rows are reduced against the current pivots on insertion; the stored
    basis is kept in echelon (not fully reduced) form, which is enough for
    rank and membership queries at a fraction of the fill-in.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: Row) -> Row:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            _axpy(row, -row[lead], piv)
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; True if it enlarged the span."""
        red = self._reduce({j: QQ(v) for j, v in row.items() if v})
        if not red:
            return False
        lead = min(red)
        inv = QQ(1) / red[lead]
        self.pivots[lead] = {j: inv * v for j, v in red.items()}
        return True

    def contains(self, row: Row) -> bool:
        return not self._reduce({j: QQ(v) for j, v in row.items() if v})


def span_rank(rows: Iterable[Row]) -> int:
    span = RowSpan()
    for row in rows:
        span.add(row)
    return span.rank
