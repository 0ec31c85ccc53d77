"""Exact integer and rational linear algebra.

Big-integer matrices, fraction-free determinants, and Smith normal form
with explicit unimodular transforms. Everything in this module is exact:
entries are arbitrary-precision Python ints and no routine ever rounds.
Rational values reuse :class:`fractions.Fraction`, which already guarantees
lowest terms and a strictly positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import NonSquareError, SchemaError

#: Exact rational number type used throughout the package.
Rational = Fraction


class IntMatrix:
    """Immutable integer matrix stored row-major.

    Iterating yields row tuples. Instances are hashable and compare by
    value, so they can be used directly as golden-test expectations.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries):
        data = []
        for row in entries:
            tup = tuple(row)
            for x in tup:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise SchemaError(f"matrix entries must be integers, got {x!r}")
            data.append(tup)
        if not data or not data[0]:
            raise SchemaError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise SchemaError("matrix rows must all have the same length")
        self.rows = len(data)
        self.cols = width
        self._data = tuple(data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def submatrix(self, row_indices, col_indices) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for j in col_indices] for i in row_indices]
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def max_abs_entry(self) -> int:
        return max(abs(x) for r in self._data for x in r)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise SchemaError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = other.cols
        out = []
        for i in range(self.rows):
            ri = self._data[i]
            out.append(
                [
                    sum(ri[k] * other._data[k][j] for k in range(self.cols))
                    for j in range(cols)
                ]
            )
        return IntMatrix(out)

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"IntMatrix[{body}]"


@dataclass(frozen=True)
class SmithData:
    """Smith normal form S of a matrix together with the transforms.

    ``u @ original @ v == s`` holds exactly, ``u`` and ``v`` are unimodular,
    and the nonzero diagonal of ``s`` is the divisibility chain of invariant
    factors. ``lattice_index`` is the product of the invariant factors when
    the matrix has full column rank and ``None`` (infinite index) otherwise.
    """

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix
    rank: int
    lattice_index: int | None

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.s.diagonal() if d != 0)


def smith_normal_form(matrix: IntMatrix) -> SmithData:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Classical gcd-reduction. The pivot is always the smallest-magnitude
    nonzero entry of the active region, with ties broken by lowest
    (row, column) index, so the output is reproducible. After each pivot is
    isolated, a divisibility sweep folds any non-divisible entry of the
    remaining region back into the pivot row, which forces the invariant
    factor chain s_1 | s_2 | ... without a separate sorting pass.
    """
    n_rows, n_cols = matrix.rows, matrix.cols
    work = [list(r) for r in matrix]
    left = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    right = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]

    def add_row(dst: int, src: int, f: int) -> None:
        wd, ws = work[dst], work[src]
        for j in range(n_cols):
            wd[j] += f * ws[j]
        ld, ls = left[dst], left[src]
        for j in range(n_rows):
            ld[j] += f * ls[j]

    def add_col(dst: int, src: int, f: int) -> None:
        for i in range(n_rows):
            work[i][dst] += f * work[i][src]
        for i in range(n_cols):
            right[i][dst] += f * right[i][src]

    def swap_rows(a: int, b: int) -> None:
        work[a], work[b] = work[b], work[a]
        left[a], left[b] = left[b], left[a]

    def swap_cols(a: int, b: int) -> None:
        for i in range(n_rows):
            work[i][a], work[i][b] = work[i][b], work[i][a]
        for i in range(n_cols):
            right[i][a], right[i][b] = right[i][b], right[i][a]

    def negate_row(i: int) -> None:
        work[i] = [-x for x in work[i]]
        left[i] = [-x for x in left[i]]

    limit = min(n_rows, n_cols)
    for t in range(limit):
        while True:
            pivot = None
            for i in range(t, n_rows):
                for j in range(t, n_cols):
                    e = work[i][j]
                    if e and (
                        pivot is None or abs(e) < abs(work[pivot[0]][pivot[1]])
                    ):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = work[t][t]

            dirty = False
            for i in range(t + 1, n_rows):
                if work[i][t]:
                    q = work[i][t] // p
                    if q:
                        add_row(i, t, -q)
                    if work[i][t]:
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, n_cols):
                if work[t][j]:
                    q = work[t][j] // p
                    if q:
                        add_col(j, t, -q)
                    if work[t][j]:
                        dirty = True
            if dirty:
                continue

            bad_row = None
            for i in range(t + 1, n_rows):
                if any(work[i][j] % p for j in range(t + 1, n_cols)):
                    bad_row = i
                    break
            if bad_row is None:
                break
            add_row(t, bad_row, 1)
        if work[t][t] < 0:
            negate_row(t)

    diag = [work[i][i] for i in range(limit)]
    factors = [d for d in diag if d != 0]
    rank = len(factors)
    lattice = prod(factors) if rank == n_cols else None
    return SmithData(
        s=IntMatrix(work),
        u=IntMatrix(left),
        v=IntMatrix(right),
        rank=rank,
        lattice_index=lattice,
    )


def determinant(matrix: IntMatrix) -> int:
    """Exact signed determinant by Bareiss fraction-free elimination."""
    if not matrix.is_square:
        raise NonSquareError(
            f"determinant requires a square matrix, got {matrix.rows}x{matrix.cols}"
        )
    n = matrix.rows
    a = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_abs(matrix: IntMatrix) -> int:
    """Absolute determinant; counts torus solutions of a full-rank block."""
    return abs(determinant(matrix))


def lattice_index(matrix: IntMatrix) -> int | None:
    """Index of the row span inside the ambient integer lattice.

    Equals ``det_abs`` for full-rank square matrices; ``None`` marks the
    infinite index of a rank-deficient matrix.
    """
    if not matrix.is_square:
        raise NonSquareError(
            f"lattice index requires a square matrix, got {matrix.rows}x{matrix.cols}"
        )
    d = det_abs(matrix)
    return d if d != 0 else None
