"""
Filename: matrix.py
Author: William Bowley
Version: 2.0
Date: 2026-10-05

Description:
    Immutable exact-rational matrices and the row reduction
    routines built on them: rank, inverse, kernel and the
    canonical column-space basis used to compare subspaces.

    Canonical form of a column space: every column ends in a 1
    (its pivot), pivots sit in distinct rows, every other column
    vanishes in each pivot row, and columns are ordered by pivot
    row. For a kernel this is the familiar free-variable basis,
    e.g. ker [[1, 2], [2, 4]] is spanned by (-2, 1).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from sigcocycles.core.rational import to_rat
from sigcocycles.domain.errors import InvalidInputError


class Mat:
    """
    Dense rows x cols matrix over Q. Entries are stored row-major
    as a tuple of row tuples; zero-column matrices keep their row count.
    """
    __slots__ = ("_rows", "_nrows", "_ncols", "_hash")

    def __init__(
        self,
        rows: Iterable[Sequence[int | str | Fraction]],
        ncols: int | None = None
    ) -> None:
        data = tuple(tuple(to_rat(x) for x in row) for row in rows)
        widths = {len(row) for row in data}
        if len(widths) > 1:
            msg = f"Ragged matrix rows with widths {sorted(widths)}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

        if data:
            width = widths.pop()
            if ncols is not None and ncols != width and width != 0:
                msg = f"Declared {ncols} columns but rows have {width}"
                logging.error(msg)
                raise InvalidInputError(f"{__name__}: {msg}")
            width = ncols if ncols is not None else width
        else:
            width = ncols or 0

        self._rows = data
        self._nrows = len(data)
        self._ncols = width
        self._hash = None

    @classmethod
    def _wrap(cls, data: tuple[tuple[Fraction, ...], ...], ncols: int) -> Mat:
        """Builds without re-validating entries (internal fast path)."""
        obj = cls.__new__(cls)
        obj._rows = data
        obj._nrows = len(data)
        obj._ncols = ncols
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def identity(cls, n: int) -> Mat:
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(
            tuple(
                tuple(one if i == j else zero for j in range(n))
                for i in range(n)
            ),
            n,
        )

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Mat:
        zero = Fraction(0)
        return cls._wrap(
            tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows)),
            ncols,
        )

    @classmethod
    def from_flat(
        cls,
        nrows: int,
        ncols: int,
        entries: Sequence[int | str | Fraction]
    ) -> Mat:
        if len(entries) != nrows * ncols:
            msg = (
                f"Expected {nrows * ncols} entries for a {nrows}x{ncols} "
                f"matrix, got {len(entries)}"
            )
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return cls(
            [entries[i * ncols:(i + 1) * ncols] for i in range(nrows)],
            ncols,
        )

    @classmethod
    def from_columns(
        cls,
        columns: Sequence[Sequence[int | str | Fraction]],
        nrows: int
    ) -> Mat:
        """Stacks column vectors of length nrows side by side."""
        for column in columns:
            if len(column) != nrows:
                msg = f"Column of length {len(column)}, expected {nrows}"
                logging.error(msg)
                raise InvalidInputError(f"{__name__}: {msg}")
        return cls(
            [[column[i] for column in columns] for i in range(nrows)],
            len(columns),
        )

    @classmethod
    def diagonal(cls, values: Sequence[int | str | Fraction]) -> Mat:
        n = len(values)
        return cls([
            [values[i] if i == j else 0 for j in range(n)] for i in range(n)
        ], n)

    # Shape and access

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._rows for x in row)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self._ncols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    @property
    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        rows = self._rows
        return all(
            rows[i][j] == rows[j][i]
            for i in range(self._nrows)
            for j in range(i + 1, self._ncols)
        )

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self._rows for x in row)

    # Arithmetic

    @property
    def T(self) -> Mat:
        if self._nrows == 0:
            return Mat._wrap(tuple(() for _ in range(self._ncols)), 0)
        return Mat._wrap(tuple(zip(*self._rows)), self._nrows)

    def transpose(self) -> Mat:
        return self.T

    def __matmul__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        if self._ncols != other._nrows:
            msg = f"Cannot multiply {self.shape} by {other.shape}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

        columns = tuple(zip(*other._rows)) if other._nrows else ()
        if not columns:
            zero = Fraction(0)
            columns = tuple(
                tuple(zero for _ in range(other._nrows))
                for _ in range(other._ncols)
            )
        data = tuple(
            tuple(
                sum((a * b for a, b in zip(row, col)), Fraction(0))
                for col in columns
            )
            for row in self._rows
        )
        return Mat._wrap(data, other._ncols)

    def _check_same_shape(self, other: Mat) -> None:
        if self.shape != other.shape:
            msg = f"Shape mismatch {self.shape} vs {other.shape}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

    def __add__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat._wrap(
            tuple(
                tuple(a + b for a, b in zip(r, s))
                for r, s in zip(self._rows, other._rows)
            ),
            self._ncols,
        )

    def __sub__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat._wrap(
            tuple(
                tuple(a - b for a, b in zip(r, s))
                for r, s in zip(self._rows, other._rows)
            ),
            self._ncols,
        )

    def __neg__(self) -> Mat:
        return Mat._wrap(
            tuple(tuple(-a for a in row) for row in self._rows), self._ncols
        )

    def scale(self, factor: int | Fraction) -> Mat:
        factor = Fraction(factor)
        return Mat._wrap(
            tuple(tuple(factor * a for a in row) for row in self._rows),
            self._ncols,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self._rows
        )
        return f"Mat({self._nrows}x{self._ncols}: [{body}])"

    # Row reduction

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> Mat:
        return inverse(self)

    def select_columns(self, indices: Sequence[int]) -> Mat:
        return Mat._wrap(
            tuple(tuple(row[j] for j in indices) for row in self._rows),
            len(indices),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Mat:
        return Mat._wrap(
            tuple(tuple(self._rows[i][j] for j in cols) for i in rows),
            len(cols),
        )


def hstack(*mats: Mat) -> Mat:
    """Side-by-side concatenation; all blocks share a row count."""
    nrows = mats[0].nrows
    for mat in mats:
        if mat.nrows != nrows:
            msg = f"hstack row mismatch {[m.shape for m in mats]}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
    data = tuple(
        tuple(x for mat in mats for x in mat.row(i)) for i in range(nrows)
    )
    return Mat._wrap(data, sum(mat.ncols for mat in mats))


def vstack(*mats: Mat) -> Mat:
    ncols = mats[0].ncols
    for mat in mats:
        if mat.ncols != ncols:
            msg = f"vstack column mismatch {[m.shape for m in mats]}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
    data = tuple(row for mat in mats for row in mat._rows)
    return Mat._wrap(data, ncols)


def block(grid: Sequence[Sequence[Mat]]) -> Mat:
    """Assembles a block matrix from a grid of compatible blocks."""
    return vstack(*(hstack(*row) for row in grid))


def direct_sum(a: Mat, b: Mat) -> Mat:
    return block([
        [a, Mat.zeros(a.nrows, b.ncols)],
        [Mat.zeros(b.nrows, a.ncols), b],
    ])


def rref(mat: Mat) -> tuple[list[list[Fraction]], list[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    Returns:
        The reduced rows (zero rows kept at the bottom) and
        the pivot column of each nonzero row.
    """
    rows = mat.tolist()
    nrows, ncols = mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(mat: Mat) -> int:
    return mat.rank()


def kernel_basis(mat: Mat) -> Mat:
    """
    Right kernel of mat as the columns of a cols x k matrix,
    in the canonical column form described in the module docstring.
    """
    rows, pivots = rref(mat)
    ncols = mat.ncols
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]

    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vector[p] = -rows[i][f]
        basis.append(vector)

    logging.debug(
        "kernel of %dx%d matrix has dimension %d", mat.nrows, ncols, len(free)
    )
    return Mat.from_columns(basis, ncols)


def canonical_column_basis(mat: Mat) -> Mat:
    """
    Canonical basis of the column space of mat. Two matrices
    span the same subspace iff their canonical bases are equal.
    """
    n = mat.nrows
    reversed_vectors = Mat([list(reversed(col)) for col in mat.columns()], n)
    rows, pivots = rref(reversed_vectors)
    vectors = [list(reversed(rows[i])) for i in range(len(pivots))]
    vectors.reverse()
    return Mat.from_columns(vectors, n)


def same_span(a: Mat, b: Mat) -> bool:
    return canonical_column_basis(a) == canonical_column_basis(b)


def intersection_basis(a: Mat, b: Mat) -> Mat:
    """
    Canonical basis of colspace(a) intersected with colspace(b).
    """
    a = canonical_column_basis(a)
    b = canonical_column_basis(b)
    if a.ncols == 0 or b.ncols == 0:
        return Mat.from_columns([], a.nrows)
    coefficients = kernel_basis(hstack(a, -b))
    if coefficients.ncols == 0:
        return Mat.from_columns([], a.nrows)
    top = coefficients.submatrix(range(a.ncols), range(coefficients.ncols))
    return canonical_column_basis(a @ top)


def inverse(mat: Mat) -> Mat:
    """
    Gauss-Jordan inverse.

    Raises:
        InvalidInputError: if mat is not square or is singular.
    """
    if not mat.is_square:
        msg = f"Cannot invert non-square matrix of shape {mat.shape}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    n = mat.nrows
    augmented = hstack(mat, Mat.identity(n))
    rows, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        msg = "Matrix is singular"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return Mat([row[n:] for row in rows], n)


def determinant(mat: Mat) -> Fraction:
    """Determinant by fraction-exact elimination."""
    if not mat.is_square:
        msg = f"Determinant of non-square matrix {mat.shape}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    rows = mat.tolist()
    n = mat.nrows
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        lead = rows[c][c]
        det *= lead
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = rows[i][c] / lead
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[c])]
    return det
