"""
Filename: symplectic.py
Author: William Bowley
Version: 2.0
Date: 2026-10-06

Description:
    The standard symplectic space Q^{2g} in block form
    J(g) = [[0, I], [-I, 0]] with basis v_1..v_g, w_1..w_g,
    the symplectic matrix type and its generators.

    NOTE:
        J(g) here is the form <x, y> = x^T J y. The group element
        usually called J (the quarter turn [[0, -1], [1, 0]] for
        g = 1) is -J(g) and is returned by quarter_turn(g).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from sigcocycles.core.matrix import Mat, block
from sigcocycles.domain.errors import (
    InvalidInputError,
    NotSymplecticError
)


@lru_cache(maxsize=None)
def form_matrix(g: int) -> Mat:
    """The block form J(g) = [[0, I_g], [-I_g, 0]]."""
    if g < 1:
        msg = f"Genus must be at least 1, got {g}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    ident = Mat.identity(g)
    zero = Mat.zeros(g, g)
    return block([[zero, ident], [-ident, zero]])


def pairing(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """<x, y> = x^T J(g) y for vectors of length 2g."""
    g = len(x) // 2
    return sum(
        (x[i] * y[g + i] - x[g + i] * y[i] for i in range(g)),
        Fraction(0),
    )


def is_symplectic(mat: Mat, g: int) -> bool:
    """
    True iff mat^T J(g) mat = J(g).

    Raises:
        InvalidInputError: if mat is not 2g x 2g
    """
    if mat.shape != (2 * g, 2 * g):
        msg = f"Expected a {2 * g}x{2 * g} matrix, got {mat.shape}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    form = form_matrix(g)
    return mat.T @ form @ mat == form


@dataclass(frozen=True)
class SpMat:
    """
    Element of Sp(2g, Q). Construction validates the symplectic
    relation; products and inverses of valid elements skip it.
    """
    genus: int
    mat: Mat

    def __post_init__(self) -> None:
        if not is_symplectic(self.mat, self.genus):
            msg = f"Matrix {self.mat} is not symplectic for g={self.genus}"
            logging.error(msg)
            raise NotSymplecticError(f"{__name__}: {msg}")

    @classmethod
    def _unchecked(cls, genus: int, mat: Mat) -> SpMat:
        obj = object.__new__(cls)
        object.__setattr__(obj, "genus", genus)
        object.__setattr__(obj, "mat", mat)
        return obj

    @classmethod
    def from_mat(cls, mat: Mat) -> SpMat:
        """Infers the genus from a square matrix of even size."""
        if not mat.is_square or mat.nrows % 2 or mat.nrows == 0:
            msg = f"Symplectic matrices are 2g x 2g, got {mat.shape}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return cls(mat.nrows // 2, mat)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int | str | Fraction]]
    ) -> SpMat:
        return cls.from_mat(Mat(rows))

    @classmethod
    def identity(cls, g: int) -> SpMat:
        return cls._unchecked(g, Mat.identity(2 * g))

    def __matmul__(self, other: SpMat) -> SpMat:
        if not isinstance(other, SpMat):
            return NotImplemented
        _require_same_genus(self, other)
        return SpMat._unchecked(self.genus, self.mat @ other.mat)

    def __neg__(self) -> SpMat:
        return SpMat._unchecked(self.genus, -self.mat)

    def inverse(self) -> SpMat:
        return symplectic_inverse(self)

    def power(self, exponent: int) -> SpMat:
        base = self if exponent >= 0 else self.inverse()
        result = SpMat.identity(self.genus)
        for _ in range(abs(exponent)):
            result = result @ base
        return result

    def conjugate(self, by: SpMat) -> SpMat:
        """by * self * by^-1"""
        return by @ self @ by.inverse()

    def is_identity(self) -> bool:
        return self.mat == Mat.identity(2 * self.genus)

    def is_integral(self) -> bool:
        return self.mat.is_integral()

    def __repr__(self) -> str:
        return f"SpMat(g={self.genus}, {self.mat!r})"


def _require_same_genus(a: SpMat, b: SpMat) -> None:
    if a.genus != b.genus:
        msg = f"Genus mismatch: {a.genus} vs {b.genus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")


def quarter_turn(g: int = 1) -> SpMat:
    """The element [[0, -I], [I, 0]], a rotation by a quarter turn."""
    return SpMat._unchecked(g, -form_matrix(g))


def standard_s() -> SpMat:
    """S = [[0, -1], [1, 0]] in Sp(2, Z)."""
    return quarter_turn(1)


def standard_t() -> SpMat:
    """T = [[1, 1], [0, 1]] in Sp(2, Z)."""
    return SpMat._unchecked(1, Mat([[1, 1], [0, 1]]))


def rotation(quarter_turns: int) -> SpMat:
    """Rotation of the plane by a multiple of a quarter turn."""
    return quarter_turn(1).power(quarter_turns % 4)


def levi(a: Mat) -> SpMat:
    """
    [[A, 0], [0, A^-T]] for an invertible g x g matrix A.

    Raises:
        InvalidInputError: A not square
    """
    if not a.is_square:
        msg = f"Levi block must be square, got {a.shape}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    zero = Mat.zeros(a.nrows, a.nrows)
    return SpMat(a.nrows, block([[a, zero], [zero, a.inverse().T]]))


def upper_unipotent(b: Mat) -> SpMat:
    """[[I, B], [0, I]] for a symmetric g x g matrix B."""
    ident = Mat.identity(b.nrows)
    zero = Mat.zeros(b.nrows, b.nrows)
    return SpMat(b.nrows, block([[ident, b], [zero, ident]]))


def lower_unipotent(c: Mat) -> SpMat:
    """[[I, 0], [C, I]] for a symmetric g x g matrix C."""
    ident = Mat.identity(c.nrows)
    zero = Mat.zeros(c.nrows, c.nrows)
    return SpMat(c.nrows, block([[ident, zero], [c, ident]]))


def symplectic_inverse(sp: SpMat) -> SpMat:
    """M^-1 = -J M^T J, valid because M^T J M = J."""
    form = form_matrix(sp.genus)
    return SpMat._unchecked(sp.genus, -(form @ sp.mat.T @ form))


def transvection(vector: Sequence[int | Fraction], c: int | Fraction) -> SpMat:
    """
    The symplectic transvection x -> x + c <x, v> v.

    As a matrix this is I - c v v^T J(g).

    Raises:
        InvalidInputError: odd length or zero vector
    """
    if len(vector) % 2 or not vector:
        msg = f"Transvection vector must have even length, got {len(vector)}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    v = [Fraction(x) for x in vector]
    if all(x == 0 for x in v):
        msg = "Transvection along the zero vector"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    g = len(v) // 2
    c = Fraction(c)
    # Row vector v^T J(g) = (-v_w, v_v).
    vj = [-v[g + i] for i in range(g)] + [v[i] for i in range(g)]
    n = 2 * g
    rows = [
        [
            (Fraction(1) if i == j else Fraction(0)) - c * v[i] * vj[j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return SpMat._unchecked(g, Mat(rows))


def commutator(a: SpMat, b: SpMat) -> SpMat:
    """[a, b] = a b a^-1 b^-1"""
    _require_same_genus(a, b)
    return a @ b @ a.inverse() @ b.inverse()


def embed_stabilize(sp: SpMat, target_genus: int) -> SpMat:
    """
    Extends M = [[A, B], [C, D]] to [[A+I, B+0], [C+0, D+I]]
    so that M acts on the first g hyperbolic pairs and fixes
    the new ones.

    Raises:
        InvalidInputError: if target_genus < genus
    """
    g = sp.genus
    if target_genus < g:
        msg = f"Cannot stabilize genus {g} down to {target_genus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    if target_genus == g:
        return sp

    extra = target_genus - g
    m = sp.mat
    quadrants = [
        [m.submatrix(rows, cols) for cols in (range(g), range(g, 2 * g))]
        for rows in (range(g), range(g, 2 * g))
    ]
    eye, zero_ge, zero_eg = (
        Mat.identity(extra), Mat.zeros(g, extra), Mat.zeros(extra, g)
    )
    zero_ee = Mat.zeros(extra, extra)

    def pad(quadrant: Mat, corner: Mat) -> Mat:
        return block([[quadrant, zero_ge], [zero_eg, corner]])

    (a, b), (c, d) = quadrants
    mat = block([
        [pad(a, eye), pad(b, zero_ee)],
        [pad(c, zero_ee), pad(d, eye)],
    ])
    return SpMat._unchecked(target_genus, mat)


def interleave_permutation(g: int) -> Mat:
    """
    Permutation P with P * (v_1..v_g, w_1..w_g) = (v_1, w_1, ..., v_g, w_g).
    P J(g) P^T is the interleaved form, a direct sum of [[0, 1], [-1, 0]].
    """
    rows = []
    for k in range(2 * g):
        pair, which = divmod(k, 2)
        source = pair if which == 0 else g + pair
        unit = [0] * (2 * g)
        unit[source] = 1
        rows.append(unit)
    return Mat(rows, 2 * g)


def to_interleaved(mat: Mat) -> Mat:
    g = mat.nrows // 2
    perm = interleave_permutation(g)
    return perm @ mat @ perm.T


def from_interleaved(mat: Mat) -> Mat:
    g = mat.nrows // 2
    perm = interleave_permutation(g)
    return perm.T @ mat @ perm


def apply(sp: SpMat, basis: Mat) -> Mat:
    """Image of the columns of basis under sp."""
    return sp.mat @ basis
