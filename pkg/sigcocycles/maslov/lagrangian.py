"""
Filename: lagrangian.py
Author: William Bowley
Version: 2.0
Date: 2026-10-07

Description:
    Lagrangian subspaces of the standard symplectic space
    and of its double (V + V, J - J), held as canonical basis
    matrices so that equal subspaces compare equal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from sigcocycles.core.matrix import (
    Mat,
    canonical_column_basis,
    direct_sum,
    vstack
)
from sigcocycles.core.symplectic import SpMat, form_matrix
from sigcocycles.domain.errors import (
    InvalidInputError,
    NotLagrangianError
)


@lru_cache(maxsize=None)
def doubled_form(g: int) -> Mat:
    """J(g) + (-J(g)) on Q^{4g}."""
    form = form_matrix(g)
    return direct_sum(form, -form)


def _validate(basis: Mat, form: Mat, dimension: int, label: str) -> Mat:
    if basis.shape != (form.nrows, dimension):
        msg = (
            f"{label} basis must be {form.nrows}x{dimension}, "
            f"got {basis.shape}"
        )
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    if basis.rank() != dimension:
        msg = f"{label} basis has rank {basis.rank()}, expected {dimension}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    if not (basis.T @ form @ basis).is_zero():
        msg = f"{label} basis spans a non-isotropic subspace"
        logging.error(msg)
        raise NotLagrangianError(f"{__name__}: {msg}")

    return canonical_column_basis(basis)


@dataclass(frozen=True)
class Lagrangian:
    """
    Rank-g isotropic subspace of (Q^{2g}, J(g)); basis is 2g x g
    and canonical, so equality is equality of subspaces.
    """
    genus: int
    basis: Mat

    @property
    def form(self) -> Mat:
        return form_matrix(self.genus)

    @property
    def ambient(self) -> tuple[str, int]:
        return "single", self.genus

    def image(self, sp: SpMat) -> Lagrangian:
        """The lagrangian sp(L)."""
        if sp.genus != self.genus:
            msg = f"Genus mismatch: {sp.genus} acting on genus {self.genus}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        basis = canonical_column_basis(sp.mat @ self.basis)
        return Lagrangian(self.genus, basis)


@dataclass(frozen=True)
class DoubledLagrangian:
    """
    Rank-2g subspace of Q^{4g} isotropic for J(g) + (-J(g)).
    """
    genus: int
    basis: Mat

    @property
    def form(self) -> Mat:
        return doubled_form(self.genus)

    @property
    def ambient(self) -> tuple[str, int]:
        return "doubled", self.genus

    def image(self, sp: SpMat) -> DoubledLagrangian:
        """The image under sp + sp."""
        doubled = direct_sum(sp.mat, sp.mat)
        return DoubledLagrangian(
            self.genus, canonical_column_basis(doubled @ self.basis)
        )


def lagrangian_from_basis(cols: Mat, g: int) -> Lagrangian:
    """
    Validates a 2g x g basis and stores its canonical form.

    Raises:
        InvalidInputError: wrong shape or rank deficiency
        NotLagrangianError: the span is not isotropic
    """
    return Lagrangian(g, _validate(cols, form_matrix(g), g, "Lagrangian"))


def doubled_from_basis(cols: Mat, g: int) -> DoubledLagrangian:
    return DoubledLagrangian(
        g, _validate(cols, doubled_form(g), 2 * g, "Doubled lagrangian")
    )


def line(p: int | str | Fraction, q: int | str | Fraction) -> Lagrangian:
    """The g = 1 lagrangian spanned by (p, q)."""
    return lagrangian_from_basis(Mat([[p], [q]]), 1)


def default_lagrangian(g: int) -> Lagrangian:
    """span{v_1, ..., v_g}"""
    rows = [[1 if i == j else 0 for j in range(g)] for i in range(g)]
    rows += [[0] * g for _ in range(g)]
    return Lagrangian(g, Mat(rows, g))


def graph_lagrangian(sp: SpMat) -> DoubledLagrangian:
    """
    grph(M) = {(x, Mx)}, columns (e_k, M e_k).
    Isotropic because <x, y> - <Mx, My> = 0.
    """
    basis = vstack(Mat.identity(2 * sp.genus), sp.mat)
    return DoubledLagrangian(sp.genus, canonical_column_basis(basis))


def diagonal_lagrangian(g: int) -> DoubledLagrangian:
    return graph_lagrangian(SpMat.identity(g))


def stabilize_lagrangian(lag: Lagrangian, target_genus: int) -> Lagrangian:
    """
    L -> L + span{v_{g+1}, ..., v_target} inside Q^{2 target}.

    Raises:
        InvalidInputError: if target_genus < genus
    """
    g = lag.genus
    if target_genus < g:
        msg = f"Cannot stabilize genus {g} down to {target_genus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    if target_genus == g:
        return lag

    n = 2 * target_genus
    columns = []
    for column in lag.basis.columns():
        vector = [Fraction(0)] * n
        for i in range(g):
            vector[i] = column[i]
            vector[target_genus + i] = column[g + i]
        columns.append(vector)
    for i in range(g, target_genus):
        vector = [Fraction(0)] * n
        vector[i] = Fraction(1)
        columns.append(vector)

    basis = Mat.from_columns(columns, n)
    return Lagrangian(target_genus, canonical_column_basis(basis))


def lagrangian_from_columns(
    columns: Sequence[Sequence[int | str | Fraction]],
    g: int
) -> Lagrangian:
    return lagrangian_from_basis(Mat.from_columns(columns, 2 * g), g)
