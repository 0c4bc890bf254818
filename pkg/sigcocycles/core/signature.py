"""
Filename: signature.py
Author: William Bowley
Version: 2.0
Date: 2026-10-05

Description:
    Inertia of a symmetric rational matrix by exact symmetric
    congruence elimination (Sylvester's law of inertia).

    A nonzero diagonal entry is used as pivot and eliminated
    through its Schur complement. When the remaining diagonal
    is zero but some S_ij is not, row/column j is added to
    row/column i, which makes the new pivot 2 * S_ij.
"""

import logging

from sigcocycles.core.matrix import Mat
from sigcocycles.domain.definitions import Inertia
from sigcocycles.domain.errors import InvalidInputError


def signature_of_symmetric(sym: Mat) -> Inertia:
    """
    Inertia triple (n_plus, n_minus, n_zero) of a symmetric matrix.

    Args:
        sym: square matrix equal to its transpose

    Returns:
        Inertia with signature = n_plus - n_minus

    Raises:
        InvalidInputError: non-square or asymmetric input
    """
    if not sym.is_square:
        msg = f"Signature needs a square matrix, got shape {sym.shape}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    if not sym.is_symmetric():
        msg = "Signature needs a symmetric matrix"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    work = sym.tolist()
    active = list(range(sym.nrows))
    n_plus = n_minus = 0

    while active:
        pivot = next((i for i in active if work[i][i] != 0), None)

        if pivot is None:
            pair = next(
                (
                    (i, j) for i in active for j in active
                    if i != j and work[i][j] != 0
                ),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # Row then column addition keeps the matrix symmetric.
            for k in active:
                work[i][k] += work[j][k]
            for k in active:
                work[k][i] += work[k][j]
            pivot = i

        p = work[pivot][pivot]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1

        active.remove(pivot)
        column = [work[k][pivot] for k in active]
        for a, k in enumerate(active):
            if column[a] == 0:
                continue
            factor = column[a] / p
            row_k = work[k]
            row_p = work[pivot]
            for l in active:
                if row_p[l] != 0:
                    row_k[l] -= factor * row_p[l]

    n_zero = sym.nrows - n_plus - n_minus
    return Inertia(n_plus, n_minus, n_zero)


def signature(sym: Mat) -> int:
    """Shorthand for signature_of_symmetric(sym).signature."""
    return signature_of_symmetric(sym).signature


def nullity(sym: Mat) -> int:
    return signature_of_symmetric(sym).n_zero


def restrict_form(form: Mat, basis: Mat) -> Mat:
    """Gram matrix basis^T * form * basis."""
    return basis.T @ form @ basis


def congruent(sym: Mat, change: Mat) -> Mat:
    """P^T S P; used to check congruence invariance."""
    return change.T @ sym @ change
