"""
Filename: index.py
Author: William Bowley
Version: 2.0
Date: 2026-10-07

Description:
    Wall–Maslov index of a triple of lagrangians.

    Generic route: with j_1, j_2, j_3 the basis matrices and B the
    ambient form,
        D' = ker( j3^T B j1 | j3^T B j2 )  inside L1 + L2,
    and the index is the signature of [[0, j1^T B j2], [0, 0]]
    restricted to D' (read as x^T A x'). The restricted matrix
    must come out symmetric; anything else is a construction bug.

    Also here: the three-summand form with its radical, the
    transverse shortcut, and the closed form for lines (g = 1).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Union

from sigcocycles.core.matrix import (
    Mat,
    block,
    hstack,
    intersection_basis,
    inverse,
    kernel_basis
)
from sigcocycles.core.rational import sign, to_rat
from sigcocycles.core.signature import nullity, signature
from sigcocycles.domain.errors import ConstructionError, InvalidInputError
from sigcocycles.domain.library.manager import default_library
from sigcocycles.maslov.lagrangian import DoubledLagrangian, Lagrangian

AnyLagrangian = Union[Lagrangian, DoubledLagrangian]
Direction = tuple[Fraction, Fraction]


def _check_ambient(*lags: AnyLagrangian) -> None:
    ambients = {lag.ambient for lag in lags}
    if len(ambients) != 1:
        msg = f"Lagrangians live in different spaces: {sorted(ambients)}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")


def _pairing(form: Mat, left: Mat, right: Mat) -> Mat:
    return left.T @ form @ right


def _require_symmetric(gram: Mat, label: str) -> Mat:
    if not gram.is_symmetric():
        msg = f"{label} restricted form is not symmetric: {gram}"
        logging.error(msg)
        raise ConstructionError(f"{__name__}: {msg}")
    return gram


def wall_form(l1: AnyLagrangian, l2: AnyLagrangian, l3: AnyLagrangian) -> Mat:
    """Gram matrix of the Wall form on D' (generic route)."""
    _check_ambient(l1, l2, l3)
    form = l1.form
    j1, j2, j3 = l1.basis, l2.basis, l3.basis
    k = j1.ncols

    constraint = hstack(_pairing(form, j3, j1), _pairing(form, j3, j2))
    kernel = kernel_basis(constraint)

    zero = Mat.zeros(k, k)
    bilinear = block([[zero, _pairing(form, j1, j2)], [zero, zero]])
    gram = kernel.T @ bilinear @ kernel
    logging.debug("wall form on kernel of dimension %d", kernel.ncols)
    return _require_symmetric(gram, "Wall")


def wall_form_transverse(
    l1: AnyLagrangian,
    l2: AnyLagrangian,
    l3: AnyLagrangian
) -> Mat | None:
    """
    -(j1^T B j2)(j3^T B j2)^-1(j3^T B j1) on L1, available when
    j3^T B j2 is invertible (L2 and L3 transverse); None otherwise.
    """
    _check_ambient(l1, l2, l3)
    form = l1.form
    j1, j2, j3 = l1.basis, l2.basis, l3.basis
    cross = _pairing(form, j3, j2)
    if cross.rank() != cross.nrows:
        return None
    gram = -(_pairing(form, j1, j2) @ inverse(cross) @ _pairing(form, j3, j1))
    return _require_symmetric(gram, "Transverse Wall")


def wall_maslov(
    l1: AnyLagrangian,
    l2: AnyLagrangian,
    l3: AnyLagrangian,
    fast_path: bool = False
) -> int:
    """
    Wall–Maslov index tau(L1, L2, L3).

    Args:
        l1, l2, l3: lagrangians over the same ambient form
        fast_path: use the transverse shortcut when it applies;
            cross-checked against the generic route under __debug__

    Raises:
        InvalidInputError: ambient mismatch
        ConstructionError: restricted form not symmetric
    """
    if fast_path:
        transverse = wall_form_transverse(l1, l2, l3)
        if transverse is not None:
            value = signature(transverse)
            if __debug__:
                generic = signature(wall_form(l1, l2, l3))
                if generic != value:
                    msg = f"Transverse route gave {value}, generic {generic}"
                    logging.error(msg)
                    raise ConstructionError(f"{__name__}: {msg}")
            return value

    return signature(wall_form(l1, l2, l3))


def wall_form_full(
    l1: AnyLagrangian,
    l2: AnyLagrangian,
    l3: AnyLagrangian
) -> Mat:
    """
    Gram matrix on D = ker(j1 j2 j3) inside L1 + L2 + L3 with the
    single block j1^T B j2 in position (1, 2).
    """
    _check_ambient(l1, l2, l3)
    form = l1.form
    j1, j2 = l1.basis, l2.basis
    k = j1.ncols

    kernel = kernel_basis(hstack(j1, j2, l3.basis))
    zero = Mat.zeros(k, k)
    bilinear = block([
        [zero, _pairing(form, j1, j2), zero],
        [zero, zero, zero],
        [zero, zero, zero],
    ])
    return _require_symmetric(kernel.T @ bilinear @ kernel, "Full Wall")


def radical_dimension(
    l1: AnyLagrangian,
    l2: AnyLagrangian,
    l3: AnyLagrangian
) -> int:
    """
    dim of (L1^L2 + L2^L3 + L3^L1) / (L1^L2^L3), the radical of
    the full Wall form.
    """
    _check_ambient(l1, l2, l3)
    b1, b2, b3 = l1.basis, l2.basis, l3.basis
    pairwise = [
        intersection_basis(b1, b2),
        intersection_basis(b2, b3),
        intersection_basis(b3, b1),
    ]
    triple = intersection_basis(pairwise[0], b3)
    return sum(p.ncols for p in pairwise) - triple.ncols


def wall_nullity(
    l1: AnyLagrangian,
    l2: AnyLagrangian,
    l3: AnyLagrangian
) -> int:
    return nullity(wall_form_full(l1, l2, l3))


def normalize_direction(
    p: int | str | Fraction,
    q: int | str | Fraction
) -> Direction:
    """
    Representative with q > 0, or q = 0 and p > 0.

    Raises:
        InvalidInputError: zero direction
    """
    p, q = to_rat(p), to_rat(q)
    if p == 0 and q == 0:
        msg = "Zero direction does not span a line"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    if q < 0 or (q == 0 and p < 0):
        return -p, -q
    return p, q


def wall_maslov_g1_closed(
    d1: tuple[int | str | Fraction, int | str | Fraction],
    d2: tuple[int | str | Fraction, int | str | Fraction],
    d3: tuple[int | str | Fraction, int | str | Fraction]
) -> int:
    """
    Closed form for three lines in the plane.

    With s_ik = p_i q_k - q_i p_k the result is
    sign(s12 * s23 * s31), scaled by the lock-file sign.
    """
    (p1, q1), (p2, q2), (p3, q3) = (
        normalize_direction(*d1),
        normalize_direction(*d2),
        normalize_direction(*d3),
    )
    s12 = p1 * q2 - q1 * p2
    s23 = p2 * q3 - q2 * p3
    s31 = p3 * q1 - q3 * p1
    orientation = default_library().sign("wall_maslov", "closed_form_sign")
    return orientation * sign(s12 * s23 * s31)
