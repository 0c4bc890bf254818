"""
Filename: dedekind.py
Author: William Bowley
Version: 2.0
Date: 2026-10-13

Description:
    The sawtooth ((x)), exact signs of sin(pi x) and the
    closed forms of the Meyer and Maslov cocycles on rotations
    of the plane (angles measured in full turns).

        tau_1(a, b)  = 4 (((a)) + ((b)) - ((a + b)))
        tau'_1(a, b) = 2 (((2a)) + ((2b)) - ((2a + 2b)))

    Both are scaled by the signs in the convention lock file.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor

from sigcocycles.core.matrix import Mat
from sigcocycles.core.rational import frac_part, to_rat
from sigcocycles.core.symplectic import SpMat, rotation
from sigcocycles.domain.definitions import CocycleKind
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.domain.library.manager import default_library
from sigcocycles.meyer.cocycle_interface import BaseCocycle

HALF = Fraction(1, 2)

RationalLike = int | str | Fraction


def dedekind(x: RationalLike) -> Fraction:
    """((x)) = {x} - 1/2 off the integers, 0 on them."""
    x = to_rat(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac_part(x) - HALF


def sign_sin_pi(x: RationalLike) -> int:
    """sign(sin(pi x)) without trigonometry."""
    x = to_rat(x)
    if x.denominator == 1:
        return 0
    return 1 if floor(x) % 2 == 0 else -1


def sign_product(*values: RationalLike) -> int:
    """Product of sign_sin_pi values; any zero factor gives 0."""
    result = 1
    for value in values:
        result *= sign_sin_pi(value)
    return result


def tau1_closed(a: RationalLike, b: RationalLike) -> int:
    a, b = to_rat(a), to_rat(b)
    value = 4 * (dedekind(a) + dedekind(b) - dedekind(a + b))
    orientation = default_library().sign("meyer", "closed_form_sign")
    return orientation * int(value)


def tau1prime_closed(a: RationalLike, b: RationalLike) -> int:
    a, b = to_rat(a), to_rat(b)
    value = 2 * (dedekind(2 * a) + dedekind(2 * b) - dedekind(2 * a + 2 * b))
    orientation = default_library().sign("maslov", "closed_form_sign")
    return orientation * int(value)


def coboundary_difference(a: RationalLike, b: RationalLike) -> int:
    """
    tau_1 - tau'_1 expressed through signs:
    -s(2a) - s(2b) + s(2a + 2b) with s(x) = sign(sin(pi x)).
    """
    a, b = to_rat(a), to_rat(b)
    return (
        -sign_sin_pi(2 * a) - sign_sin_pi(2 * b) + sign_sin_pi(2 * a + 2 * b)
    )


def rotation_angle(sp: SpMat) -> Fraction:
    """
    Angle in full turns of an integral rotation of the plane.

    Raises:
        InvalidInputError: not one of I, J, -I, -J
    """
    if sp.genus == 1:
        for quarter in range(4):
            if sp.mat == rotation(quarter).mat:
                return Fraction(quarter, 4)
    msg = f"{sp} is not a quarter-turn rotation of the plane"
    logging.error(msg)
    raise InvalidInputError(f"{__name__}: {msg}")


def rotation_matrix(angle: RationalLike) -> SpMat:
    """Inverse of rotation_angle on multiples of a quarter turn."""
    angle = frac_part(to_rat(angle))
    if (4 * angle).denominator != 1:
        msg = f"Angle {angle} is not a multiple of a quarter turn"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return rotation(int(4 * angle))


class ClosedFormCocycle(BaseCocycle):
    """
    tau_1 or tau'_1 read off the rotation angles of its arguments.
    """
    kind = CocycleKind.CUSTOM

    def __init__(self, maslov: bool = False) -> None:
        self._maslov = maslov

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        a, b = rotation_angle(alpha), rotation_angle(beta)
        if self._maslov:
            return tau1prime_closed(a, b)
        return tau1_closed(a, b)

    @property
    def identifier(self) -> str:
        return "tau1prime_closed" if self._maslov else "tau1_closed"


def calibration_matrix(cocycle: BaseCocycle) -> Mat:
    """Table of a cocycle over the angles listed in the lock file."""
    angles, _ = default_library().calibration_table()
    rotations = [rotation_matrix(angle) for angle in angles]
    return Mat([[cocycle(x, y) for y in rotations] for x in rotations])
