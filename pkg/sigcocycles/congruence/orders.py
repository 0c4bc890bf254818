"""
Filename: orders.py
Author: William Bowley
Version: 2.0
Date: 2026-10-11

Description:
    Closed formulas for the orders of the finite groups around
    Sp(2g, Z/4):

        |Sp(2g, Z/2)|     = 2^(g^2)       prod_{i=1..g} (2^(2i) - 1)
        |Sp(2g, Z/4)|     = 2^(g(3g+1))   prod (2^(2i) - 1)
        |H| = |Sp/Y|      = 2^((g+1)^2)   prod (2^(2i) - 1)
        |Y|               = 2^((2g+1)(g-1))
        |sp(2g, Z/2)|     = 2^(g(2g+1))
"""

import logging
from math import prod

from sigcocycles.domain.definitions import GroupOrder
from sigcocycles.domain.errors import InvalidInputError


def _odd_part(g: int) -> int:
    return prod(2 ** (2 * i) - 1 for i in range(1, g + 1))


def parse_order_kind(which: str | GroupOrder) -> GroupOrder:
    if isinstance(which, GroupOrder):
        return which
    try:
        return GroupOrder(which)
    except ValueError as error:
        choices = ", ".join(kind.value for kind in GroupOrder)
        msg = f"Unknown group '{which}', expected one of {choices}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}") from error


def group_order_formula(g: int, which: str | GroupOrder) -> int:
    """
    Order of the named group for fiber genus g.

    Raises:
        InvalidInputError: g < 1 or unknown group name
    """
    if g < 1:
        msg = f"Genus must be at least 1, got {g}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    match parse_order_kind(which):
        case GroupOrder.SP_MOD2:
            return 2 ** (g * g) * _odd_part(g)
        case GroupOrder.SP_MOD4:
            return 2 ** (g * (3 * g + 1)) * _odd_part(g)
        case GroupOrder.H:
            return 2 ** ((g + 1) ** 2) * _odd_part(g)
        case GroupOrder.Y:
            return 2 ** ((2 * g + 1) * (g - 1))
        case GroupOrder.LIE_SP_MOD2:
            return 2 ** (g * (2 * g + 1))


def modulus_of(which: GroupOrder) -> int:
    """Modulus of the ambient group enumerated for `which`."""
    return 2 if which is GroupOrder.SP_MOD2 else 4
