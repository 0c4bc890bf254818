"""
Filename: rational.py
Author: William Bowley
Version: 2.0
Date: 2026-10-05

Description:
    Exact rational scalars. Fraction already keeps
    numerator and denominator coprime with a positive
    denominator, so Rat is an alias with parsing and
    formatting helpers for the JSON surface.
"""

import logging
from fractions import Fraction
from math import floor

from sigcocycles.domain.errors import InvalidInputError

Rat = Fraction


def to_rat(value: int | str | Fraction) -> Fraction:
    """
    Converts an integer, a Fraction or a decimal "n" / "p/q" string.

    Floats are rejected: every path in the package is exact.
    """
    if isinstance(value, bool):
        msg = f"Boolean {value!r} is not a rational entry"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            msg = f"Cannot parse rational entry {value!r}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}") from error

    msg = f"Unsupported rational entry of type {type(value).__name__}"
    logging.error(msg)
    raise InvalidInputError(f"{__name__}: {msg}")


def format_rat(value: Fraction) -> str:
    """"n" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def frac_part(value: Fraction) -> Fraction:
    """{x} = x - floor(x), in [0, 1)."""
    return value - floor(value)


def sign(value: Fraction | int) -> int:
    return (value > 0) - (value < 0)
