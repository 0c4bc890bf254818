"""
Filename: covering.py
Author: William Bowley
Version: 2.0
Date: 2026-10-13

Description:
    Covering number of a piecewise constant cocycle on the
    discrete circle.

    Every diagonal a + b = c is cut into segments by the vertical
    and horizontal lines it crosses. On each segment the jump
    (value just above) - (value just below) is taken at the
    midpoint and weighted by the a-length of the segment; the
    weights of a full diagonal add up to 1. The total over all
    diagonals is an integer for a cocycle.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from sigcocycles.circle.cochain import ONE, ZERO, PiecewiseCocycle
from sigcocycles.core.rational import format_rat
from sigcocycles.domain.errors import NotACocycleError


def _segment_ends(t: PiecewiseCocycle, c: Fraction) -> list[Fraction]:
    """a-coordinates where a + b = c meets the arrangement."""
    start, stop = max(ZERO, c - ONE), min(ONE, c)
    ends = {start, stop}
    ends |= {a for a in t.a_breaks if start < a < stop}
    ends |= {c - b for b in t.b_breaks if start < c - b < stop}
    return sorted(ends)


def _offset(t: PiecewiseCocycle, c: Fraction, b: Fraction) -> Fraction:
    """
    Half the distance from (a, b) on a + b = c to the nearest line
    met when moving vertically.
    """
    gaps = [abs(b - line) for line in t.b_breaks] + [ONE - b]
    gaps += [abs(other - c) for other in t.diag_consts if other != c]
    return min(gap for gap in gaps if gap > 0) / 2


def diagonal_jump(t: PiecewiseCocycle, c: Fraction) -> Fraction:
    """Weighted jump across one diagonal a + b = c."""
    ends = _segment_ends(t, c)
    total = Fraction(0)
    for left, right in zip(ends, ends[1:]):
        a = (left + right) / 2
        b = c - a
        delta = _offset(t, c, b)
        jump = t(a, b + delta) - t(a, b - delta)
        total += jump * (right - left)
    return total


def covering_number(t: PiecewiseCocycle) -> int:
    """
    Sum of the weighted diagonal jumps.

    Raises:
        NotACocycleError: the total is not an integer
    """
    total = sum((diagonal_jump(t, c) for c in t.diag_consts), Fraction(0))
    if total.denominator != 1:
        msg = f"Covering total {format_rat(total)} is not an integer"
        logging.error(msg)
        raise NotACocycleError(f"{__name__}: {msg}")

    logging.debug(
        "Covering number %d over %d diagonals", total, len(t.diag_consts)
    )
    return int(total)
