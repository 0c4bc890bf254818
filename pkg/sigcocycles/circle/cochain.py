"""
Filename: cochain.py
Author: William Bowley
Version: 2.0
Date: 2026-10-13

Description:
    Piecewise constant cochains and cocycles on the discrete
    circle R/Z.

    - NiceCochain: a 1-cochain constant on half-open intervals
      [x_i, x_{i+1}) of [0, 1).
    - PiecewiseCocycle: a 2-cochain on [0, 1)^2 constant on the
      cells cut out by vertical lines a = a_i, horizontal lines
      b = b_j and diagonals a + b = c.

    Evaluation is right-continuous everywhere: a point on a
    boundary line belongs to the cell to its right or above.

    A cell is addressed by (i, j, k): the a-interval, the
    b-interval and the diagonal strip [d_k, d_{k+1}) with
    d = (0, c_1, ..., c_r, 2).
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence

from sigcocycles.core.rational import format_rat, frac_part, to_rat
from sigcocycles.domain.errors import InvalidInputError, NotACocycleError

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)

CellKey = tuple[int, int, int]
PointFn = Callable[[Fraction, Fraction], int]


def _sorted_breaks(values: Iterable, label: str) -> tuple[Fraction, ...]:
    breaks = tuple(to_rat(value) for value in values)
    if not breaks or breaks[0] != 0:
        msg = f"{label} must start at 0, got {[str(b) for b in breaks]}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    for left, right in zip(breaks, breaks[1:]):
        if not left < right:
            msg = f"{label} must be strictly increasing"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
    if breaks[-1] >= 1:
        msg = f"{label} must lie in [0, 1)"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return breaks


@dataclass(frozen=True)
class NiceCochain:
    """
    Integer-valued 1-cochain, constant on [x_i, x_{i+1}).
    """
    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        breaks = _sorted_breaks(self.breakpoints, "Cochain breakpoints")
        values = tuple(int(value) for value in self.values)
        if len(values) != len(breaks):
            msg = (
                f"Cochain has {len(breaks)} breakpoints but "
                f"{len(values)} values"
            )
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        object.__setattr__(self, "breakpoints", breaks)
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, value: int) -> NiceCochain:
        return cls((ZERO,), (value,))

    def __call__(self, x) -> int:
        x = frac_part(to_rat(x))
        return self.values[bisect_right(self.breakpoints, x) - 1]

    def jumps(self) -> Iterator[tuple[Fraction, int]]:
        """(x_i, f(x_i+) - f(x_i-)) around the circle."""
        for index, x in enumerate(self.breakpoints):
            yield x, self.values[index] - self.values[index - 1]


def half_turn_cochain(p: int, q: int) -> NiceCochain:
    """p on [0, 1/2), q on [1/2, 1)."""
    return NiceCochain((ZERO, Fraction(1, 2)), (p, q))


def coboundary_eval(f: NiceCochain, a, b) -> int:
    """delta f(a, b) = f(a) + f(b) - f(a + b), arguments mod 1."""
    a, b = frac_part(to_rat(a)), frac_part(to_rat(b))
    return f(a) + f(b) - f(a + b)


def standard_value(a, b) -> int:
    """The carry of a + b: 1 iff {a} + {b} >= 1."""
    a, b = frac_part(to_rat(a)), frac_part(to_rat(b))
    return int(a + b >= 1)


@dataclass(frozen=True)
class PiecewiseCocycle:
    """
    Integer 2-cochain on the discrete circle with only vertical,
    horizontal and leading-diagonal boundary lines.
    """
    a_breaks: tuple[Fraction, ...]
    b_breaks: tuple[Fraction, ...]
    diag_consts: tuple[Fraction, ...]
    cells: dict[CellKey, int] = field(hash=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "a_breaks", _sorted_breaks(self.a_breaks, "a breakpoints")
        )
        object.__setattr__(
            self, "b_breaks", _sorted_breaks(self.b_breaks, "b breakpoints")
        )
        consts = tuple(sorted({to_rat(c) for c in self.diag_consts}))
        if any(not ZERO < c < TWO for c in consts):
            msg = "Diagonal constants must lie strictly between 0 and 2"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        object.__setattr__(self, "diag_consts", consts)

        expected = set(self._cell_points())
        if set(self.cells) != expected:
            msg = (
                f"Cell table covers {len(self.cells)} cells, the arrangement "
                f"has {len(expected)}"
            )
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

    @classmethod
    def from_function(
        cls,
        a_breaks: Iterable,
        b_breaks: Iterable,
        diag_consts: Iterable,
        function: PointFn
    ) -> PiecewiseCocycle:
        """Samples a function at one interior point of every cell."""
        a_breaks = _sorted_breaks(a_breaks, "a breakpoints")
        b_breaks = _sorted_breaks(b_breaks, "b breakpoints")
        consts = tuple(sorted({to_rat(c) for c in diag_consts}))
        points = _cell_points(a_breaks, b_breaks, consts)
        cells = {key: int(function(a, b)) for key, (a, b) in points.items()}
        logging.debug("Sampled a cochain on %d cells", len(cells))
        return cls(a_breaks, b_breaks, consts, cells)

    def _cell_points(self) -> dict[CellKey, tuple[Fraction, Fraction]]:
        return _cell_points(self.a_breaks, self.b_breaks, self.diag_consts)

    def cell_of(self, a, b) -> CellKey:
        a, b = frac_part(to_rat(a)), frac_part(to_rat(b))
        return (
            bisect_right(self.a_breaks, a) - 1,
            bisect_right(self.b_breaks, b) - 1,
            bisect_right(self.diag_consts, a + b),
        )

    def __call__(self, a, b) -> int:
        return self.cells[self.cell_of(a, b)]

    def __add__(self, other: PiecewiseCocycle) -> PiecewiseCocycle:
        """Pointwise sum on the common refinement."""
        if not isinstance(other, PiecewiseCocycle):
            return NotImplemented
        return PiecewiseCocycle.from_function(
            sorted(set(self.a_breaks) | set(other.a_breaks)),
            sorted(set(self.b_breaks) | set(other.b_breaks)),
            set(self.diag_consts) | set(other.diag_consts),
            lambda a, b: self(a, b) + other(a, b),
        )

    def __neg__(self) -> PiecewiseCocycle:
        return self.negate()

    def negate(self) -> PiecewiseCocycle:
        cells = {key: -value for key, value in self.cells.items()}
        return PiecewiseCocycle(
            self.a_breaks, self.b_breaks, self.diag_consts, cells
        )

    def sample_grid(self) -> list[Fraction]:
        """
        Midpoints between consecutive arrangement coordinates,
        refined by halves so that sums of two samples also meet
        every strip.
        """
        coords = set(self.a_breaks) | set(self.b_breaks)
        coords |= {frac_part(c) for c in self.diag_consts}
        coords |= {c / 2 for c in list(coords)} | {
            (c + 1) / 2 for c in list(coords)
        }
        ordered = sorted(coords | {ONE})
        return [(x + y) / 2 for x, y in zip(ordered, ordered[1:])]

    def cocycle_defect(
        self,
        points: Optional[Sequence[Fraction]] = None
    ) -> Optional[tuple[Fraction, Fraction, Fraction]]:
        """
        First triple (x, y, z) of the grid where
        t(x, y) + t(x + y, z) != t(x, y + z) + t(y, z), or None.
        """
        points = self.sample_grid() if points is None else points
        for x, y, z in product(points, repeat=3):
            left = self(x, y) + self(x + y, z)
            right = self(x, y + z) + self(y, z)
            if left != right:
                return x, y, z
        return None

    def validate(self, points: Optional[Sequence[Fraction]] = None) -> None:
        """
        Raises:
            NotACocycleError: the identity fails somewhere on the grid
        """
        defect = self.cocycle_defect(points)
        if defect is not None:
            shown = ", ".join(format_rat(x) for x in defect)
            msg = f"Cocycle identity fails at ({shown})"
            logging.error(msg)
            raise NotACocycleError(f"{__name__}: {msg}")


def _cell_points(
    a_breaks: Sequence[Fraction],
    b_breaks: Sequence[Fraction],
    consts: Sequence[Fraction]
) -> dict[CellKey, tuple[Fraction, Fraction]]:
    """
    One interior point for every nonempty cell.

    A cell is the rectangle (a_i, a_i+1) x (b_j, b_j+1) cut by the
    strip d_k < a + b < d_k+1. Its sums form the open interval
    (lo, hi); take the middle sum s, then the middle of the a-range
    that keeps b = s - a inside the rectangle.
    """
    a_ends = list(a_breaks) + [ONE]
    b_ends = list(b_breaks) + [ONE]
    strips = [ZERO] + list(consts) + [TWO]
    points = {}

    for i, j in product(range(len(a_breaks)), range(len(b_breaks))):
        a_lo, a_hi = a_ends[i], a_ends[i + 1]
        b_lo, b_hi = b_ends[j], b_ends[j + 1]
        for k in range(len(strips) - 1):
            lo = max(a_lo + b_lo, strips[k])
            hi = min(a_hi + b_hi, strips[k + 1])
            if lo >= hi:
                continue
            s = (lo + hi) / 2
            left = max(a_lo, s - b_hi)
            right = min(a_hi, s - b_lo)
            a = (left + right) / 2
            points[(i, j, k)] = (a, s - a)
    return points


def from_standard_plus_coboundary(m: int, f: NiceCochain) -> PiecewiseCocycle:
    """
    m * standard + delta f. Boundary lines: the breakpoints of f in
    both directions, a + b = 1, and a + b = x, x + 1 for every
    nonzero breakpoint x.
    """
    diagonals = {ONE}
    for x in f.breakpoints[1:]:
        diagonals |= {x, x + 1}

    def value(a: Fraction, b: Fraction) -> int:
        return m * standard_value(a, b) + coboundary_eval(f, a, b)

    return PiecewiseCocycle.from_function(
        f.breakpoints, f.breakpoints, diagonals, value
    )


def standard_cocycle() -> PiecewiseCocycle:
    """0 below the diagonal a + b = 1, 1 on and above it."""
    return from_standard_plus_coboundary(1, NiceCochain.constant(0))


def tau1_picture() -> PiecewiseCocycle:
    """Meyer cocycle on the circle: 4 * standard + delta f(-2, -2)."""
    return from_standard_plus_coboundary(4, half_turn_cochain(-2, -2))


def tau1prime_picture() -> PiecewiseCocycle:
    """Maslov cocycle on the circle: 4 * standard + delta f(-1, -3)."""
    return from_standard_plus_coboundary(4, half_turn_cochain(-1, -3))
