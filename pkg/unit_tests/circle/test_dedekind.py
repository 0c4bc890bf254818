"""
File: test_dedekind.py
Author: William Bowley
Version: 2.0
Date: 2026-10-17

Description:
    Tests the sawtooth function, exact sine signs and the rotation
    closed forms within circle/dedekind
"""

import unittest
from fractions import Fraction

from sigcocycles.circle.dedekind import (
    ClosedFormCocycle,
    calibration_matrix,
    coboundary_difference,
    dedekind,
    rotation_angle,
    rotation_matrix,
    sign_product,
    sign_sin_pi,
    tau1_closed,
    tau1prime_closed
)
from sigcocycles.core.matrix import Mat
from sigcocycles.core.symplectic import (
    SpMat,
    quarter_turn,
    rotation,
    standard_t
)
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.domain.library.manager import default_library
from sigcocycles.meyer.cocycles import (
    MaslovCocycle,
    MeyerCocycle,
    MeyerGraphCocycle,
    check_cocycle_identity
)


def _rationals(max_denominator: int = 12) -> list[Fraction]:
    """p/q for q <= max_denominator and -q <= p < 2q."""
    return sorted({
        Fraction(p, q)
        for q in range(1, max_denominator + 1)
        for p in range(-q, 2 * q)
    })


class Sawtooth(unittest.TestCase):
    """
    Tests circle/dedekind -> dedekind
    """
    def test_known_values(self) -> None:
        self.assertEqual(dedekind("1/4"), Fraction(-1, 4))
        self.assertEqual(dedekind("3/4"), Fraction(1, 4))
        self.assertEqual(dedekind("-1/4"), Fraction(1, 4))

    def test_integers_and_halves(self) -> None:
        for x in (0, 2, -3, "1/2", "3/2"):
            self.assertEqual(dedekind(x), 0)

    def test_odd(self) -> None:
        for x in _rationals(7):
            self.assertEqual(dedekind(-x), -dedekind(x))

    def test_doubling_identity(self) -> None:
        """
        Tests 2((2x)) - 4((x)) = sign(sin(2 pi x))
        """
        for x in _rationals():
            self.assertEqual(
                2 * dedekind(2 * x) - 4 * dedekind(x), sign_sin_pi(2 * x)
            )

    def test_sum_identity(self) -> None:
        """
        Tests 2(((x)) + ((y)) - ((x + y))) equals minus the product
        of the signs of sin(pi x), sin(pi y) and sin(pi (x + y))
        """
        points = _rationals(6)
        for x in points:
            for y in points:
                left = 2 * (dedekind(x) + dedekind(y) - dedekind(x + y))
                self.assertEqual(left, -sign_product(x, y, x + y))


class SineSigns(unittest.TestCase):
    """
    Tests circle/dedekind -> sign_sin_pi, sign_product
    """
    def test_known_values(self) -> None:
        self.assertEqual(sign_sin_pi("1/2"), 1)
        self.assertEqual(sign_sin_pi("5/4"), -1)
        self.assertEqual(sign_sin_pi("-1/2"), -1)
        self.assertEqual(sign_sin_pi(3), 0)

    def test_product(self) -> None:
        self.assertEqual(sign_product("1/2", "3/2"), -1)
        self.assertEqual(sign_product("1/2", 2, "1/3"), 0)
        self.assertEqual(sign_product(), 1)


class ClosedForms(unittest.TestCase):
    """
    Tests circle/dedekind -> tau1_closed, tau1prime_closed
    """
    def test_quarter_turns(self) -> None:
        self.assertEqual(tau1_closed("1/4", "1/4"), -2)
        self.assertEqual(tau1_closed("3/4", "3/4"), 2)

    def test_maslov_form_at_thirds(self) -> None:
        self.assertEqual(tau1prime_closed("1/3", "1/3"), 1)
        self.assertEqual(tau1_closed("1/3", "1/3"), -2)

    def test_cocycle_identity(self) -> None:
        points = _rationals(5)
        for a in points[::3]:
            for b in points[1::3]:
                for c in points[2::3]:
                    for form in (tau1_closed, tau1prime_closed):
                        left = form(a, b) + form(a + b, c)
                        right = form(a, b + c) + form(b, c)
                        self.assertEqual(left, right, (a, b, c))

    def test_coboundary_difference(self) -> None:
        """
        Tests tau_1 - tau'_1 at odd denominators off a + b = 0 mod 1
        """
        odd = [Fraction(p, q) for q in (3, 5, 7) for p in range(1, q)]
        for a in odd:
            for b in odd:
                if (a + b).denominator == 1:
                    continue
                self.assertEqual(
                    coboundary_difference(a, b),
                    tau1_closed(a, b) - tau1prime_closed(a, b),
                )


class Rotations(unittest.TestCase):
    """
    Tests circle/dedekind -> rotation_angle, rotation_matrix
    """
    def test_quarter_turn(self) -> None:
        self.assertEqual(rotation_angle(quarter_turn()), Fraction(1, 4))
        self.assertEqual(rotation_angle(-SpMat.identity(1)), Fraction(1, 2))

    def test_round_trip(self) -> None:
        for quarter in range(4):
            angle = rotation_angle(rotation(quarter))
            self.assertEqual(rotation_matrix(angle), rotation(quarter))

    def test_angle_taken_mod_one(self) -> None:
        self.assertEqual(rotation_matrix("5/4"), quarter_turn())

    def test_not_a_rotation(self) -> None:
        for sp in (standard_t(), SpMat.identity(2)):
            with self.assertRaises(InvalidInputError):
                rotation_angle(sp)

    def test_not_a_quarter(self) -> None:
        with self.assertRaises(InvalidInputError):
            rotation_matrix("1/3")


class Calibration(unittest.TestCase):
    """
    Tests circle/dedekind -> ClosedFormCocycle, calibration_matrix
    """
    def test_frozen_table(self) -> None:
        _, table = default_library().calibration_table()
        self.assertEqual(calibration_matrix(ClosedFormCocycle()), Mat(table))

    def test_meyer_routes(self) -> None:
        closed = calibration_matrix(ClosedFormCocycle())
        self.assertEqual(calibration_matrix(MeyerCocycle()), closed)
        self.assertEqual(calibration_matrix(MeyerGraphCocycle()), closed)

    def test_maslov(self) -> None:
        closed = calibration_matrix(ClosedFormCocycle(maslov=True))
        self.assertEqual(calibration_matrix(MaslovCocycle()), closed)
        self.assertEqual(closed, Mat([[0] * 4 for _ in range(4)]))

    def test_identifiers(self) -> None:
        self.assertEqual(ClosedFormCocycle().identifier, "tau1_closed")
        self.assertEqual(
            ClosedFormCocycle(maslov=True).identifier, "tau1prime_closed"
        )

    def test_closed_form_is_a_cocycle(self) -> None:
        cocycle = ClosedFormCocycle()
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    self.assertTrue(
                        check_cocycle_identity(
                            cocycle, rotation(a), rotation(b), rotation(c)
                        )
                    )


if __name__ == "__main__":
    unittest.main()
