"""
File: test_index.py
Author: William Bowley
Version: 2.0
Date: 2026-10-16

Description:
    Tests the Wall–Maslov index within maslov/index
"""

import unittest
from itertools import permutations

from sigcocycles.core.symplectic import SpMat
from sigcocycles.core.words import Lcg64, random_symplectic_from
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.maslov.index import (
    normalize_direction,
    radical_dimension,
    wall_maslov,
    wall_maslov_g1_closed,
    wall_nullity
)
from sigcocycles.maslov.lagrangian import (
    default_lagrangian,
    graph_lagrangian,
    line,
    stabilize_lagrangian
)

DIRECTIONS = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 3)]


class PlaneLines(unittest.TestCase):
    """
    Tests maslov/index -> wall_maslov on lines in the plane
    """
    def test_three_axes(self) -> None:
        """
        Tests tau(x-axis, diagonal, y-axis) = -1
        """
        self.assertEqual(wall_maslov(line(1, 0), line(1, 1), line(0, 1)), -1)

    def test_swap_changes_sign(self) -> None:
        self.assertEqual(wall_maslov(line(1, 1), line(1, 0), line(0, 1)), 1)

    def test_repeated_line(self) -> None:
        self.assertEqual(wall_maslov(line(1, 0), line(1, 0), line(0, 1)), 0)
        self.assertEqual(wall_maslov(line(2, 1), line(0, 1), line(2, 1)), 0)

    def test_closed_form_examples(self) -> None:
        self.assertEqual(wall_maslov_g1_closed((1, 0), (1, 1), (0, 1)), -1)
        self.assertEqual(wall_maslov_g1_closed((1, 0), (0, 1), (1, 1)), 1)
        self.assertEqual(wall_maslov_g1_closed((1, 0), (1, 0), (0, 1)), 0)

    def test_closed_form_matches_matrix_route(self) -> None:
        """
        Tests every ordered triple drawn from a set of directions
        """
        for d1, d2, d3 in permutations(DIRECTIONS, 3):
            expected = wall_maslov(line(*d1), line(*d2), line(*d3))
            result = wall_maslov_g1_closed(d1, d2, d3)
            self.assertEqual(expected, result, (d1, d2, d3))

    def test_fast_path(self) -> None:
        for d1, d2, d3 in permutations(DIRECTIONS[:4], 3):
            lags = (line(*d1), line(*d2), line(*d3))
            self.assertEqual(
                wall_maslov(*lags, fast_path=True), wall_maslov(*lags)
            )


class Directions(unittest.TestCase):
    """ Tests maslov/index -> normalize_direction"""
    def test_flip(self):
        self.assertEqual(normalize_direction(-1, -2), (1, 2))

    def test_horizontal(self):
        self.assertEqual(normalize_direction(-3, 0), (3, 0))

    def test_zero(self):
        with self.assertRaises(InvalidInputError):
            normalize_direction(0, 0)


class Radical(unittest.TestCase):
    """
    Tests maslov/index -> radical_dimension, wall_nullity
    """
    def test_repeated_line(self) -> None:
        lags = (line(1, 0), line(1, 0), line(0, 1))
        self.assertEqual(radical_dimension(*lags), 1)
        self.assertEqual(wall_nullity(*lags), 1)

    def test_transverse_lines(self) -> None:
        lags = (line(1, 0), line(1, 1), line(0, 1))
        self.assertEqual(radical_dimension(*lags), 0)
        self.assertEqual(wall_nullity(*lags), 0)

    def test_radical_matches_nullity(self) -> None:
        """
        Tests the radical of the full form on random genus 2 triples
        with one repeated lagrangian
        """
        rng = Lcg64(4)
        base = default_lagrangian(2)
        for _ in range(5):
            other = base.image(random_symplectic_from(rng, 2, 4))
            for lags in ((base, base, other), (base, other, other)):
                self.assertEqual(radical_dimension(*lags), wall_nullity(*lags))


class Invariance(unittest.TestCase):
    """
    Tests maslov/index -> wall_maslov symmetries on genus 2
    """
    def setUp(self) -> None:
        rng = Lcg64(17)
        base = default_lagrangian(2)
        self.rng = rng
        self.lags = [
            base.image(random_symplectic_from(rng, 2, 5)) for _ in range(4)
        ]

    def test_symplectic_invariance(self) -> None:
        l1, l2, l3, _ = self.lags
        move = random_symplectic_from(self.rng, 2, 5)
        self.assertEqual(
            wall_maslov(l1.image(move), l2.image(move), l3.image(move)),
            wall_maslov(l1, l2, l3),
        )

    def test_dihedral_symmetry(self) -> None:
        l1, l2, l3, _ = self.lags
        tau = wall_maslov(l1, l2, l3)
        self.assertEqual(wall_maslov(l2, l3, l1), tau)
        self.assertEqual(wall_maslov(l2, l1, l3), -tau)

    def test_four_term_relation(self) -> None:
        l1, l2, l3, l4 = self.lags
        total = (
            wall_maslov(l1, l2, l3) - wall_maslov(l1, l2, l4)
            + wall_maslov(l1, l3, l4) - wall_maslov(l2, l3, l4)
        )
        self.assertEqual(total, 0)

    def test_stabilization(self) -> None:
        l1, l2, l3, _ = self.lags
        stabilized = [stabilize_lagrangian(lag, 3) for lag in (l1, l2, l3)]
        self.assertEqual(wall_maslov(*stabilized), wall_maslov(l1, l2, l3))

    def test_ambient_mismatch(self) -> None:
        with self.assertRaises(InvalidInputError):
            wall_maslov(line(1, 0), default_lagrangian(2), line(0, 1))

    def test_doubled_and_single_do_not_mix(self) -> None:
        with self.assertRaises(InvalidInputError):
            wall_maslov(
                default_lagrangian(2),
                graph_lagrangian(SpMat.identity(1)),
                default_lagrangian(2),
            )


if __name__ == "__main__":
    unittest.main()
