"""
File: test_matrix.py
Author: William Bowley
Version: 2.0
Date: 2026-10-16

Description:
    Tests exact matrices and row reduction within core/matrix
    and the rational helpers within core/rational
"""

import unittest
from fractions import Fraction

from sigcocycles.core.matrix import (
    Mat,
    canonical_column_basis,
    determinant,
    direct_sum,
    intersection_basis,
    inverse,
    kernel_basis,
    same_span
)
from sigcocycles.core.rational import format_rat, frac_part, to_rat
from sigcocycles.domain.errors import InvalidInputError


class RationalEntries(unittest.TestCase):
    """ Tests core/rational -> to_rat, format_rat, frac_part"""
    def test_parse_fraction_string(self):
        self.assertEqual(to_rat("3/6"), Fraction(1, 2))

    def test_parse_integer(self):
        self.assertEqual(to_rat(-4), Fraction(-4))

    def test_reject_float(self):
        with self.assertRaises(InvalidInputError):
            to_rat(0.5)

    def test_reject_bool(self):
        with self.assertRaises(InvalidInputError):
            to_rat(True)

    def test_reject_garbage_string(self):
        with self.assertRaises(InvalidInputError):
            to_rat("one half")

    def test_format(self):
        self.assertEqual(format_rat(Fraction(-3, 4)), "-3/4")
        self.assertEqual(format_rat(Fraction(6, 3)), "2")

    def test_fractional_part_of_negative(self):
        self.assertEqual(frac_part(Fraction(-1, 4)), Fraction(3, 4))


class Construction(unittest.TestCase):
    """ Tests core/matrix -> Mat constructors"""
    def test_ragged_rows(self):
        with self.assertRaises(InvalidInputError):
            Mat([[1, 2], [3]])

    def test_from_flat(self):
        result = Mat.from_flat(2, 2, [1, 2, 3, 4])
        self.assertEqual(result, Mat([[1, 2], [3, 4]]))

    def test_from_flat_wrong_count(self):
        with self.assertRaises(InvalidInputError):
            Mat.from_flat(2, 2, [1, 2, 3])

    def test_from_columns(self):
        result = Mat.from_columns([[1, 2], [3, 4]], 2)
        self.assertEqual(result, Mat([[1, 3], [2, 4]]))

    def test_empty_column_space_keeps_rows(self):
        empty = Mat.from_columns([], 3)
        self.assertEqual(empty.shape, (3, 0))

    def test_direct_sum(self):
        result = direct_sum(Mat([[1]]), Mat([[2]]))
        self.assertEqual(result, Mat.diagonal([1, 2]))


class Arithmetic(unittest.TestCase):
    """ Tests core/matrix -> products, inverse, determinant"""
    def test_product(self):
        a = Mat([[1, 2], [3, 4]])
        b = Mat([[0, 1], [1, 0]])
        self.assertEqual(a @ b, Mat([[2, 1], [4, 3]]))

    def test_shape_mismatch(self):
        with self.assertRaises(InvalidInputError):
            Mat([[1, 2]]) @ Mat([[1, 2]])

    def test_inverse(self):
        mat = Mat([[2, 1], [1, 1]])
        self.assertEqual(inverse(mat), Mat([[1, -1], [-1, 2]]))
        self.assertEqual(mat @ mat.inverse(), Mat.identity(2))

    def test_inverse_is_exact(self):
        mat = Mat([[3, 0], [0, 7]])
        expected = Mat([[Fraction(1, 3), 0], [0, Fraction(1, 7)]])
        self.assertEqual(inverse(mat), expected)

    def test_singular(self):
        with self.assertRaises(InvalidInputError):
            inverse(Mat([[1, 2], [2, 4]]))

    def test_determinant(self):
        self.assertEqual(determinant(Mat([[2, 1], [1, 1]])), 1)
        self.assertEqual(determinant(Mat([[1, 2], [2, 4]])), 0)
        self.assertEqual(determinant(Mat([[0, 1], [1, 0]])), -1)

    def test_rank(self):
        self.assertEqual(Mat([[1, 2], [2, 4]]).rank(), 1)
        self.assertEqual(Mat.identity(3).rank(), 3)


class KernelBasis(unittest.TestCase):
    """
    Tests core/matrix -> kernel_basis and the canonical column form
    """
    def test_single_row(self):
        kernel = kernel_basis(Mat([[1, 1]]))
        self.assertEqual(kernel, Mat([[-1], [1]]))
        self.assertTrue(same_span(kernel, Mat([[1], [-1]])))

    def test_identity_has_trivial_kernel(self):
        self.assertEqual(kernel_basis(Mat.identity(2)).shape, (2, 0))

    def test_free_variable_form(self):
        kernel = kernel_basis(Mat([[1, 2], [2, 4]]))
        self.assertEqual(kernel, Mat([[-2], [1]]))

    def test_kernel_is_annihilated(self):
        """
        Tests A * ker(A) = 0 and the dimension count on a 2 x 4 matrix
        """
        mat = Mat([[1, 2, 0, 1], [0, 1, 1, 3]])
        kernel = kernel_basis(mat)
        self.assertEqual(kernel.ncols, 2)
        self.assertTrue((mat @ kernel).is_zero())


class ColumnSpaces(unittest.TestCase):
    """ Tests core/matrix -> canonical_column_basis, intersection_basis"""
    def test_scaling_does_not_matter(self):
        self.assertTrue(same_span(Mat([[1], [1]]), Mat([[2], [2]])))
        self.assertFalse(same_span(Mat([[1], [0]]), Mat([[1], [1]])))

    def test_canonical_pivots_are_one(self):
        basis = canonical_column_basis(Mat([[2, 0], [4, 3], [0, 6]]))
        for column in basis.columns():
            last = [x for x in column if x != 0][-1]
            self.assertEqual(last, 1)

    def test_intersection(self):
        """
        Tests span(e1, e2) meets span(e2, e3) in span(e2)
        """
        a = Mat([[1, 0], [0, 1], [0, 0]])
        b = Mat([[0, 0], [1, 0], [0, 1]])
        self.assertEqual(intersection_basis(a, b), Mat([[0], [1], [0]]))

    def test_empty_intersection(self):
        a = Mat([[1], [0]])
        b = Mat([[0], [1]])
        self.assertEqual(intersection_basis(a, b).ncols, 0)


if __name__ == "__main__":
    unittest.main()
