"""
File: test_extension.py
Author: William Bowley
Version: 2.0
Date: 2026-10-16

Description:
    Tests central extensions of Sp(2g, Z) within bundle/extension
"""

import unittest

from sigcocycles.bundle.extension import (
    CoeffGroup,
    ExtContext,
    as_cocycle,
    ext_identity,
    ext_inv,
    ext_mul,
    lift
)
from sigcocycles.core.symplectic import SpMat, quarter_turn
from sigcocycles.core.words import Lcg64, random_symplectic_from
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.meyer.cocycles import (
    MaslovCocycle,
    MeyerCocycle,
    ZeroCocycle
)

MEYER_Z = ExtContext(MeyerCocycle(), CoeffGroup(0))


class Coefficients(unittest.TestCase):
    """ Tests bundle/extension -> CoeffGroup"""
    def test_integers(self):
        self.assertEqual(CoeffGroup(0).reduce(-7), -7)
        self.assertEqual(CoeffGroup(0).name, "Z")

    def test_cyclic(self):
        self.assertEqual(CoeffGroup(4).reduce(-1), 3)
        self.assertEqual(CoeffGroup(8).name, "Z/8")

    def test_invalid_modulus(self):
        for modulus in (1, -3):
            with self.assertRaises(InvalidInputError):
                CoeffGroup(modulus)


class GroupLaw(unittest.TestCase):
    """
    Tests bundle/extension -> ext_mul, ext_inv, ext_identity
    """
    def test_identity_times_element(self) -> None:
        """
        Tests (0, I)(0, beta) = (0, beta) for the Meyer cocycle
        """
        beta = random_symplectic_from(Lcg64(1), 1, 5)
        product = lift(MEYER_Z, SpMat.identity(1)) * lift(MEYER_Z, beta)
        self.assertEqual(product, lift(MEYER_Z, beta))

    def test_quarter_turn_squared(self) -> None:
        """
        Tests (0, J)(0, J) = (-2, -I)
        """
        j = lift(MEYER_Z, quarter_turn())
        product = j * j
        self.assertEqual(product.decoration, -2)
        self.assertEqual(product.elem, -SpMat.identity(1))

    def test_decoration_reduced(self) -> None:
        context = ExtContext(MeyerCocycle(), CoeffGroup(8))
        j = lift(context, quarter_turn())
        self.assertEqual((j * j).decoration, 6)

    def test_inverse(self) -> None:
        rng = Lcg64(2)
        for context in (MEYER_Z, ExtContext(ZeroCocycle(), CoeffGroup(0))):
            for g in (1, 2):
                x = lift(context, random_symplectic_from(rng, g, 5), 3)
                self.assertEqual(x * ext_inv(x), ext_identity(context, g))
                self.assertEqual(ext_inv(x) * x, ext_identity(context, g))

    def test_associativity(self) -> None:
        rng = Lcg64(3)
        for context in (MEYER_Z, ExtContext(MaslovCocycle(), CoeffGroup(0))):
            for g in (1, 2):
                x, y, z = (
                    lift(context, random_symplectic_from(rng, g, 4), k)
                    for k in range(3)
                )
                self.assertEqual((x * y) * z, x * (y * z))

    def test_context_mismatch(self) -> None:
        other = ExtContext(MeyerCocycle(), CoeffGroup(4))
        ident = SpMat.identity(1)
        with self.assertRaises(InvalidInputError):
            ext_mul(lift(MEYER_Z, ident), lift(other, ident))

    def test_genus_mismatch(self) -> None:
        with self.assertRaises(InvalidInputError):
            ext_mul(
                lift(MEYER_Z, SpMat.identity(1)),
                lift(MEYER_Z, SpMat.identity(2)),
            )


class PlainFunctions(unittest.TestCase):
    """ Tests bundle/extension -> as_cocycle"""
    def test_wraps_callables(self):
        def constant(alpha, beta):
            return 5

        wrapped = as_cocycle(constant)
        ident = SpMat.identity(1)
        self.assertEqual(wrapped(ident, ident), 5)
        self.assertIs(as_cocycle(MeyerCocycle()).__class__, MeyerCocycle)

    def test_unnormalized_identity(self):
        """
        Tests the identity of a constant cocycle carries -tau(1, 1)
        """
        context = ExtContext(as_cocycle(lambda a, b: 5), CoeffGroup(0))
        identity = ext_identity(context, 1)
        self.assertEqual(identity.decoration, -5)
        x = lift(context, quarter_turn(), 2)
        self.assertEqual(identity * x, x)


if __name__ == "__main__":
    unittest.main()
