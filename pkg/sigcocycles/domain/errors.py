"""
Filename: errors.py
Author: William Bowley
Version: 2.0
Date: 2026-10-04

Description:
    Exception types raised by the package.

    Input problems derive from ValueError, internal
    consistency failures from RuntimeError.
"""


class InvalidInputError(ValueError):
    """Malformed or mismatched input (shape, genus, zero vector)."""


class NotLagrangianError(InvalidInputError):
    """A basis that does not span an isotropic subspace."""


class PreconditionError(ValueError):
    """An operation was called outside its contract."""


class NotSymplecticError(PreconditionError):
    """Matrix does not preserve the standard symplectic form."""


class NotClosedError(PreconditionError):
    """Monodromy relator is not the identity."""


class UnsupportedModulusError(InvalidInputError, PreconditionError):
    """Signature reduction requested for a modulus outside 2, 4, 8."""


class ConstructionError(RuntimeError):
    """A restricted form came out asymmetric."""


class BudgetExceededError(RuntimeError):
    """Group enumeration ran past its element budget."""

    def __init__(self, message: str, partial_count: int) -> None:
        super().__init__(message)
        self.partial_count = partial_count


class NotACocycleError(ValueError):
    """A piecewise function failed the cocycle checks."""
