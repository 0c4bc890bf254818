"""
Filename: extension.py
Author: William Bowley
Version: 2.0
Date: 2026-10-09

Description:
    Central extensions A x_tau Sp(2g) of the symplectic group by a
    cyclic coefficient group A (Z or Z/N), twisted by a 2-cocycle:

        (m, a)(n, b) = (m + n + tau(a, b), ab)

    Identity is (-tau(1, 1), I) and the inverse of (m, a) is
    (-tau(1, 1) - m - tau(a, a^-1), a^-1). Associativity holds
    exactly when tau satisfies the cocycle identity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from sigcocycles.core.symplectic import SpMat
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.meyer.cocycle_interface import BaseCocycle
from sigcocycles.domain.definitions import CocycleKind


@dataclass(frozen=True)
class CoeffGroup:
    """
    Z when modulus is 0, otherwise Z/modulus with modulus >= 2.
    """
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus == 1 or self.modulus < 0:
            msg = f"Coefficient modulus must be 0 or >= 2, got {self.modulus}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

    def reduce(self, value: int) -> int:
        return value % self.modulus if self.modulus else value

    @property
    def name(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"


class FunctionCocycle(BaseCocycle):
    """Adapts a plain callable (alpha, beta) -> int."""
    kind = CocycleKind.CUSTOM

    def __init__(self, function: Callable[[SpMat, SpMat], int]) -> None:
        self.function = function

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        return self.function(alpha, beta)

    @property
    def identifier(self) -> str:
        name = getattr(self.function, "__qualname__", repr(self.function))
        return f"function:{name}:{id(self.function)}"


def as_cocycle(
    tau: BaseCocycle | Callable[[SpMat, SpMat], int]
) -> BaseCocycle:
    if isinstance(tau, BaseCocycle):
        return tau
    return FunctionCocycle(tau)


@dataclass(frozen=True)
class ExtContext:
    """A cocycle together with the group its values are read in."""
    cocycle: BaseCocycle
    coeff: CoeffGroup

    def tau(self, alpha: SpMat, beta: SpMat) -> int:
        return self.coeff.reduce(self.cocycle(alpha, beta))


@dataclass(frozen=True)
class ExtElement:
    """
    (decoration, elem) in A x_tau Sp(2g); the decoration is
    normalized into A on construction.
    """
    decoration: int
    elem: SpMat
    context: ExtContext

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "decoration", self.context.coeff.reduce(self.decoration)
        )

    def __mul__(self, other: ExtElement) -> ExtElement:
        return ext_mul(self, other)

    def inverse(self) -> ExtElement:
        return ext_inv(self)


def _require_context(x: ExtElement, y: ExtElement) -> None:
    if x.context != y.context:
        msg = (
            f"Extension context mismatch: {x.context.cocycle} over "
            f"{x.context.coeff.name} vs {y.context.cocycle} over "
            f"{y.context.coeff.name}"
        )
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    if x.elem.genus != y.elem.genus:
        msg = f"Genus mismatch {x.elem.genus} vs {y.elem.genus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")


def ext_mul(x: ExtElement, y: ExtElement) -> ExtElement:
    """(m, a)(n, b) = (m + n + tau(a, b), ab)"""
    _require_context(x, y)
    decoration = (
        x.decoration + y.decoration + x.context.tau(x.elem, y.elem)
    )
    return ExtElement(decoration, x.elem @ y.elem, x.context)


def ext_identity(context: ExtContext, genus: int) -> ExtElement:
    """(-tau(1, 1), I)"""
    ident = SpMat.identity(genus)
    return ExtElement(-context.tau(ident, ident), ident, context)


def ext_inv(x: ExtElement) -> ExtElement:
    """(-tau(1, 1) - m - tau(a, a^-1), a^-1)"""
    context = x.context
    ident = SpMat.identity(x.elem.genus)
    inverse = x.elem.inverse()
    decoration = (
        -context.tau(ident, ident)
        - x.decoration
        - context.tau(x.elem, inverse)
    )
    return ExtElement(decoration, inverse, context)


def lift(context: ExtContext, elem: SpMat, decoration: int = 0) -> ExtElement:
    return ExtElement(decoration, elem, context)


def ext_commutator(x: ExtElement, y: ExtElement) -> ExtElement:
    """x y x^-1 y^-1 in the extension."""
    return x * y * ext_inv(x) * ext_inv(y)
