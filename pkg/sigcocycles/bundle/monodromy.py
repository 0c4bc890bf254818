"""
Filename: monodromy.py
Author: William Bowley
Version: 2.0
Date: 2026-10-09

Description:
    Symplectic monodromy of a surface bundle over a genus-h
    surface: h pairs (alpha_i, beta_i) in Sp(2g, Z), the images
    of the standard generators of the base fundamental group.

    gamma_i = [alpha_i, beta_i] and gamma~_i = gamma_1 ... gamma_i.
    The monodromy closes up (describes a bundle over a closed
    surface) iff gamma~_h = I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from sigcocycles.core.symplectic import SpMat, commutator
from sigcocycles.domain.errors import InvalidInputError


@dataclass(frozen=True)
class Monodromy:
    """
    Immutable monodromy data; closedness is a predicate,
    see is_closed.
    """
    fiber_genus: int
    pairs: tuple[tuple[SpMat, SpMat], ...]

    def __post_init__(self) -> None:
        pairs = tuple((alpha, beta) for alpha, beta in self.pairs)
        object.__setattr__(self, "pairs", pairs)

        if not pairs:
            msg = "Monodromy needs at least one pair (base genus >= 1)"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

        for index, (alpha, beta) in enumerate(pairs):
            if {alpha.genus, beta.genus} != {self.fiber_genus}:
                msg = (
                    f"Pair {index} has genus ({alpha.genus}, {beta.genus}), "
                    f"expected {self.fiber_genus}"
                )
                logging.error(msg)
                raise InvalidInputError(f"{__name__}: {msg}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[SpMat, SpMat]]) -> Monodromy:
        if not pairs:
            msg = "Monodromy needs at least one pair (base genus >= 1)"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return cls(pairs[0][0].genus, tuple(pairs))

    @property
    def base_genus(self) -> int:
        return len(self.pairs)

    def commutators(self) -> list[SpMat]:
        """gamma_i = [alpha_i, beta_i]"""
        return [commutator(alpha, beta) for alpha, beta in self.pairs]

    def partial_products(self) -> list[SpMat]:
        """gamma~_i = gamma_1 ... gamma_i"""
        products = []
        running = SpMat.identity(self.fiber_genus)
        for gamma in self.commutators():
            running = running @ gamma
            products.append(running)
        return products

    def __add__(self, other: Monodromy) -> Monodromy:
        """Concatenation of pair lists (connected sum of bases)."""
        if other.fiber_genus != self.fiber_genus:
            msg = (
                f"Cannot concatenate genus {self.fiber_genus} and "
                f"{other.fiber_genus} monodromies"
            )
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return Monodromy(self.fiber_genus, self.pairs + other.pairs)


def relator(monodromy: Monodromy) -> SpMat:
    """[alpha_1, beta_1] ... [alpha_h, beta_h]"""
    return monodromy.partial_products()[-1]


def is_closed(monodromy: Monodromy) -> bool:
    return relator(monodromy).is_identity()


def swapped_pairs(alpha: SpMat, beta: SpMat) -> Monodromy:
    """((alpha, beta), (beta, alpha)); closed because [a,b][b,a] = 1."""
    return Monodromy.from_pairs([(alpha, beta), (beta, alpha)])


def expanded_commutator(a: SpMat, b: SpMat, c: SpMat) -> Monodromy:
    """
    ((b, a), (a, bc), (bcb^-1, bab^-1)); closed because
    [a, bc] = [a, b] [bab^-1, bcb^-1].
    """
    bc = b @ c
    b_inv = b.inverse()
    return Monodromy.from_pairs([
        (b, a),
        (a, bc),
        (bc @ b_inv, b @ a @ b_inv),
    ])


def repeated(monodromy: Monodromy, times: int) -> Monodromy:
    """
    The pair list concatenated `times` times; its relator is the
    `times`-th power of the relator of monodromy.
    """
    if times < 1:
        msg = f"Repetition count must be at least 1, got {times}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return Monodromy(monodromy.fiber_genus, monodromy.pairs * times)


def conjugated(monodromy: Monodromy, by: SpMat) -> Monodromy:
    """Every matrix replaced by by * M * by^-1; closedness is kept."""
    return Monodromy(
        monodromy.fiber_genus,
        tuple(
            (alpha.conjugate(by), beta.conjugate(by))
            for alpha, beta in monodromy.pairs
        ),
    )
