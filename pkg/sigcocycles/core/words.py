"""
Filename: words.py
Author: William Bowley
Version: 2.0
Date: 2026-10-06

Description:
    Seeded random words in symplectic transvections.

    The generator is a 64-bit linear congruential scheme
    (constants in domain/constants.py) whose state is held
    by the caller, so fixed seeds give identical matrices
    on every platform.

    Alphabet order for genus g, vectors in the block basis:
        e_1..e_g, f_1..f_g, e_i + f_i (i = 1..g),
        e_i + e_j (i < j, lexicographic)
    A letter index k in [0, 2 * len(alphabet)) picks vector
    k // 2 with coefficient +c for even k and -c for odd k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from sigcocycles.core.symplectic import SpMat, transvection
from sigcocycles.domain.constants import (
    LCG_MULTIPLIER,
    LCG_INCREMENT,
    LCG_MASK
)


@dataclass
class Lcg64:
    """
    64-bit LCG; next_u32 returns the high half of the new state.
    """
    state: int = 0

    def __post_init__(self) -> None:
        self.state &= LCG_MASK

    def next_u32(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & LCG_MASK
        return self.state >> 32

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound)."""
        return self.next_u32() % bound

    def between(self, low: int, high: int) -> int:
        """Integer in the closed range [low, high]."""
        return low + self.below(high - low + 1)

    def choice(self, items: Sequence):
        return items[self.below(len(items))]


@lru_cache(maxsize=None)
def alphabet(g: int) -> tuple[tuple[int, ...], ...]:
    """Transvection directions in their fixed order."""
    n = 2 * g

    def unit(*indices: int) -> tuple[int, ...]:
        vector = [0] * n
        for index in indices:
            vector[index] += 1
        return tuple(vector)

    letters = [unit(i) for i in range(g)]
    letters += [unit(g + i) for i in range(g)]
    letters += [unit(i, g + i) for i in range(g)]
    letters += [unit(i, j) for i in range(g) for j in range(i + 1, g)]
    return tuple(letters)


@lru_cache(maxsize=None)
def letter_matrix(g: int, index: int, coefficient: int = 1) -> SpMat:
    """Transvection for letter index k (see module docstring)."""
    direction = alphabet(g)[index // 2]
    signed = coefficient if index % 2 == 0 else -coefficient
    return transvection(direction, signed)


def random_word(rng: Lcg64, g: int, length: int) -> list[int]:
    letters = 2 * len(alphabet(g))
    return [rng.below(letters) for _ in range(length)]


def word_matrix(g: int, word: Sequence[int], coefficient: int = 1) -> SpMat:
    """Left-to-right product of the letters of word."""
    result = SpMat.identity(g)
    for index in word:
        result = result @ letter_matrix(g, index, coefficient)
    return result


def random_symplectic_from(
    rng: Lcg64,
    g: int,
    word_len: int,
    coefficient: int = 1
) -> SpMat:
    """Random word drawn from a caller-held generator."""
    return word_matrix(g, random_word(rng, g, word_len), coefficient)


def random_symplectic(g: int, word_len: int, seed: int) -> SpMat:
    """
    Deterministic random element of Sp(2g, Z).

    Args:
        g: genus
        word_len: number of letters; 0 gives the identity
        seed: 64-bit seed of a fresh generator
    """
    return random_symplectic_from(Lcg64(seed), g, word_len)
