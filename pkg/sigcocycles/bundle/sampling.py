"""
Filename: sampling.py
Author: William Bowley
Version: 2.0
Date: 2026-10-18

Description:
    Seeded closed monodromies for property runs.

    SWAPPED_PAIRS gives ((a, b), (b, a)) repeated `blocks` times;
    EXPANDED gives the three-pair family of expanded_commutator.
    Both are relations of a free group, so their signature is 0.

    TORSION_POWER (g >= 3) writes the order-3 element
    x = [[-2, 1], [-3, 1]] (+) I on the first hyperbolic pair as
    four commutators of Levi and unipotent matrices and repeats
    them three times. Lifting x to Z x_tau Sp(2g, Z) as (c, x),
    its cube is 3c + tau(x, x) + tau(x^2, x) = 3c +- 2, so the
    signature is nonzero. A random conjugation is applied on top.

    A coefficient of 4 draws every letter from I + 4 * (rank one),
    so all matrices of the free families lie in the level-4
    congruence subgroup.
"""

import logging

from sigcocycles.bundle.monodromy import (
    Monodromy,
    conjugated,
    expanded_commutator,
    repeated,
    swapped_pairs
)
from sigcocycles.core.matrix import Mat
from sigcocycles.core.symplectic import (
    levi,
    lower_unipotent,
    upper_unipotent
)
from sigcocycles.core.words import Lcg64, random_symplectic_from
from sigcocycles.domain.definitions import MonodromyFamily
from sigcocycles.domain.errors import InvalidInputError

# Smallest fiber genus with room for the torsion relation
TORSION_MIN_GENUS = 3

# Order of the torsion element
TORSION_ORDER = 3


def _matrix(g: int, entries: dict[tuple[int, int], int], base: int) -> Mat:
    """base * I_g plus the given entries."""
    rows = [[base if i == j else 0 for j in range(g)] for i in range(g)]
    for (i, j), value in entries.items():
        rows[i][j] += value
    return Mat(rows)


def _symmetric(g: int, value: int, i: int, j: int) -> Mat:
    entries = {(i, j): value} if i == j else {(i, j): value, (j, i): value}
    return _matrix(g, entries, 0)


def order_three_relation(g: int) -> Monodromy:
    """
    Four pairs whose relator is the order-3 element
    x = [[-2, 1], [-3, 1]] on (e_1, f_1), identity elsewhere.

    [levi(A), upper(B)] = upper(A B A^T - B), and
    [levi(A^-T), lower(C)] = lower(A C A^T - C); with
    A = I + E_12 and A = I + E_13 the four commutators give
    upper(E_11) then lower(-3 E_11).

    Raises:
        InvalidInputError: g < 3
    """
    if g < TORSION_MIN_GENUS:
        msg = (
            f"Torsion relation needs fiber genus >= {TORSION_MIN_GENUS}, "
            f"got {g}"
        )
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    return Monodromy.from_pairs([
        (levi(_matrix(g, {(0, 1): 1}, 1)), upper_unipotent(
            _symmetric(g, 1, 1, 1)
        )),
        (levi(_matrix(g, {(0, 2): 1}, 1)), upper_unipotent(
            _symmetric(g, -1, 1, 2)
        )),
        (levi(_matrix(g, {(1, 0): -1}, 1)), lower_unipotent(
            _symmetric(g, -3, 1, 1)
        )),
        (levi(_matrix(g, {(2, 0): -1}, 1)), lower_unipotent(
            _symmetric(g, 3, 1, 2)
        )),
    ])


def torsion_monodromy(
    g: int,
    rng: Lcg64 | None = None,
    word_len: int = 0
) -> Monodromy:
    """
    Closed monodromy with h = 12 and nonzero signature. With a
    generator, every matrix is conjugated by a random word of
    word_len letters, which leaves the signature unchanged.
    """
    monodromy = repeated(order_three_relation(g), TORSION_ORDER)
    if rng is None or word_len == 0:
        return monodromy
    return conjugated(monodromy, random_symplectic_from(rng, g, word_len))


def random_closed_monodromy(
    rng: Lcg64,
    g: int,
    word_len: int,
    family: MonodromyFamily = MonodromyFamily.SWAPPED_PAIRS,
    blocks: int = 1,
    coefficient: int = 1
) -> Monodromy:
    """
    Closed monodromy of fiber genus g drawn from rng.

    Args:
        rng: caller-held generator, advanced in place
        g: fiber genus
        word_len: letters per random element
        family: closed family to draw from
        blocks: number of concatenated family blocks
        coefficient: transvection coefficient (4 for level four);
            ignored by TORSION_POWER

    Raises:
        InvalidInputError: TORSION_POWER with g < 3
    """
    monodromy = None
    for _ in range(max(1, blocks)):
        match family:
            case MonodromyFamily.SWAPPED_PAIRS:
                a = random_symplectic_from(rng, g, word_len, coefficient)
                b = random_symplectic_from(rng, g, word_len, coefficient)
                piece = swapped_pairs(a, b)
            case MonodromyFamily.EXPANDED:
                a = random_symplectic_from(rng, g, word_len, coefficient)
                b = random_symplectic_from(rng, g, word_len, coefficient)
                c = random_symplectic_from(rng, g, word_len, coefficient)
                piece = expanded_commutator(a, b, c)
            case MonodromyFamily.TORSION_POWER:
                piece = torsion_monodromy(g, rng, word_len)
            case _:
                raise ValueError(f"Unknown monodromy family {family}")
        monodromy = piece if monodromy is None else monodromy + piece
    return monodromy


def level_four_monodromy(
    rng: Lcg64,
    g: int,
    word_len: int,
    family: MonodromyFamily = MonodromyFamily.EXPANDED
) -> Monodromy:
    """Closed monodromy with every matrix congruent to I mod 4."""
    return random_closed_monodromy(rng, g, word_len, family, coefficient=4)
