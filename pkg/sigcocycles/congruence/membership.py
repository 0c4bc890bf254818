"""
Filename: membership.py
Author: William Bowley
Version: 2.0
Date: 2026-10-11

Description:
    Parity subgroups inside the level-2 congruence subgroup.

    Write a matrix congruent to I mod 2 as
        M = [[I + 2a, 2b], [2c, I + 2d]].
    M lies in K (over Z) or Y (over Z/4) iff the diagonals of b
    and c are even and the trace of a is even. All conditions
    only see M mod 4, so K-membership is Y-membership after
    reduction.

    Vectorized masks work on (k, n, n) stacks of residues mod 4.
"""

import logging

import numpy as np

from sigcocycles.congruence.modular import ModMat, reduce_mod
from sigcocycles.core.matrix import Mat, block
from sigcocycles.core.symplectic import SpMat, transvection
from sigcocycles.core.words import Lcg64, alphabet
from sigcocycles.domain.errors import InvalidInputError


def level_mask(stack: np.ndarray, level: int) -> np.ndarray:
    """Rows of the stack congruent to I mod level."""
    n = stack.shape[-1]
    difference = stack - np.eye(n, dtype=np.int64)[None]
    return np.all((difference % level).reshape(len(stack), -1) == 0, axis=1)


def y_mask(stack: np.ndarray) -> np.ndarray:
    """
    Y-membership for a stack of residues mod 4.
    """
    n = stack.shape[-1]
    g = n // 2
    in_level_two = level_mask(stack, 2)

    halves = ((stack - np.eye(n, dtype=np.int64)[None]) % 4) // 2
    a = halves[:, :g, :g]
    b = halves[:, :g, g:]
    c = halves[:, g:, :g]

    diag_b = np.diagonal(b, axis1=1, axis2=2) % 2
    diag_c = np.diagonal(c, axis1=1, axis2=2) % 2
    trace_a = np.trace(a, axis1=1, axis2=2) % 2

    return (
        in_level_two
        & np.all(diag_b == 0, axis=1)
        & np.all(diag_c == 0, axis=1)
        & (trace_a == 0)
    )


def in_Y(mat: ModMat) -> bool:
    """
    Y-membership of a residue matrix mod 4.

    Raises:
        InvalidInputError: modulus other than 4
    """
    if mat.modulus != 4:
        msg = f"Y is defined mod 4, got modulus {mat.modulus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return bool(y_mask(mat.array[None])[0])


def in_K(sp: SpMat) -> bool:
    """K-membership of an integral symplectic matrix."""
    return in_Y(reduce_mod(sp, 4))


def k_sample_generators(g: int) -> list[SpMat]:
    """
    Integral elements of K used to sample it:
    - transvections along the alphabet with coefficient 4,
    - T_u(2) T_v(2) T_{u+v}(2) for u, v distinct e's (or distinct f's),
    - diag(U, U^-T) with U = I + 2 E_ij, i != j.
    For g = 1 only the first kind exists.
    """
    generators = [
        transvection(direction, 4) for direction in alphabet(g)
    ]

    units = [
        [1 if k == index else 0 for k in range(2 * g)]
        for index in range(2 * g)
    ]
    for offset in (0, g):
        for i in range(g):
            for j in range(i + 1, g):
                u, v = units[offset + i], units[offset + j]
                both = [x + y for x, y in zip(u, v)]
                generators.append(
                    transvection(u, 2) @ transvection(v, 2)
                    @ transvection(both, 2)
                )

    for i in range(g):
        for j in range(g):
            if i != j:
                generators.append(_unipotent_block(g, i, j))
    return generators


def _unipotent_block(g: int, i: int, j: int) -> SpMat:
    upper = [[int(r == c) for c in range(g)] for r in range(g)]
    lower = [row[:] for row in upper]
    upper[i][j] = 2
    lower[j][i] = -2
    zero = Mat.zeros(g, g)
    return SpMat(g, block([[Mat(upper), zero], [zero, Mat(lower)]]))


def random_k_element(rng: Lcg64, g: int, length: int) -> SpMat:
    """Seeded word in k_sample_generators and their inverses."""
    generators = k_sample_generators(g)
    result = SpMat.identity(g)
    for _ in range(length):
        letter = rng.choice(generators)
        if rng.below(2):
            letter = letter.inverse()
        result = result @ letter
    return result
