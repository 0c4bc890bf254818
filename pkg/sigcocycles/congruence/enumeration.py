"""
Filename: enumeration.py
Author: William Bowley
Version: 2.0
Date: 2026-10-12

Description:
    Breadth-first enumeration of finite symplectic groups mod N
    and the subgroup/quotient checks run on the resulting tables.

    Each BFS level multiplies the whole frontier by every
    generator and generator inverse at once (numpy batches),
    packs the products into integer keys and keeps the keys not
    seen before. The element set is deterministic: it is the
    sorted key array, independent of batch order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

from sigcocycles.congruence.modular import (
    ModMat,
    inverse_stack,
    pack_keys,
    require_key_weights,
    unpack_keys
)
from sigcocycles.core.symplectic import transvection
from sigcocycles.core.words import alphabet, letter_matrix
from sigcocycles.domain.constants import BFS_BUDGET
from sigcocycles.domain.errors import BudgetExceededError, InvalidInputError

FRONTIER_CHUNK = 65536
# Frontier rows multiplied per numpy batch.

StackPredicate = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GroupTable:
    """
    Enumerated group: sorted integer keys of its elements plus
    the generators it was closed from.
    """
    genus: int
    modulus: int
    keys: np.ndarray = field(repr=False)
    generators: tuple[ModMat, ...] = ()

    @property
    def size(self) -> int:
        return int(len(self.keys))

    def __len__(self) -> int:
        return self.size

    def stack(self, keys: Optional[np.ndarray] = None) -> np.ndarray:
        """Residue matrices for keys (default: every element)."""
        keys = self.keys if keys is None else keys
        return unpack_keys(keys, self.genus, self.modulus)

    @cached_property
    def elements(self) -> frozenset[bytes]:
        """Byte encodings of every element (see ModMat.key)."""
        flat = self.stack().reshape(self.size, -1).astype(np.uint8)
        return frozenset(row.tobytes() for row in flat)

    def contains_keys(self, keys: np.ndarray) -> np.ndarray:
        return _isin_sorted(keys, self.keys)

    def __contains__(self, mat: ModMat) -> bool:
        if (mat.genus, mat.modulus) != (self.genus, self.modulus):
            return False
        return bool(self.contains_keys(np.array([mat.int_key()]))[0])

    def pack(self, stack: np.ndarray) -> np.ndarray:
        weights = require_key_weights(self.genus, self.modulus)
        return pack_keys(stack % self.modulus, weights)


@dataclass(frozen=True)
class Subset:
    """Sorted keys of a subset of a group table."""
    keys: np.ndarray = field(repr=False)

    @property
    def count(self) -> int:
        return int(len(self.keys))

    def __len__(self) -> int:
        return self.count


def _isin_sorted(keys: np.ndarray, sorted_keys: np.ndarray) -> np.ndarray:
    if len(sorted_keys) == 0:
        return np.zeros(len(keys), dtype=bool)
    positions = np.searchsorted(sorted_keys, keys)
    positions = np.clip(positions, 0, len(sorted_keys) - 1)
    return sorted_keys[positions] == keys


def _generator_arrays(
    generators: Sequence[ModMat],
    g: int,
    modulus: int
) -> list[np.ndarray]:
    stack = np.stack([gen.array for gen in generators])
    both = np.concatenate([stack, inverse_stack(stack, g, modulus)])
    weights = require_key_weights(g, modulus)
    _, first = np.unique(pack_keys(both, weights), return_index=True)
    return [both[i] for i in sorted(first)]


def closure_bfs(
    generators: Sequence[ModMat],
    cap: int = BFS_BUDGET,
    genus: Optional[int] = None,
    modulus: Optional[int] = None
) -> GroupTable:
    """
    Closes the generators under multiplication and inversion.

    Args:
        generators: symplectic residue matrices of one genus/modulus
        cap: element budget
        genus, modulus: required only when generators is empty

    Raises:
        InvalidInputError: mixed or non-symplectic generators
        BudgetExceededError: more than cap elements
    """
    generators = tuple(generators)
    if generators:
        genus, modulus = generators[0].genus, generators[0].modulus
    if genus is None or modulus is None:
        msg = "closure_bfs needs genus and modulus when given no generators"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    for gen in generators:
        if (gen.genus, gen.modulus) != (genus, modulus):
            msg = "Generators must share genus and modulus"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        if not gen.is_symplectic():
            msg = f"Generator {gen} is not symplectic mod {modulus}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

    weights = require_key_weights(genus, modulus)
    identity = ModMat.identity(genus, modulus)
    seen = np.array([identity.int_key()], dtype=np.int64)

    if not generators:
        return GroupTable(genus, modulus, seen, generators)

    steps = _generator_arrays(generators, genus, modulus)
    frontier = seen
    level = 0
    while len(frontier):
        candidates = []
        for start in range(0, len(frontier), FRONTIER_CHUNK):
            mats = unpack_keys(
                frontier[start:start + FRONTIER_CHUNK], genus, modulus
            )
            for step in steps:
                candidates.append(pack_keys((mats @ step) % modulus, weights))

        fresh = np.unique(np.concatenate(candidates))
        fresh = fresh[~_isin_sorted(fresh, seen)]

        if len(seen) + len(fresh) > cap:
            partial = int(len(seen))
            msg = (
                f"Enumeration of <{len(generators)} generators> mod {modulus} "
                f"exceeded the budget of {cap} elements at {partial}"
            )
            logging.error(msg)
            raise BudgetExceededError(f"{__name__}: {msg}", partial)

        seen = np.union1d(seen, fresh)
        frontier = fresh
        level += 1
        logging.debug(
            "BFS level %d: %d new, %d total", level, len(fresh), len(seen)
        )

    logging.info(
        "Enumerated %d elements of genus %d mod %d in %d levels",
        len(seen), genus, modulus, level
    )
    return GroupTable(genus, modulus, seen, generators)


def standard_generators(g: int, modulus: int) -> list[ModMat]:
    """Alphabet transvections (coefficient 1) reduced mod N."""
    return [
        ModMat.from_array(
            _integral_array(letter_matrix(g, 2 * index)), modulus
        )
        for index in range(len(alphabet(g)))
    ]


def level_two_generators(g: int, modulus: int = 4) -> list[ModMat]:
    """
    T_u(2) mod N for u a unit vector or a sum of two distinct unit
    vectors. Mod 4 these generate the kernel of reduction mod 2,
    one generator per entry of a symmetric 2g x 2g matrix.
    """
    n = 2 * g
    directions = [[int(k == a) for k in range(n)] for a in range(n)]
    directions += [
        [int(k in (a, b)) for k in range(n)]
        for a in range(n) for b in range(a + 1, n)
    ]
    return [
        ModMat.from_array(_integral_array(transvection(u, 2)), modulus)
        for u in directions
    ]


def _integral_array(sp) -> np.ndarray:
    return np.array(
        [[int(x) for x in row] for row in sp.mat.tolist()], dtype=np.int64
    )


def subgroup_filter(
    table: GroupTable,
    predicate: StackPredicate
) -> Subset:
    """
    Elements of the table satisfying a vectorized predicate
    (stack -> boolean mask).
    """
    mask = np.asarray(predicate(table.stack()), dtype=bool)
    subset = Subset(table.keys[mask])
    logging.debug("subgroup filter kept %d of %d", subset.count, table.size)
    return subset


def _conjugates(
    table: GroupTable,
    stack: np.ndarray,
    by: np.ndarray
) -> np.ndarray:
    by_inverse = inverse_stack(by[None], table.genus, table.modulus)[0]
    return table.pack((by @ stack @ by_inverse) % table.modulus)


def is_normal(
    table: GroupTable,
    subset: Subset,
    generators: Optional[Sequence[ModMat]] = None
) -> bool:
    """
    True iff every generator conjugates the subset into itself.
    Enough for finite groups: conjugation is injective.

    `generators` defaults to those of the table; pass the
    generators of a larger ambient group to test normality there.
    """
    generators = table.generators if generators is None else generators
    stack = table.stack(subset.keys)
    for gen in generators:
        keys = _conjugates(table, stack, gen.array)
        if not np.all(_isin_sorted(keys, subset.keys)):
            return False
    return True


def is_elementary_abelian(
    subset: Subset,
    table: GroupTable,
    modulo: Optional[Subset] = None
) -> bool:
    """
    True iff all squares and pairwise commutators of the subset
    lie in `modulo` (the identity when omitted).
    """
    if modulo is None:
        identity = ModMat.identity(table.genus, table.modulus)
        modulo = Subset(np.array([identity.int_key()], dtype=np.int64))

    n = table.modulus
    stack = table.stack(subset.keys)
    inverses = inverse_stack(stack, table.genus, n)

    squares = table.pack((stack @ stack) % n)
    if not np.all(_isin_sorted(squares, modulo.keys)):
        return False

    for x, x_inv in zip(stack, inverses):
        commutators = (((x[None] @ stack) % n) @ x_inv[None]) % n
        commutators = (commutators @ inverses) % n
        if not np.all(_isin_sorted(table.pack(commutators), modulo.keys)):
            return False
    return True


def coset_keys(
    table: GroupTable,
    normal: Subset,
    subset: Optional[Subset] = None
) -> np.ndarray:
    """
    Canonical coset key of every element: the least key in x * normal.
    """
    keys = table.keys if subset is None else subset.keys
    normal_stack = table.stack(normal.keys)
    canonical = np.full(len(keys), np.iinfo(np.int64).max, dtype=np.int64)

    for start in range(0, len(keys), FRONTIER_CHUNK):
        chunk = table.stack(keys[start:start + FRONTIER_CHUNK])
        best = canonical[start:start + len(chunk)]
        for member in normal_stack:
            packed = table.pack((chunk @ member) % table.modulus)
            best = np.minimum(best, packed)
        canonical[start:start + len(chunk)] = best
    return canonical


def quotient_cosets(
    table: GroupTable,
    normal: Subset,
    subset: Optional[Subset] = None
) -> Subset:
    """
    Canonical representatives of (subset or table) / normal.
    """
    representatives = Subset(np.unique(coset_keys(table, normal, subset)))
    logging.info(
        "Quotient by a subgroup of order %d has %d cosets",
        normal.count, representatives.count
    )
    return representatives


def quotient_center_order(table: GroupTable, normal: Subset) -> int:
    """
    Number of cosets commuting with every generator modulo `normal`.
    """
    representatives = quotient_cosets(table, normal)
    stack = table.stack(representatives.keys)
    inverses = inverse_stack(stack, table.genus, table.modulus)
    central = np.ones(len(stack), dtype=bool)
    n = table.modulus

    for gen in table.generators:
        g_arr = gen.array
        g_inv = inverse_stack(g_arr[None], table.genus, n)[0]
        commutators = (((stack @ g_arr) % n) @ inverses) % n
        commutators = (commutators @ g_inv) % n
        central &= _isin_sorted(table.pack(commutators), normal.keys)
    return int(central.sum())
