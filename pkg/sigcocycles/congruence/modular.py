"""
Filename: modular.py
Author: William Bowley
Version: 2.0
Date: 2026-10-11

Description:
    Symplectic matrices over Z/N and their canonical encodings.

    A ModMat keeps its residues row-major in [0, N). Two keys
    are derived from them:
    - `key`: one byte per residue (N <= 256), the hash key of
      group tables and the payload of the binary cache;
    - `int_key`: sum of residue_k * N^k, used for vectorized
      sorting and membership when N^(4g^2) fits in 63 bits.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from sigcocycles.core.symplectic import SpMat, form_matrix
from sigcocycles.domain.constants import MAX_KEY_MODULUS
from sigcocycles.domain.errors import InvalidInputError


def _check_modulus(modulus: int) -> None:
    if modulus < 2 or modulus > MAX_KEY_MODULUS:
        msg = f"Modulus must lie in [2, {MAX_KEY_MODULUS}], got {modulus}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")


@lru_cache(maxsize=None)
def form_mod(g: int) -> np.ndarray:
    """J(g) as an int64 array (reduce as needed)."""
    return np.array(
        [[int(x) for x in row] for row in form_matrix(g).tolist()],
        dtype=np.int64,
    )


@lru_cache(maxsize=None)
def key_weights(g: int, modulus: int) -> np.ndarray | None:
    """
    Place values N^k for the integer key, or None when the
    largest key would not fit in a signed 64-bit integer.
    """
    size = (2 * g) ** 2
    if modulus ** size > 2 ** 63 - 1:
        return None
    return np.array([modulus ** k for k in range(size)], dtype=np.int64)


def require_key_weights(g: int, modulus: int) -> np.ndarray:
    weights = key_weights(g, modulus)
    if weights is None:
        msg = (
            f"Sp({2 * g}, Z/{modulus}) is outside the enumerable range "
            f"({modulus}^{(2 * g) ** 2} does not fit a 64-bit key)"
        )
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return weights


def pack_keys(stack: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Integer keys of a (k, n, n) stack of reduced residues."""
    flat = stack.reshape(stack.shape[0], -1).astype(np.int64, copy=False)
    return flat @ weights


def unpack_keys(
    keys: np.ndarray,
    g: int,
    modulus: int
) -> np.ndarray:
    """Inverse of pack_keys: (k,) int64 -> (k, n, n) int64."""
    n = 2 * g
    weights = require_key_weights(g, modulus)
    digits = (keys[:, None] // weights[None, :]) % modulus
    return digits.reshape(len(keys), n, n)


def inverse_stack(stack: np.ndarray, g: int, modulus: int) -> np.ndarray:
    """-J X^T J mod N for each X in the stack."""
    form = form_mod(g)
    return (-(form @ np.transpose(stack, (0, 2, 1)) @ form)) % modulus


@dataclass(frozen=True)
class ModMat:
    """
    2g x 2g matrix of residues mod N, row-major.
    """
    genus: int
    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        n = 2 * self.genus
        if len(self.entries) != n * n:
            msg = f"Expected {n * n} residues, got {len(self.entries)}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        reduced = tuple(int(x) % self.modulus for x in self.entries)
        object.__setattr__(self, "entries", reduced)

    @classmethod
    def from_array(cls, array: np.ndarray, modulus: int) -> ModMat:
        n = array.shape[0]
        if array.shape != (n, n) or n % 2:
            msg = f"Expected a square array of even size, got {array.shape}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return cls(n // 2, modulus, tuple(int(x) for x in array.ravel()))

    @classmethod
    def identity(cls, g: int, modulus: int) -> ModMat:
        return cls.from_array(np.eye(2 * g, dtype=np.int64), modulus)

    @property
    def size(self) -> int:
        return 2 * self.genus

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(
            self.size, self.size
        )

    @property
    def key(self) -> bytes:
        return bytes(self.entries)

    def int_key(self) -> int:
        weights = require_key_weights(self.genus, self.modulus)
        return int(np.dot(np.array(self.entries, dtype=np.int64), weights))

    def _require_compatible(self, other: ModMat) -> None:
        if (self.genus, self.modulus) != (other.genus, other.modulus):
            msg = (
                f"Incompatible ModMat: (g={self.genus}, N={self.modulus}) vs "
                f"(g={other.genus}, N={other.modulus})"
            )
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")

    def __matmul__(self, other: ModMat) -> ModMat:
        if not isinstance(other, ModMat):
            return NotImplemented
        self._require_compatible(other)
        return ModMat.from_array(
            (self.array @ other.array) % self.modulus, self.modulus
        )

    def inverse(self) -> ModMat:
        stack = inverse_stack(self.array[None], self.genus, self.modulus)
        return ModMat.from_array(stack[0], self.modulus)

    def is_symplectic(self) -> bool:
        form = form_mod(self.genus)
        array = self.array
        return bool(np.all(
            (array.T @ form @ array - form) % self.modulus == 0
        ))

    def is_identity(self) -> bool:
        return self == ModMat.identity(self.genus, self.modulus)

    def reduce(self, modulus: int) -> ModMat:
        """Further reduction to a divisor of the current modulus."""
        if self.modulus % modulus:
            msg = f"Cannot reduce mod {self.modulus} residues mod {modulus}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return ModMat(self.genus, modulus, self.entries)

    def __repr__(self) -> str:
        rows = self.array.tolist()
        return f"ModMat(g={self.genus}, N={self.modulus}, {rows})"


def reduce_mod(sp: SpMat, modulus: int) -> ModMat:
    """
    Entrywise residues of an integral symplectic matrix.

    Raises:
        InvalidInputError: modulus out of range or non-integral entries
    """
    _check_modulus(modulus)
    if not sp.is_integral():
        msg = "Only integral matrices can be reduced mod N"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    entries = tuple(int(x) for x in sp.mat.entries)
    return ModMat(sp.genus, modulus, entries)


def in_principal_congruence(sp: SpMat | ModMat, modulus: int) -> bool:
    """True iff the matrix is congruent to I mod N."""
    reduced = reduce_mod(sp, modulus) if isinstance(sp, SpMat) else (
        sp.reduce(modulus)
    )
    return reduced.is_identity()
