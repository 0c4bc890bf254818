"""
Filename: constants.py
Author: William Bowley
Version: 2.0
Date: 2026-10-04

Description:
    This file contains fixed values and
    general constants within the package.
"""

LCG_MULTIPLIER: int = 6364136223846793005
LCG_INCREMENT: int = 1442695040888963407
LCG_MASK: int = (1 << 64) - 1
# 64-bit linear congruential generator (Knuth's MMIX constants).
# Outputs are taken from the high 32 bits of the state.

DEFAULT_SEED: int = 0
# Seed used by every randomized command when none is given.

DEFAULT_WORD_LENGTH: int = 6
# Number of generator letters in a random symplectic word.

BFS_BUDGET: int = 2_000_000
# Element budget for group enumeration. Covers Sp(4, Z/4) with headroom.

SUPPORTED_SIGNATURE_MODULI: tuple[int, ...] = (2, 4, 8)
# Moduli for which the signature reduction carries information.

CACHE_MAGIC: bytes = b"SGTB"
CACHE_VERSION: int = 1
# Header of the binary group-table cache.

EXIT_OK: int = 0
EXIT_MALFORMED: int = 1
EXIT_PRECONDITION: int = 2
EXIT_CHECK_FAILED: int = 3
# Command line exit status. The last one is used by selftest only.

MAX_KEY_MODULUS: int = 256
# Residues are stored one byte each.
