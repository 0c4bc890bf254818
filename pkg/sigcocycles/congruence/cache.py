"""
Filename: cache.py
Author: William Bowley
Version: 2.0
Date: 2026-10-12

Description:
    Binary cache of enumerated group tables.

    Layout (little endian):
        magic     4s   b"SGTB"
        version   H
        genus     B
        modulus   H
        count     Q
        genhash   32s  sha256 of the generator byte keys, in order
        payload        count * (2g)^2 residues, uint8, row-major,
                       elements in ascending integer-key order

    A file whose header does not match the request is ignored
    (with a warning) and the table is recomputed.
"""

from __future__ import annotations

import hashlib
import logging
import struct
from pathlib import Path
from typing import Sequence

import numpy as np

from sigcocycles.congruence.enumeration import GroupTable, closure_bfs
from sigcocycles.congruence.modular import ModMat
from sigcocycles.domain.constants import BFS_BUDGET, CACHE_MAGIC, CACHE_VERSION

HEADER = struct.Struct("<4sHBHQ32s")


def generator_hash(generators: Sequence[ModMat]) -> bytes:
    digest = hashlib.sha256()
    for gen in generators:
        digest.update(gen.key)
    return digest.digest()


def cache_path(
    directory: str | Path,
    genus: int,
    modulus: int,
    generators: Sequence[ModMat]
) -> Path:
    """File name sp{2g}_mod{N}_{first 16 hex digits of the hash}.sgtb"""
    short = generator_hash(generators).hex()[:16]
    return Path(directory) / f"sp{2 * genus}_mod{modulus}_{short}.sgtb"


def save_table(table: GroupTable, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = HEADER.pack(
        CACHE_MAGIC,
        CACHE_VERSION,
        table.genus,
        table.modulus,
        table.size,
        generator_hash(table.generators),
    )
    payload = table.stack().astype(np.uint8).tobytes()
    path.write_bytes(header + payload)
    logging.info("Cached %d elements to %s", table.size, path)
    return path


def load_table(
    path: str | Path,
    generators: Sequence[ModMat]
) -> GroupTable | None:
    """
    Reads a cached table for these generators.

    Returns:
        The table, or None when the file is missing, truncated or
        written for another version, genus, modulus or generator set
    """
    path = Path(path)
    if not path.is_file():
        return None

    generators = tuple(generators)
    raw = path.read_bytes()
    if len(raw) < HEADER.size:
        logging.warning("Cache file %s is truncated; ignoring it", path)
        return None

    magic, version, genus, modulus, count, genhash = HEADER.unpack_from(raw)
    expected = (
        CACHE_MAGIC,
        CACHE_VERSION,
        generators[0].genus if generators else genus,
        generators[0].modulus if generators else modulus,
        generator_hash(generators),
    )
    if (magic, version, genus, modulus, genhash) != expected:
        logging.warning("Cache file %s does not match the request", path)
        return None

    n = 2 * genus
    payload = np.frombuffer(raw, dtype=np.uint8, offset=HEADER.size)
    if payload.size != count * n * n:
        logging.warning("Cache file %s has a short payload; ignoring it", path)
        return None

    stack = payload.astype(np.int64).reshape(count, n, n)
    shell = GroupTable(genus, modulus, np.empty(0, dtype=np.int64))
    keys = np.sort(shell.pack(stack))
    logging.info("Loaded %d cached elements from %s", count, path)
    return GroupTable(genus, modulus, keys, generators)


def cached_closure(
    generators: Sequence[ModMat],
    directory: str | Path,
    cap: int = BFS_BUDGET
) -> GroupTable:
    """closure_bfs backed by the binary cache in `directory`."""
    generators = tuple(generators)
    genus, modulus = generators[0].genus, generators[0].modulus
    path = cache_path(directory, genus, modulus, generators)

    table = load_table(path, generators)
    if table is not None:
        return table

    table = closure_bfs(generators, cap)
    save_table(table, path)
    return table
