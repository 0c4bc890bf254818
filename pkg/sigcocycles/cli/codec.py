"""
Filename: codec.py
Author: William Bowley
Version: 2.0
Date: 2026-10-18

Description:
    JSON shapes read and written by the command line.

    Rationals are written as "p/q" strings (integers as plain
    strings) and read from integers or such strings. Floats are
    rejected.

    Matrix      {"rows": R, "cols": C, "entries": [[row], ...]}
                (also read: [[row], ...] or {"matrix": [[row], ...]})
    Lagrangian  {"g": g, "basis": Matrix}      (2g x g basis)
                or {"columns": [[vector], ...]}  (basis vectors)
                or {"direction": [p, q]}         (a line, g = 1)
    Monodromy   {"g": g, "h": h, "pairs": [[Matrix, Matrix], ...]}
                (g and h optional on input, checked when present)
    Cocycle     {"m": m, "cochain": {"breaks": [...], "values": [...]}}
                or {"a_breaks": [...], "b_breaks": [...],
                    "diag": [...], "cells": [[i, j, k, value], ...]}
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from sigcocycles.bundle.monodromy import Monodromy
from sigcocycles.circle.cochain import (
    NiceCochain,
    PiecewiseCocycle,
    from_standard_plus_coboundary
)
from sigcocycles.cli.utils import require
from sigcocycles.core.matrix import Mat
from sigcocycles.core.rational import format_rat
from sigcocycles.core.symplectic import SpMat
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.maslov.lagrangian import (
    Lagrangian,
    lagrangian_from_basis,
    lagrangian_from_columns,
    line
)


def read_json(path: str | Path) -> Any:
    """
    Raises:
        InvalidInputError: unreadable file or malformed JSON
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)
    except (OSError, json.JSONDecodeError) as error:
        msg = f"Cannot read JSON from '{path}': {error}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}") from error


def dumps(payload: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(payload, indent=2, sort_keys=True)


def _require_type(value: Any, kind: type | tuple, label: str) -> Any:
    if not isinstance(value, kind) or isinstance(value, bool):
        msg = f"Expected {label}, got {type(value).__name__}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return value


def _mismatch(msg: str) -> None:
    logging.error(msg)
    raise InvalidInputError(f"{__name__}: {msg}")


def _matrix_rows(data: Any) -> list[list[Any]]:
    rows = _require_type(data, list, "a list of matrix rows")
    for row in rows:
        _require_type(row, list, "a matrix row")
    return rows


def _decode_sized(data: dict[str, Any]) -> Mat:
    """{"rows": R, "cols": C, "entries": [[...], ...]}"""
    nrows = _require_type(require("rows", data), int, "an integer row count")
    ncols = _require_type(require("cols", data), int, "an integer col count")
    entries = _matrix_rows(require("entries", data))
    widths = {len(row) for row in entries}
    if len(entries) != nrows or widths - {ncols}:
        _mismatch(
            f"Matrix declared {nrows}x{ncols} but entries have "
            f"{len(entries)} rows of widths {sorted(widths)}"
        )
    return Mat(entries, ncols)


def decode_matrix(data: Any) -> Mat:
    if isinstance(data, dict):
        if "entries" in data or "rows" in data:
            return _decode_sized(data)
        data = require("matrix", data)
    return Mat(_matrix_rows(data))


def encode_matrix(mat: Mat) -> dict[str, Any]:
    return {
        "rows": mat.nrows,
        "cols": mat.ncols,
        "entries": [[format_rat(x) for x in row] for row in mat.tolist()],
    }


def decode_symplectic(data: Any) -> SpMat:
    """Raises NotSymplecticError for a non-symplectic matrix."""
    return SpMat.from_mat(decode_matrix(data))


def decode_lagrangian(data: Any) -> Lagrangian:
    data = _require_type(data, dict, "a lagrangian object")
    if "direction" in data:
        direction = _require_type(data["direction"], list, "[p, q]")
        if len(direction) != 2:
            msg = f"A direction has two entries, got {len(direction)}"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        return line(*direction)

    if "basis" in data:
        g = _require_type(require("g", data), int, "an integer genus g")
        basis = decode_matrix(data["basis"])
        if g < 1 or basis.shape != (2 * g, g):
            _mismatch(
                f"A genus {g} lagrangian basis is {2 * g}x{g}, "
                f"got {basis.shape}"
            )
        return lagrangian_from_basis(basis, g)

    columns = _require_type(require("columns", data), list, "basis columns")
    if not columns:
        msg = "A lagrangian needs at least one basis column"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    vectors = [_require_type(column, list, "a column") for column in columns]
    if len(vectors[0]) % 2:
        msg = f"Basis vectors must have even length, got {len(vectors[0])}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return lagrangian_from_columns(vectors, len(vectors[0]) // 2)


def encode_lagrangian(lag: Lagrangian) -> dict[str, Any]:
    return {"g": lag.genus, "basis": encode_matrix(lag.basis)}


def decode_monodromy(data: Any) -> Monodromy:
    """
    Raises:
        InvalidInputError: malformed pairs, or a declared g or h
            that disagrees with the pairs
    """
    data = _require_type(data, dict, "a monodromy object")
    pairs = _require_type(require("pairs", data), list, "a list of pairs")
    decoded = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            _mismatch("Each monodromy pair is [alpha, beta]")
        alpha, beta = pair
        decoded.append((decode_symplectic(alpha), decode_symplectic(beta)))
    monodromy = Monodromy.from_pairs(decoded)

    if "h" in data:
        h = _require_type(data["h"], int, "an integer base genus h")
        if h != monodromy.base_genus:
            _mismatch(f"Declared h={h} but found {monodromy.base_genus} pairs")
    if "g" in data:
        g = _require_type(data["g"], int, "an integer fiber genus g")
        if g != monodromy.fiber_genus:
            _mismatch(
                f"Declared g={g} but matrices have genus "
                f"{monodromy.fiber_genus}"
            )
    return monodromy


def encode_monodromy(monodromy: Monodromy) -> dict[str, Any]:
    return {
        "g": monodromy.fiber_genus,
        "h": monodromy.base_genus,
        "pairs": [
            [encode_matrix(alpha.mat), encode_matrix(beta.mat)]
            for alpha, beta in monodromy.pairs
        ]
    }


def decode_cocycle(data: Any) -> PiecewiseCocycle:
    data = _require_type(data, dict, "a cocycle object")
    if "cochain" in data:
        m = _require_type(data.get("m", 0), int, "an integer multiple m")
        cochain = _require_type(data["cochain"], dict, "a cochain object")
        f = NiceCochain(
            tuple(require("breaks", cochain)),
            tuple(
                _require_type(value, int, "an integer cochain value")
                for value in require("values", cochain)
            ),
        )
        return from_standard_plus_coboundary(m, f)

    cells = {}
    for entry in _require_type(require("cells", data), list, "cell list"):
        if not isinstance(entry, list) or len(entry) != 4:
            msg = "Each cell is [i, j, k, value]"
            logging.error(msg)
            raise InvalidInputError(f"{__name__}: {msg}")
        i, j, k, value = (
            _require_type(x, int, "an integer cell entry") for x in entry
        )
        cells[(i, j, k)] = value
    return PiecewiseCocycle(
        tuple(require("a_breaks", data)),
        tuple(require("b_breaks", data)),
        tuple(require("diag", data)),
        cells,
    )


def encode_cocycle(t: PiecewiseCocycle) -> dict[str, Any]:
    return {
        "a_breaks": [format_rat(x) for x in t.a_breaks],
        "b_breaks": [format_rat(x) for x in t.b_breaks],
        "diag": [format_rat(x) for x in t.diag_consts],
        "cells": [[*key, value] for key, value in sorted(t.cells.items())],
    }
