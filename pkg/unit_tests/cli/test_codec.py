"""
File: test_codec.py
Author: William Bowley
Version: 2.0
Date: 2026-10-18

Description:
    Tests the JSON shapes read and written within cli/codec
"""

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from sigcocycles.bundle.monodromy import swapped_pairs
from sigcocycles.circle.cochain import standard_cocycle, tau1_picture
from sigcocycles.circle.covering import covering_number
from sigcocycles.cli.codec import (
    decode_cocycle,
    decode_lagrangian,
    decode_matrix,
    decode_monodromy,
    decode_symplectic,
    dumps,
    encode_cocycle,
    encode_lagrangian,
    encode_matrix,
    encode_monodromy,
    read_json
)
from sigcocycles.core.matrix import Mat
from sigcocycles.core.symplectic import quarter_turn, standard_t
from sigcocycles.domain.errors import (
    InvalidInputError,
    NotSymplecticError
)
from sigcocycles.maslov.lagrangian import default_lagrangian, line

S = {"rows": 2, "cols": 2, "entries": [[0, -1], [1, 0]]}
T = {"rows": 2, "cols": 2, "entries": [[1, 1], [0, 1]]}


class Files(unittest.TestCase):
    """
    Tests cli/codec -> read_json, dumps
    """
    def setUp(self) -> None:
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)

    def tearDown(self) -> None:
        self.directory.cleanup()

    def test_reads_document(self) -> None:
        path = self.root / "m.json"
        path.write_text('{"matrix": [[1, 0], [0, 1]]}', encoding="utf-8")
        self.assertEqual(read_json(path), {"matrix": [[1, 0], [0, 1]]})

    def test_malformed(self) -> None:
        path = self.root / "bad.json"
        path.write_text("[[1, 0], [0, 1]", encoding="utf-8")
        with self.assertRaises(InvalidInputError):
            read_json(path)

    def test_missing(self) -> None:
        with self.assertRaises(InvalidInputError):
            read_json(self.root / "absent.json")

    def test_dumps_is_sorted(self) -> None:
        expected = '{\n  "a": 2,\n  "b": 1\n}'
        self.assertEqual(dumps({"b": 1, "a": 2}), expected)


class Matrices(unittest.TestCase):
    """
    Tests cli/codec -> decode_matrix, decode_symplectic
    """
    def test_plain_rows(self) -> None:
        mat = decode_matrix([[1, "1/2"], [0, 1]])
        self.assertEqual(mat.entries[1], Fraction(1, 2))

    def test_wrapped_rows(self) -> None:
        self.assertEqual(
            decode_matrix({"matrix": [[0, -1], [1, 0]]}), quarter_turn().mat
        )

    def test_floats_rejected(self) -> None:
        with self.assertRaises(InvalidInputError):
            decode_matrix([[1.5, 0], [0, 1]])

    def test_not_rows(self) -> None:
        for data in ("I", [1, 0], {"rows": []}):
            with self.assertRaises((InvalidInputError, KeyError)):
                decode_matrix(data)

    def test_not_symplectic(self) -> None:
        with self.assertRaises(NotSymplecticError):
            decode_symplectic([[2, 0], [0, 1]])

    def test_sized_rows(self) -> None:
        data = {"rows": 2, "cols": 2, "entries": [[0, 1], [-1, 0]]}
        self.assertEqual(decode_matrix(data), Mat([[0, 1], [-1, 0]]))
        self.assertEqual(decode_symplectic(data), -quarter_turn())

    def test_sized_rectangular(self) -> None:
        data = {"rows": 2, "cols": 1, "entries": [["1/2"], [0]]}
        self.assertEqual(decode_matrix(data).shape, (2, 1))

    def test_size_mismatch(self) -> None:
        cases = [
            {"rows": 3, "cols": 2, "entries": [[0, 1], [-1, 0]]},
            {"rows": 2, "cols": 3, "entries": [[0, 1], [-1, 0]]},
            {"rows": 2, "cols": 2, "entries": [[0, 1], [-1]]},
            {"rows": "2", "cols": 2, "entries": [[0, 1], [-1, 0]]},
            {"rows": 2, "cols": 2, "entries": [0, 1, -1, 0]},
        ]
        for data in cases:
            with self.assertRaises(InvalidInputError):
                decode_matrix(data)

    def test_missing_entries(self) -> None:
        with self.assertRaises(KeyError):
            decode_matrix({"rows": 2, "cols": 2})

    def test_encode(self) -> None:
        mat = Mat([[1, "1/2"], [0, -3]])
        expected = {
            "rows": 2,
            "cols": 2,
            "entries": [["1", "1/2"], ["0", "-3"]],
        }
        self.assertEqual(encode_matrix(mat), expected)
        self.assertEqual(decode_matrix(encode_matrix(mat)), mat)


class Lagrangians(unittest.TestCase):
    """
    Tests cli/codec -> decode_lagrangian, encode_lagrangian
    """
    def test_direction(self) -> None:
        self.assertEqual(
            decode_lagrangian({"direction": [1, 1]}), line(1, 1)
        )

    def test_columns(self) -> None:
        lag = decode_lagrangian({"columns": [[0, 1]]})
        self.assertEqual(lag, line(0, 1))

    def test_basis(self) -> None:
        basis = {"rows": 2, "cols": 1, "entries": [[1], [1]]}
        self.assertEqual(
            decode_lagrangian({"g": 1, "basis": basis}), line(1, 1)
        )

    def test_basis_genus_two(self) -> None:
        basis = {
            "rows": 4,
            "cols": 2,
            "entries": [[2, 0], [1, 1], [0, 0], [0, 0]],
        }
        self.assertEqual(
            decode_lagrangian({"g": 2, "basis": basis}),
            default_lagrangian(2),
        )

    def test_encode(self) -> None:
        encoded = encode_lagrangian(line(1, 0))
        self.assertEqual(encoded["g"], 1)
        self.assertEqual(
            encoded["basis"], {"rows": 2, "cols": 1, "entries": [["1"], ["0"]]}
        )
        self.assertEqual(decode_lagrangian(encoded), line(1, 0))

    def test_bad_shapes(self) -> None:
        column = {"rows": 2, "cols": 1, "entries": [[1], [0]]}
        cases = [
            {"direction": [1, 0, 0]},
            {"columns": []},
            {"columns": [[1, 0, 0]]},
            [[1, 0]],
            {"g": 2, "basis": column},
            {"g": 0, "basis": column},
            {"g": "1", "basis": column},
            {"g": 1, "basis": {"rows": 2, "cols": 1, "entries": [[1, 0]]}},
        ]
        for data in cases:
            with self.assertRaises(InvalidInputError):
                decode_lagrangian(data)


class Monodromies(unittest.TestCase):
    """
    Tests cli/codec -> decode_monodromy, encode_monodromy
    """
    def test_round_trip(self) -> None:
        monodromy = swapped_pairs(quarter_turn(), standard_t())
        encoded = json.loads(json.dumps(encode_monodromy(monodromy)))
        self.assertEqual((encoded["g"], encoded["h"]), (1, 2))
        self.assertEqual(decode_monodromy(encoded), monodromy)

    def test_sized_pairs(self) -> None:
        data = {"g": 1, "h": 2, "pairs": [[S, T], [T, S]]}
        self.assertEqual(
            decode_monodromy(data),
            swapped_pairs(quarter_turn(), standard_t()),
        )

    def test_declared_sizes_checked(self) -> None:
        cases = [
            {"g": 1, "h": 1, "pairs": [[S, T], [T, S]]},
            {"g": 1, "h": 3, "pairs": [[S, T], [T, S]]},
            {"g": 2, "h": 2, "pairs": [[S, T], [T, S]]},
            {"g": "1", "pairs": [[S, T]]},
            {"h": 2.0, "pairs": [[S, T], [T, S]]},
        ]
        for data in cases:
            with self.assertRaises(InvalidInputError):
                decode_monodromy(data)

    def test_bad_pair(self) -> None:
        with self.assertRaises(InvalidInputError):
            decode_monodromy({"pairs": [[[[1, 0], [0, 1]]]]})

    def test_missing_pairs(self) -> None:
        with self.assertRaises(KeyError):
            decode_monodromy({"pair": []})


class Cocycles(unittest.TestCase):
    """
    Tests cli/codec -> decode_cocycle, encode_cocycle
    """
    def test_standard_plus_coboundary(self) -> None:
        cochain = {"breaks": ["0", "1/2"], "values": [-2, -2]}
        data = {"m": 4, "cochain": cochain}
        self.assertEqual(covering_number(decode_cocycle(data)), 4)

    def test_explicit_cells(self) -> None:
        data = {
            "a_breaks": ["0"],
            "b_breaks": ["0"],
            "diag": ["1"],
            "cells": [[0, 0, 0, 0], [0, 0, 1, 1]],
        }
        cocycle = decode_cocycle(data)
        self.assertEqual(cocycle.cells, standard_cocycle().cells)

    def test_encode(self) -> None:
        picture = tau1_picture()
        decoded = decode_cocycle(encode_cocycle(picture))
        self.assertEqual(decoded.cells, picture.cells)
        self.assertEqual(decoded.diag_consts, picture.diag_consts)

    def test_bad_cells(self) -> None:
        cases = [
            {"a_breaks": [0], "b_breaks": [0], "diag": [1], "cells": [[0]]},
            {"m": "4", "cochain": {"breaks": [0], "values": [0]}},
            {"m": 1, "cochain": {"breaks": [0], "values": ["1"]}},
        ]
        for data in cases:
            with self.assertRaises(InvalidInputError):
                decode_cocycle(data)


if __name__ == "__main__":
    unittest.main()
