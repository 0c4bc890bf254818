"""
File: test_enumeration.py
Author: William Bowley
Version: 2.0
Date: 2026-10-16

Description:
    Tests breadth-first enumeration and the subgroup checks within
    congruence/enumeration, the binary cache within
    congruence/cache and the order table within congruence/export

    The Sp(4, Z/4) enumeration (737280 elements) only runs when
    SIGCOCYCLES_SLOW=1.
"""

import os
import tempfile
import unittest
from pathlib import Path

import numpy as np

from sigcocycles.congruence.cache import (
    HEADER,
    cache_path,
    cached_closure,
    load_table,
    save_table
)
from sigcocycles.congruence.enumeration import (
    Subset,
    closure_bfs,
    is_elementary_abelian,
    is_normal,
    level_two_generators,
    quotient_center_order,
    quotient_cosets,
    standard_generators,
    subgroup_filter
)
from sigcocycles.congruence.export import (
    enumerated_order,
    order_row,
    rows_to_csv
)
from sigcocycles.congruence.membership import level_mask, y_mask
from sigcocycles.congruence.modular import ModMat, reduce_mod
from sigcocycles.core.symplectic import quarter_turn
from sigcocycles.domain.errors import BudgetExceededError, InvalidInputError

SLOW = os.environ.get("SIGCOCYCLES_SLOW") == "1"


class Closure(unittest.TestCase):
    """
    Tests congruence/enumeration -> closure_bfs
    """
    def test_no_generators(self) -> None:
        table = closure_bfs([], genus=1, modulus=2)
        self.assertEqual(table.size, 1)
        self.assertIn(ModMat.identity(1, 2), table)

    def test_no_generators_needs_shape(self) -> None:
        with self.assertRaises(InvalidInputError):
            closure_bfs([])

    def test_sp2_mod2(self) -> None:
        self.assertEqual(closure_bfs(standard_generators(1, 2)).size, 6)

    def test_sp2_mod4(self) -> None:
        self.assertEqual(closure_bfs(standard_generators(1, 4)).size, 48)

    def test_sp4_mod2(self) -> None:
        self.assertEqual(closure_bfs(standard_generators(2, 2)).size, 720)

    @unittest.skipUnless(SLOW, "set SIGCOCYCLES_SLOW=1")
    def test_sp4_mod4(self) -> None:
        """
        Tests |Sp(4, Z/4)| = 737280 and |Y| = 32 by enumeration
        """
        table = closure_bfs(standard_generators(2, 4))
        self.assertEqual(table.size, 737280)
        self.assertEqual(subgroup_filter(table, y_mask).count, 32)

    def test_quarter_turn_alone(self) -> None:
        gen = reduce_mod(quarter_turn(), 4)
        self.assertEqual(closure_bfs([gen]).size, 4)

    def test_budget(self) -> None:
        with self.assertRaises(BudgetExceededError) as context:
            closure_bfs(standard_generators(1, 4), cap=10)
        self.assertLessEqual(context.exception.partial_count, 10)
        self.assertGreater(context.exception.partial_count, 0)

    def test_mixed_generators(self) -> None:
        with self.assertRaises(InvalidInputError):
            closure_bfs([ModMat.identity(1, 2), ModMat.identity(1, 4)])

    def test_non_symplectic_generator(self) -> None:
        with self.assertRaises(InvalidInputError):
            closure_bfs([ModMat(1, 4, (2, 0, 0, 1))])

    def test_membership(self) -> None:
        table = closure_bfs(standard_generators(1, 4))
        self.assertIn(reduce_mod(quarter_turn(), 4), table)
        self.assertNotIn(ModMat.identity(1, 2), table)
        self.assertEqual(len(table.elements), 48)
        self.assertIn(ModMat.identity(1, 4).key, table.elements)

    def test_keys_sorted(self) -> None:
        table = closure_bfs(standard_generators(1, 4))
        self.assertTrue(np.all(np.diff(table.keys) > 0))


class Subgroups(unittest.TestCase):
    """
    Tests congruence/enumeration -> subgroup and quotient checks
    """
    @classmethod
    def setUpClass(cls) -> None:
        cls.sp2 = closure_bfs(standard_generators(1, 4))

    def test_level_two_kernel(self) -> None:
        kernel = subgroup_filter(self.sp2, lambda s: level_mask(s, 2))
        self.assertEqual(kernel.count, 8)
        self.assertTrue(is_normal(self.sp2, kernel))
        self.assertTrue(is_elementary_abelian(kernel, self.sp2))

    def test_y_is_trivial_for_genus_one(self) -> None:
        y_subset = subgroup_filter(self.sp2, y_mask)
        self.assertEqual(y_subset.count, 1)
        self.assertTrue(is_normal(self.sp2, y_subset))

    def test_whole_group_is_not_abelian(self) -> None:
        self.assertFalse(
            is_elementary_abelian(Subset(self.sp2.keys), self.sp2)
        )

    def test_quotient_by_kernel(self) -> None:
        """
        Tests Sp(2, Z/4) modulo the level-two kernel has 6 cosets
        """
        kernel = subgroup_filter(self.sp2, lambda s: level_mask(s, 2))
        self.assertEqual(quotient_cosets(self.sp2, kernel).count, 6)

    def test_center(self) -> None:
        """
        Tests the center of Sp(2, Z/4) is {I, -I}
        """
        y_subset = subgroup_filter(self.sp2, y_mask)
        self.assertEqual(quotient_center_order(self.sp2, y_subset), 2)

    def test_level_two_image(self) -> None:
        for g, image_order, y_order in ((1, 8, 1), (2, 1024, 32)):
            image = closure_bfs(level_two_generators(g, 4))
            y_subset = subgroup_filter(image, y_mask)
            cosets = quotient_cosets(image, y_subset)

            self.assertEqual(image.size, image_order)
            self.assertEqual(y_subset.count, y_order)
            self.assertEqual(cosets.count, 2 ** (2 * g + 1))
            self.assertTrue(
                is_normal(image, y_subset, standard_generators(g, 4))
            )
            self.assertTrue(
                is_elementary_abelian(
                    Subset(image.keys), image, modulo=y_subset
                )
            )


class BinaryCache(unittest.TestCase):
    """
    Tests congruence/cache
    """
    def setUp(self) -> None:
        self.directory = tempfile.TemporaryDirectory()
        self.generators = standard_generators(1, 4)

    def tearDown(self) -> None:
        self.directory.cleanup()

    def test_file_name(self) -> None:
        path = cache_path(self.directory.name, 1, 4, self.generators)
        self.assertTrue(path.name.startswith("sp2_mod4_"))
        self.assertEqual(path.suffix, ".sgtb")

    def test_save_and_load(self) -> None:
        table = closure_bfs(self.generators)
        path = save_table(table, Path(self.directory.name) / "t.sgtb")
        self.assertEqual(
            path.stat().st_size, HEADER.size + table.size * 4
        )
        loaded = load_table(path, self.generators)
        self.assertTrue(np.array_equal(loaded.keys, table.keys))

    def test_other_generators_ignored(self) -> None:
        table = closure_bfs(self.generators)
        path = save_table(table, Path(self.directory.name) / "t.sgtb")
        with self.assertLogs(level="WARNING"):
            self.assertIsNone(load_table(path, self.generators[:2]))

    def test_truncated_file(self) -> None:
        path = Path(self.directory.name) / "short.sgtb"
        path.write_bytes(b"SGTB")
        with self.assertLogs(level="WARNING"):
            self.assertIsNone(load_table(path, self.generators))

    def test_missing_file(self) -> None:
        path = Path(self.directory.name) / "absent.sgtb"
        self.assertIsNone(load_table(path, self.generators))

    def test_cached_closure(self) -> None:
        first = cached_closure(self.generators, self.directory.name)
        path = cache_path(self.directory.name, 1, 4, self.generators)
        self.assertTrue(path.is_file())
        second = cached_closure(self.generators, self.directory.name)
        self.assertTrue(np.array_equal(first.keys, second.keys))
        self.assertEqual(second.size, 48)


class OrderTable(unittest.TestCase):
    """
    Tests congruence/export
    """
    def test_formula_only(self) -> None:
        row = order_row(2, "sp_mod4")
        self.assertEqual(row.formula_order, 737280)
        self.assertIsNone(row.enumerated_order)
        self.assertIsNone(row.matches)

    def test_enumerated_genus_one(self) -> None:
        for which in ("sp_mod2", "sp_mod4", "H", "Y", "lie_sp_mod2"):
            row = order_row(1, which, enumerate_=True)
            self.assertTrue(row.matches, which)

    def test_enumerated_genus_two_mod_two(self) -> None:
        self.assertEqual(enumerated_order(2, "sp_mod2"), 720)

    def test_shared_table(self) -> None:
        table = closure_bfs(standard_generators(1, 4))
        self.assertEqual(enumerated_order(1, "H", table=table), 48)

    def test_csv(self) -> None:
        rows = [order_row(1, "sp_mod2"), order_row(1, "Y", True)]
        text = rows_to_csv(rows)
        self.assertEqual(
            text,
            "g,modulus,which,formula_order,enumerated_order\n"
            "1,2,sp_mod2,6,\n"
            "1,4,Y,1,1\n",
        )


if __name__ == "__main__":
    unittest.main()
