"""
Filename: export.py
Author: William Bowley
Version: 2.0
Date: 2026-10-12

Description:
    Order tables: closed formula next to the enumerated order,
    as records or CSV text.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from sigcocycles.congruence.enumeration import (
    GroupTable,
    closure_bfs,
    standard_generators,
    subgroup_filter
)
from sigcocycles.congruence.membership import y_mask
from sigcocycles.congruence.orders import (
    group_order_formula,
    modulus_of,
    parse_order_kind
)
from sigcocycles.domain.constants import BFS_BUDGET
from sigcocycles.domain.definitions import GroupOrder

CSV_FIELDS = ("g", "modulus", "which", "formula_order", "enumerated_order")


@dataclass(frozen=True)
class OrderRow:
    g: int
    modulus: int
    which: str
    formula_order: int
    enumerated_order: Optional[int] = None

    @property
    def matches(self) -> bool | None:
        if self.enumerated_order is None:
            return None
        return self.formula_order == self.enumerated_order


def enumerated_order(
    g: int,
    which: str | GroupOrder,
    cap: int = BFS_BUDGET,
    table: Optional[GroupTable] = None
) -> int:
    """
    Order of the named group obtained by enumeration.

    The mod-4 table is shared between sp_mod4, Y, H and
    lie_sp_mod2 when passed in.
    """
    kind = parse_order_kind(which)
    modulus = modulus_of(kind)
    if table is None or (table.genus, table.modulus) != (g, modulus):
        table = closure_bfs(standard_generators(g, modulus), cap)

    match kind:
        case GroupOrder.SP_MOD2 | GroupOrder.SP_MOD4:
            return table.size
        case GroupOrder.Y:
            return subgroup_filter(table, y_mask).count
        case GroupOrder.H:
            return table.size // subgroup_filter(table, y_mask).count
        case GroupOrder.LIE_SP_MOD2:
            # Kernel of reduction mod 2 inside Sp(2g, Z/4).
            mod_two = closure_bfs(standard_generators(g, 2), cap)
            return table.size // mod_two.size


def order_row(
    g: int,
    which: str | GroupOrder,
    enumerate_: bool = False,
    cap: int = BFS_BUDGET,
    table: Optional[GroupTable] = None
) -> OrderRow:
    kind = parse_order_kind(which)
    counted = enumerated_order(g, kind, cap, table) if enumerate_ else None
    row = OrderRow(
        g, modulus_of(kind), kind.value, group_order_formula(g, kind), counted
    )
    if row.matches is False:
        logging.warning(
            "Order mismatch for %s at g=%d: formula %d, enumerated %d",
            kind.value, g, row.formula_order, counted
        )
    return row


def rows_to_csv(rows: Iterable[OrderRow]) -> str:
    """CSV text with a header line and '\\n' line endings."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        if record["enumerated_order"] is None:
            record["enumerated_order"] = ""
        writer.writerow(record)
    return buffer.getvalue()
