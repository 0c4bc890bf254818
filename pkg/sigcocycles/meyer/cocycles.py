"""
Filename: cocycles.py
Author: William Bowley
Version: 2.0
Date: 2026-10-08

Description:
    The Meyer cocycle (two independent routes) and the Maslov
    cocycle on Sp(2g, Q), with the cocycle identity check.

    Kernel route (canonical): for alpha, beta take
        K = ker [ alpha^-1 - I | beta - I ]      (pairs (x, y))
    and the bilinear form (x + y)^T J (I - beta) y' restricted to K.

    Graph route: the Wall–Maslov index of grph(1), grph(alpha),
    grph(alpha beta) in the doubled space, times the orientation
    sign stored in the convention lock file.
"""

import logging
from typing import Callable, Optional

from sigcocycles.core.matrix import Mat, block, hstack, kernel_basis
from sigcocycles.core.signature import signature
from sigcocycles.core.symplectic import SpMat, form_matrix
from sigcocycles.domain.definitions import CocycleKind
from sigcocycles.domain.errors import ConstructionError, InvalidInputError
from sigcocycles.domain.library.manager import default_library
from sigcocycles.maslov.index import wall_maslov
from sigcocycles.maslov.lagrangian import (
    Lagrangian,
    default_lagrangian,
    graph_lagrangian
)
from sigcocycles.meyer.cocycle_interface import BaseCocycle

CocycleFn = Callable[[SpMat, SpMat], int]


def _require_same_genus(*elements: SpMat) -> int:
    genera = {element.genus for element in elements}
    if len(genera) != 1:
        msg = f"Genus mismatch among arguments: {sorted(genera)}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return genera.pop()


def meyer_form(alpha: SpMat, beta: SpMat) -> Mat:
    """Gram matrix of the Meyer form on ker[alpha^-1 - I | beta - I]."""
    g = _require_same_genus(alpha, beta)
    n = 2 * g
    ident = Mat.identity(n)

    constraint = hstack(alpha.inverse().mat - ident, beta.mat - ident)
    kernel = kernel_basis(constraint)

    twisted = form_matrix(g) @ (ident - beta.mat)
    zero = Mat.zeros(n, n)
    bilinear = block([[zero, twisted], [zero, twisted]])

    gram = kernel.T @ bilinear @ kernel
    if not gram.is_symmetric():
        msg = f"Meyer form is not symmetric for {alpha}, {beta}"
        logging.error(msg)
        raise ConstructionError(f"{__name__}: {msg}")
    return gram


def meyer_cocycle(alpha: SpMat, beta: SpMat) -> int:
    """
    Meyer cocycle tau_g(alpha, beta) by the kernel route.

    Raises:
        InvalidInputError: genus mismatch
        ConstructionError: asymmetric restricted form
    """
    value = signature(meyer_form(alpha, beta))
    if alpha.genus >= 2 and value % 2:
        logging.warning(
            "Odd Meyer value %d observed at genus %d", value, alpha.genus
        )
    return value


def meyer_via_graphs(alpha: SpMat, beta: SpMat) -> int:
    """
    Meyer cocycle as the Wall–Maslov index of three graphs.
    """
    g = _require_same_genus(alpha, beta)
    orientation = default_library().sign("meyer", "graph_orientation")
    index = wall_maslov(
        graph_lagrangian(SpMat.identity(g)),
        graph_lagrangian(alpha),
        graph_lagrangian(alpha @ beta),
    )
    return orientation * index


def maslov_cocycle(
    alpha: SpMat,
    beta: SpMat,
    lagrangian: Optional[Lagrangian] = None
) -> int:
    """
    Maslov cocycle tau(L, alpha L, alpha beta L).

    Args:
        lagrangian: base lagrangian, span{v_1..v_g} when omitted.
            Other choices give cohomologous cocycles, not equal values.
    """
    g = _require_same_genus(alpha, beta)
    if lagrangian is None:
        lagrangian = default_lagrangian(g)
    elif lagrangian.genus != g:
        msg = f"Lagrangian of genus {lagrangian.genus} for genus {g} pair"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")

    return wall_maslov(
        lagrangian,
        lagrangian.image(alpha),
        lagrangian.image(alpha @ beta),
    )


def check_cocycle_identity(
    tau: CocycleFn,
    a: SpMat,
    b: SpMat,
    c: SpMat
) -> bool:
    """
    tau(a, b) + tau(ab, c) == tau(b, c) + tau(a, bc)
    """
    _require_same_genus(a, b, c)
    left = tau(a, b) + tau(a @ b, c)
    right = tau(b, c) + tau(a, b @ c)
    if left != right:
        logging.debug("cocycle identity fails: %d != %d", left, right)
    return left == right


class MeyerCocycle(BaseCocycle):
    """Meyer cocycle, kernel route."""
    kind = CocycleKind.MEYER

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        return meyer_cocycle(alpha, beta)

    @property
    def identifier(self) -> str:
        return "meyer"


class MeyerGraphCocycle(BaseCocycle):
    """Meyer cocycle, graph route."""
    kind = CocycleKind.MEYER

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        return meyer_via_graphs(alpha, beta)

    @property
    def identifier(self) -> str:
        # Same function as the kernel route, so extensions may mix them.
        return "meyer"


class MaslovCocycle(BaseCocycle):
    """Maslov cocycle for a fixed base lagrangian."""
    kind = CocycleKind.MASLOV

    def __init__(self, lagrangian: Optional[Lagrangian] = None) -> None:
        self.lagrangian = lagrangian

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        return maslov_cocycle(alpha, beta, self.lagrangian)

    @property
    def identifier(self) -> str:
        if self.lagrangian is None:
            return "maslov"
        entries = ",".join(str(x) for x in self.lagrangian.basis.entries)
        return f"maslov[{entries}]"


class ZeroCocycle(BaseCocycle):
    """The trivial cocycle."""
    kind = CocycleKind.ZERO

    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        _require_same_genus(alpha, beta)
        return 0

    @property
    def identifier(self) -> str:
        return "zero"


def cocycle_by_kind(kind: CocycleKind) -> BaseCocycle:
    match kind:
        case CocycleKind.MEYER:
            return MeyerCocycle()
        case CocycleKind.MASLOV:
            return MaslovCocycle()
        case CocycleKind.ZERO:
            return ZeroCocycle()
        case _:
            raise ValueError(f"Unknown cocycle kind {kind}")
