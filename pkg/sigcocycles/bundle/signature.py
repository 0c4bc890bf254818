"""
Filename: signature.py
Author: William Bowley
Version: 2.0
Date: 2026-10-10

Description:
    Signature of a surface bundle over a surface from its
    symplectic monodromy, by two routes:

    - sum formula: the decoration picked up by one lifted
      commutator is tau(alpha, beta alpha^-1 beta^-1) for the
      Meyer cocycle, and gluing the commutator boundaries adds
      tau(gamma~_i, gamma_{i+1}); the signature is minus the total.
    - product of lifts in Z x_tau Sp(2g, Z).

    Both equal minus the evaluation of the Meyer class on the
    fundamental class of the base.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from sigcocycles.bundle.extension import (
    CoeffGroup,
    ExtContext,
    ExtElement,
    as_cocycle,
    ext_commutator,
    ext_identity,
    lift
)
from sigcocycles.bundle.monodromy import Monodromy, is_closed, relator
from sigcocycles.core.symplectic import SpMat
from sigcocycles.domain.constants import SUPPORTED_SIGNATURE_MODULI
from sigcocycles.domain.definitions import SignatureReport
from sigcocycles.domain.errors import (
    NotClosedError,
    UnsupportedModulusError
)
from sigcocycles.domain.library.manager import default_library
from sigcocycles.meyer.cocycle_interface import BaseCocycle
from sigcocycles.meyer.cocycles import MeyerCocycle, meyer_cocycle


@dataclass(frozen=True)
class ResidueReport:
    """sigma mod N, plus sigma/4 mod 2 when N = 8."""
    modulus: int
    residue: int
    quarter_mod2: Optional[int] = None

    def as_dict(self) -> dict[str, int | None]:
        return {
            "modulus": self.modulus,
            "residue": self.residue,
            "quarter_mod2": self.quarter_mod2,
        }


def _require_closed(monodromy: Monodromy) -> None:
    if not is_closed(monodromy):
        msg = (
            f"Monodromy of base genus {monodromy.base_genus} is not closed: "
            f"relator {relator(monodromy)}"
        )
        logging.error(msg)
        raise NotClosedError(f"{__name__}: {msg}")


def bundle_signature(monodromy: Monodromy, allow_open: bool = False) -> int:
    """
    sigma(E) = - sum_i tau(alpha_i, beta_i alpha_i^-1 beta_i^-1)
               - sum_{i<h} tau(gamma~_i, gamma_{i+1})

    Args:
        monodromy: monodromy data
        allow_open: accept a non-closed monodromy (bundle over the
            surface with one boundary circle); same sum

    Raises:
        NotClosedError: non-closed input without allow_open
    """
    if not allow_open:
        _require_closed(monodromy)

    total = 0
    for alpha, beta in monodromy.pairs:
        total += meyer_cocycle(alpha, beta @ alpha.inverse() @ beta.inverse())

    commutators = monodromy.commutators()
    partial = monodromy.partial_products()
    for i in range(monodromy.base_genus - 1):
        total += meyer_cocycle(partial[i], commutators[i + 1])

    logging.debug(
        "bundle signature %d (g=%d, h=%d)",
        -total, monodromy.fiber_genus, monodromy.base_genus
    )
    return -total


def _commutator_product(
    context: ExtContext,
    monodromy: Monodromy
) -> ExtElement:
    product = ext_identity(context, monodromy.fiber_genus)
    for alpha, beta in monodromy.pairs:
        product = product * ext_commutator(
            lift(context, alpha), lift(context, beta)
        )
    return product


def bundle_signature_lifts(monodromy: Monodromy) -> int:
    """
    Minus the decoration of prod (0,u)(0,v)(0,u^-1)(0,v^-1) in
    Z x_tau Sp(2g, Z), tau the Meyer cocycle.

    Raises:
        NotClosedError: the group component is not the identity
    """
    context = ExtContext(MeyerCocycle(), CoeffGroup(0))
    product = ext_identity(context, monodromy.fiber_genus)
    for alpha, beta in monodromy.pairs:
        for factor in (alpha, beta, alpha.inverse(), beta.inverse()):
            product = product * lift(context, factor)

    if not product.elem.is_identity():
        msg = "Product of lifts does not close up; monodromy is not closed"
        logging.error(msg)
        raise NotClosedError(f"{__name__}: {msg}")
    return -product.decoration


def evaluate_class(
    tau: BaseCocycle | Callable[[SpMat, SpMat], int],
    monodromy: Monodromy,
    coeff: CoeffGroup
) -> int:
    """
    Evaluates the class of tau on the closed base: the
    A-decoration of the product of lifted commutators in
    A x_tau Sp(2g, Z), measured against the identity element
    (the two agree for normalized cocycles).

    Raises:
        NotClosedError: monodromy not closed
    """
    _require_closed(monodromy)
    context = ExtContext(as_cocycle(tau), coeff)
    product = _commutator_product(context, monodromy)
    identity = ext_identity(context, monodromy.fiber_genus)
    return coeff.reduce(product.decoration - identity.decoration)


def signature_mod(monodromy: Monodromy, modulus: int) -> ResidueReport:
    """
    sigma(E) mod N for N in {2, 4, 8}.

    Raises:
        UnsupportedModulusError: other N
        NotClosedError: monodromy not closed
    """
    if modulus not in SUPPORTED_SIGNATURE_MODULI:
        maximal = default_library().maximal_signature_modulus
        msg = (
            f"Signature reduction mod {modulus} is not supported; finite "
            f"cyclic quotients of the signature class factor through "
            f"Z/2, Z/4 or Z/{maximal}"
        )
        logging.error(msg)
        raise UnsupportedModulusError(f"{__name__}: {msg}")

    sigma = bundle_signature(monodromy)
    quarter = None
    if modulus == 8:
        if sigma % 4:
            logging.warning(
                "Closed bundle signature %d not divisible by 4", sigma
            )
        else:
            quarter = (sigma // 4) % 2
    return ResidueReport(modulus, sigma % modulus, quarter)


def signature_report(
    monodromy: Monodromy,
    allow_open: bool = False
) -> SignatureReport:
    """Signature with its mod 4 and mod 8 residues."""
    closed = is_closed(monodromy)
    sigma = bundle_signature(monodromy, allow_open=allow_open)
    return SignatureReport(sigma, closed, sigma % 4, sigma % 8)
