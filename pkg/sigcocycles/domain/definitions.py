"""
Filename: definitions.py
Author: William Bowley
Version: 2.0
Date: 2026-10-04

Description:
    This file defines enums and small records that are used
    throughout the package.

    These are independent of the individual computations.
"""

from dataclasses import dataclass
from enum import Enum, auto


class GroupOrder(str, Enum):
    """
    Finite groups whose orders have a closed formula.
    """
    SP_MOD2 = "sp_mod2"          # Sp(2g, Z/2)
    SP_MOD4 = "sp_mod4"          # Sp(2g, Z/4)
    H = "H"                      # Sp(2g, Z/4) modulo Y
    Y = "Y"                      # parity subgroup of Sp(2g, Z/4)
    LIE_SP_MOD2 = "lie_sp_mod2"  # Gamma(2g, 2) / Gamma(2g, 4)


class Membership(str, Enum):
    """
    Subgroup predicates exposed through the command line.
    """
    GAMMA_N = "gammaN"
    K = "K"
    Y = "Y"


class CocycleKind(Enum):
    """
    Integer cocycles on the symplectic group.
    """
    MEYER = auto()
    MASLOV = auto()
    ZERO = auto()
    CUSTOM = auto()      # user supplied callable


class MonodromyFamily(Enum):
    """
    Closed monodromy families used for sampling.
    """
    SWAPPED_PAIRS = auto()   # ((a, b), (b, a))
    EXPANDED = auto()        # ((b, a), (a, bc), (bcb^-1, bab^-1))
    TORSION_POWER = auto()   # commutators of an order-3 element, cubed


@dataclass(frozen=True)
class Inertia:
    """
    Inertia triple of a real symmetric form.
    """
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


@dataclass(frozen=True)
class SignatureReport:
    """
    Result record of a bundle signature computation.
    """
    sigma: int
    closed: bool
    sigma_mod4: int
    sigma_mod8: int

    def as_dict(self) -> dict[str, int | bool]:
        return {
            "sigma": self.sigma,
            "sigma_mod4": self.sigma_mod4,
            "sigma_mod8": self.sigma_mod8,
            "closed": self.closed,
        }
