"""
Filename: cocycle_interface.py
Author: William Bowley
Version: 2.0
Date: 2026-10-08
Description:
    Abstract base class for integer 2-cocycles on Sp(2g).

    - BaseCocycle: evaluation plus identification
"""

from abc import ABC, abstractmethod

from sigcocycles.core.symplectic import SpMat
from sigcocycles.domain.definitions import CocycleKind


class BaseCocycle(ABC):
    """
    Core interface for every cocycle evaluator.

    Instances are callables tau(alpha, beta) -> int and are
    compared by `identifier`, which names the cocycle inside
    extension contexts.
    """
    kind: CocycleKind

    @abstractmethod
    def __call__(self, alpha: SpMat, beta: SpMat) -> int:
        """
        Evaluates the cocycle on a pair of equal-genus elements.
        """

    @property
    @abstractmethod
    def identifier(self) -> str:
        """
        Stable name used to match extension contexts.
        """

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaseCocycle):
            return NotImplemented
        return self.identifier == other.identifier

    def __hash__(self) -> int:
        return hash(self.identifier)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.identifier})"
