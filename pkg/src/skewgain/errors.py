"""Exception types raised across the package."""
from __future__ import annotations


class SkewGainError(Exception):
    """Base class for every error this package raises on purpose."""

    @property
    def name(self) -> str:
        return type(self).__name__


class GainParseError(SkewGainError, ValueError):
    pass


class UnknownBackend(SkewGainError, ValueError):
    pass


class GraphError(SkewGainError, ValueError):
    """Invalid graph input; ``edge`` is the index of the offending edge."""

    def __init__(self, message: str, edge: int | None = None):
        super().__init__(message)
        self.edge = edge


class ZeroGain(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class BadVertexIndex(GraphError):
    pass


class BadParameters(SkewGainError, ValueError):
    pass


class ZeroArgument(SkewGainError, ValueError):
    pass


class NotSquare(SkewGainError, ValueError):
    pass


class NonConvergence(SkewGainError, ArithmeticError):
    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3g})")
        self.best_residual = best_residual


class NotCompleteBipartite(SkewGainError, ValueError):
    pass


class NotCompleteBipartiteBalanced(NotCompleteBipartite):
    pass


class NotRegular(SkewGainError, ValueError):
    pass


class NotACycle(SkewGainError, ValueError):
    pass


class NotAStar(SkewGainError, ValueError):
    pass


class FamilyMismatch(SkewGainError, ValueError):
    pass


class NoClosedForm(SkewGainError, ValueError):
    pass


class CapExceeded(SkewGainError, RuntimeError):
    pass
