"""
Error Types

Exceptions raised by the catalog, field, solver, flow and oracle modules.
Every error derives from HermannFlowError so the command line can map the
whole family onto a single exit code.
"""

from typing import Any, Optional


class HermannFlowError(Exception):
    """Base exception for orbit-space computations."""
    pass


class CatalogIntegrityError(HermannFlowError):
    """Custom exception for catalog rows that cannot produce an orbit simplex."""
    pass


class UnknownActionError(HermannFlowError):
    """Custom exception for action ids missing from the catalog."""
    pass


class OutsideDomainError(HermannFlowError):
    """Raised when a point lies beyond the closed orbit simplex."""

    def __init__(self, message: str, wall: Optional[Any] = None):
        super().__init__(message)
        self.wall = wall


class WallContactError(HermannFlowError):
    """Raised when an evaluation that needs the open simplex touches a wall."""

    def __init__(self, message: str, wall: Optional[Any] = None):
        super().__init__(message)
        self.wall = wall


class NoConvergenceError(HermannFlowError):
    """Raised when an equilibrium iteration exhausts its budget."""

    def __init__(self, message: str, iterations: int = 0,
                 residual: float = float("nan"), location: Optional[Any] = None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual
        self.location = location


class StepCollapseError(HermannFlowError):
    """Raised when the flow step size underflows before any stop condition."""

    def __init__(self, message: str, trajectory: Optional[Any] = None):
        super().__init__(message)
        self.trajectory = trajectory


class NotCollapsedError(HermannFlowError):
    """Raised when collapse diagnostics are requested for a run that never hit a wall."""
    pass


class MissingGoldenError(HermannFlowError):
    """Raised when an action carries no printed equilibrium values."""
    pass


class UnsupportedError(HermannFlowError):
    """Raised when an action has no transcribed explicit formula."""
    pass
