"""Exception hierarchy shared by the CLI, the API routes and the core modules."""
from typing import List, Optional


class TwistCdcError(Exception):
    """Base class for every error raised on purpose by this package."""


class GraphInputError(TwistCdcError, ValueError):
    """Malformed graph, embedding or document input."""


class CapExceededError(TwistCdcError, ValueError):
    """An enumeration or search would exceed its configured cap."""


class TracingError(TwistCdcError, AssertionError):
    """Face tracing broke one of its own invariants (implementation bug)."""


class ClaimFalsifiedError(TwistCdcError, AssertionError):
    """A checked structural claim failed on a concrete input."""

    def __init__(self, message: str, violations: Optional[List] = None):
        super().__init__(message)
        self.violations = list(violations or [])
