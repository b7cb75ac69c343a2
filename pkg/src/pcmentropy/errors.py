"""Exception types shared across the package."""

from __future__ import annotations


class PcmError(Exception):
    """Base class for all domain errors raised by this package."""


class PcmValidationError(PcmError):
    """Matrix data violates the comparison-matrix invariants.

    Carries the full list of :class:`~pcmentropy.pcm.Violation` records so
    callers can report every broken rule, not just the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        msg = "; ".join(str(v) for v in self.violations) or "invalid comparison matrix"
        super().__init__(msg)


class DisconnectedError(PcmError):
    """An operation that needs a connected comparison graph got a disconnected one."""

    def __init__(self, components):
        self.components = [list(c) for c in components]
        parts = ", ".join("{" + ",".join(str(v) for v in c) + "}" for c in self.components)
        super().__init__(f"comparison graph is disconnected; components: {parts}")


class ConvergenceError(PcmError):
    """The spectral iteration did not reach its tolerance within the budget."""


class PathBudgetError(PcmError):
    """Simple-path enumeration exceeded the configured budget."""

    def __init__(self, source, target, budget):
        self.source = source
        self.target = target
        self.budget = budget
        super().__init__(
            f"more than {budget} simple paths between {source} and {target}; "
            "raise the budget to enumerate them all"
        )


class MissingEdgeError(PcmError):
    """A path stepped over a pair with no recorded comparison."""


class IncompleteMatrixError(PcmError):
    """An index that needs a fully filled matrix got an incomplete one."""
