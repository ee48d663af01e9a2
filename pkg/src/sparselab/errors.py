"""Shared exception types."""


class SparselabError(Exception):
    """Base class for package-specific errors."""


class InstanceError(SparselabError):
    """Malformed instance data: bad edges, labels, literals, set elements."""


class UnknownProblemError(SparselabError):
    """Problem tag is not one of the supported tags."""


class PayloadError(SparselabError):
    """Candidate payload does not match the problem tag or the instance."""


class ParseError(SparselabError):
    """Instance file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class BudgetExceededError(SparselabError):
    """An exact solver hit its budget before proving optimality."""


class NonBipartiteError(SparselabError):
    """Bipartite-only routine called on a graph with an odd cycle."""


class DegreeError(SparselabError):
    """Degree precondition violated (e.g. degree-2 solver on a denser graph)."""


class SizeGuardError(SparselabError):
    """Input exceeds the desk-scale guard of an exact validator."""


class PolicyError(SparselabError):
    """Invalid sparsification threshold policy."""


class ReductionError(SparselabError):
    """Reduction precondition violated or incompatible composition."""
