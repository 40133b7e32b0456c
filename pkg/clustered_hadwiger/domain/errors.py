"""
Domain Errors

Every error carries a message plus a JSON-serializable witness so the CLI can
turn it into a machine-readable error document.
"""

from typing import Any, Dict, Optional


class HadwigerError(Exception):
    """Base class for all toolkit errors."""

    kind = "error"

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"error": self.kind, "message": self.message, "witness": self.witness}


# graph-core

class InvalidGraph(HadwigerError):
    kind = "invalid_graph"


class UnknownVertex(HadwigerError):
    kind = "unknown_vertex"


class NotAnEdge(HadwigerError):
    kind = "not_an_edge"


# connectivity

class AdjacentPair(HadwigerError):
    kind = "adjacent_pair"


class InvalidSeparation(HadwigerError):
    kind = "invalid_separation"


# contraction

class PreconditionViolated(HadwigerError):
    """A hypothesis of the contraction lemmas does not hold."""

    kind = "precondition_violated"

    def __init__(self, hypothesis: str, message: str, witness: Optional[Dict[str, Any]] = None):
        witness = dict(witness or {})
        witness["hypothesis"] = hypothesis
        super().__init__(message, witness)
        self.hypothesis = hypothesis


class NoEdgeFound(HadwigerError):
    kind = "no_edge_found"


class ResultNotConnectedEnough(HadwigerError):
    kind = "result_not_connected_enough"


class InvariantBroken(HadwigerError):
    kind = "invariant_broken"


# partition

class InvalidParams(HadwigerError):
    kind = "invalid_params"


class InvalidLists(HadwigerError):
    kind = "invalid_lists"


class CaseIVFailure(HadwigerError):
    """The contraction step of Case IV could not produce a witness."""

    kind = "case_iv_failure"


class ColoringNotVerified(HadwigerError):
    kind = "coloring_not_verified"


# minors

class BudgetExceeded(HadwigerError):
    kind = "budget_exceeded"


# cli

class GraphParseError(HadwigerError):
    """Malformed input file; `line` is 1-indexed (0 when not line-specific)."""

    kind = "parse_error"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}" if line else reason, {"line": line})
        self.line = line
        self.reason = reason


class DocumentError(HadwigerError):
    kind = "document_error"


class UsageError(HadwigerError):
    kind = "usage_error"
