"""
Minor Domain Models

Branch-set certificates for clique minors and the verdicts produced when they
are searched for, checked, or used to audit a Case IV witness.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Mapping, Optional, Sequence, Tuple


@dataclass(frozen=True)
class MinorEmbedding:
    """t branch sets of a host graph; the verifier, not the constructor, checks them."""

    branch_sets: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "branch_sets", tuple(frozenset(b) for b in self.branch_sets)
        )

    @classmethod
    def from_lists(cls, branch_sets: Sequence[Sequence[int]]) -> "MinorEmbedding":
        return cls(tuple(frozenset(b) for b in branch_sets))

    @property
    def t(self) -> int:
        return len(self.branch_sets)

    @property
    def vertices(self) -> FrozenSet[int]:
        covered: FrozenSet[int] = frozenset()
        for branch in self.branch_sets:
            covered |= branch
        return covered

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "branch_sets": [sorted(b) for b in self.branch_sets]}


class SearchStatus(str, Enum):
    FOUND = "found"
    REFUTED = "refuted"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class MinorSearchResult:
    """Three-valued answer of the clique-minor search."""

    status: SearchStatus
    t: int
    embedding: Optional[MinorEmbedding] = None
    nodes_explored: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def refuted(self) -> bool:
        return self.status is SearchStatus.REFUTED

    @property
    def decided(self) -> bool:
        return self.status is not SearchStatus.BUDGET_EXCEEDED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "t": self.t,
            "embedding": self.embedding.to_dict() if self.embedding else None,
            "nodes_explored": self.nodes_explored,
        }


class EmbeddingFailure(str, Enum):
    COUNT = "count"
    UNKNOWN_VERTEX = "unknown_vertex"
    EMPTY = "empty"
    OVERLAP = "overlap"
    DISCONNECTED = "disconnected"
    NOT_ADJACENT = "not_adjacent"


@dataclass(frozen=True)
class EmbeddingVerdict:
    ok: bool
    failure: Optional[EmbeddingFailure] = None
    witness: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "failure": self.failure.value if self.failure else None,
            "witness": dict(self.witness),
        }


@dataclass(frozen=True)
class HadwigerBounds:
    """lower is certified by an embedding; upper is exact only when decided."""

    lower: int
    upper: int
    decided: bool
    embedding: Optional[MinorEmbedding] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "decided": self.decided,
            "embedding": self.embedding.to_dict() if self.embedding else None,
        }


@dataclass(frozen=True)
class WitnessAudit:
    """
    Re-check of a Case IV witness.

    `connectivity_ok` is the binding check. `minor_search` is informational:
    a refutation on a small minor is legitimate below the minor-forcing order.
    """

    t: int
    connectivity_ok: bool
    connectivity: int
    minor_order: int
    order_ok: bool
    minor_search: Optional[MinorSearchResult] = None
    embedding_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.connectivity_ok and self.order_ok and self.embedding_ok is not False

    @property
    def summary(self) -> str:
        if not self.connectivity_ok:
            return "connectivity failure"
        if not self.order_ok:
            return "minor too small"
        if self.minor_search is None:
            return "connectivity OK, minor search skipped"
        if self.minor_search.found:
            return "connectivity OK, minor found"
        if self.minor_search.refuted:
            return "connectivity OK, minor not found"
        return "connectivity OK, minor search over budget"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "summary": self.summary,
            "t": self.t,
            "connectivity_ok": self.connectivity_ok,
            "connectivity": self.connectivity,
            "minor_order": self.minor_order,
            "order_ok": self.order_ok,
            "minor_search": self.minor_search.to_dict() if self.minor_search else None,
            "embedding_ok": self.embedding_ok,
        }
