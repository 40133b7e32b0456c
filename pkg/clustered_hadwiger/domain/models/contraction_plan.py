"""
Contraction Plan Domain Model

An ordered set of edges, each joining a Z-vertex to a vertex outside Z at the
time it is contracted, plus the Z-vertices deleted in the base case.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Tuple

from .graph import Edge, Graph, VertexMergeMap


@dataclass(frozen=True)
class ContractionStep:
    """One contraction: the Z-vertex, its partner, and who survived."""

    z_vertex: int
    partner: int
    survivor: int
    degree_drops: Tuple[int, ...] = ()

    @property
    def edge(self) -> Edge:
        return (self.z_vertex, self.partner)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "z_vertex": self.z_vertex,
            "partner": self.partner,
            "survivor": self.survivor,
            "degree_drops": list(self.degree_drops),
        }


@dataclass(frozen=True)
class ContractionPlan:
    """Edges whose contraction (plus deletion of `deleted`) makes `host` k-connected."""

    host: Graph
    z: FrozenSet[int]
    k: int
    steps: Tuple[ContractionStep, ...]
    merge: VertexMergeMap = field(compare=False)
    deleted: FrozenSet[int]
    result: Graph

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(step.edge for step in self.steps)

    def replay(self) -> Graph:
        """Recompute the result from the host; never trusts `result`."""
        contracted, _ = self.host.contract_edges(self.edges)
        return contracted.remove_vertices(self.deleted)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "z": sorted(self.z),
            "k": self.k,
            "edges": [list(e) for e in self.edges],
            "steps": [step.to_dict() for step in self.steps],
            "deleted": sorted(self.deleted),
            "merge": self.merge.to_dict(),
            "result": self.result.to_dict(),
        }
