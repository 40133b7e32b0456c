"""
Graph Domain Model

Immutable finite simple undirected graph with stable integer vertex identities.
Contracting an edge keeps the smaller endpoint, so identities survive across
multi-step contraction plans and merge maps can be replayed.
"""

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx

from ..errors import InvalidGraph, NotAnEdge, UnknownVertex

Vertex = int
Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Order an edge's endpoints so the smaller identity comes first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class VertexMergeMap:
    """Maps every original vertex to the vertex it was merged into."""

    mapping: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "mapping", MappingProxyType(dict(self.mapping)))

    @classmethod
    def identity(cls, vertices: Iterable[int]) -> "VertexMergeMap":
        return cls({v: v for v in vertices})

    def __getitem__(self, vertex: int) -> int:
        return self.mapping[vertex]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexMergeMap):
            return NotImplemented
        return dict(self.mapping) == dict(other.mapping)

    @property
    def survivors(self) -> FrozenSet[int]:
        return frozenset(self.mapping.values())

    def then(self, later: "VertexMergeMap") -> "VertexMergeMap":
        """Compose with a merge map applied after this one."""
        return VertexMergeMap({v: later[image] for v, image in self.mapping.items()})

    def to_dict(self) -> Dict[str, int]:
        return {str(v): image for v, image in sorted(self.mapping.items())}


@dataclass(frozen=True, repr=False)
class Graph:
    """Finite simple undirected graph; every operation returns a new graph."""

    vertices: FrozenSet[int] = frozenset()
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}", {"vertex": u})
            if u not in vertices or v not in vertices:
                raise InvalidGraph(
                    f"edge ({u}, {v}) has an endpoint outside the vertex set",
                    {"edge": [u, v]},
                )
            edges.add(normalize_edge(u, v))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))

    # Construction

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from an edge list; endpoints are added as vertices."""
        edge_list = [(int(u), int(v)) for u, v in edges]
        all_vertices = set(vertices)
        for u, v in edge_list:
            all_vertices.update((u, v))
        return cls(frozenset(all_vertices), frozenset(edge_list))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Relabel a networkx graph onto dense identities 0..n-1 in sorted node order."""
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        return cls(
            frozenset(index.values()),
            frozenset((index[u], index[v]) for u, v in nx_graph.edges() if u != v),
        )

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(((u, v) for u in range(n) for v in range(u + 1, n)), range(n))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(((i, (i + 1) % n) for i in range(n)), range(n))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(((i, i + 1) for i in range(n - 1)), range(n))

    # Queries

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def adjacency(self) -> Mapping[int, FrozenSet[int]]:
        neighbours: Dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return MappingProxyType({v: frozenset(ns) for v, ns in neighbours.items()})

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view with nodes and edges inserted in sorted order."""
        graph = nx.Graph()
        graph.add_nodes_from(self.sorted_vertices)
        graph.add_edges_from(sorted(self.edges))
        return nx.freeze(graph)

    def require_vertices(self, vertices: Iterable[int]) -> None:
        missing = sorted(set(vertices) - self.vertices)
        if missing:
            raise UnknownVertex(f"vertices not in graph: {missing}", {"vertices": missing})

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> FrozenSet[int]:
        self.require_vertices((v,))
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def connected_components(self) -> List[FrozenSet[int]]:
        """Maximal connected vertex sets, ordered by smallest contained vertex."""
        components = (frozenset(c) for c in nx.connected_components(self.nx_graph))
        return sorted(components, key=min)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    # Derived graphs

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = frozenset(vertices)
        self.require_vertices(keep)
        return Graph(keep, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = frozenset(vertices)
        self.require_vertices(drop)
        return self.induced_subgraph(self.vertices - drop)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NotAnEdge(f"({u}, {v}) is not an edge", {"edge": [u, v]})
        return Graph(self.vertices, self.edges - {normalize_edge(u, v)})

    def contract_edge(self, u: int, v: int) -> Tuple["Graph", VertexMergeMap]:
        """Contract uv; the smaller identity survives, parallel edges collapse."""
        if not self.has_edge(u, v):
            raise NotAnEdge(f"({u}, {v}) is not an edge", {"edge": [u, v]})
        survivor, absorbed = normalize_edge(u, v)
        edges = {e for e in self.edges if absorbed not in e}
        for x in self.adjacency[absorbed]:
            if x != survivor:
                edges.add(normalize_edge(survivor, x))
        merge = VertexMergeMap({x: survivor if x == absorbed else x for x in self.vertices})
        return Graph(self.vertices - {absorbed}, frozenset(edges)), merge

    def contract_edges(self, edges: Iterable[Edge]) -> Tuple["Graph", VertexMergeMap]:
        """Contract edges in order; each edge is named by current identities."""
        graph = self
        merge = VertexMergeMap.identity(self.vertices)
        for u, v in edges:
            graph, step = graph.contract_edge(u, v)
            merge = merge.then(step)
        return graph, merge

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "vertices": list(self.sorted_vertices),
            "edges": [list(e) for e in sorted(self.edges)],
        }

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"
