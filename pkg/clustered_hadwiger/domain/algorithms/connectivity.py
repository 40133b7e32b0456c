"""
Connectivity

Exact vertex cuts via unit-capacity max-flow on a split-vertex network,
k-connectivity tests, and the Z-good separation search.
"""

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, Optional

import networkx as nx
from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    minimum_st_node_cut,
)
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from ..errors import AdjacentPair, InvalidParams, InvalidSeparation
from ..models.graph import Graph
from ..models.separation import Classification, GoodnessVerdict, Separation

logger = logging.getLogger(__name__)


class CutOracle:
    """Repeated s-t vertex-cut queries on one graph, sharing one flow network."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.auxiliary = build_auxiliary_node_connectivity(graph.nx_graph)
        self.residual = build_residual_network(self.auxiliary, "capacity")

    def cut(self, x: int, y: int) -> FrozenSet[int]:
        """Minimum vertex set separating nonadjacent x and y."""
        return frozenset(
            minimum_st_node_cut(
                self.graph.nx_graph,
                x,
                y,
                flow_func=edmonds_karp,
                auxiliary=self.auxiliary,
                residual=self.residual,
            )
        )


def min_vertex_cut(g: Graph, x: int, y: int) -> FrozenSet[int]:
    """
    Minimum-cardinality S ⊆ V - {x, y} with x and y in different components of g - S.

    Raises:
        AdjacentPair: if x == y or xy is an edge (no vertex set separates them)
        UnknownVertex: if x or y is not in g
    """
    g.neighbors(x)
    g.neighbors(y)
    if x == y:
        raise AdjacentPair(f"cut endpoints must differ, got {x} twice", {"pair": [x, y]})
    if g.has_edge(x, y):
        raise AdjacentPair(f"{x} and {y} are adjacent", {"pair": [x, y]})
    return CutOracle(g).cut(x, y)


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; complete graphs on n vertices report n - 1."""
    n = g.order
    if n <= 1:
        return 0
    if g.size == n * (n - 1) // 2:
        return n - 1
    return nx.node_connectivity(g.nx_graph, flow_func=edmonds_karp)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff |V| >= k + 1 and no k - 1 vertices disconnect g."""
    if k < 0:
        raise InvalidParams(f"k must be non-negative, got {k}", {"k": k})
    if g.order < k + 1:
        return False
    if k == 0:
        return True
    return vertex_connectivity(g) >= k


def separation_from_cut(g: Graph, x: int, cut: FrozenSet[int]) -> Separation:
    """a = (component of x in g - cut) ∪ cut, b = V - that component."""
    component = frozenset(nx.node_connected_component(g.remove_vertices(cut).nx_graph, x))
    return Separation(component | cut, g.vertices - component)


def find_good_separation(g: Graph, z: Iterable[int], t: int) -> Optional[Separation]:
    """
    First Z-good separation with separator size <= t, or None.

    A Z-good t-separation exists iff some nonadjacent pair outside Z has a
    minimum cut of size <= t. Pairs are scanned in lexicographic order.
    """
    zs = frozenset(z)
    g.require_vertices(zs)
    if t < 0:
        return None

    candidates = [v for v in g.sorted_vertices if v not in zs]
    oracle = None
    for x, y in combinations(candidates, 2):
        if g.has_edge(x, y):
            continue
        if oracle is None:
            oracle = CutOracle(g)
        cut = oracle.cut(x, y)
        if len(cut) <= t:
            separation = separation_from_cut(g, x, cut)
            logger.debug("Z-good %d-separation via pair (%d, %d), separator %s",
                         t, x, y, sorted(cut))
            return separation
    return None


def classify_separation(sep: Separation, z: Iterable[int], host: Optional[Graph] = None) -> GoodnessVerdict:
    """
    Classify a separation as Z-good or Z-bad.

    Args:
        sep: separation to classify
        z: the vertex set Z
        host: when given, the separation invariants are checked against it

    Raises:
        InvalidSeparation: if a fragment is empty or the host check fails
    """
    if host is not None:
        problems = sep.problems(host)
        if problems:
            raise InvalidSeparation(problems["reason"], problems)
    elif not sep.fragment_a or not sep.fragment_b:
        raise InvalidSeparation("empty fragment", {"separation": sep.to_dict()})

    zs = frozenset(z)
    classification = Classification.BAD if sep.is_bad_for(zs) else Classification.GOOD
    return GoodnessVerdict(separation=sep, good_for=zs, classification=classification)
