"""
Contraction

Finds edges at Z-vertices whose contraction keeps every (k-1)-separation bad
for the shrinking Z, and chains them into a plan that reaches k-connectivity.
The single-vertex case (Z = {v}) gives the Mader-type edge searches.

The degree hypothesis 3k/2 + |Z| - 2 is fractional for odd k and is always
compared in doubled form: 2 * deg >= 3k + 2|Z| - 4.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set

from ..errors import (
    InvariantBroken,
    NoEdgeFound,
    PreconditionViolated,
    ResultNotConnectedEnough,
)
from ..models.contraction_plan import ContractionPlan, ContractionStep
from ..models.graph import Edge, Graph, VertexMergeMap
from .connectivity import find_good_separation, is_k_connected, vertex_connectivity

logger = logging.getLogger(__name__)


def required_degree(k: int, z_size: int) -> int:
    """Smallest integer degree meeting 3k/2 + |Z| - 2."""
    return (3 * k + 2 * z_size - 3) // 2


def _low_degree(g: Graph, vertices: Iterable[int], k: int, z_size: int) -> List[Dict[str, int]]:
    required = required_degree(k, z_size)
    return [
        {"vertex": w, "degree": g.degree(w), "required": required}
        for w in sorted(vertices)
        if 2 * g.degree(w) < 3 * k + 2 * z_size - 4
    ]


def _frontier(g: Graph, z: Iterable[int]) -> Set[int]:
    zs = set(z)
    frontier: Set[int] = set()
    for v in zs:
        frontier |= g.neighbors(v) - zs
    return frontier


def _require_z_bad(g: Graph, z: frozenset, k: int) -> None:
    witness = find_good_separation(g, z, k - 1)
    if witness is not None:
        raise PreconditionViolated(
            "z_good_separation",
            f"g has a Z-good ({k - 1})-separation",
            {"separation": witness.to_dict()},
        )


def _search(g: Graph, z: frozenset, v: int, k: int, candidates: Sequence[int]) -> Optional[Edge]:
    rest = z - {v}
    for w in candidates:
        contracted, _ = g.contract_edge(v, w)
        if find_good_separation(contracted, rest, k - 1) is None:
            return (v, w)
        logger.debug("contracting (%d, %d) leaves a good (%d)-separation", v, w, k - 1)
    return None


def find_contractible_edge(
    g: Graph,
    z: Iterable[int],
    v: int,
    k: int,
    *,
    enforce_degree_bound: bool = True,
) -> Edge:
    """
    Find vw with w in N(v) - Z such that every (k-1)-separation of g/vw is (Z - {v})-bad.

    Neighbours are tried in ascending order; the first that works is returned.

    Args:
        g: host graph
        z: the vertex set Z
        v: a vertex of Z with a neighbour outside Z
        k: target connectivity
        enforce_degree_bound: when false, low-degree neighbours do not stop the
            search; a failed search then reports them on NoEdgeFound

    Raises:
        PreconditionViolated: a hypothesis fails (witness attached)
        NoEdgeFound: no neighbour works
    """
    zs = frozenset(z)
    g.require_vertices(zs | {v})
    if v not in zs:
        raise PreconditionViolated("vertex_not_in_z", f"{v} is not in Z", {"vertex": v})
    candidates = sorted(g.neighbors(v) - zs)
    if not candidates:
        raise PreconditionViolated(
            "no_outside_neighbor", f"every neighbour of {v} lies in Z", {"vertex": v}
        )
    _require_z_bad(g, zs, k)

    low = _low_degree(g, candidates, k, len(zs))
    if low and enforce_degree_bound:
        raise PreconditionViolated(
            "degree_bound",
            f"{len(low)} neighbour(s) of {v} below degree {low[0]['required']}",
            {"vertices": low},
        )

    edge = _search(g, zs, v, k, candidates)
    if edge is None:
        raise NoEdgeFound(
            f"no edge at {v} keeps every ({k - 1})-separation bad",
            {"vertex": v, "candidates": candidates, "low_degree": low},
        )
    return edge


def _degree_drops(before: Graph, after: Graph, v: int, w: int, survivor: int) -> List[int]:
    common = before.neighbors(v) & before.neighbors(w)
    drops = []
    for x in after.sorted_vertices:
        if x == survivor:
            continue
        d_before, d_after = before.degree(x), after.degree(x)
        if d_after == d_before:
            continue
        if x not in common or d_after != d_before - 1:
            raise InvariantBroken(
                f"degree of {x} changed from {d_before} to {d_after} contracting ({v}, {w})",
                {"vertex": x, "before": d_before, "after": d_after, "edge": [v, w]},
            )
        drops.append(x)
    return drops


def contract_to_k_connected(g: Graph, z: Iterable[int], k: int) -> ContractionPlan:
    """
    Contract at most |Z| edges, each at a Z-vertex, to reach a k-connected graph.

    Z-vertices whose neighbours all lie in Z when the recursion bottoms out are
    deleted rather than contracted and reported as `deleted`.

    Raises:
        PreconditionViolated: a hypothesis of the theorem fails
        NoEdgeFound: propagated from the edge search
        ResultNotConnectedEnough: the final k-connectivity check failed
        InvariantBroken: the degree bookkeeping between steps failed
    """
    zs = frozenset(z)
    g.require_vertices(zs)
    _require_z_bad(g, zs, k)
    low = _low_degree(g, _frontier(g, zs), k, len(zs))
    if low:
        raise PreconditionViolated(
            "degree_bound",
            f"{len(low)} neighbour(s) of Z below degree {low[0]['required']}",
            {"vertices": low},
        )

    current = g
    remaining = set(zs)
    merge = VertexMergeMap.identity(g.vertices)
    steps: List[ContractionStep] = []

    while True:
        movable = [u for u in sorted(remaining) if current.neighbors(u) - remaining]
        if not movable:
            break
        v = movable[0]
        candidates = sorted(current.neighbors(v) - remaining)
        edge = _search(current, frozenset(remaining), v, k, candidates)
        if edge is None:
            raise NoEdgeFound(
                f"no edge at {v} keeps every ({k - 1})-separation bad",
                {"vertex": v, "candidates": candidates, "low_degree": []},
            )
        w = edge[1]
        contracted, step_merge = current.contract_edge(v, w)
        survivor = step_merge[v]
        drops = _degree_drops(current, contracted, v, w, survivor)
        remaining.discard(v)

        # the degree hypothesis must carry over to the smaller Z
        still_low = _low_degree(contracted, _frontier(contracted, remaining), k, len(remaining))
        if still_low:
            raise InvariantBroken(
                "degree hypothesis lost after contraction",
                {"edge": [v, w], "vertices": still_low},
            )

        logger.debug("contracted (%d, %d) into %d; degree drops at %s", v, w, survivor, drops)
        steps.append(ContractionStep(v, w, survivor, tuple(drops)))
        merge = merge.then(step_merge)
        current = contracted

    deleted = frozenset(remaining)
    result = current.remove_vertices(deleted)
    if not is_k_connected(result, k):
        raise ResultNotConnectedEnough(
            f"contracted graph is not {k}-connected",
            {
                "order": result.order,
                "connectivity": vertex_connectivity(result),
                "k": k,
                "edges": [list(s.edge) for s in steps],
                "deleted": sorted(deleted),
            },
        )

    return ContractionPlan(
        host=g,
        z=zs,
        k=k,
        steps=tuple(steps),
        merge=merge,
        deleted=deleted,
        result=result,
    )


def _require_k_connected_after(g: Graph, edge: Edge, k: int) -> None:
    contracted, _ = g.contract_edge(*edge)
    if not is_k_connected(contracted, k):
        raise ResultNotConnectedEnough(
            f"g/{edge} is not {k}-connected",
            {"edge": list(edge), "order": contracted.order,
             "connectivity": vertex_connectivity(contracted), "k": k},
        )


def mader_edge(g: Graph, v: int, k: int) -> Edge:
    """Edge vw with g/vw k-connected, for k-connected g whose neighbours of v have degree >= 3k/2 - 1."""
    g.require_vertices((v,))
    if not is_k_connected(g, k):
        raise PreconditionViolated(
            "not_k_connected",
            f"g is not {k}-connected",
            {"connectivity": vertex_connectivity(g), "order": g.order, "k": k},
        )
    edge = find_contractible_edge(g, {v}, v, k)
    _require_k_connected_after(g, edge, k)
    return edge


def contractibility_edge(g: Graph, v: int, k: int) -> Edge:
    """Edge vw with g/vw k-connected when every (k-1)-separation of g is {v}-bad."""
    edge = find_contractible_edge(g, {v}, v, k)
    _require_k_connected_after(g, edge, k)
    return edge


def plan_edge_violation(host: Graph, z: Iterable[int], edges: Sequence[Edge]) -> Optional[Dict[str, Any]]:
    """
    Replay plan edges while tracking the Z-vertices not yet contracted.

    Returns None when each edge is a current edge joining a remaining Z-vertex
    to a vertex outside the remaining Z, otherwise a witness for the first
    edge that is not.
    """
    remaining = set(z)
    current = host
    for index, (u, w) in enumerate(edges):
        if u not in remaining or w in remaining or not current.has_edge(u, w):
            return {
                "index": index,
                "edge": [u, w],
                "remaining_z": sorted(remaining),
                "is_edge": current.has_edge(u, w),
            }
        current, _ = current.contract_edge(u, w)
        remaining.discard(u)
    return None
