"""
Constructions

Generator and verifier for the apex-over-clique-cycle graphs that show the
degree bound of the single-vertex contraction theorem cannot drop to
3(k - 1)/2.
"""

import logging
from itertools import combinations
from typing import Dict, List

from ..errors import HadwigerError, InvalidParams, NoEdgeFound
from ..models.graph import Graph
from ..models.watkins import CheckResult, TightnessReport, WatkinsInstance
from .connectivity import CutOracle, find_good_separation, is_k_connected
from .contraction import find_contractible_edge

logger = logging.getLogger(__name__)


def watkins_graph(k: int, n: int) -> WatkinsInstance:
    """
    Build C_n · K_p (p = (k - 1)/2) plus an apex adjacent to one vertex per copy.

    Raises:
        InvalidParams: k even, k < 5, or n outside [4, k - 1]
    """
    if k % 2 == 0:
        raise InvalidParams(f"k must be odd, got {k}", {"k": k, "constraint": "k_odd"})
    if k < 5:
        raise InvalidParams(f"k must be at least 5, got {k}", {"k": k, "constraint": "k_min"})
    if not 4 <= n <= k - 1:
        raise InvalidParams(
            f"n must lie in [4, {k - 1}], got {n}", {"n": n, "constraint": "n_range"}
        )

    p = (k - 1) // 2
    blocks = tuple(frozenset(range(i * p, i * p + p)) for i in range(n))
    edges = []
    for i, block in enumerate(blocks):
        edges.extend(combinations(sorted(block), 2))
        following = blocks[(i + 1) % n]
        edges.extend((u, w) for u in block for w in following)
    apex = n * p
    attachments = tuple(i * p for i in range(n))
    edges.extend((apex, w) for w in attachments)

    graph = Graph.from_edges(edges, range(n * p + 1))
    logger.debug("built tightness instance k=%d n=%d: %r", k, n, graph)
    return WatkinsInstance(
        k=k, n=n, p=p, graph=graph, apex=apex, attachments=attachments, blocks=blocks
    )


def _check_pair_cuts(inst: WatkinsInstance) -> CheckResult:
    g = inst.graph
    others = [v for v in g.sorted_vertices if v != inst.apex]
    oracle = CutOracle(g)
    pairs = 0
    for x, y in combinations(others, 2):
        if g.has_edge(x, y):
            continue
        pairs += 1
        cut = oracle.cut(x, y)
        if len(cut) < inst.k:
            return CheckResult(
                "pair_cuts", False, {"pair": [x, y], "cut": sorted(cut), "k": inst.k}
            )
    return CheckResult("pair_cuts", True, {"pairs_checked": pairs})


def _check_apex_separator(inst: WatkinsInstance) -> CheckResult:
    g = inst.graph
    good = find_good_separation(g, {inst.apex}, inst.k - 1)
    if good is not None:
        return CheckResult("apex_only_separator", False, {"separation": good.to_dict()})
    apex_cut = g.neighbors(inst.apex)
    rest = g.remove_vertices(apex_cut)
    isolated = frozenset((inst.apex,)) in rest.connected_components() and rest.order > 1
    return CheckResult(
        "apex_only_separator",
        isolated and len(apex_cut) <= inst.k - 1,
        {"apex_cut": sorted(apex_cut), "size": len(apex_cut)},
    )


def _check_contractions(inst: WatkinsInstance) -> CheckResult:
    g = inst.graph
    exhibited: List[Dict[str, object]] = []
    for i, w in enumerate(inst.attachments):
        contracted, merge = g.contract_edge(inst.apex, w)
        if is_k_connected(contracted, inst.k):
            return CheckResult("contractions_fail", False, {"edge": [inst.apex, w], "index": i})
        separator = frozenset(merge[x] for x in inst.block(i) | inst.block(i + 2))
        fragments = contracted.remove_vertices(separator).connected_components()
        if len(separator) != 2 * inst.p or len(fragments) < 2:
            return CheckResult(
                "contractions_fail",
                False,
                {
                    "edge": [inst.apex, w],
                    "separator": sorted(separator),
                    "fragments": [sorted(f) for f in fragments],
                },
            )
        exhibited.append(
            {
                "edge": [inst.apex, w],
                "separator": sorted(separator),
                "fragments": [sorted(f) for f in fragments],
            }
        )
    return CheckResult("contractions_fail", True, {"cuts": exhibited})


def _check_formulas(inst: WatkinsInstance) -> CheckResult:
    g, p, n, k = inst.graph, inst.p, inst.n, inst.k
    expected = {
        "order": n * p + 1,
        "size": n * (p * (p - 1) // 2 + p * p) + n,
        "apex_degree": n,
        "attachment_degree": 3 * (k - 1) // 2,
    }
    actual_degrees = sorted({g.degree(w) for w in inst.attachments})
    actual = {
        "order": g.order,
        "size": g.size,
        "apex_degree": g.degree(inst.apex),
        "attachment_degree": actual_degrees[0] if len(actual_degrees) == 1 else actual_degrees,
    }
    cliques_ok = all(
        g.induced_subgraph(block).size == p * (p - 1) // 2 for block in inst.blocks
    )
    return CheckResult(
        "degree_formula",
        actual == expected and cliques_ok,
        {"expected": expected, "actual": actual, "blocks_are_cliques": cliques_ok},
    )


def _check_no_contractible_edge(inst: WatkinsInstance) -> CheckResult:
    try:
        edge = find_contractible_edge(
            inst.graph, {inst.apex}, inst.apex, inst.k, enforce_degree_bound=False
        )
    except NoEdgeFound as exc:
        return CheckResult("no_contractible_edge", True, dict(exc.witness))
    except HadwigerError as exc:
        return CheckResult("no_contractible_edge", False, exc.to_dict())
    return CheckResult("no_contractible_edge", False, {"edge": list(edge)})


def verify_tightness(inst: WatkinsInstance) -> TightnessReport:
    """Independently re-check every claimed property of the instance."""
    checks = (
        _check_pair_cuts(inst),
        _check_apex_separator(inst),
        _check_contractions(inst),
        _check_formulas(inst),
        _check_no_contractible_edge(inst),
    )
    for check in checks:
        if not check.ok:
            logger.warning("tightness check %s failed for k=%d n=%d", check.name, inst.k, inst.n)
    return TightnessReport(k=inst.k, n=inst.n, checks=checks)
