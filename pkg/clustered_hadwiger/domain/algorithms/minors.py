"""
Minors

Exact clique-minor search on small graphs by exhaustive branch-set assignment,
branch-set certificate verification, and auditing of Case IV witnesses.

The search is three-valued: an embedding, an exhaustive refutation, or a
budget verdict when the search-node budget runs out. Before branching it
shrinks the graph with minor-preserving reductions (leaves for t >= 3,
suppressed degree-2 vertices for t >= 4), splits it into biconnected blocks,
and discards blocks that a degree count or a planarity test already rules out.
"""

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from ..errors import BudgetExceeded, InvalidParams
from ..models.coloring import CaseIVWitness
from ..models.graph import Graph
from ..models.minor import (
    EmbeddingFailure,
    EmbeddingVerdict,
    HadwigerBounds,
    MinorEmbedding,
    MinorSearchResult,
    SearchStatus,
    WitnessAudit,
)
from .connectivity import is_k_connected, vertex_connectivity

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000

_OPEN = -1
_SKIP = -2


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _branch_set_floor(g: Graph, t: int) -> int:
    """Smallest size any branch set of a K_t model can have, by degree counting."""
    degrees = sorted((g.degree(v) for v in g.vertices), reverse=True)
    total = 0
    for size, degree in enumerate(degrees, start=1):
        total += degree
        if total - 2 * (size - 1) >= t - 1:
            return size
    return len(degrees) + 1


def _counting_refutes(g: Graph, t: int) -> bool:
    floor = _branch_set_floor(g, t)
    return g.order < t * floor or g.size < t * (t - 1) // 2 + t * (floor - 1)


def _is_planar(g: Graph) -> bool:
    planar, _ = nx.check_planarity(g.nx_graph)
    return planar


def _structural_refutation(g: Graph, t: int) -> Optional[str]:
    """
    Name a sound reason why g has no K_t-minor, or None.

    Planar graphs have no K_5-minor. Deleting one vertex destroys at most one
    branch set, so a graph that becomes planar after deleting a vertex has no
    K_6-minor.
    """
    if _counting_refutes(g, t):
        return "counting"
    if t >= 5 and _is_planar(g):
        return "planarity"
    if t >= 6 and any(_is_planar(g.remove_vertices((v,))) for v in g.sorted_vertices):
        return "apex"
    return None


def _reduce(g: Graph, t: int) -> Tuple[Graph, Dict[int, FrozenSet[int]]]:
    """
    Delete vertices of degree <= 1 (t >= 3) and contract degree-2 vertices into
    their smaller neighbour (t >= 4). Returns the reduced graph and, for each
    surviving vertex, the original vertices it stands for.
    """
    classes = {v: frozenset((v,)) for v in g.vertices}
    current = g
    changed = True
    while changed:
        changed = False
        for v in current.sorted_vertices:
            degree = current.degree(v)
            if t >= 3 and degree <= 1:
                current = current.remove_vertices((v,))
                del classes[v]
                changed = True
                break
            if t >= 4 and degree == 2:
                w = min(current.neighbors(v))
                current, step = current.contract_edge(v, w)
                survivor, gone = step[v], max(v, w)
                classes[survivor] = classes[v] | classes[w]
                del classes[gone]
                changed = True
                break
    return current, classes


class _BranchSetSearch:
    """
    Depth-first assignment of vertices, in degree-descending order, to one of
    t branch sets or to nobody. Sets are opened in order, so each unlabeled
    model is reached once.
    """

    def __init__(self, g: Graph, t: int, budget: int, nodes: int = 0):
        self.labels = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
        index = {v: i for i, v in enumerate(self.labels)}
        self.adj = [sum(1 << index[w] for w in g.neighbors(v)) for v in self.labels]
        self.size = len(self.labels)
        self.t = t
        self.budget = budget
        self.nodes = nodes

    def _neighborhood(self, mask: int) -> int:
        nbrs = 0
        for i in _bits(mask):
            nbrs |= self.adj[i]
        return nbrs

    def _reach(self, seed: int, allowed: int) -> int:
        reached = seed & -seed
        frontier = reached
        while frontier:
            frontier = self._neighborhood(frontier) & allowed & ~reached
            reached |= frontier
        return reached

    def _is_model(self, sets: List[int]) -> bool:
        for branch in sets:
            if self._reach(branch, branch) != branch:
                return False
        nbrs = [self._neighborhood(b) for b in sets]
        return all(
            nbrs[j] & sets[l] for j in range(len(sets)) for l in range(j + 1, len(sets))
        )

    def _feasible(self, sets: List[int], pending: int) -> bool:
        if self.t - len(sets) > bin(pending).count("1"):
            return False
        regions, closures = [], []
        for branch in sets:
            region = self._reach(branch, branch | pending)
            if branch & ~region:
                return False
            regions.append(region)
            closures.append(region | self._neighborhood(region))
        for j in range(len(sets)):
            for l in range(j + 1, len(sets)):
                if not closures[j] & regions[l]:
                    return False
        return True

    def _visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"minor search exceeded {self.budget} nodes", {"budget": self.budget}
            )

    def _options(self, i: int, sets: List[int]) -> List[int]:
        """Sets touching vertex i first, then a new set, then the rest, then skipping i."""
        touching = [j for j, b in enumerate(sets) if b & self.adj[i]]
        apart = [j for j, b in enumerate(sets) if not b & self.adj[i]]
        opened = [_OPEN] if len(sets) < self.t else []
        return touching + opened + apart + [_SKIP]

    @staticmethod
    def _apply(i: int, option: int, sets: List[int]) -> None:
        if option == _OPEN:
            sets.append(1 << i)
        elif option != _SKIP:
            sets[option] |= 1 << i

    @staticmethod
    def _undo(i: int, option: int, sets: List[int]) -> None:
        if option == _OPEN:
            sets.pop()
        elif option != _SKIP:
            sets[option] &= ~(1 << i)

    def run(self) -> Optional[List[FrozenSet[int]]]:
        # explicit frames: [vertex index, options, next option]
        full = (1 << self.size) - 1
        sets: List[int] = []
        frames: List[list] = []
        i = 0
        while True:
            self._visit()
            if len(sets) == self.t and self._is_model(sets):
                return [frozenset(self.labels[b] for b in _bits(mask)) for mask in sets]
            pending = full & ~((1 << i) - 1)
            if i < self.size and self._feasible(sets, pending):
                frames.append([i, self._options(i, sets), 0])
            while frames:
                frame = frames[-1]
                index, options, position = frame
                if position > 0:
                    self._undo(index, options[position - 1], sets)
                if position == len(options):
                    frames.pop()
                    continue
                self._apply(index, options[position], sets)
                frame[2] = position + 1
                i = index + 1
                break
            else:
                return None


def _small_cases(g: Graph, t: int) -> Optional[MinorSearchResult]:
    if t == 0:
        return MinorSearchResult(SearchStatus.FOUND, t, MinorEmbedding(()))
    if t > g.order:
        return MinorSearchResult(SearchStatus.REFUTED, t)
    if t == 1:
        return MinorSearchResult(
            SearchStatus.FOUND, t, MinorEmbedding.from_lists([[g.sorted_vertices[0]]])
        )
    for clique in nx.find_cliques(g.nx_graph):
        if len(clique) >= t:
            members = sorted(clique)[:t]
            return MinorSearchResult(
                SearchStatus.FOUND, t, MinorEmbedding.from_lists([[v] for v in members])
            )
    if t == 2:
        return MinorSearchResult(SearchStatus.REFUTED, t)
    return None


def find_clique_minor(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> MinorSearchResult:
    """
    Search for a K_t-minor of g.

    Args:
        g: host graph
        t: clique order
        budget: maximum number of search nodes

    Returns:
        FOUND with a verified-shape embedding, REFUTED after exhaustive search,
        or BUDGET_EXCEEDED
    """
    if t < 0:
        raise InvalidParams(f"t must be non-negative, got {t}", {"t": t})
    if budget < 1:
        raise InvalidParams(f"budget must be at least 1, got {budget}", {"budget": budget})

    small = _small_cases(g, t)
    if small is not None:
        return small

    reduced, classes = _reduce(g, t)
    blocks = [
        frozenset(block)
        for block in nx.biconnected_components(reduced.nx_graph)
        if len(block) >= t
    ]
    blocks.sort(key=lambda block: (-len(block), min(block)))

    nodes = 0
    for block in blocks:
        sub = reduced.induced_subgraph(block)
        reason = _structural_refutation(sub, t)
        if reason is not None:
            logger.debug("block of %d vertices refuted for K_%d by %s", sub.order, t, reason)
            continue
        search = _BranchSetSearch(sub, t, budget, nodes)
        try:
            found = search.run()
        except BudgetExceeded:
            logger.warning("K_%d search stopped after %d nodes", t, budget)
            return MinorSearchResult(SearchStatus.BUDGET_EXCEEDED, t, nodes_explored=budget)
        nodes = search.nodes
        if found is not None:
            branch_sets = [
                frozenset().union(*(classes[v] for v in branch)) for branch in found
            ]
            logger.debug("K_%d minor found after %d nodes", t, nodes)
            return MinorSearchResult(
                SearchStatus.FOUND, t, MinorEmbedding(tuple(branch_sets)), nodes
            )

    logger.debug("K_%d refuted after %d nodes", t, nodes)
    return MinorSearchResult(SearchStatus.REFUTED, t, nodes_explored=nodes)


def verify_embedding(g: Graph, emb: MinorEmbedding, t: int) -> EmbeddingVerdict:
    """Check count, disjointness, connectivity of each set and pairwise adjacency."""
    sets = emb.branch_sets
    if len(sets) != t:
        return EmbeddingVerdict(
            False, EmbeddingFailure.COUNT, {"expected": t, "got": len(sets)}
        )

    for i, branch in enumerate(sets):
        unknown = sorted(branch - g.vertices)
        if unknown:
            return EmbeddingVerdict(
                False, EmbeddingFailure.UNKNOWN_VERTEX, {"set": i, "vertex": unknown[0]}
            )
        if not branch:
            return EmbeddingVerdict(False, EmbeddingFailure.EMPTY, {"set": i})

    for i in range(t):
        for j in range(i + 1, t):
            shared = sets[i] & sets[j]
            if shared:
                return EmbeddingVerdict(
                    False, EmbeddingFailure.OVERLAP, {"sets": [i, j], "vertices": sorted(shared)}
                )

    for i, branch in enumerate(sets):
        components = g.induced_subgraph(branch).connected_components()
        if len(components) > 1:
            return EmbeddingVerdict(
                False,
                EmbeddingFailure.DISCONNECTED,
                {"set": i, "components": [sorted(c) for c in components]},
            )

    for i in range(t):
        reach = frozenset().union(*(g.neighbors(v) for v in sets[i]))
        for j in range(i + 1, t):
            if not reach & sets[j]:
                return EmbeddingVerdict(False, EmbeddingFailure.NOT_ADJACENT, {"sets": [i, j]})

    return EmbeddingVerdict(True)


def audit_witness(
    w: CaseIVWitness,
    t: int,
    budget: int = DEFAULT_BUDGET,
    search: bool = True,
) -> WitnessAudit:
    """
    Re-verify a Case IV witness and, when asked, look for a K_t-minor in it.

    A refutation is reported, not raised: small highly connected minors need
    not contain K_t below the minor-forcing order.
    """
    minor = w.minor
    connectivity_ok = is_k_connected(minor, t + 1)
    order_ok = w.minor_order >= w.subgraph.order - len(w.z)
    result = None
    embedding_ok = None
    if search and connectivity_ok:
        result = find_clique_minor(minor, t, budget)
        if result.embedding is not None:
            embedding_ok = verify_embedding(minor, result.embedding, t).ok
    return WitnessAudit(
        t=t,
        connectivity_ok=connectivity_ok,
        connectivity=vertex_connectivity(minor),
        minor_order=w.minor_order,
        order_ok=order_ok,
        minor_search=result,
        embedding_ok=embedding_ok,
    )


def _counting_upper(g: Graph) -> int:
    t = 0
    while t + 1 <= g.order and (t + 1) * t // 2 <= g.size:
        t += 1
    return t


def hadwiger_number(g: Graph, budget: int = DEFAULT_BUDGET) -> HadwigerBounds:
    """Largest t with a certified K_t-minor, raising t until a search fails."""
    lower, embedding = 0, None
    t = 1
    while True:
        result = find_clique_minor(g, t, budget)
        if result.found:
            lower, embedding = t, result.embedding
            t += 1
            continue
        if result.refuted:
            return HadwigerBounds(lower, lower, True, embedding)
        return HadwigerBounds(lower, max(lower, _counting_upper(g)), False, embedding)
