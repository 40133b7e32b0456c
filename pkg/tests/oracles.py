"""Brute-force reference implementations for small graphs."""

import random
from itertools import combinations, product
from typing import FrozenSet, List, Optional

import networkx as nx

from clustered_hadwiger.domain.models.graph import Graph


def separates(g: Graph, removed, x: int, y: int) -> bool:
    rest = g.remove_vertices(removed)
    return y not in nx.node_connected_component(rest.nx_graph, x)


def min_cut_size(g: Graph, x: int, y: int) -> int:
    """Smallest vertex set avoiding x and y whose removal separates them."""
    others = [v for v in g.sorted_vertices if v not in (x, y)]
    for size in range(len(others) + 1):
        for removed in combinations(others, size):
            if separates(g, removed, x, y):
                return size
    raise AssertionError("adjacent pair")


def max_disjoint_paths(g: Graph, x: int, y: int) -> int:
    """Largest set of internally disjoint x-y paths, by exhaustive packing."""
    interiors = [frozenset(p[1:-1]) for p in nx.all_simple_paths(g.nx_graph, x, y)]
    interiors.sort(key=len)
    best = 0

    def pack(start: int, used: FrozenSet[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        for i in range(start, len(interiors)):
            if not interiors[i] & used:
                pack(i + 1, used | interiors[i], count + 1)

    pack(0, frozenset(), 0)
    return best


def connectivity(g: Graph) -> int:
    n = g.order
    if n <= 1:
        return 0
    if g.size == n * (n - 1) // 2:
        return n - 1
    return min(
        min_cut_size(g, x, y)
        for x, y in combinations(g.sorted_vertices, 2)
        if not g.has_edge(x, y)
    )


def good_separation_exists(g: Graph, z, t: int) -> bool:
    """Enumerate every (A, B) cover: each vertex in A only, B only, or both."""
    zs = frozenset(z)
    vertices = g.sorted_vertices
    for sides in product((0, 1, 2), repeat=len(vertices)):
        only_a = frozenset(v for v, s in zip(vertices, sides) if s == 0)
        only_b = frozenset(v for v, s in zip(vertices, sides) if s == 1)
        both = len(vertices) - len(only_a) - len(only_b)
        if not only_a or not only_b or both > t:
            continue
        if only_a <= zs or only_b <= zs:
            continue
        if any((u in only_a and v in only_b) or (u in only_b and v in only_a) for u, v in g.edges):
            continue
        return True
    return False


def random_clique_minor(g: Graph, t: int, seed: int, tries: int = 200) -> Optional[List[FrozenSet[int]]]:
    """Contract random edges until some t vertices form a clique; returns branch sets."""
    rng = random.Random(seed)
    for _ in range(tries):
        current = g
        classes = {v: frozenset((v,)) for v in g.vertices}
        while True:
            for clique in nx.find_cliques(current.nx_graph):
                if len(clique) >= t:
                    return [classes[v] for v in sorted(clique)[:t]]
            if not current.edges:
                break
            u, v = rng.choice(sorted(current.edges))
            current, step = current.contract_edge(u, v)
            classes[step[u]] = classes[u] | classes[v]
            del classes[max(u, v)]
    return None
