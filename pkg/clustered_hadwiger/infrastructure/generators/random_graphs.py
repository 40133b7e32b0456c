"""
Random Instance Generators

Seeded generators for test corpora and the `generate` command. Every function
draws from its own random.Random(seed).
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ...domain.algorithms.connectivity import find_good_separation
from ...domain.algorithms.contraction import required_degree
from ...domain.errors import InvalidParams
from ...domain.models.graph import Graph

logger = logging.getLogger(__name__)

FAMILIES = ("planar", "gnp", "hope")


@dataclass(frozen=True)
class HopeInstance:
    """A graph and a set Z meeting the hypotheses of the contraction theorem for k."""

    graph: Graph
    z: FrozenSet[int]
    k: int

    def to_dict(self) -> Dict[str, object]:
        return {"z": sorted(self.z), "k": self.k, "order": self.graph.order}


def planar_graph(n: int, seed: int, deletion: float = 0.3) -> Graph:
    """
    Stacked triangulation on n vertices (each new vertex goes into a random
    face), then each edge is deleted with probability `deletion`.
    """
    if n < 0:
        raise InvalidParams(f"n must be non-negative, got {n}", {"n": n})
    if not 0.0 <= deletion <= 1.0:
        raise InvalidParams(f"deletion must lie in [0, 1], got {deletion}", {"deletion": deletion})
    rng = random.Random(seed)
    if n <= 3:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        edges = [(0, 1), (1, 2), (0, 2)]
        faces: List[Tuple[int, int, int]] = [(0, 1, 2), (0, 1, 2)]
        for v in range(3, n):
            a, b, c = faces.pop(rng.randrange(len(faces)))
            edges.extend([(v, a), (v, b), (v, c)])
            faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    kept = [e for e in edges if rng.random() >= deletion]
    return Graph.from_edges(kept, range(n))


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with dense identities 0..n-1."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InvalidParams(f"need n >= 0 and p in [0, 1], got n={n} p={p}", {"n": n, "p": p})
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def hope_instance(n: int, k: int, z_size: int, seed: int, attempts: int = 200) -> HopeInstance:
    """
    Rejection-sample a graph and a set Z meeting the hypotheses of the
    contraction theorem for k: every (k - 1)-separation is Z-bad and every
    neighbour of Z outside Z has degree at least 3k/2 + |Z| - 2.

    The non-Z vertices form G(n - |Z|, p) and each Z-vertex joins every
    earlier vertex with probability q. G - Z need not be k-connected, so a
    contraction at Z can fail for some neighbours.

    Raises:
        InvalidParams: the sizes are infeasible or no draw succeeded
    """
    core = n - z_size
    if k < 1 or z_size < 0 or core < k + 1:
        raise InvalidParams(
            f"need k >= 1, |Z| >= 0 and n - |Z| >= k + 1, got n={n} k={k} |Z|={z_size}",
            {"n": n, "k": k, "z_size": z_size},
        )
    rng = random.Random(seed)
    need = required_degree(k, z_size)
    z = frozenset(range(core, n))
    for attempt in range(attempts):
        p = 0.3 + 0.5 * rng.random()
        q = 0.5 + 0.5 * rng.random()
        edges = list(gnp_graph(core, p, rng.randrange(2**31)).edges)
        for v in sorted(z):
            edges.extend((w, v) for w in range(v) if rng.random() < q)
        g = Graph.from_edges(edges, range(n))
        frontier = set()
        for v in z:
            frontier |= g.neighbors(v) - z
        if any(g.degree(w) < need for w in frontier):
            continue
        if find_good_separation(g, z, k - 1) is not None:
            continue
        logger.debug("hope instance n=%d k=%d |Z|=%d found on attempt %d", n, k, z_size, attempt)
        return HopeInstance(graph=g, z=z, k=k)
    raise InvalidParams(
        f"no instance after {attempts} attempts", {"n": n, "k": k, "z_size": z_size}
    )
