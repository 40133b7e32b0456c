"""
Generate Instance Use Case

Writes a seeded random graph of one of the supported families.
"""

from typing import Optional

import networkx as nx

from ...domain.algorithms.connectivity import find_good_separation
from ...domain.errors import InvalidParams
from ...domain.models.graph import Graph
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.generators.random_graphs import (
    FAMILIES,
    gnp_graph,
    hope_instance,
    planar_graph,
)
from ...infrastructure.parsers.graph_parser import GraphParser


class GenerateInstanceUseCase:
    """Use case for the `generate` command."""

    def __init__(self, parser: GraphParser):
        self.parser = parser

    def build(self, family: str, n: int, seed: int, p: float, k: int, z_size: int):
        """The generated graph and, for the hope family, its Z."""
        if family == "planar":
            return planar_graph(n, seed), frozenset()
        if family == "gnp":
            return gnp_graph(n, p, seed), frozenset()
        if family == "hope":
            instance = hope_instance(n, k, z_size, seed)
            return instance.graph, instance.z
        raise InvalidParams(f"unknown family {family!r}", {"family": family, "families": list(FAMILIES)})

    def execute(
        self,
        family: str,
        n: int,
        seed: int,
        output_path: Optional[str] = None,
        p: float = 0.3,
        k: int = 4,
        z_size: int = 2,
    ) -> ResultDocument:
        g, z = self.build(family, n, seed, p, k, z_size)
        if output_path:
            self.parser.write_file(g, output_path)
        parameters = {"family": family, "n": n, "seed": seed, "output": output_path}
        if family == "gnp":
            parameters["p"] = p
        if family == "hope":
            parameters.update(k=k, z_size=z_size)
        return ResultDocument(
            command="generate",
            parameters=parameters,
            outcome="instance",
            payload={"order": g.order, "size": g.size, "z": sorted(z), "graph": g.to_dict()},
            verification=Verification.from_checks(instance_checks(family, g, z, k)),
            names={str(v): v + 1 for v in g.sorted_vertices},
        )


def instance_checks(family: str, g: Graph, z, k: int) -> list:
    checks = [Check(name="dense_identities", ok=g.vertices == frozenset(range(g.order)))]
    if family == "planar":
        planar, _ = nx.check_planarity(g.nx_graph)
        checks.append(Check(name="planar", ok=planar))
    if family == "hope":
        checks.append(Check(name="z_bad", ok=find_good_separation(g, z, k - 1) is None))
    return checks
