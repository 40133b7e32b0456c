"""
Contract Graph Use Case

Builds a contraction plan at Z that makes a graph file k-connected.
"""

from typing import List

from ...domain.algorithms.connectivity import is_k_connected
from ...domain.algorithms.contraction import contract_to_k_connected, plan_edge_violation
from ...domain.models.graph import Graph
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser


class ContractGraphUseCase:
    """Use case for the `contract` command."""

    def __init__(self, parser: GraphParser):
        self.parser = parser

    def execute(self, input_path: str, k: int, z_spec: str) -> ResultDocument:
        parsed = self.parser.parse_file(input_path)
        g = parsed.graph
        z = self.parser.parse_vertex_list(z_spec, parsed)
        plan = contract_to_k_connected(g, z, k)
        payload = plan.to_dict()
        return ResultDocument(
            command="contract",
            input_digest=parsed.digest,
            parameters={"k": k, "z": z_spec},
            outcome="plan",
            payload=payload,
            verification=Verification.from_checks(plan_checks(g, payload)),
            names=parsed.names_dict(),
        )


def plan_checks(host: Graph, payload: dict) -> List[Check]:
    """Replay the plan's edges from the host and re-check the result."""
    z = frozenset(payload["z"])
    k = payload["k"]
    edges = [tuple(e) for e in payload["edges"]]
    deleted = frozenset(payload["deleted"])
    violation = plan_edge_violation(host, z, edges)
    checks = [
        Check(name="edge_count", ok=len(edges) <= len(z), detail={"edges": len(edges), "z": len(z)}),
        Check(name="z_endpoints", ok=violation is None, detail=violation or {}),
        Check(name="deleted_in_z", ok=deleted <= z),
    ]
    if violation is not None:
        return checks
    replayed, _ = host.contract_edges(edges)
    result = replayed.remove_vertices(deleted)
    checks.append(
        Check(
            name="k_connected",
            ok=is_k_connected(result, k),
            detail={"k": k, "order": result.order, "size": result.size},
        )
    )
    return checks
