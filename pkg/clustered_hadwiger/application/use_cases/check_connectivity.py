"""
Check Connectivity Use Case
"""

from ...domain.algorithms.connectivity import (
    find_good_separation,
    is_k_connected,
    vertex_connectivity,
)
from ...domain.models.graph import Graph
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser


class CheckConnectivityUseCase:
    """Use case for the `connectivity` command."""

    def __init__(self, parser: GraphParser):
        self.parser = parser

    def execute(self, input_path: str, k: int) -> ResultDocument:
        """Decide k-connectivity; a negative answer carries a small separator."""
        parsed = self.parser.parse_file(input_path)
        g = parsed.graph
        answer = is_k_connected(g, k)
        payload = {"k": k, "k_connected": answer, "connectivity": vertex_connectivity(g)}
        payload["separation"] = None
        if not answer and g.order >= k + 1:
            separation = find_good_separation(g, (), k - 1)
            if separation is not None:
                payload["separation"] = separation.to_dict()

        return ResultDocument(
            command="connectivity",
            input_digest=parsed.digest,
            parameters={"k": k},
            outcome="verdict",
            payload=payload,
            verification=Verification.from_checks(connectivity_checks(g, k, answer, payload)),
            names=parsed.names_dict(),
        )


def connectivity_checks(g: Graph, k: int, answer: bool, payload: dict) -> list:
    """Order bound, plus the exhibited separator when the answer is negative."""
    checks = [Check(name="recomputed", ok=is_k_connected(g, k) == answer)]
    separation = payload.get("separation")
    if separation is not None:
        separator = set(separation["a"]) & set(separation["b"])
        checks.append(
            Check(
                name="separator",
                ok=len(separator) < k and not g.remove_vertices(separator).is_connected(),
                detail={"separator": sorted(separator)},
            )
        )
    return checks
