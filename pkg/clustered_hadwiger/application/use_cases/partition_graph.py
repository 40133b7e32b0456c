"""
Partition Graph Use Case

Colors a graph file with bounded monochromatic components, or reports the
highly connected minor the recursion ran into.
"""

from typing import Optional

from ...config import Settings
from ...domain.algorithms.connectivity import is_k_connected
from ...domain.algorithms.minors import audit_witness
from ...domain.algorithms.partition import clustered_color, verify_coloring
from ...domain.models.coloring import (
    CapacityParams,
    CaseIVWitness,
    ClusteredColoring,
    ListAssignment,
    part_count,
)
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser, ParsedGraph


class PartitionGraphUseCase:
    """Use case for the `partition` command."""

    def __init__(self, parser: GraphParser, settings: Settings):
        self.parser = parser
        self.settings = settings

    def _lists(
        self,
        parsed: ParsedGraph,
        t: int,
        precolor_path: Optional[str],
        lists_path: Optional[str],
    ) -> ListAssignment:
        precoloring = (
            self.parser.parse_precolor_file(precolor_path, parsed) if precolor_path else {}
        )
        if lists_path is None:
            return ListAssignment.uniform(
                parsed.graph.vertices, part_count(t), precoloring
            )
        lists = self.parser.parse_lists_file(lists_path, parsed)
        return ListAssignment(lists, frozenset()).precolor(precoloring)

    def execute(
        self,
        input_path: str,
        t: int,
        capacity: int,
        precolor_path: Optional[str] = None,
        lists_path: Optional[str] = None,
        audit: bool = True,
    ) -> ResultDocument:
        """
        Run the clustered coloring on a graph file.

        Args:
            input_path: graph file
            t: clique-minor parameter
            capacity: stand-in for the minor-forcing order
            precolor_path: optional `<vertex> <color>` file; these vertices form Z
            lists_path: optional list file; defaults to {1..ceil((7t-3)/2)}
            audit: search the witness minor for K_t when Case IV fires

        Returns:
            ResultDocument with outcome "coloring" or "witness"
        """
        parsed = self.parser.parse_file(input_path)
        g = parsed.graph
        params = CapacityParams(t=t, capacity=capacity)
        lists = self._lists(parsed, t, precolor_path, lists_path)
        z = lists.precolored

        outcome = clustered_color(g, params, z, lists)

        parameters = {
            "t": t,
            "capacity": capacity,
            "precolor": precolor_path,
            "lists": lists_path,
        }
        base = {"lists": lists.to_dict(), "z": sorted(z), "part_count": params.part_count}

        if isinstance(outcome, ClusteredColoring):
            verdict = verify_coloring(g, outcome, lists, z, params.component_bound)
            payload = dict(
                base,
                coloring=outcome.to_dict(),
                max_component_size=outcome.max_component_size(g),
                colors_used=len(outcome.colors_used),
            )
            checks = [Check(name="coloring", ok=verdict.ok, detail=verdict.to_dict())]
            outcome_kind = "coloring"
        else:
            payload = dict(base, witness=outcome.to_dict())
            checks = witness_checks(outcome, t)
            if audit:
                report = audit_witness(outcome, t, self.settings.audit_budget)
                payload["audit"] = report.to_dict()
            outcome_kind = "witness"

        return ResultDocument(
            command="partition",
            input_digest=parsed.digest,
            parameters=parameters,
            outcome=outcome_kind,
            payload=payload,
            verification=Verification.from_checks(checks),
            names=parsed.names_dict(),
        )


def witness_checks(witness: CaseIVWitness, t: int) -> list:
    """Replay the plan from the subgraph and re-check connectivity and order."""
    replayed = witness.plan.replay()
    return [
        Check(name="plan_replay", ok=replayed == witness.minor),
        Check(
            name="witness_connectivity",
            ok=is_k_connected(replayed, t + 1),
            detail={"k": t + 1, "order": replayed.order},
        ),
        Check(
            name="witness_order",
            ok=replayed.order >= witness.subgraph.order - len(witness.z),
            detail={"minor_order": replayed.order, "subgraph_order": witness.subgraph.order,
                    "z": len(witness.z)},
        ),
    ]
