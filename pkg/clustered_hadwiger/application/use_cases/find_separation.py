"""
Find Separation Use Case

Looks for a Z-good separation of bounded order in a graph file.
"""

from ...domain.algorithms.connectivity import classify_separation, find_good_separation
from ...domain.models.graph import Graph
from ...domain.models.separation import Separation
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser


class FindSeparationUseCase:
    """Use case for the `separation` command."""

    def __init__(self, parser: GraphParser):
        self.parser = parser

    def execute(self, input_path: str, t: int, z_spec: str = "") -> ResultDocument:
        parsed = self.parser.parse_file(input_path)
        g = parsed.graph
        z = self.parser.parse_vertex_list(z_spec, parsed)
        separation = find_good_separation(g, z, t)

        payload = {
            "t": t,
            "z": sorted(z),
            "found": separation is not None,
            "separation": separation.to_dict() if separation else None,
        }
        return ResultDocument(
            command="separation",
            input_digest=parsed.digest,
            parameters={"t": t, "z": z_spec},
            outcome="separation",
            payload=payload,
            verification=Verification.from_checks(separation_checks(g, z, t, separation)),
            names=parsed.names_dict(),
        )


def separation_checks(g: Graph, z, t: int, separation) -> list:
    """A found separation must be valid, Z-good and of order <= t."""
    if separation is None:
        return [Check(name="exhaustive_pair_scan", ok=find_good_separation(g, z, t) is None)]
    problems = separation.problems(g)
    checks = [Check(name="valid_separation", ok=not problems, detail=problems)]
    if not problems:
        verdict = classify_separation(separation, z, g)
        checks.append(Check(name="z_good", ok=verdict.is_good, detail=verdict.to_dict()))
    checks.append(Check(name="order", ok=separation.order <= t, detail={"order": separation.order}))
    return checks


def separation_from_payload(data: dict) -> Separation:
    return Separation(frozenset(data["a"]), frozenset(data["b"]))
