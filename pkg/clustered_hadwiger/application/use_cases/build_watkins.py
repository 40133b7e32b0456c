"""
Build Watkins Use Case

Generates a tightness instance, writes it as a graph file and reports the
re-checked claims about it.
"""

from typing import Optional

from ...domain.algorithms.constructions import verify_tightness, watkins_graph
from ...domain.models.watkins import TightnessReport
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser


class BuildWatkinsUseCase:
    """Use case for the `watkins` command."""

    def __init__(self, parser: GraphParser):
        self.parser = parser

    def execute(self, k: int, n: int, output_path: Optional[str] = None) -> ResultDocument:
        instance = watkins_graph(k, n)
        if output_path:
            self.parser.write_file(instance.graph, output_path)
        report = verify_tightness(instance)
        return ResultDocument(
            command="watkins",
            parameters={"k": k, "n": n, "output": output_path},
            outcome="instance",
            payload={"instance": instance.to_dict(), "report": report.to_dict()},
            verification=Verification.from_checks(tightness_checks(report)),
            names={str(v): v + 1 for v in instance.graph.sorted_vertices},
        )


def tightness_checks(report: TightnessReport) -> list:
    return [Check(name=c.name, ok=c.ok, detail=dict(c.detail)) for c in report.checks]
