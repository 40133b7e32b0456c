"""
Verify Result Use Case

Re-checks a previously emitted ResultDocument against its input graph without
trusting anything the document claims beyond the certificate it carries.
"""

from typing import Callable, Dict, List, Optional, Tuple

from ...config import Settings
from ...domain.algorithms.connectivity import is_k_connected
from ...domain.algorithms.constructions import verify_tightness, watkins_graph
from ...domain.algorithms.contraction import plan_edge_violation
from ...domain.algorithms.minors import find_clique_minor
from ...domain.algorithms.partition import verify_coloring
from ...domain.errors import DocumentError, HadwigerError
from ...domain.models.coloring import (
    CapacityParams,
    ClusteredColoring,
    ListAssignment,
    part_count,
)
from ...domain.models.graph import Graph
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser, ParsedGraph
from .build_watkins import tightness_checks
from .check_connectivity import connectivity_checks
from .contract_graph import plan_checks
from .find_minor import embedding_checks
from .find_separation import separation_checks, separation_from_payload
from .generate_instance import GenerateInstanceUseCase, instance_checks

KINDS: Dict[str, Tuple[Tuple[str, str], ...]] = {
    "coloring": (("partition", "coloring"),),
    "witness": (("partition", "witness"),),
    "plan": (("contract", "plan"),),
    "embedding": (("minor", "embedding"),),
    "instance": (("watkins", "instance"), ("generate", "instance")),
    "separation": (("separation", "separation"),),
    "connectivity": (("connectivity", "verdict"),),
}


class VerifyResultUseCase:
    """Use case for the `verify` command."""

    def __init__(self, parser: GraphParser, settings: Settings):
        self.parser = parser
        self.settings = settings

    def execute(self, kind: str, result_path: str, input_path: Optional[str] = None) -> ResultDocument:
        """
        Raises:
            DocumentError: unknown kind, a kind/document mismatch, a missing
                input graph or a payload that cannot be decoded
        """
        if kind not in KINDS:
            raise DocumentError(f"unknown kind {kind!r}", {"kinds": sorted(KINDS)})
        doc = ResultDocument.load(result_path)
        if (doc.command, doc.outcome) not in KINDS[kind]:
            raise DocumentError(
                f"document from {doc.command}/{doc.outcome} cannot be verified as {kind}",
                {"kind": kind, "command": doc.command, "outcome": doc.outcome},
            )

        parsed = self.parser.parse_file(input_path) if input_path else None
        if parsed is None and kind != "instance":
            raise DocumentError(f"verifying {kind} needs the input graph", {"kind": kind})

        checks: List[Check] = []
        if parsed is not None and doc.input_digest:
            checks.append(
                Check(
                    name="input_digest",
                    ok=parsed.digest == doc.input_digest,
                    detail={"expected": doc.input_digest, "actual": parsed.digest},
                )
            )

        handler: Callable[[ResultDocument, Optional[ParsedGraph]], List[Check]] = getattr(
            self, f"_verify_{kind}"
        )
        try:
            checks.extend(handler(doc, parsed))
        except HadwigerError as exc:
            checks.append(Check(name="replay", ok=False, detail=exc.to_dict()))
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"cannot decode {kind} payload: {exc!r}", {"kind": kind}) from exc

        return ResultDocument(
            command="verify",
            input_digest=parsed.digest if parsed else "",
            parameters={"kind": kind, "result": str(result_path), "input": input_path},
            outcome="verdict",
            payload={"verified_command": doc.command, "verified_outcome": doc.outcome},
            verification=Verification.from_checks(checks),
            names=parsed.names_dict() if parsed else {},
        )

    def _verify_coloring(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        g = parsed.graph
        params = CapacityParams(t=doc.parameters["t"], capacity=doc.parameters["capacity"])
        stored = doc.payload["lists"]
        lists = ListAssignment(
            {int(v): frozenset(colors) for v, colors in stored["lists"].items()},
            frozenset(stored["precolored"]),
        )
        checks = []
        if doc.parameters.get("lists") is None:
            palette = frozenset(range(1, part_count(params.t) + 1))
            default = all(
                lists.lists.get(v) == palette for v in g.vertices if v not in lists.precolored
            )
            checks.append(Check(name="default_lists", ok=default))
        try:
            lists.validate(g, params.t)
            checks.append(Check(name="list_hypotheses", ok=True))
        except HadwigerError as exc:
            checks.append(Check(name="list_hypotheses", ok=False, detail=exc.to_dict()))

        assignment = {int(v): c for v, c in doc.payload["coloring"]["assignment"].items()}
        coloring = ClusteredColoring(assignment, params.component_bound)
        verdict = verify_coloring(g, coloring, lists, lists.precolored, params.component_bound)
        checks.append(Check(name="coloring", ok=verdict.ok, detail=verdict.to_dict()))
        return checks

    def _verify_witness(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        t = doc.parameters["t"]
        witness = doc.payload["witness"]
        sub = parsed.graph.induced_subgraph(witness["subgraph_vertices"])
        z = frozenset(witness["z"])
        plan = witness["plan"]
        edges = [tuple(e) for e in plan["edges"]]
        violation = plan_edge_violation(sub, z, edges)
        endpoints = Check(
            name="z_endpoints",
            ok=violation is None and len(edges) <= len(z),
            detail=violation or {},
        )
        if violation is not None:
            return [endpoints]
        contracted, _ = sub.contract_edges(edges)
        minor = contracted.remove_vertices(plan["deleted"])
        return [
            endpoints,
            Check(
                name="witness_connectivity",
                ok=is_k_connected(minor, t + 1),
                detail={"k": t + 1, "order": minor.order},
            ),
            Check(
                name="witness_order",
                ok=minor.order >= sub.order - len(z),
                detail={"minor_order": minor.order, "subgraph_order": sub.order, "z": len(z)},
            ),
        ]

    def _verify_plan(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        z = self.parser.parse_vertex_list(doc.parameters["z"], parsed)
        checks = [
            Check(name="parameters", ok=doc.payload["k"] == doc.parameters["k"]
                  and frozenset(doc.payload["z"]) == z),
        ]
        return checks + plan_checks(parsed.graph, doc.payload)

    def _verify_embedding(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        t = doc.parameters["t"]
        if doc.payload["embedding"] is not None:
            return embedding_checks(parsed.graph, doc.payload["embedding"], t)
        result = find_clique_minor(parsed.graph, t, self.settings.minor_budget)
        return [Check(name="exhaustive_refutation", ok=result.refuted, detail=result.to_dict())]

    def _verify_separation(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        t = doc.parameters["t"]
        z = self.parser.parse_vertex_list(doc.parameters["z"], parsed)
        data = doc.payload["separation"]
        separation = separation_from_payload(data) if data is not None else None
        return separation_checks(parsed.graph, z, t, separation)

    def _verify_connectivity(self, doc: ResultDocument, parsed: ParsedGraph) -> List[Check]:
        k = doc.parameters["k"]
        return connectivity_checks(parsed.graph, k, doc.payload["k_connected"], doc.payload)

    def _verify_instance(self, doc: ResultDocument, parsed: Optional[ParsedGraph]) -> List[Check]:
        params = doc.parameters
        if doc.command == "watkins":
            instance = watkins_graph(params["k"], params["n"])
            checks = self._same_graph(instance.graph, parsed)
            return checks + tightness_checks(verify_tightness(instance))

        generator = GenerateInstanceUseCase(self.parser)
        g, z = generator.build(
            params["family"],
            params["n"],
            params["seed"],
            params.get("p", 0.3),
            params.get("k", 4),
            params.get("z_size", 2),
        )
        stored = doc.payload["graph"]
        checks = [
            Check(
                name="regenerated",
                ok=g == Graph.from_edges(stored["edges"], stored["vertices"]),
                detail={"seed": params["seed"]},
            )
        ]
        checks.extend(self._same_graph(g, parsed))
        return checks + instance_checks(params["family"], g, z, params.get("k", 4))

    @staticmethod
    def _same_graph(expected: Graph, parsed: Optional[ParsedGraph]) -> List[Check]:
        if parsed is None:
            return []
        return [
            Check(
                name="input_matches",
                ok=parsed.graph == expected,
                detail={"order": parsed.graph.order, "size": parsed.graph.size},
            )
        ]
