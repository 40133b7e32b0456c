"""
Find Minor Use Case

Searches a graph file for a clique minor, or bounds its Hadwiger number.
"""

from typing import Optional

from ...config import Settings
from ...domain.algorithms.minors import find_clique_minor, hadwiger_number, verify_embedding
from ...domain.errors import BudgetExceeded
from ...domain.models.graph import Graph
from ...domain.models.minor import MinorEmbedding
from ...infrastructure.documents.result_document import Check, ResultDocument, Verification
from ...infrastructure.parsers.graph_parser import GraphParser


class FindMinorUseCase:
    """Use case for the `minor` command."""

    def __init__(self, parser: GraphParser, settings: Settings):
        self.parser = parser
        self.settings = settings

    def execute(
        self,
        input_path: str,
        t: int,
        budget: Optional[int] = None,
        hadwiger: bool = False,
    ) -> ResultDocument:
        """
        Raises:
            BudgetExceeded: the search ran out of nodes before deciding
        """
        parsed = self.parser.parse_file(input_path)
        g = parsed.graph
        budget = budget or self.settings.minor_budget

        result = find_clique_minor(g, t, budget)
        if not result.decided:
            raise BudgetExceeded(
                f"K_{t} search undecided after {budget} nodes",
                {"t": t, "budget": budget, "nodes_explored": result.nodes_explored},
            )
        payload = {"t": t, "search": result.to_dict(), "embedding": None}
        checks = []
        if result.embedding is not None:
            payload["embedding"] = result.embedding.to_dict()
            checks.extend(embedding_checks(g, payload["embedding"], t))
        else:
            checks.append(Check(name="exhaustive_refutation", ok=result.refuted))

        if hadwiger:
            bounds = hadwiger_number(g, budget)
            payload["hadwiger"] = bounds.to_dict()
            if bounds.embedding is not None:
                verdict = verify_embedding(g, bounds.embedding, bounds.lower)
                checks.append(Check(name="hadwiger_lower", ok=verdict.ok, detail=verdict.to_dict()))

        return ResultDocument(
            command="minor",
            input_digest=parsed.digest,
            parameters={"t": t, "budget": budget, "hadwiger": hadwiger},
            outcome="embedding",
            payload=payload,
            verification=Verification.from_checks(checks),
            names=parsed.names_dict(),
        )


def embedding_checks(g: Graph, data: dict, t: int) -> list:
    embedding = MinorEmbedding.from_lists(data["branch_sets"])
    verdict = verify_embedding(g, embedding, t)
    return [Check(name="embedding", ok=verdict.ok, detail=verdict.to_dict())]
