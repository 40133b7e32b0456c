from pathlib import Path

import networkx as nx
import pytest

from clustered_hadwiger.domain.models.graph import Graph

SAMPLE_DATA = Path(__file__).resolve().parent.parent / "sample_data"


@pytest.fixture
def sample_data() -> Path:
    return SAMPLE_DATA


@pytest.fixture
def k5() -> Graph:
    return Graph.complete(5)


@pytest.fixture
def k6() -> Graph:
    return Graph.complete(6)


@pytest.fixture
def c6() -> Graph:
    return Graph.cycle(6)


@pytest.fixture
def path3() -> Graph:
    """a - b - c as 0 - 1 - 2."""
    return Graph.path(3)


@pytest.fixture
def petersen() -> Graph:
    """Outer rim 0..4, spokes i - i+5, inner pentagram on 5..9."""
    return Graph.from_networkx(nx.petersen_graph())


def write_graph(tmp_path: Path, name: str, graph: Graph) -> Path:
    from clustered_hadwiger.infrastructure.parsers.graph_parser import GraphParser

    path = tmp_path / name
    GraphParser().write_file(graph, path)
    return path
