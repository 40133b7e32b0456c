import hashlib

import pytest
from hypothesis import given

from clustered_hadwiger.domain.errors import GraphParseError
from clustered_hadwiger.domain.models.graph import Graph
from clustered_hadwiger.infrastructure.parsers.graph_parser import GraphParser

from .strategies import graphs

TRIANGLE = "c a triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\n"


@pytest.fixture
def parser() -> GraphParser:
    return GraphParser()


def test_parse_triangle(parser):
    parsed = parser.parse_text(TRIANGLE)
    assert parsed.graph == Graph.complete(3)
    assert parsed.names[0] == 1
    assert parsed.ids[3] == 2
    assert parsed.names_dict() == {"0": 1, "1": 2, "2": 3}


def test_isolated_vertices_come_from_header(parser):
    parsed = parser.parse_text("p 4 1\ne 1 2\n")
    assert parsed.graph.order == 4
    assert parsed.graph.degree(3) == 0


def test_long_header_form(parser):
    assert parser.parse_text("p edge 2 1\ne 1 2\n").graph.size == 1


def test_comments_only_is_the_empty_graph(parser):
    parsed = parser.parse_text("c nothing here\n\n")
    assert parsed.graph.order == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("p 3 1\np 3 1\ne 1 2\n", 2),
        ("e 1 2\np 2 1\n", 1),
        ("p 3 1\ne 1\n", 2),
        ("p 3 1\ne 1 4\n", 2),
        ("p 3 1\ne 0 1\n", 2),
        ("p 3 1\ne 2 2\n", 2),
        ("p 3 2\ne 1 2\ne 2 1\n", 3),
        ("p 3 1\nx 1 2\n", 2),
        ("c header\np 3 2\ne 1 2\n", 2),
        ("p 3 x\n", 1),
    ],
)
def test_malformed_lines(parser, text, line):
    with pytest.raises(GraphParseError) as info:
        parser.parse_text(text)
    assert info.value.line == line


def test_parse_file_digest(parser, tmp_path):
    path = tmp_path / "triangle.graph"
    path.write_text(TRIANGLE)
    parsed = parser.parse_file(path)
    assert parsed.digest == hashlib.sha256(TRIANGLE.encode()).hexdigest()


def test_non_ascii_file(parser, tmp_path):
    path = tmp_path / "bad.graph"
    path.write_bytes("c grafo é\np 1 0\n".encode("utf-8"))
    with pytest.raises(GraphParseError):
        parser.parse_file(path)


def test_sample_files(parser, sample_data):
    assert parser.parse_file(sample_data / "k6.graph").graph == Graph.complete(6)
    petersen = parser.parse_file(sample_data / "petersen.graph").graph
    assert petersen.order == 10 and petersen.size == 15
    assert {petersen.degree(v) for v in petersen.vertices} == {3}
    assert parser.parse_file(sample_data / "path20.graph").graph == Graph.path(20)


def test_lists_and_precolor(parser):
    parsed = parser.parse_text(TRIANGLE)
    lists = parser.parse_lists("1 1 2\n2 2 3\nc skip\n3 5\n", parsed)
    assert lists == {0: {1, 2}, 1: {2, 3}, 2: {5}}
    assert parser.parse_precolor("2 4\n", parsed) == {1: 4}


def test_list_errors(parser):
    parsed = parser.parse_text(TRIANGLE)
    with pytest.raises(GraphParseError):
        parser.parse_lists("1 1\n1 2\n", parsed)
    with pytest.raises(GraphParseError):
        parser.parse_lists("4 1\n", parsed)
    with pytest.raises(GraphParseError):
        parser.parse_precolor("1 1 2\n", parsed)


def test_vertex_list(parser):
    parsed = parser.parse_text(TRIANGLE)
    assert parser.parse_vertex_list("1, 3", parsed) == {0, 2}
    assert parser.parse_vertex_list("", parsed) == frozenset()
    with pytest.raises(GraphParseError):
        parser.parse_vertex_list("1,1", parsed)
    with pytest.raises(GraphParseError):
        parser.parse_vertex_list("7", parsed)


def test_serialize_renames_sorted_vertices(parser):
    g = Graph.from_edges([(10, 30), (20, 30)])
    text = parser.serialize(g)
    assert text == "p 3 2\ne 1 3\ne 2 3\n"
    assert parser.parse_text(text).graph == Graph.from_edges([(0, 2), (1, 2)])


def test_long_vertex_list_maps_every_name(parser):
    parsed = parser.parse_text(parser.serialize(Graph.path(5000)))
    text = ",".join(str(name) for name in range(1, 5001))
    assert parser.parse_vertex_list(text, parsed) == frozenset(range(5000))
    assert parsed.ids[5000] == 4999


@given(graphs())
def test_parse_inverts_serialize(g):
    parser = GraphParser()
    parsed = parser.parse_text(parser.serialize(g))
    assert parsed.graph == g
    assert parsed.names_dict() == {str(v): v + 1 for v in g.sorted_vertices}
