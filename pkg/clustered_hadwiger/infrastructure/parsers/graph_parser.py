"""
Graph File Parser

Reads the plain-text graph format into Graph domain objects:

    c <comment>
    p <num_vertices> <num_edges>
    e <u> <v>

Vertices are named 1..n in the file and stored as dense identities 0..n-1.
Also reads list files (`<v> <c1> <c2> ...`), precolor files (`<v> <c>`) and
comma-separated vertex lists, all in external names.
"""

import hashlib
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple, Union

from ...domain.errors import GraphParseError
from ...domain.models.graph import Graph, normalize_edge

PathLike = Union[str, Path]


@dataclass(frozen=True)
class ParsedGraph:
    """A parsed graph, its name table (internal id -> external name) and input digest."""

    graph: Graph
    names: Mapping[int, int]
    digest: str = ""

    @cached_property
    def ids(self) -> Mapping[int, int]:
        """External name -> internal id."""
        return MappingProxyType({name: v for v, name in self.names.items()})

    def names_dict(self) -> Dict[str, int]:
        return {str(v): name for v, name in sorted(self.names.items())}


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.split("\n"), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        yield number, fields


def _positive_int(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(line, f"{what} must be an integer, got {token!r}") from None
    if value < 1:
        raise GraphParseError(line, f"{what} must be positive, got {value}")
    return value


class GraphParser:
    """Parse and write graph, list and precolor files."""

    def parse_file(self, file_path: PathLike) -> ParsedGraph:
        """Parse a graph file; the digest is the sha256 of its bytes."""
        data = Path(file_path).read_bytes()
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError:
            raise GraphParseError(0, "graph file must be ASCII") from None
        parsed = self.parse_text(text)
        return ParsedGraph(parsed.graph, parsed.names, hashlib.sha256(data).hexdigest())

    def parse_text(self, text: str) -> ParsedGraph:
        """
        Parse graph text.

        A file holding only comments and blank lines is the empty graph.

        Raises:
            GraphParseError: with the offending line number
        """
        header: Optional[Tuple[int, int, int]] = None
        edges: List[Tuple[int, int]] = []
        seen = set()

        for line, fields in _content_lines(text):
            tag = fields[0]
            if tag == "p":
                if header is not None:
                    raise GraphParseError(line, "duplicate header")
                counts = fields[2:] if len(fields) == 4 and fields[1] == "edge" else fields[1:]
                if len(counts) != 2:
                    raise GraphParseError(line, "header must be 'p <num_vertices> <num_edges>'")
                n, m = (self._count(token, line) for token in counts)
                header = (line, n, m)
            elif tag == "e":
                if header is None:
                    raise GraphParseError(line, "edge before header")
                if len(fields) != 3:
                    raise GraphParseError(line, "edge must be 'e <u> <v>'")
                u = _positive_int(fields[1], line, "vertex")
                v = _positive_int(fields[2], line, "vertex")
                n = header[1]
                if u > n or v > n:
                    raise GraphParseError(line, f"vertex {max(u, v)} exceeds declared {n}")
                if u == v:
                    raise GraphParseError(line, f"loop at vertex {u}")
                key = normalize_edge(u, v)
                if key in seen:
                    raise GraphParseError(line, f"duplicate edge {u} {v}")
                seen.add(key)
                edges.append((u - 1, v - 1))
            else:
                raise GraphParseError(line, f"unknown line type {tag!r}")

        if header is None:
            if edges:
                raise GraphParseError(0, "missing header")
            return ParsedGraph(Graph(), {})

        line, n, m = header
        if len(edges) != m:
            raise GraphParseError(line, f"header declares {m} edges, body has {len(edges)}")
        graph = Graph.from_edges(edges, range(n))
        return ParsedGraph(graph, {v: v + 1 for v in range(n)})

    @staticmethod
    def _count(token: str, line: int) -> int:
        try:
            value = int(token)
        except ValueError:
            raise GraphParseError(line, f"count must be an integer, got {token!r}") from None
        if value < 0:
            raise GraphParseError(line, f"count must be non-negative, got {value}")
        return value

    def parse_lists_file(self, file_path: PathLike, parsed: ParsedGraph) -> Dict[int, FrozenSet[int]]:
        return self.parse_lists(Path(file_path).read_text(), parsed)

    def parse_lists(self, text: str, parsed: ParsedGraph) -> Dict[int, FrozenSet[int]]:
        """`<vertex> <color> <color> ...` per line, keyed by internal id."""
        lists: Dict[int, FrozenSet[int]] = {}
        for line, fields in _content_lines(text):
            v = self._vertex(fields[0], line, parsed)
            if v in lists:
                raise GraphParseError(line, f"duplicate list for vertex {fields[0]}")
            if len(fields) < 2:
                raise GraphParseError(line, "list must name at least one color")
            lists[v] = frozenset(_positive_int(c, line, "color") for c in fields[1:])
        return lists

    def parse_precolor_file(self, file_path: PathLike, parsed: ParsedGraph) -> Dict[int, int]:
        return self.parse_precolor(Path(file_path).read_text(), parsed)

    def parse_precolor(self, text: str, parsed: ParsedGraph) -> Dict[int, int]:
        """`<vertex> <color>` per line, keyed by internal id."""
        colors: Dict[int, int] = {}
        for line, fields in _content_lines(text):
            if len(fields) != 2:
                raise GraphParseError(line, "precolor line must be '<vertex> <color>'")
            v = self._vertex(fields[0], line, parsed)
            if v in colors:
                raise GraphParseError(line, f"vertex {fields[0]} precolored twice")
            colors[v] = _positive_int(fields[1], line, "color")
        return colors

    def parse_vertex_list(self, text: str, parsed: ParsedGraph) -> FrozenSet[int]:
        """Comma-separated external names; an empty string is the empty set."""
        if not text.strip():
            return frozenset()
        vertices = []
        for token in text.split(","):
            vertices.append(self._vertex(token.strip(), 0, parsed))
        if len(set(vertices)) != len(vertices):
            raise GraphParseError(0, f"repeated vertex in {text!r}")
        return frozenset(vertices)

    @staticmethod
    def _vertex(token: str, line: int, parsed: ParsedGraph) -> int:
        name = _positive_int(token, line, "vertex")
        if name not in parsed.ids:
            raise GraphParseError(line, f"unknown vertex {name}")
        return parsed.ids[name]

    def serialize(self, graph: Graph) -> str:
        """`p n m` then edges ascending; vertices renamed 1..n in sorted order."""
        rename = {v: i + 1 for i, v in enumerate(graph.sorted_vertices)}
        edges = sorted(normalize_edge(rename[u], rename[v]) for u, v in graph.edges)
        lines = [f"p {graph.order} {graph.size}"]
        lines.extend(f"e {u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"

    def write_file(self, graph: Graph, file_path: PathLike) -> None:
        Path(file_path).write_text(self.serialize(graph))
