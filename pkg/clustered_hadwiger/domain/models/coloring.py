"""
Coloring Domain Models

List assignments, clustered colorings, the capacity parameters standing in for
the nonconstructive minor-forcing order, and the witness emitted when the
recursion reaches a highly connected piece.
"""

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Any, Dict, FrozenSet, Iterable, Mapping, Optional

from ..errors import InvalidLists, InvalidParams
from .contraction_plan import ContractionPlan
from .graph import Graph

Color = int


def part_count(t: int) -> int:
    """Number of parts ceil((7t - 3) / 2)."""
    return (7 * t - 2) // 2


@dataclass(frozen=True)
class CapacityParams:
    """t is the clique-minor parameter; capacity is the user-supplied minor-forcing order."""

    t: int
    capacity: int

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParams(f"t must be at least 1, got {self.t}", {"t": self.t})
        if self.capacity < 1:
            raise InvalidParams(
                f"capacity must be at least 1, got {self.capacity}", {"capacity": self.capacity}
            )

    @property
    def component_bound(self) -> int:
        return self.capacity + 2 * self.t - 1

    @property
    def part_count(self) -> int:
        return part_count(self.t)


@dataclass(frozen=True, eq=False)
class ListAssignment:
    """Per-vertex color lists; precolored vertices carry singleton lists."""

    lists: Mapping[int, FrozenSet[Color]]
    precolored: FrozenSet[int] = frozenset()

    def __post_init__(self):
        frozen = {v: frozenset(colors) for v, colors in self.lists.items()}
        object.__setattr__(self, "lists", MappingProxyType(frozen))
        object.__setattr__(self, "precolored", frozenset(self.precolored))

    @classmethod
    def uniform(
        cls,
        vertices: Iterable[int],
        colors: int,
        precoloring: Optional[Mapping[int, Color]] = None,
    ) -> "ListAssignment":
        """Lists {1..colors} everywhere, with optional singleton precoloring."""
        palette = frozenset(range(1, colors + 1))
        lists = {v: palette for v in vertices}
        precoloring = dict(precoloring or {})
        for v, color in precoloring.items():
            lists[v] = frozenset((color,))
        return cls(lists, frozenset(precoloring))

    def colors_of(self, v: int) -> FrozenSet[Color]:
        return self.lists[v]

    def restrict(self, vertices: Iterable[int]) -> "ListAssignment":
        keep = frozenset(vertices)
        return ListAssignment({v: self.lists[v] for v in keep}, self.precolored & keep)

    def precolor(self, colors: Mapping[int, Color]) -> "ListAssignment":
        """Fix the given vertices to singleton lists and mark them precolored."""
        lists = dict(self.lists)
        for v, color in colors.items():
            lists[v] = frozenset((color,))
        return ListAssignment(lists, self.precolored | frozenset(colors))

    def validate(self, graph: Graph, t: int) -> None:
        """
        Check the list hypotheses for parameter t.

        Raises:
            InvalidLists: naming the offending vertex and condition
        """
        missing = sorted(graph.vertices - set(self.lists))
        if missing:
            raise InvalidLists(f"no list for vertex {missing[0]}", {"vertex": missing[0], "condition": "total"})
        outside = sorted(self.precolored - graph.vertices)
        if outside:
            raise InvalidLists(
                f"precolored vertex {outside[0]} is not in the graph",
                {"vertex": outside[0], "condition": "precolored_in_graph"},
            )
        if len(self.precolored) > 2 * t - 1:
            raise InvalidLists(
                f"{len(self.precolored)} precolored vertices exceed 2t - 1 = {2 * t - 1}",
                {"precolored": len(self.precolored), "condition": "precolored_count"},
            )
        for v in graph.sorted_vertices:
            size = len(self.lists[v])
            if v in self.precolored:
                if size != 1:
                    raise InvalidLists(
                        f"precolored vertex {v} has {size} colors",
                        {"vertex": v, "condition": "singleton"},
                    )
            elif 2 * size < 7 * t - 3:
                raise InvalidLists(
                    f"vertex {v} has {size} colors, needs at least {part_count(t)}",
                    {"vertex": v, "size": size, "condition": "list_size"},
                )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lists": {str(v): sorted(c) for v, c in sorted(self.lists.items())},
            "precolored": sorted(self.precolored),
        }


@dataclass(frozen=True, eq=False)
class ClusteredColoring:
    """Vertex colors plus the component size they certify."""

    assignment: Mapping[int, Color]
    component_bound: int
    case_counts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "assignment", MappingProxyType(dict(self.assignment)))
        object.__setattr__(self, "case_counts", MappingProxyType(dict(self.case_counts)))

    @property
    def colors_used(self) -> FrozenSet[Color]:
        return frozenset(self.assignment.values())

    def color_classes(self) -> Dict[Color, FrozenSet[int]]:
        classes: Dict[Color, set] = {}
        for v, color in self.assignment.items():
            classes.setdefault(color, set()).add(v)
        return {color: frozenset(vs) for color, vs in sorted(classes.items())}

    def max_component_size(self, graph: Graph) -> int:
        """Largest monochromatic component."""
        largest = 0
        for members in self.color_classes().values():
            for component in graph.induced_subgraph(members).connected_components():
                largest = max(largest, len(component))
        return largest

    def to_dict(self) -> Dict[str, Any]:
        return {
            "assignment": {str(v): c for v, c in sorted(self.assignment.items())},
            "component_bound": self.component_bound,
            "case_counts": dict(self.case_counts),
        }


@dataclass(frozen=True)
class CaseIVWitness:
    """A highly connected minor of a recursion subgraph, built by contraction."""

    subgraph: Graph
    z: FrozenSet[int]
    plan: ContractionPlan

    @property
    def minor(self) -> Graph:
        return self.plan.result

    @property
    def minor_order(self) -> int:
        return self.minor.order

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subgraph_vertices": list(self.subgraph.sorted_vertices),
            "z": sorted(self.z),
            "plan": self.plan.to_dict(),
            "minor_order": self.minor_order,
        }


class ColoringCondition(str, Enum):
    TOTAL = "total"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"


@dataclass(frozen=True)
class ColoringVerdict:
    """Result of checking C1-C3; `witness` explains the first failure."""

    ok: bool
    condition: Optional[ColoringCondition] = None
    witness: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "condition": self.condition.value if self.condition else None,
            "witness": dict(self.witness),
        }
