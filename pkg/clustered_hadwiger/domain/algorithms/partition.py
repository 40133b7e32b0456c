"""
Partition

Recursive list coloring with bounded monochromatic components. Subproblems run from an
explicit work stack, and each takes the first applicable case:

  I    the graph is small: avoid every precolored color
  II   a vertex outside Z has low degree: color the rest, then avoid its neighbours
  III  a Z-good t-separation exists: color B ∪ Z, then A with the separator precolored
  IV   otherwise: contract to a (t+1)-connected minor and return it as a witness

Every coloring that leaves this module has been re-checked against C1-C3.
The threshold (7t - 3) / 2 is compared in doubled form throughout.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

from ..errors import (
    CaseIVFailure,
    ColoringNotVerified,
    HadwigerError,
    InvalidLists,
    InvalidParams,
    InvalidSeparation,
    InvariantBroken,
)
from ..models.coloring import (
    CapacityParams,
    CaseIVWitness,
    ClusteredColoring,
    Color,
    ColoringCondition,
    ColoringVerdict,
    ListAssignment,
    part_count,
)
from ..models.graph import Graph
from ..models.separation import Separation
from .connectivity import find_good_separation, is_k_connected
from .contraction import contract_to_k_connected

logger = logging.getLogger(__name__)

Outcome = Union[ClusteredColoring, CaseIVWitness]


@dataclass(frozen=True)
class Case3Split:
    """P = Z - B, Q = Z ∩ A ∩ B, R = Z - A, X = (A ∩ B) - Z over the oriented separation."""

    p: FrozenSet[int]
    q: FrozenSet[int]
    r: FrozenSet[int]
    x: FrozenSet[int]
    separation: Separation

    @property
    def bridge(self) -> FrozenSet[int]:
        """A ∩ (B ∪ Z), precolored in the second recursive call."""
        return self.p | self.q | self.x


def case3_split(sep: Separation, z: Iterable[int], t: int) -> Case3Split:
    """
    Split Z around a Z-good t-separation, oriented so that |P| <= |R|.

    The orientation guarantees |P| + |Q| + |X| <= 2t - 1.

    Raises:
        InvalidSeparation: if sep is not a Z-good t-separation
        InvalidParams: if |Z| > 2t - 1
    """
    zs = frozenset(z)
    if len(zs) > 2 * t - 1:
        raise InvalidParams(f"|Z| = {len(zs)} exceeds 2t - 1 = {2 * t - 1}", {"z": sorted(zs)})
    if not sep.fragment_a or not sep.fragment_b:
        raise InvalidSeparation("empty fragment", {"separation": sep.to_dict()})
    if sep.order > t:
        raise InvalidSeparation(
            f"separator of size {sep.order} exceeds t = {t}", {"separation": sep.to_dict()}
        )
    if sep.is_bad_for(zs):
        raise InvalidSeparation("separation is Z-bad", {"separation": sep.to_dict(), "z": sorted(zs)})

    if len(zs - sep.b) > len(zs - sep.a):
        sep = sep.swapped()
    a, b = sep.a, sep.b
    p, q, r, x = zs - b, zs & a & b, zs - a, (a & b) - zs

    if len(p) + len(r) + 2 * len(q) + 2 * len(x) > 4 * t - 1:
        raise InvariantBroken("|P| + |R| + 2|Q| + 2|X| exceeds 4t - 1", {"t": t})
    if len(p) + len(q) + len(x) > 2 * t - 1:
        raise InvariantBroken("|P| + |Q| + |X| exceeds 2t - 1", {"t": t})
    return Case3Split(p=p, q=q, r=r, x=x, separation=sep)


def _smallest_avoiding(colors: FrozenSet[Color], taken: Set[Color], vertex: int) -> Color:
    free = sorted(colors - taken)
    if not free:
        raise InvariantBroken(
            f"no admissible color left for vertex {vertex}",
            {"vertex": vertex, "list": sorted(colors), "taken": sorted(taken)},
        )
    return free[0]


def _only(colors: FrozenSet[Color]) -> Color:
    (color,) = colors
    return color


def _color_small(g: Graph, z: FrozenSet[int], lists: ListAssignment) -> Dict[int, Color]:
    coloring = {v: _only(lists.colors_of(v)) for v in z}
    z_colors = set(coloring.values())
    for w in g.sorted_vertices:
        if w not in z:
            coloring[w] = _smallest_avoiding(lists.colors_of(w), z_colors, w)
    return coloring


@dataclass(frozen=True)
class _Subproblem:
    g: Graph
    z: FrozenSet[int]
    lists: ListAssignment


# (vertex, its neighbours when it was removed, its list)
_Peeled = Tuple[int, FrozenSet[int], FrozenSet[Color]]


def _solve(
    task: _Subproblem,
    params: CapacityParams,
    counts: Counter,
    work: List[Tuple[str, Any]],
    done: List[Dict[int, Color]],
) -> Optional[CaseIVWitness]:
    """Apply the first case that fits; pushes follow-up steps or a finished coloring."""
    g, z, lists = task.g, task.z, task.lists
    t = params.t

    # Case II, repeated until no low vertex is left or Case I applies
    peeled: List[_Peeled] = []
    while g.order > params.component_bound:
        low = next(
            (x for x in g.sorted_vertices if x not in z and 2 * g.degree(x) < 7 * t - 3),
            None,
        )
        if low is None:
            break
        counts["II"] += 1
        peeled.append((low, g.neighbors(low), lists.colors_of(low)))
        rest = g.vertices - {low}
        g, lists = g.induced_subgraph(rest), lists.restrict(rest)
    if peeled:
        work.append(("unpeel", peeled))

    # Case I
    if g.order <= params.component_bound:
        counts["I"] += 1
        done.append(_color_small(g, z, lists))
        return None

    # Case III
    separation = find_good_separation(g, z, t)
    if separation is not None:
        counts["III"] += 1
        split = case3_split(separation, z, t)
        b = split.separation.b
        logger.debug("case III on |V|=%d: |A|=%d |B|=%d bridge=%s",
                     g.order, len(split.separation.a), len(b), sorted(split.bridge))
        first_side = b | z
        work.append(("bridge", (split, _Subproblem(g, z, lists))))
        work.append(("solve", _Subproblem(
            g.induced_subgraph(first_side), z, lists.restrict(first_side)
        )))
        return None

    # Case IV
    counts["IV"] += 1
    logger.debug("case IV on |V|=%d with |Z|=%d", g.order, len(z))
    try:
        plan = contract_to_k_connected(g, z, t + 1)
    except HadwigerError as exc:
        logger.warning("case IV contraction failed on |V|=%d: %s", g.order, exc.message)
        raise CaseIVFailure(
            f"case IV could not build a witness: {exc.message}",
            {
                "subgraph_vertices": list(g.sorted_vertices),
                "z": sorted(z),
                "cause": exc.to_dict(),
            },
        ) from exc
    return CaseIVWitness(subgraph=g, z=z, plan=plan)


def _color(
    g: Graph,
    z: FrozenSet[int],
    lists: ListAssignment,
    params: CapacityParams,
    counts: Counter,
) -> Union[Dict[int, Color], CaseIVWitness]:
    """
    Run the case recursion on an explicit work stack. `done` holds finished
    colorings of pending subproblems; a Case IV witness ends the whole run.
    """
    work: List[Tuple[str, Any]] = [("solve", _Subproblem(g, z, lists))]
    done: List[Dict[int, Color]] = []
    while work:
        step, payload = work.pop()
        if step == "solve":
            witness = _solve(payload, params, counts, work, done)
            if witness is not None:
                return witness
        elif step == "unpeel":
            coloring = done[-1]
            for x, neighbours, colors in reversed(payload):
                taken = {coloring[y] for y in neighbours}
                coloring[x] = _smallest_avoiding(colors, taken, x)
        elif step == "bridge":
            # B ∪ Z is colored; color A with the bridge precolored
            split, parent = payload
            first = done[-1]
            a, bridge = split.separation.a, split.bridge
            second_lists = parent.lists.restrict(a).precolor({v: first[v] for v in bridge})
            work.append(("merge", None))
            work.append(("solve", _Subproblem(parent.g.induced_subgraph(a), bridge, second_lists)))
        elif step == "merge":
            second = done.pop()
            done[-1].update(second)
        else:
            raise InvariantBroken(f"unknown coloring step {step!r}", {"step": step})
    (coloring,) = done
    return coloring


def _require_witness(witness: CaseIVWitness, t: int) -> None:
    if not is_k_connected(witness.minor, t + 1):
        raise InvariantBroken(f"witness minor is not {t + 1}-connected", witness.to_dict())
    if witness.minor_order < witness.subgraph.order - len(witness.z):
        raise InvariantBroken("witness minor is too small", witness.to_dict())


def clustered_color(
    g: Graph,
    params: CapacityParams,
    z: Iterable[int],
    lists: ListAssignment,
) -> Outcome:
    """
    Color g from its lists with monochromatic components of at most
    capacity + 2t - 1 vertices, or return a Case IV witness.

    Raises:
        InvalidLists: the list hypotheses fail
        CaseIVFailure: the contraction inside Case IV failed
        ColoringNotVerified: the post-hoc C1-C3 check failed
    """
    zs = frozenset(z)
    if zs != lists.precolored:
        raise InvalidLists(
            "Z must equal the precolored set of the list assignment",
            {"z": sorted(zs), "precolored": sorted(lists.precolored), "condition": "precolored_set"},
        )
    lists.validate(g, params.t)

    counts: Counter = Counter()
    outcome = _color(g, zs, lists, params, counts)
    if isinstance(outcome, CaseIVWitness):
        _require_witness(outcome, params.t)
        return outcome

    coloring = ClusteredColoring(outcome, params.component_bound, dict(sorted(counts.items())))
    verdict = verify_coloring(g, coloring, lists, zs, params.component_bound)
    if not verdict.ok:
        raise ColoringNotVerified(
            f"coloring fails {verdict.condition.value}", verdict.to_dict()
        )
    logger.debug("colored %d vertices with %d colors, cases %s",
                 g.order, len(coloring.colors_used), dict(counts))
    return coloring


def verify_coloring(
    g: Graph,
    coloring: ClusteredColoring,
    lists: ListAssignment,
    z: Iterable[int],
    bound: int,
) -> ColoringVerdict:
    """Check C1 (lists), C2 (component size) and C3 (precolored neighbours) independently."""
    zs = frozenset(z)
    assignment = coloring.assignment

    missing = sorted(g.vertices - set(assignment))
    if missing:
        return ColoringVerdict(False, ColoringCondition.TOTAL, {"vertex": missing[0]})

    for v in g.sorted_vertices:
        if assignment[v] not in lists.lists.get(v, frozenset()):
            return ColoringVerdict(
                False, ColoringCondition.C1, {"vertex": v, "color": assignment[v]}
            )

    for color, members in coloring.color_classes().items():
        for component in g.induced_subgraph(members & g.vertices).connected_components():
            if len(component) > bound:
                return ColoringVerdict(
                    False,
                    ColoringCondition.C2,
                    {"color": color, "component": sorted(component), "bound": bound},
                )

    for v in sorted(zs):
        for w in sorted(g.neighbors(v) - zs):
            if assignment[v] == assignment[w]:
                return ColoringVerdict(
                    False, ColoringCondition.C3, {"edge": [v, w], "color": assignment[v]}
                )

    return ColoringVerdict(True)


def theorem_main(g: Graph, t: int, capacity: int) -> Outcome:
    """Z = ∅ and every list {1, ..., ceil((7t - 3) / 2)}."""
    params = CapacityParams(t=t, capacity=capacity)
    lists = ListAssignment.uniform(g.vertices, part_count(t))
    return clustered_color(g, params, frozenset(), lists)
