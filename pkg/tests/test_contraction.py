import pytest

from clustered_hadwiger.domain.algorithms.connectivity import find_good_separation, is_k_connected
from clustered_hadwiger.domain.algorithms.constructions import watkins_graph
from clustered_hadwiger.domain.algorithms.contraction import (
    contract_to_k_connected,
    contractibility_edge,
    find_contractible_edge,
    mader_edge,
    plan_edge_violation,
    required_degree,
)
from clustered_hadwiger.domain.errors import (
    NoEdgeFound,
    PreconditionViolated,
    ResultNotConnectedEnough,
)
from clustered_hadwiger.domain.models.graph import Graph
from clustered_hadwiger.infrastructure.generators.random_graphs import gnp_graph, hope_instance

from . import oracles

HOPE_SEEDS = range(56)
HOPE_ORDER = 10
HOPE_CONNECTIVITIES = (2, 3, 4)
HOPE_Z_SIZES = (0, 1, 2)
ORACLE_SEEDS = range(8)
MADER_SEEDS = range(20)


@pytest.mark.parametrize(
    "k, z_size, expected",
    [(4, 1, 5), (5, 1, 7), (3, 2, 5), (2, 1, 2), (5, 3, 9)],
)
def test_required_degree_rounds_up(k, z_size, expected):
    assert required_degree(k, z_size) == expected
    assert 2 * expected >= 3 * k + 2 * z_size - 4
    assert 2 * (expected - 1) < 3 * k + 2 * z_size - 4


def test_contractible_edge_in_complete_graph(k6):
    assert find_contractible_edge(k6, {0}, 0, 4) == (0, 1)


def test_vertex_must_be_in_z(k6):
    with pytest.raises(PreconditionViolated) as info:
        find_contractible_edge(k6, {1}, 0, 4)
    assert info.value.hypothesis == "vertex_not_in_z"


def test_vertex_needs_a_neighbour_outside_z():
    g = Graph.from_edges([(0, 1), (1, 2)])
    with pytest.raises(PreconditionViolated) as info:
        find_contractible_edge(g, {0, 1}, 0, 2)
    assert info.value.hypothesis == "no_outside_neighbor"


def test_good_separation_is_reported(c6):
    with pytest.raises(PreconditionViolated) as info:
        find_contractible_edge(c6, {0}, 0, 3)
    assert info.value.hypothesis == "z_good_separation"
    assert "separation" in info.value.witness


def test_low_degree_neighbours_are_reported():
    with pytest.raises(PreconditionViolated) as info:
        find_contractible_edge(Graph.complete(4), {0}, 0, 3)
    assert info.value.hypothesis == "degree_bound"
    assert info.value.witness["vertices"][0]["required"] == required_degree(3, 1)


def test_mader_edge_on_cycle():
    assert mader_edge(Graph.cycle(5), 0, 2) == (0, 1)


def test_mader_edge_needs_k_connected(path3):
    with pytest.raises(PreconditionViolated) as info:
        mader_edge(path3, 0, 2)
    assert info.value.hypothesis == "not_k_connected"


def test_contractibility_edge_result_is_k_connected(k6):
    edge = contractibility_edge(k6, 2, 4)
    contracted, _ = k6.contract_edge(*edge)
    assert is_k_connected(contracted, 4)


def test_plan_deletes_isolated_z_vertices():
    g = Graph.from_edges(
        [(u, v) for u in range(7) for v in range(u + 1, 7)] + [(7, 8)], range(9)
    )
    plan = contract_to_k_connected(g, {7, 8}, 3)
    assert plan.deleted == {7, 8}
    assert plan.steps == ()
    assert plan.result == Graph.complete(7)
    assert plan.replay() == plan.result


def test_plan_with_empty_z_is_the_graph_itself(k5):
    plan = contract_to_k_connected(k5, set(), 4)
    assert plan.result == k5
    assert plan.edges == ()


def test_plan_reports_too_small_result():
    with pytest.raises(ResultNotConnectedEnough) as info:
        contract_to_k_connected(Graph.complete(3), set(), 4)
    assert info.value.witness["k"] == 4


def test_tightness_instance_has_no_edge_without_degree_bound():
    inst = watkins_graph(5, 4)
    with pytest.raises(NoEdgeFound) as info:
        find_contractible_edge(inst.graph, {inst.apex}, inst.apex, 5, enforce_degree_bound=False)
    assert info.value.witness["candidates"] == list(inst.attachments)


def test_tightness_instance_fails_degree_bound():
    inst = watkins_graph(5, 4)
    with pytest.raises(PreconditionViolated) as info:
        find_contractible_edge(inst.graph, {inst.apex}, inst.apex, 5)
    assert info.value.hypothesis == "degree_bound"


def two_squares() -> Graph:
    """Two 4-cycles sharing the edge 0-1."""
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)])


def test_first_neighbour_can_fail():
    g = two_squares()
    contracted, _ = g.contract_edge(0, 1)
    assert not is_k_connected(contracted, 2)
    assert find_contractible_edge(g, {0}, 0, 2) == (0, 3)
    assert mader_edge(g, 0, 2) == (0, 3)


def test_plan_edge_violation_tracks_the_shrinking_z():
    g = Graph.complete(4)
    assert plan_edge_violation(g, {0, 1}, [(0, 2), (1, 3)]) is None

    partner_in_z = plan_edge_violation(g, {0, 1}, [(0, 1)])
    assert partner_in_z["index"] == 0
    assert partner_in_z["remaining_z"] == [0, 1]

    already_contracted = plan_edge_violation(g, {0, 1}, [(0, 2), (0, 3)])
    assert already_contracted["index"] == 1
    assert already_contracted["remaining_z"] == [1]

    assert plan_edge_violation(g, {0}, [(0, 7)])["is_edge"] is False


@pytest.mark.parametrize("z_size", HOPE_Z_SIZES)
@pytest.mark.parametrize("k", HOPE_CONNECTIVITIES)
def test_plan_on_random_instances(k, z_size):
    for seed in HOPE_SEEDS:
        instance = hope_instance(HOPE_ORDER, k, z_size, seed)
        g, z = instance.graph, instance.z
        assert find_good_separation(g, z, k - 1) is None

        plan = contract_to_k_connected(g, z, k)
        assert len(plan.edges) + len(plan.deleted) <= len(z)
        assert plan.deleted <= z
        assert plan_edge_violation(g, z, plan.edges) is None
        assert plan.replay() == plan.result
        assert is_k_connected(plan.result, k)
        assert plan.merge.survivors == plan.result.vertices | plan.deleted


def test_random_instances_include_cores_that_are_not_k_connected():
    split = 0
    for seed in HOPE_SEEDS:
        instance = hope_instance(HOPE_ORDER, 2, 1, seed)
        if not is_k_connected(instance.graph.remove_vertices(instance.z), 2):
            split += 1
            assert is_k_connected(contract_to_k_connected(instance.graph, instance.z, 2).result, 2)
    assert split > 0


def test_contractible_edge_agrees_with_brute_force():
    checked = 0
    for seed in ORACLE_SEEDS:
        instance = hope_instance(9, 3, 1, seed)
        g, z = instance.graph, instance.z
        (v,) = sorted(z)
        if not g.neighbors(v):
            continue
        edge = find_contractible_edge(g, z, v, 3)
        assert edge[0] == v
        for w in sorted(g.neighbors(v)):
            contracted, _ = g.contract_edge(v, w)
            good = oracles.good_separation_exists(contracted, set(), 2)
            if w == edge[1]:
                assert not good
                break
            assert good
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("k", (2, 3))
def test_mader_edge_agrees_with_brute_force(k):
    checked = 0
    for seed in MADER_SEEDS:
        g = gnp_graph(8, 0.7, seed)
        try:
            v, w = mader_edge(g, 0, k)
        except PreconditionViolated:
            assert oracles.connectivity(g) < k or any(
                2 * g.degree(x) < 3 * k - 2 for x in g.neighbors(0)
            )
            continue
        contracted, _ = g.contract_edge(v, w)
        assert oracles.connectivity(contracted) >= k
        for earlier in sorted(g.neighbors(v)):
            if earlier == w:
                break
            rejected, _ = g.contract_edge(v, earlier)
            assert oracles.good_separation_exists(rejected, set(), k - 1)
        checked += 1
    assert checked > 0
