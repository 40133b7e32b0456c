import networkx as nx
import pytest

from clustered_hadwiger.domain.algorithms.connectivity import find_good_separation, is_k_connected
from clustered_hadwiger.domain.algorithms.constructions import verify_tightness, watkins_graph
from clustered_hadwiger.domain.errors import InvalidParams
from clustered_hadwiger.domain.models.watkins import WatkinsInstance
from clustered_hadwiger.infrastructure.generators.random_graphs import (
    gnp_graph,
    hope_instance,
    planar_graph,
)


TIGHTNESS_GRID = [(k, n) for k in (5, 7, 9) for n in range(4, k)]


@pytest.mark.parametrize("k, n", TIGHTNESS_GRID)
def test_tightness_instances_pass_every_check(k, n):
    report = verify_tightness(watkins_graph(k, n))
    assert report.ok, [c.to_dict() for c in report.failed()]
    assert [c.name for c in report.checks] == [
        "pair_cuts",
        "apex_only_separator",
        "contractions_fail",
        "degree_formula",
        "no_contractible_edge",
    ]


def test_layout_of_smallest_instance():
    inst = watkins_graph(5, 4)
    assert inst.p == 2
    assert inst.apex == 8
    assert inst.attachments == (0, 2, 4, 6)
    assert inst.graph.size == 24
    assert inst.block(5) == inst.block(1) == {2, 3}
    assert inst.graph.degree(inst.apex) == 4
    assert {inst.graph.degree(w) for w in inst.attachments} == {6}


@pytest.mark.parametrize(
    "k, n, constraint",
    [(6, 4, "k_odd"), (3, 4, "k_min"), (5, 3, "n_range"), (5, 5, "n_range")],
)
def test_invalid_parameters(k, n, constraint):
    with pytest.raises(InvalidParams) as info:
        watkins_graph(k, n)
    assert info.value.witness["constraint"] == constraint


def test_tampered_instance_fails_pair_cuts():
    inst = watkins_graph(5, 4)
    tampered = WatkinsInstance(
        k=inst.k,
        n=inst.n,
        p=inst.p,
        graph=inst.graph.remove_edge(1, 3),
        apex=inst.apex,
        attachments=inst.attachments,
        blocks=inst.blocks,
    )
    report = verify_tightness(tampered)
    assert not report.ok
    pair_cuts = report.check("pair_cuts")
    assert not pair_cuts.ok
    assert pair_cuts.detail["pair"] == [1, 3]
    assert not report.check("degree_formula").ok


def test_planar_generator_is_seeded_and_planar():
    g = planar_graph(40, 7)
    assert g == planar_graph(40, 7)
    assert g.order == 40
    is_planar, _ = nx.check_planarity(g.nx_graph)
    assert is_planar


def test_full_triangulation_size():
    assert planar_graph(12, 1, deletion=0.0).size == 3 * 12 - 6


def test_gnp_generator_is_seeded():
    assert gnp_graph(15, 0.4, 3) == gnp_graph(15, 0.4, 3)
    assert gnp_graph(0, 0.4, 3).order == 0
    with pytest.raises(InvalidParams):
        gnp_graph(5, 1.5, 3)


def test_hope_instance_meets_hypotheses():
    instance = hope_instance(12, 3, 2, 5)
    assert instance.z == {10, 11}
    assert find_good_separation(instance.graph, instance.z, 2) is None


def test_hope_instance_rejects_infeasible_sizes():
    with pytest.raises(InvalidParams):
        hope_instance(4, 4, 1, 0)
    with pytest.raises(InvalidParams):
        hope_instance(8, 3, -1, 0)


def test_hope_instance_with_empty_z_is_k_connected():
    instance = hope_instance(8, 3, 0, 1)
    assert instance.z == frozenset()
    assert is_k_connected(instance.graph, 3)
