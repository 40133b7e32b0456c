import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustered_hadwiger.domain.algorithms.minors import (
    audit_witness,
    find_clique_minor,
    hadwiger_number,
    verify_embedding,
)
from clustered_hadwiger.domain.algorithms.partition import theorem_main
from clustered_hadwiger.domain.errors import InvalidParams
from clustered_hadwiger.infrastructure.generators.random_graphs import planar_graph
from clustered_hadwiger.domain.models.graph import Graph
from clustered_hadwiger.domain.models.minor import (
    EmbeddingFailure,
    MinorEmbedding,
    MinorSearchResult,
    SearchStatus,
    WitnessAudit,
)

from . import oracles
from .strategies import graphs

RANDOM_CONTRACTION_SEEDS = 3
PLANAR_SEEDS = range(12)
PLANAR_ORDER = 30
LADDER_RUNGS = 600
LADDER_BUDGET = 1500


def test_trivial_orders(path3):
    assert find_clique_minor(path3, 0).found
    assert find_clique_minor(path3, 1).embedding.t == 1
    assert find_clique_minor(path3, 4).refuted


def test_k2_needs_an_edge():
    assert find_clique_minor(Graph.from_edges([], [0, 1]), 2).refuted
    assert find_clique_minor(Graph.path(2), 2).found


def test_clique_is_found_directly(k6):
    result = find_clique_minor(k6, 5)
    assert result.found
    assert all(len(branch) == 1 for branch in result.embedding.branch_sets)


def test_cycle_has_triangle_minor_not_k4(c6):
    triangle = find_clique_minor(c6, 3)
    assert triangle.found
    assert verify_embedding(c6, triangle.embedding, 3).ok
    assert find_clique_minor(c6, 4).refuted


def test_tree_has_no_triangle_minor():
    star = Graph.from_edges([(0, i) for i in range(1, 6)])
    assert find_clique_minor(star, 3).refuted


def test_petersen_minors(petersen):
    k5 = find_clique_minor(petersen, 5)
    assert k5.status is SearchStatus.FOUND
    assert verify_embedding(petersen, k5.embedding, 5).ok
    assert find_clique_minor(petersen, 6).refuted


def test_budget_is_reported(petersen):
    result = find_clique_minor(petersen, 5, budget=1)
    assert result.status is SearchStatus.BUDGET_EXCEEDED
    assert not result.decided
    assert result.embedding is None


def test_invalid_arguments(path3):
    with pytest.raises(InvalidParams):
        find_clique_minor(path3, -1)
    with pytest.raises(InvalidParams):
        find_clique_minor(path3, 2, budget=0)


def test_hadwiger_number_of_petersen(petersen):
    bounds = hadwiger_number(petersen)
    assert (bounds.lower, bounds.upper, bounds.decided) == (5, 5, True)
    assert bounds.embedding.t == 5


def test_hadwiger_number_of_empty_graph():
    bounds = hadwiger_number(Graph())
    assert (bounds.lower, bounds.upper, bounds.decided) == (0, 0, True)


def test_branch_sets_of_subdivided_k4_are_mapped_back():
    # K4 on 0..3 with the edge 0-1 subdivided by 4
    g = Graph.from_edges([(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    result = find_clique_minor(g, 4)
    assert result.found
    assert verify_embedding(g, result.embedding, 4).ok


@pytest.mark.parametrize(
    "sets, failure",
    [
        ([[0], [1]], EmbeddingFailure.COUNT),
        ([[0], [1], [9]], EmbeddingFailure.UNKNOWN_VERTEX),
        ([[0], [1], []], EmbeddingFailure.EMPTY),
        ([[0, 1], [1], [2]], EmbeddingFailure.OVERLAP),
        ([[0, 2], [1], [3]], EmbeddingFailure.DISCONNECTED),
        ([[0], [2], [4]], EmbeddingFailure.NOT_ADJACENT),
    ],
)
def test_embedding_failures(c6, sets, failure):
    verdict = verify_embedding(c6, MinorEmbedding.from_lists(sets), 3)
    assert not verdict.ok
    assert verdict.failure is failure


def test_audit_finds_small_clique_in_witness():
    witness = theorem_main(Graph.complete(10), 3, 1)
    audit = audit_witness(witness, 3)
    assert audit.ok
    assert audit.summary == "connectivity OK, minor found"
    assert audit.embedding_ok is True


def test_audit_without_search():
    witness = theorem_main(Graph.complete(17), 5, 1)
    audit = audit_witness(witness, 5, search=False)
    assert audit.connectivity_ok
    assert audit.summary == "connectivity OK, minor search skipped"


def test_audit_summary_for_undecided_search():
    audit = WitnessAudit(
        t=5,
        connectivity_ok=True,
        connectivity=6,
        minor_order=12,
        order_ok=True,
        minor_search=MinorSearchResult(SearchStatus.BUDGET_EXCEEDED, 5, nodes_explored=10),
    )
    assert audit.ok
    assert audit.summary == "connectivity OK, minor search over budget"


def test_audit_summary_for_failures():
    broken = WitnessAudit(t=3, connectivity_ok=False, connectivity=1, minor_order=5, order_ok=True)
    assert not broken.ok
    assert broken.summary == "connectivity failure"


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=7), st.integers(min_value=3, max_value=5))
def test_search_agrees_with_random_contractions(g, t):
    result = find_clique_minor(g, t)
    assert result.decided
    if result.found:
        assert verify_embedding(g, result.embedding, t).ok
    for seed in range(RANDOM_CONTRACTION_SEEDS):
        witness = oracles.random_clique_minor(g, t, seed, tries=20)
        if witness is not None:
            assert verify_embedding(g, MinorEmbedding(tuple(witness)), t).ok
            assert result.found


@pytest.mark.parametrize("seed", PLANAR_SEEDS)
def test_triangulations_are_refuted_for_k5_and_k6(seed):
    for t in (5, 6):
        result = find_clique_minor(planar_graph(PLANAR_ORDER, seed, deletion=0.0), t)
        assert result.refuted
        assert result.nodes_explored == 0


@pytest.mark.parametrize("seed", PLANAR_SEEDS)
def test_sparse_planar_graphs_are_refuted_for_k5(seed):
    assert find_clique_minor(planar_graph(PLANAR_ORDER, seed), 5).refuted


def test_planar_graph_plus_apex_has_no_k6():
    base = planar_graph(PLANAR_ORDER, 0, deletion=0.0)
    apex = PLANAR_ORDER
    g = Graph.from_edges(list(base.edges) + [(v, apex) for v in base.vertices])
    assert find_clique_minor(g, 6).refuted
    assert find_clique_minor(g, 7).refuted


def test_search_on_a_long_cubic_block_stays_within_budget():
    n = 2 * LADDER_RUNGS
    rim = [(i, (i + 1) % n) for i in range(n)]
    rungs = [(i, i + LADDER_RUNGS) for i in range(LADDER_RUNGS)]
    ladder = Graph.from_edges(rim + rungs)
    result = find_clique_minor(ladder, 5, budget=LADDER_BUDGET)
    assert result.nodes_explored <= LADDER_BUDGET
    if result.found:
        assert verify_embedding(ladder, result.embedding, 5).ok


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=6), st.integers(min_value=3, max_value=4), st.data())
def test_minors_survive_added_edges(g, t, data):
    result = find_clique_minor(g, t)
    missing = [
        (u, v) for u in g.sorted_vertices for v in g.sorted_vertices
        if u < v and not g.has_edge(u, v)
    ]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True) if missing else st.just([]))
    bigger = Graph.from_edges(list(g.edges) + extra, g.vertices)
    if result.found:
        assert find_clique_minor(bigger, t).found
        assert verify_embedding(bigger, result.embedding, t).ok


def test_k6_has_k5(k6):
    assert verify_embedding(k6, find_clique_minor(k6, 5).embedding, 5).ok
