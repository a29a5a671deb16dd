"""Tests for graph construction, parsing, and the distance-based invariants."""

import random

import pytest

import oracle
from ublab import (
    DisconnectedGraphError,
    Graph,
    GraphInputError,
    InvalidOrderError,
    all_pairs_distances,
    closer_counts,
    compute_invariants,
    distance_unbalancedness,
    invariant_sums,
    is_distance_balanced,
    is_highly_distance_balanced,
    mostar_index,
    parse_edgelist,
    square_pairs,
    square_unbalancedness,
)


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def complete_edges(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def random_connected_graph(rng, n, extra_edges):
    """A random tree on n vertices plus up to ``extra_edges`` random chords."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for _ in range(extra_edges):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))


# (name, edges, n, expected (mo, ub, ub2)) -- values derived by hand and
# confirmed against the independent reference implementation below.
FROZEN_SUMS = [
    ("single_edge", oracle.path_edges(2), 2, (0, 0, 0)),
    ("path3", oracle.path_edges(3), 3, (2, 2, 2)),
    ("path4", oracle.path_edges(4), 4, (4, 6, 6)),
    ("path5", oracle.path_edges(5), 5, (8, 14, 12)),
    ("star4", oracle.star_edges(4), 4, (6, 6, 6)),
    ("star5", oracle.star_edges(5), 5, (12, 12, 12)),
    ("spider222", oracle.spider_edges((2, 2, 2)), 7, (24, 54, 36)),
    ("spider311", oracle.spider_edges((3, 1, 1)), 6, (14, 26, 22)),
    ("double_star6", oracle.double_star_edges(6), 6, (16, 24, 24)),
    ("double_star8", oracle.double_star_edges(8), 8, (36, 54, 54)),
    ("cycle4", cycle_edges(4), 4, (0, 0, 0)),
    ("cycle5", cycle_edges(5), 5, (0, 0, 0)),
    ("complete4", complete_edges(4), 4, (0, 0, 0)),
]


def test_frozen_invariant_values():
    for name, edges, n, expected in FROZEN_SUMS:
        g = Graph(n, edges)
        assert invariant_sums(g) == expected, name
        assert oracle.unbalance_sums(n, edges) == expected, name


def test_invariant_sums_are_plain_ints():
    g = Graph(5, oracle.path_edges(5))
    mo, ub, ub2 = invariant_sums(g)
    assert type(mo) is int and type(ub) is int and type(ub2) is int


def test_component_functions_agree_with_fused_sums():
    for name, edges, n, _ in FROZEN_SUMS:
        g = Graph(n, edges)
        mo, ub, ub2 = invariant_sums(g)
        assert mostar_index(g) == mo, name
        assert distance_unbalancedness(g) == ub, name
        assert square_unbalancedness(g) == ub2, name


def test_closer_counts_exclude_tied_vertices():
    # Counts use strict inequalities, so a vertex equidistant from both ends
    # of a pair contributes to neither side.
    g = Graph(3, oracle.path_edges(3))
    counts = closer_counts(g)
    assert counts[0][1] == 1  # only vertex 0 itself
    assert counts[1][0] == 2  # vertices 1 and 2
    assert counts[0][2] == 1  # vertex 0; vertex 1 is tied and counts for neither
    assert counts[2][0] == 1
    assert counts[0][0] == 0  # a vertex against itself: all distances tie


def test_adjacent_counts_sum_to_order_on_trees():
    # Across any tree edge every vertex is strictly closer to one endpoint.
    from ublab import enumerate_free_trees, level_sequence_to_graph

    for n in range(2, 10):
        for seq in enumerate_free_trees(n):
            g = level_sequence_to_graph(seq)
            counts = closer_counts(g)
            for u, v in g.edges:
                assert counts[u][v] + counts[v][u] == n


def test_single_vertex_graph():
    g = Graph(1, [])
    assert invariant_sums(g) == (0, 0, 0)
    assert is_distance_balanced(g)
    assert is_highly_distance_balanced(g)
    record = compute_invariants(g)
    assert record.n == 1 and record.mo == record.ub == record.ub2 == 0


def test_balance_predicates_match_sums():
    rng = random.Random(20240817)
    for _ in range(60):
        n = rng.randint(2, 10)
        g = random_connected_graph(rng, n, rng.randrange(0, n))
        mo, ub, _ = invariant_sums(g)
        assert is_distance_balanced(g) == (mo == 0)
        assert is_highly_distance_balanced(g) == (ub == 0)


def test_cycles_are_highly_distance_balanced():
    for n in range(3, 9):
        g = Graph(n, cycle_edges(n))
        assert is_highly_distance_balanced(g)
        assert is_distance_balanced(g)


def test_chain_of_inequalities_on_random_graphs():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(2, 11)
        g = random_connected_graph(rng, n, rng.randrange(0, n + 2))
        mo, ub, ub2 = invariant_sums(g)
        assert 0 <= mo <= ub2 <= ub


def test_random_graphs_match_reference_implementation():
    rng = random.Random(4242)
    for _ in range(80):
        n = rng.randint(2, 10)
        g = random_connected_graph(rng, n, rng.randrange(0, n))
        assert invariant_sums(g) == oracle.unbalance_sums(n, list(g.edges))
        expected_counts = oracle.closer_counts(oracle.distance_matrix(n, g.edges))
        assert closer_counts(g).tolist() == expected_counts
        expected_dist = oracle.distance_matrix(n, g.edges)
        assert all_pairs_distances(g).tolist() == expected_dist


def test_diameter_at_most_two_forces_equal_unbalance_sums():
    # Every pair is at distance <= 2, so the two pair sums range over the
    # same pairs.
    graphs = [Graph(n, oracle.star_edges(n)) for n in range(3, 9)]
    graphs += [Graph(n, complete_edges(n)) for n in range(2, 7)]
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 8)
        g = random_connected_graph(rng, n, rng.randrange(0, 2 * n))
        if all_pairs_distances(g).max() <= 2:
            graphs.append(g)
    assert len(graphs) > 15
    for g in graphs:
        _, ub, ub2 = invariant_sums(g)
        assert ub == ub2


def test_square_pairs_on_path4():
    g = Graph(4, oracle.path_edges(4))
    dist = all_pairs_distances(g)
    assert square_pairs(dist) == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def test_disconnected_graph_raises():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(g)
    with pytest.raises(DisconnectedGraphError):
        invariant_sums(g)


def test_graph_validation_errors():
    with pytest.raises(InvalidOrderError):
        Graph(0, [])
    with pytest.raises(GraphInputError):
        Graph(3, [(0, 0)])  # self-loop
    with pytest.raises(GraphInputError):
        Graph(3, [(0, 1), (1, 0)])  # duplicate after normalization
    with pytest.raises(GraphInputError):
        Graph(3, [(0, 3)])  # endpoint out of range
    with pytest.raises(GraphInputError):
        Graph(3, [(-1, 2)])


def test_graph_is_immutable_and_hashable():
    g = Graph(3, oracle.path_edges(3))
    with pytest.raises(AttributeError):
        g.n = 5
    h = Graph.from_edges([(0, 1), (1, 2)])
    assert g == h and hash(g) == hash(h)
    assert g != Graph(3, [(0, 1), (0, 2)])
    assert g in {h}


def test_from_edges_infers_order():
    g = Graph.from_edges([(0, 2), (1, 2)])
    assert g.n == 3 and g.edge_count == 2
    with pytest.raises(GraphInputError):
        Graph.from_edges([])
    padded = Graph.from_edges([(0, 1)], n=3)
    assert padded.n == 3 and not padded.is_connected()


def test_tree_predicates():
    assert Graph(4, oracle.star_edges(4)).is_tree()
    assert not Graph(4, cycle_edges(4)).is_tree()
    assert not Graph(4, [(0, 1), (2, 3)]).is_tree()


def test_parse_edgelist():
    g = parse_edgelist("# a comment\n0 1\n\n1 2\n")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    with pytest.raises(GraphInputError):
        parse_edgelist("0 1 2\n")
    with pytest.raises(GraphInputError):
        parse_edgelist("0 x\n")
    with pytest.raises(GraphInputError):
        parse_edgelist("# nothing but comments\n")
    with pytest.raises(GraphInputError):
        parse_edgelist("0 -1\n")


def test_invariant_record_serialization():
    star = Graph(4, oracle.star_edges(4))
    record = compute_invariants(star, canonical="0,1,1,1")
    data = record.to_dict()
    assert list(data) == [
        "n",
        "mo",
        "ub",
        "ub2",
        "distance_balanced",
        "highly_distance_balanced",
        "canonical",
    ]
    assert data["n"] == 4 and data["mo"] == 6
    assert data["canonical"] == "0,1,1,1"
    bare = compute_invariants(Graph(4, cycle_edges(4))).to_dict()
    assert "canonical" not in bare
    assert bare["distance_balanced"] is True
    assert bare["highly_distance_balanced"] is True
