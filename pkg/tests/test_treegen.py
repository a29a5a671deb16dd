"""Tests for level sequences, canonical forms, and tree enumeration."""

import random
from itertools import product

import pytest

import oracle
from ublab import (
    Graph,
    InvalidOrderError,
    MalformedSequenceError,
    NotATreeError,
    canonical_form,
    canonical_text,
    count_free_trees,
    enumerate_free_trees,
    format_level_sequence,
    invariant_sums,
    level_sequence_to_graph,
    parents_from_level_sequence,
    parse_level_sequence,
    prufer_census,
    prufer_decode,
    tree_centers,
    validate_level_sequence,
)

# Number of unlabeled free trees by order, a classic integer sequence.
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def relabeled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_enumeration_counts():
    for n in range(1, 11):
        seqs = list(enumerate_free_trees(n))
        assert len(seqs) == FREE_TREE_COUNTS[n - 1]
        assert count_free_trees(n) == FREE_TREE_COUNTS[n - 1]


def test_enumeration_is_deterministic_and_duplicate_free():
    for n in range(1, 10):
        first = list(enumerate_free_trees(n))
        second = list(enumerate_free_trees(n))
        assert first == second
        assert len(set(first)) == len(first)


def test_enumeration_order_is_decreasing_lexicographic():
    for n in range(2, 11):
        seqs = list(enumerate_free_trees(n))
        assert seqs == sorted(seqs, reverse=True)


def test_every_emitted_sequence_is_a_canonical_tree():
    for n in range(1, 11):
        for seq in enumerate_free_trees(n):
            validate_level_sequence(seq)
            g = level_sequence_to_graph(seq)
            assert g.n == n and g.is_tree()
            assert canonical_form(g) == seq


def test_small_enumerations_explicitly():
    assert list(enumerate_free_trees(1)) == [(0,)]
    assert list(enumerate_free_trees(2)) == [(0, 1)]
    assert list(enumerate_free_trees(3)) == [(0, 1, 1)]
    assert list(enumerate_free_trees(4)) == [(0, 1, 2, 1), (0, 1, 1, 1)]
    assert (0, 1, 2, 1, 2) in set(enumerate_free_trees(5))


def test_enumerate_rejects_bad_order():
    with pytest.raises(InvalidOrderError):
        list(enumerate_free_trees(0))
    with pytest.raises(InvalidOrderError):
        count_free_trees(-3)


def test_parents_from_level_sequence():
    assert parents_from_level_sequence((0, 1, 2, 2, 1)) == [0, 0, 1, 1, 0]
    assert parents_from_level_sequence((0, 1, 2, 3)) == [0, 0, 1, 2]
    assert parents_from_level_sequence((0,)) == [0]


def test_level_sequence_to_graph_examples():
    star = level_sequence_to_graph((0, 1, 1, 1))
    assert sorted(star.edges) == [(0, 1), (0, 2), (0, 3)]
    path = level_sequence_to_graph((0, 1, 2, 3))
    assert sorted(path.edges) == [(0, 1), (1, 2), (2, 3)]


def test_malformed_level_sequences_raise():
    bad = [
        (),
        (1,),
        (0, 0),
        (0, 2),
        (0, 1, 3),
        (0, 1, 0),
        (0, -1),
        (0, True),
    ]
    for seq in bad:
        with pytest.raises(MalformedSequenceError):
            validate_level_sequence(seq)


def test_parse_and_format_level_sequence():
    assert parse_level_sequence("0,1,2,1") == (0, 1, 2, 1)
    assert parse_level_sequence(" 0, 1, 1 ") == (0, 1, 1)
    assert format_level_sequence((0, 1, 2)) == "0,1,2"
    with pytest.raises(MalformedSequenceError):
        parse_level_sequence("0,1,x")
    with pytest.raises(MalformedSequenceError):
        parse_level_sequence("")
    with pytest.raises(MalformedSequenceError):
        parse_level_sequence("0,,1")


def test_tree_centers():
    assert tree_centers(level_sequence_to_graph((0, 1, 2, 3))) == [1, 2]
    assert tree_centers(level_sequence_to_graph((0, 1, 2))) == [1]
    assert tree_centers(level_sequence_to_graph((0, 1, 1, 1))) == [0]
    assert tree_centers(Graph(1, [])) == [0]
    assert tree_centers(Graph(2, [(0, 1)])) == [0, 1]


def test_canonical_form_known_trees():
    assert canonical_form(Graph(1, [])) == (0,)
    assert canonical_form(Graph(4, oracle.star_edges(4))) == (0, 1, 1, 1)
    assert canonical_form(Graph(4, oracle.path_edges(4))) == (0, 1, 2, 1)
    assert canonical_form(Graph(5, oracle.path_edges(5))) == (0, 1, 2, 1, 2)
    # A path of three edges with one extra leaf on an inner vertex.
    fork = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    assert canonical_form(fork) == (0, 1, 2, 1, 1)
    assert canonical_text(fork) == "0,1,2,1,1"


def test_canonical_form_requires_a_tree():
    with pytest.raises(NotATreeError):
        canonical_form(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(NotATreeError):
        canonical_form(Graph(4, [(0, 1), (2, 3)]))


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(1717)
    for n in range(2, 11):
        seqs = list(enumerate_free_trees(n))
        for _ in range(60):
            seq = rng.choice(seqs)
            g = level_sequence_to_graph(seq)
            h = relabeled(g, rng)
            assert canonical_form(h) == seq
            assert invariant_sums(h) == invariant_sums(g)


def test_canonical_form_is_idempotent():
    for n in range(1, 11):
        for seq in enumerate_free_trees(n):
            assert canonical_form(level_sequence_to_graph(seq)) == seq


def test_prufer_decode_known_codes():
    assert sorted(prufer_decode((), 2).edges) == [(0, 1)]
    star = prufer_decode((0, 0), 4)
    assert sorted(star.edges) == [(0, 1), (0, 2), (0, 3)]
    assert canonical_form(prufer_decode((1, 2), 4)) == (0, 1, 2, 1)


def test_prufer_decode_validates_input():
    with pytest.raises(MalformedSequenceError):
        prufer_decode((0,), 4)  # wrong length
    with pytest.raises(MalformedSequenceError):
        prufer_decode((0, 4), 4)  # entry out of range
    with pytest.raises(InvalidOrderError):
        prufer_decode((), 1)


def test_prufer_decode_matches_reference():
    for n in (4, 5):
        for seq in product(range(n), repeat=n - 2):
            ours = sorted(prufer_decode(seq, n).edges)
            ref = sorted(tuple(sorted(e)) for e in oracle.prufer_edges(seq, n))
            assert ours == ref


def test_prufer_census_small_orders():
    assert prufer_census(1) == {(0,): 1}
    assert prufer_census(2) == {(0, 1): 1}
    assert prufer_census(3) == {(0, 1, 1): 3}
    # 16 labeled trees on 4 vertices: 4 stars and 12 paths.
    assert prufer_census(4) == {(0, 1, 1, 1): 4, (0, 1, 2, 1): 12}


def test_prufer_census_matches_enumeration():
    for n in range(2, 8):
        census = prufer_census(n)
        assert set(census) == set(enumerate_free_trees(n))
        assert sum(census.values()) == n ** (n - 2)
        assert all(v > 0 for v in census.values())


def test_prufer_census_rejects_large_orders():
    with pytest.raises(InvalidOrderError):
        prufer_census(17)
    with pytest.raises(InvalidOrderError):
        prufer_census(0)
