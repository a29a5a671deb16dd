"""Tests pinning the accelerated kernels to the plain-array reference ones."""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

import ublab
import ublab._kernels_numpy as plain
from ublab import (
    Graph,
    canonical_form,
    enumerate_free_trees,
    level_sequence_to_graph,
    parents_from_level_sequence,
)

accelerated = pytest.importorskip("ublab._kernels_numba")


def random_connected_graph(rng, n):
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for _ in range(rng.randrange(0, n)):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))


def test_backend_is_reported():
    assert ublab.backend_name() in ("numba", "numpy")
    ublab.warmup()  # idempotent and cheap after the first call


def test_kernels_agree_on_all_small_trees():
    for n in range(2, 9):
        seqs = list(enumerate_free_trees(n))
        for seq in seqs:
            g = level_sequence_to_graph(seq)
            d_plain = plain.bfs_distances(g._indptr, g._nbrs, g.n)
            d_fast = accelerated.bfs_distances(g._indptr, g._nbrs, g.n)
            assert np.array_equal(d_plain, d_fast)
            assert np.array_equal(
                plain.closer_counts(d_plain), accelerated.closer_counts(d_fast)
            )
            assert tuple(plain.unbalance_sums(d_plain)) == tuple(
                accelerated.unbalance_sums(d_fast)
            )


def test_batch_kernels_agree_on_all_small_trees():
    for n in range(2, 10):
        seqs = list(enumerate_free_trees(n))
        parents = np.vstack(
            [np.asarray(parents_from_level_sequence(s), dtype=np.int32) for s in seqs]
        )
        assert np.array_equal(
            plain.batch_tree_sums(parents), accelerated.batch_tree_sums(parents)
        )


def test_kernels_agree_on_random_graphs():
    rng = random.Random(31337)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 12))
        d_plain = plain.bfs_distances(g._indptr, g._nbrs, g.n)
        d_fast = accelerated.bfs_distances(g._indptr, g._nbrs, g.n)
        assert np.array_equal(d_plain, d_fast)
        assert np.array_equal(
            plain.closer_counts(d_plain), accelerated.closer_counts(d_fast)
        )
        assert tuple(plain.unbalance_sums(d_plain)) == tuple(
            accelerated.unbalance_sums(d_fast)
        )


def test_parent_distance_kernels_agree():
    rng = random.Random(13)
    for n in range(2, 12):
        for _ in range(10):
            seq = rng.choice(list(enumerate_free_trees(n)))
            parent = np.asarray(parents_from_level_sequence(seq), dtype=np.int32)
            assert np.array_equal(
                plain.tree_distances_from_parents(parent),
                accelerated.tree_distances_from_parents(parent),
            )


def test_compiled_canonical_form_matches_python():
    rng = random.Random(2024)
    for n in range(1, 10):
        for seq in enumerate_free_trees(n):
            g = level_sequence_to_graph(seq)
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
            edges = np.asarray(h.edges, dtype=np.int32).reshape(-1, 2)
            levels = accelerated.canonical_levels_from_edges(edges, n)
            assert tuple(int(x) for x in levels) == canonical_form(h) == seq


def test_environment_selects_backend():
    script = "import ublab; print(ublab.backend_name())"
    for forced in ("numpy", "numba"):
        out = subprocess.run(
            [sys.executable, "-c", script],
            env={**os.environ, "UBLAB_BACKEND": forced},
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0 and out.stdout.strip() == forced
    bad = subprocess.run(
        [sys.executable, "-c", script],
        env={**os.environ, "UBLAB_BACKEND": "cuda"},
        capture_output=True,
        text=True,
    )
    assert bad.returncode != 0
    assert "UBLAB_BACKEND" in bad.stderr


def test_numpy_backend_computes_invariants(tmp_path):
    script = (
        "import ublab\n"
        "g = ublab.make_spider((2, 2, 2))\n"
        "print(ublab.invariant_sums(g))\n"
        "print(ublab.canonical_text(g))\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", script],
        env={**os.environ, "UBLAB_BACKEND": "numpy"},
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.splitlines() == ["(24, 54, 36)", "0,1,2,1,2,1,2"]
