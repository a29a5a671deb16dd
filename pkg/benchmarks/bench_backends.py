"""Wall-clock comparison of the two kernel backends.

Runs the same workloads through the JIT-compiled kernels and the plain
vectorized ones, over several repeats, and reports mean / std / speedup.
The JIT warm-up run is excluded from timing. Results from the two backends
are asserted equal before any number is reported.

Run:

    python3 benchmarks/bench_backends.py [--order 12] [--repeats 5]
"""

import argparse
import statistics
import time

import numpy as np

import ublab._kernels_numpy as plain
from ublab import enumerate_free_trees, parents_from_level_sequence

try:
    import ublab._kernels_numba as accelerated

    HAVE_NUMBA = True
except ImportError:
    accelerated = None
    HAVE_NUMBA = False


def tree_batch(order):
    """Parent arrays for every free tree of the given order."""
    seqs = list(enumerate_free_trees(order))
    parents = np.zeros((len(seqs), order), dtype=np.int32)
    for i, seq in enumerate(seqs):
        parents[i] = parents_from_level_sequence(seq)
    return parents


def random_graph_csr(rng, n, extra):
    """CSR arrays of a random connected graph: a tree plus random chords."""
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        a, b = int(order[i]), int(order[rng.integers(0, i)])
        edges.add((min(a, b), max(a, b)))
    while len(edges) < n - 1 + extra:
        a, b = rng.integers(0, n, size=2)
        if a != b:
            a, b = int(min(a, b)), int(max(a, b))
            edges.add((a, b))
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        indptr[i + 1] = indptr[i] + len(adj[i])
    nbrs = np.concatenate([np.sort(adj[i]) for i in range(n)]).astype(np.int32)
    return indptr, nbrs


def time_repeats(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    mean = statistics.mean(times)
    std = statistics.stdev(times) if len(times) > 1 else 0.0
    return mean, std


def bench_tree_sweep(order, repeats):
    parents = tree_batch(order)
    results = {}
    reference = plain.batch_tree_sums(parents)

    def run_plain():
        results["plain"] = plain.batch_tree_sums(parents)

    rows = {}
    rows["numpy"] = time_repeats(run_plain, repeats)
    if HAVE_NUMBA:
        accelerated.batch_tree_sums(parents[:1])  # warm-up, excluded

        def run_fast():
            results["fast"] = accelerated.batch_tree_sums(parents)

        rows["numba"] = time_repeats(run_fast, repeats)
        assert np.array_equal(results["fast"], reference), "backends disagree"
    assert np.array_equal(results["plain"], reference)
    return parents.shape[0], rows


def bench_distance_counts(n, graphs, repeats, seed=42):
    rng = np.random.default_rng(seed)
    instances = [random_graph_csr(rng, n, extra=n // 2) for _ in range(graphs)]

    def sweep(module):
        totals = np.zeros(3, dtype=np.int64)
        for indptr, nbrs in instances:
            dist = module.bfs_distances(indptr, nbrs, n)
            module.closer_counts(dist)
            totals += np.asarray(module.unbalance_sums(dist), dtype=np.int64)
        return totals

    reference = sweep(plain)
    rows = {}
    rows["numpy"] = time_repeats(lambda: sweep(plain), repeats)
    if HAVE_NUMBA:
        sweep(accelerated)  # warm-up, excluded
        assert np.array_equal(sweep(accelerated), reference), "backends disagree"
        rows["numba"] = time_repeats(lambda: sweep(accelerated), repeats)
    return rows


def report(label, rows):
    print(f"\n{label}")
    base = rows["numpy"][0]
    for name, (mean, std) in rows.items():
        line = f"  {name:<6} mean {mean * 1e3:8.2f} ms   std {std * 1e3:6.2f} ms"
        if name != "numpy" and mean > 0:
            line += f"   speedup x{base / mean:.1f}"
        print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=12,
                        help="tree order for the enumeration sweep")
    parser.add_argument("--graphs", type=int, default=40,
                        help="random graphs for the distance/counts sweep")
    parser.add_argument("--size", type=int, default=256,
                        help="vertex count of each random graph")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if not HAVE_NUMBA:
        print("numba is not importable; timing the plain backend only")

    count, rows = bench_tree_sweep(args.order, args.repeats)
    report(f"invariant sums over all {count} trees of order {args.order}", rows)

    rows = bench_distance_counts(args.size, args.graphs, args.repeats)
    report(
        f"distances + counts on {args.graphs} random graphs of {args.size} vertices",
        rows,
    )


if __name__ == "__main__":
    main()
