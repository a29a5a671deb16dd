"""Pure-NumPy kernels: the fallback backend selected via UBLAB_BACKEND=numpy.

Semantics are fixed by the naive reference computation: breadth-first-search
distances, then for every ordered vertex pair (u, v) the count of witnesses w
with dist(u, w) < dist(v, w), ties counting for neither side. The numba
backend implements the same operations with explicit loops; both must agree
exactly (integers throughout), which the test suite enforces.
"""

import numpy as np


def bfs_distances(indptr, nbrs, n):
    """All-pairs BFS distances as an (n, n) int32 matrix, -1 if unreachable.

    Runs one simultaneous frontier sweep for all sources: row s holds the
    distances from source s.
    """
    adj = np.zeros((n, n), dtype=np.uint8)
    if len(nbrs):
        adj[np.repeat(np.arange(n), np.diff(indptr)), nbrs] = 1
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.uint8)
    d = 0
    while frontier.any():
        d += 1
        reached = (frontier @ adj) > 0
        frontier = (reached & (dist < 0)).astype(np.uint8)
        dist[frontier.astype(bool)] = d
    return dist


def closer_counts(dist):
    """counts[u, v] = number of vertices strictly closer to u than to v."""
    d = np.asarray(dist)
    return (d[:, None, :] < d[None, :, :]).sum(axis=2).astype(np.int64)


def unbalance_sums(dist):
    """Return (mo, ub, ub2): absolute closer-count differences summed over
    adjacent pairs, all pairs, and pairs at distance at most two."""
    d = np.asarray(dist)
    n = d.shape[0]
    counts = closer_counts(d)
    diff = np.abs(counts - counts.T)
    iu, iv = np.triu_indices(n, k=1)
    dd = d[iu, iv]
    dv = diff[iu, iv]
    mo = int(dv[dd == 1].sum())
    ub = int(dv.sum())
    ub2 = int(dv[dd <= 2].sum())
    return mo, ub, ub2


def tree_distances_from_parents(parent):
    """Distance matrix of a tree given parent pointers with parent[i] < i.

    Vertices arrive in root-first order, so each new vertex i sits one step
    beyond its parent from every earlier vertex.
    """
    parent = np.asarray(parent)
    n = parent.shape[0]
    dist = np.zeros((n, n), dtype=np.int32)
    for i in range(1, n):
        row = dist[parent[i], :i] + 1
        dist[i, :i] = row
        dist[:i, i] = row
    return dist


def batch_tree_sums(parents):
    """(mo, ub, ub2) rows for a batch of trees given as a (t, n) parent matrix."""
    parents = np.asarray(parents)
    t, n = parents.shape
    rows = np.arange(t)
    dist = np.zeros((t, n, n), dtype=np.int32)
    for i in range(1, n):
        seg = dist[rows, parents[:, i], :i] + 1
        dist[:, i, :i] = seg
        dist[:, :i, i] = seg
    counts = (dist[:, :, None, :] < dist[:, None, :, :]).sum(axis=3, dtype=np.int64)
    diff = np.abs(counts - counts.transpose(0, 2, 1))
    iu, iv = np.triu_indices(n, k=1)
    dd = dist[:, iu, iv]
    dv = diff[:, iu, iv]
    out = np.empty((t, 3), dtype=np.int64)
    out[:, 0] = (dv * (dd == 1)).sum(axis=1)
    out[:, 1] = dv.sum(axis=1)
    out[:, 2] = (dv * (dd <= 2)).sum(axis=1)
    return out
