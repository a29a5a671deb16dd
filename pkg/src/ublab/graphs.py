"""Finite simple graphs and their distance-balance invariants.

For vertices u, v of a connected graph G, ``n_G(u, v)`` counts the vertices
strictly closer to u than to v (equidistant vertices count for neither side).
Three sums of ``|n_G(u, v) - n_G(v, u)|`` are computed here:

* over adjacent pairs — the Mostar index ``mo``;
* over all unordered pairs — the total unbalancedness ``ub``;
* over pairs at distance at most two — the short-range unbalancedness ``ub2``.

A graph is distance-balanced when ``mo == 0`` and highly distance-balanced
when ``ub == 0``; the chain ``ub >= ub2 >= mo >= 0`` always holds.
"""

from dataclasses import dataclass

import numpy as np

from ublab.backend import kernels
from ublab.errors import DisconnectedGraphError, GraphInputError, InvalidOrderError

__all__ = [
    "Graph",
    "InvariantRecord",
    "parse_edgelist",
    "all_pairs_distances",
    "closer_counts",
    "mostar_index",
    "distance_unbalancedness",
    "square_unbalancedness",
    "square_pairs",
    "invariant_sums",
    "is_distance_balanced",
    "is_highly_distance_balanced",
    "compute_invariants",
]


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "_indptr", "_nbrs")

    def __init__(self, n, edges):
        """Build a graph from a vertex count and an iterable of edge pairs.

        Rejects self-loops, duplicate edges, out-of-range endpoints, and
        non-positive orders.
        """
        if n < 1:
            raise InvalidOrderError(f"graph order must be at least 1, got {n}")
        seen = set()
        norm = []
        for u, v in edges:
            u = int(u)
            v = int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
                )
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphInputError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            norm.append(key)
        norm.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        indptr = np.zeros(n + 1, dtype=np.int32)
        for i in range(n):
            indptr[i + 1] = indptr[i] + len(adj[i])
        nbrs = np.empty(indptr[-1], dtype=np.int32)
        for i in range(n):
            nbrs[indptr[i] : indptr[i + 1]] = sorted(adj[i])
        object.__setattr__(self, "_indptr", indptr)
        object.__setattr__(self, "_nbrs", nbrs)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, edges, n=None):
        """Build a graph from edges alone; ``n`` defaults to max endpoint + 1."""
        pairs = [(int(u), int(v)) for u, v in edges]
        if n is None:
            if not pairs:
                raise GraphInputError("cannot infer order from an empty edge list")
            n = 1 + max(max(u, v) for u, v in pairs)
        return cls(n, pairs)

    @property
    def edge_count(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    def is_connected(self):
        if self.n == 1:
            return True
        dist = kernels.bfs_distances(self._indptr, self._nbrs, self.n)
        return bool((dist >= 0).all())

    def is_tree(self):
        return self.edge_count == self.n - 1 and self.is_connected()

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)!r})"


def parse_edgelist(text):
    """Parse whitespace-separated ``u v`` lines into a Graph.

    Blank lines and lines starting with ``#`` are skipped. Vertices are the
    integers ``0..max endpoint``; at least one edge is required.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two vertex labels, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer vertex label in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphInputError(f"line {lineno}: negative vertex label in {raw!r}")
        pairs.append((u, v))
    if not pairs:
        raise GraphInputError("edge list contains no edges")
    return Graph.from_edges(pairs)


def all_pairs_distances(g):
    """All-pairs shortest-path distances as an (n, n) int matrix.

    Raises DisconnectedGraphError if any pair is unreachable.
    """
    dist = kernels.bfs_distances(g._indptr, g._nbrs, g.n)
    if (dist < 0).any():
        raise DisconnectedGraphError("graph is not connected")
    return dist


def closer_counts(g, dist=None):
    """Matrix N with ``N[u, v]`` = number of vertices strictly closer to u
    than to v."""
    if dist is None:
        dist = all_pairs_distances(g)
    return kernels.closer_counts(dist)


def mostar_index(g, counts=None):
    """Sum of ``|N[u, v] - N[v, u]|`` over the edges of g."""
    if counts is None:
        counts = closer_counts(g)
    total = 0
    for u, v in g.edges:
        total += abs(int(counts[u, v]) - int(counts[v, u]))
    return total


def distance_unbalancedness(g, counts=None):
    """Sum of ``|N[u, v] - N[v, u]|`` over all unordered vertex pairs."""
    if counts is None:
        counts = closer_counts(g)
    iu, ju = np.triu_indices(g.n, k=1)
    return int(np.abs(counts[iu, ju] - counts[ju, iu]).sum())


def square_unbalancedness(g, counts=None, dist=None):
    """Sum of ``|N[u, v] - N[v, u]|`` over pairs at distance at most two."""
    if dist is None:
        dist = all_pairs_distances(g)
    if counts is None:
        counts = closer_counts(g, dist)
    iu, ju = np.triu_indices(g.n, k=1)
    near = dist[iu, ju] <= 2
    return int(np.abs(counts[iu[near], ju[near]] - counts[ju[near], iu[near]]).sum())


def square_pairs(dist):
    """Unordered pairs (u, v) with ``0 < dist[u, v] <= 2``, sorted."""
    n = dist.shape[0]
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            if dist[u, v] <= 2:
                out.append((u, v))
    return out


def invariant_sums(g):
    """Fused computation of ``(mo, ub, ub2)`` for a connected graph."""
    dist = all_pairs_distances(g)
    mo, ub, ub2 = kernels.unbalance_sums(dist)
    return int(mo), int(ub), int(ub2)


def is_distance_balanced(g):
    """True when every edge uv has ``N[u, v] == N[v, u]``."""
    mo, _, _ = invariant_sums(g)
    return mo == 0


def is_highly_distance_balanced(g):
    """True when every vertex pair uv has ``N[u, v] == N[v, u]``."""
    _, ub, _ = invariant_sums(g)
    return ub == 0


@dataclass(frozen=True)
class InvariantRecord:
    """Invariant bundle for one graph, as reported by the CLI."""

    n: int
    mo: int
    ub: int
    ub2: int
    distance_balanced: bool
    highly_distance_balanced: bool
    canonical: "str | None" = None

    def to_dict(self):
        d = {
            "n": self.n,
            "mo": self.mo,
            "ub": self.ub,
            "ub2": self.ub2,
            "distance_balanced": self.distance_balanced,
            "highly_distance_balanced": self.highly_distance_balanced,
        }
        if self.canonical is not None:
            d["canonical"] = self.canonical
        return d


def compute_invariants(g, canonical=None):
    """InvariantRecord for a connected graph (optionally tagging a canonical
    level-sequence text for trees)."""
    mo, ub, ub2 = invariant_sums(g)
    return InvariantRecord(
        n=g.n,
        mo=mo,
        ub=ub,
        ub2=ub2,
        distance_balanced=(mo == 0),
        highly_distance_balanced=(ub == 0),
        canonical=canonical,
    )
