"""Tree generation, level-sequence codecs, and canonical forms.

Free trees are represented by level sequences: vertex i sits at depth
``levels[i]`` below the root, vertices listed in preorder, root depth 0.
``enumerate_free_trees`` walks every isomorphism class of trees of a given
order exactly once, in constant amortized time per tree, yielding each class
as its canonical level sequence. ``canonical_form`` maps an arbitrary tree
to the same representative, so the two agree by construction.

``prufer_census`` provides an independent cross-check: it decodes all
``n**(n-2)`` Prüfer codes and tallies labeled trees per isomorphism class.
"""

import itertools

import numpy as np

from ublab.backend import USING_NUMBA, kernels
from ublab.errors import InvalidOrderError, MalformedSequenceError, NotATreeError
from ublab.graphs import Graph

__all__ = [
    "parse_level_sequence",
    "format_level_sequence",
    "validate_level_sequence",
    "parents_from_level_sequence",
    "level_sequence_to_graph",
    "canonical_form",
    "canonical_text",
    "tree_centers",
    "enumerate_free_trees",
    "count_free_trees",
    "prufer_decode",
    "prufer_census",
]


# ---------------------------------------------------------------------------
# Level-sequence codec
# ---------------------------------------------------------------------------

def validate_level_sequence(levels):
    """Check that levels is a well-formed preorder depth sequence.

    Requires a nonempty sequence starting at 0 in which every later depth d
    satisfies ``1 <= d <= previous depth + 1``. Raises
    MalformedSequenceError otherwise; returns the sequence as a tuple.
    """
    levels = tuple(levels)
    if not levels:
        raise MalformedSequenceError("level sequence is empty")
    for d in levels:
        if not isinstance(d, int) or isinstance(d, bool):
            raise MalformedSequenceError(f"level {d!r} is not an integer")
    if levels[0] != 0:
        raise MalformedSequenceError(
            f"level sequence must start at depth 0, got {levels[0]}"
        )
    for i in range(1, len(levels)):
        d = levels[i]
        if d < 1 or d > levels[i - 1] + 1:
            raise MalformedSequenceError(
                f"depth {d} at position {i} does not follow depth {levels[i - 1]}"
            )
    return levels


def parse_level_sequence(text):
    """Parse a comma-separated depth list like ``0,1,2,2,1`` into a tuple."""
    tokens = [tok.strip() for tok in text.strip().split(",")]
    try:
        levels = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise MalformedSequenceError(
            f"level sequence {text!r} contains a non-integer token"
        ) from None
    return validate_level_sequence(levels)


def format_level_sequence(levels):
    """Render a level sequence as comma-separated text."""
    return ",".join(str(d) for d in levels)


def parents_from_level_sequence(levels):
    """Parent pointers for a level sequence: parent of vertex i is the most
    recent earlier vertex one depth above it. ``parent[0]`` is 0."""
    levels = validate_level_sequence(levels)
    n = len(levels)
    parent = [0] * n
    last_at_depth = [0] * n
    for i in range(1, n):
        d = levels[i]
        parent[i] = last_at_depth[d - 1]
        last_at_depth[d] = i
    return parent


def level_sequence_to_graph(levels):
    """The tree encoded by a level sequence, as a Graph."""
    parent = parents_from_level_sequence(levels)
    n = len(parent)
    return Graph(n, [(parent[i], i) for i in range(1, n)])


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def tree_centers(g):
    """The one or two centers of a tree, found by peeling leaf layers."""
    n = g.n
    if n == 1:
        return [0]
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in g.adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(n) if not removed[v]]


def _rooted_levels(g, root, banned=None):
    """Greatest level sequence of the subtree reachable from root without
    crossing banned, with children ordered by descending encoding."""
    parent = {root: None}
    order = [root]
    for u in order:
        for w in g.adj[u]:
            if w != banned and w not in parent:
                parent[w] = u
                order.append(w)
    enc = {}
    for v in reversed(order):
        blocks = sorted(
            (enc[w] for w in g.adj[v] if parent.get(w, -1) == v), reverse=True
        )
        seq = (0,)
        for b in blocks:
            seq += tuple(x + 1 for x in b)
        enc[v] = seq
    return enc[root]


def canonical_form(g):
    """Canonical level sequence of a tree, rooted at its center.

    For bicentral trees the root is the center whose own half (the component
    left after cutting the central edge) is larger by size, then by level
    sequence; the other half becomes the first root subtree. This matches
    the representative produced by ``enumerate_free_trees``.
    """
    if not g.is_tree():
        raise NotATreeError(f"graph with {g.n} vertices and {g.edge_count} edges is not a tree")
    if g.n == 1:
        return (0,)
    centers = tree_centers(g)
    if len(centers) == 1:
        return _rooted_levels(g, centers[0])
    c1, c2 = centers
    e1 = _rooted_levels(g, c1, banned=c2)
    e2 = _rooted_levels(g, c2, banned=c1)
    if (len(e1), e1) >= (len(e2), e2):
        win, lose = e1, e2
    else:
        win, lose = e2, e1
    return (0,) + tuple(x + 1 for x in lose) + win[1:]


def canonical_text(g):
    """Canonical level sequence of a tree as comma-separated text."""
    return format_level_sequence(canonical_form(g))


# ---------------------------------------------------------------------------
# Free-tree enumeration (constant amortized time per class)
# ---------------------------------------------------------------------------

def _rooted_successor(predecessor, p=None):
    """Next rooted-tree level sequence in decreasing lexicographic order:
    clip at position p (default: last position of depth > 1) and tile the
    tail with the block ending just before the clip. None when exhausted."""
    if p is None:
        p = len(predecessor) - 1
        while predecessor[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while predecessor[q] != predecessor[p] - 1:
        q -= 1
    result = list(predecessor)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split_first_subtree(layout):
    """Split a layout into the root's first subtree (depths shifted to 0)
    and the remainder with the root kept."""
    one_found = False
    m = None
    for i in range(len(layout)):
        if layout[i] == 1:
            if one_found:
                m = i
                break
            one_found = True
    if m is None:
        m = len(layout)
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + [layout[i] for i in range(m, len(layout))]
    return left, rest


def _settle_free(candidate):
    """Return candidate if it is a valid free-tree representative, else jump
    directly to the next valid layout below it.

    Validity pins the root at the tree's center: the first root subtree must
    not be taller than the rest of the tree, nor — on equal heights — larger,
    nor — on equal sizes — lexicographically later.
    """
    left, rest = _split_first_subtree(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    new_candidate = _rooted_successor(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_first_subtree(new_candidate)
        suffix = range(1, max(new_left) + 2)
        new_candidate[-len(suffix):] = suffix
    return new_candidate


def enumerate_free_trees(order):
    """Yield the canonical level sequence of every tree of the given order,
    one per isomorphism class, in decreasing lexicographic order."""
    if order < 1:
        raise InvalidOrderError(f"tree order must be at least 1, got {order}")
    if order == 1:
        yield (0,)
        return
    layout = list(range(order // 2 + 1)) + list(range(1, (order + 1) // 2))
    while layout is not None:
        layout = _settle_free(layout)
        if layout is not None:
            yield tuple(layout)
            layout = _rooted_successor(layout)


def count_free_trees(order):
    """Number of isomorphism classes of trees of the given order."""
    return sum(1 for _ in enumerate_free_trees(order))


# ---------------------------------------------------------------------------
# Labeled-tree census via Prüfer codes
# ---------------------------------------------------------------------------

def prufer_decode(seq, n):
    """Tree on n labeled vertices encoded by a Prüfer code of length n - 2."""
    if n < 2:
        raise InvalidOrderError(f"Prüfer decoding needs order >= 2, got {n}")
    seq = [int(x) for x in seq]
    if len(seq) != n - 2:
        raise MalformedSequenceError(
            f"Prüfer code for order {n} must have length {n - 2}, got {len(seq)}"
        )
    if any(x < 0 or x >= n for x in seq):
        raise MalformedSequenceError("Prüfer code entry outside 0..n-1")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    used = [False] * n
    edges = []
    for x in seq:
        for leaf in range(n):
            if deg[leaf] == 1 and not used[leaf]:
                break
        edges.append((leaf, x))
        used[leaf] = True
        deg[leaf] -= 1
        deg[x] -= 1
    a, b = (v for v in range(n) if not used[v] and deg[v] == 1)
    edges.append((a, b))
    return Graph(n, edges)


def prufer_census(n):
    """Count labeled trees per isomorphism class by decoding every Prüfer code.

    Returns a dict mapping canonical level sequences to the number of their
    labeled representatives; the counts sum to ``n**(n-2)``. Limited to
    ``n <= 16`` (the numba kernel packs levels four bits apiece). On the
    numpy backend this falls back to a plain Python sweep, which is only
    practical for small n.
    """
    if n < 1:
        raise InvalidOrderError(f"census order must be at least 1, got {n}")
    if n > 16:
        raise InvalidOrderError(f"census is limited to order 16, got {n}")
    if n == 1:
        return {(0,): 1}
    if n == 2:
        return {(0, 1): 1}
    if USING_NUMBA:
        certs = kernels.prufer_census_certs(n)
        values, counts = np.unique(certs, return_counts=True)
        census = {}
        for cert, cnt in zip(values.tolist(), counts.tolist()):
            levels = tuple((cert >> (4 * i)) & 0xF for i in range(n))
            census[levels] = int(cnt)
        return census
    census = {}
    for code in itertools.product(range(n), repeat=n - 2):
        key = canonical_form(prufer_decode(code, n))
        census[key] = census.get(key, 0) + 1
    return census
