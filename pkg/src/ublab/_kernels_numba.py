"""Numba-accelerated kernels: the default backend (see ublab.backend).

Same contracts as ublab._kernels_numpy, written as explicit loops under
@njit(cache=True, nogil=True) so threaded callers overlap. The module also
carries the batched labeled-tree census kernel used by the enumeration
cross-check, which canonicalizes millions of small trees per run and is the
main reason this backend exists.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def bfs_distances(indptr, nbrs, n):
    """All-pairs BFS distances as an (n, n) int32 matrix, -1 if unreachable."""
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for s in range(n):
        dist[s, s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for j in range(indptr[u], indptr[u + 1]):
                v = nbrs[j]
                if dist[s, v] < 0:
                    dist[s, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True, nogil=True)
def closer_counts(dist):
    """counts[u, v] = number of vertices strictly closer to u than to v."""
    n = dist.shape[0]
    counts = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            c = 0
            for w in range(n):
                if dist[u, w] < dist[v, w]:
                    c += 1
            counts[u, v] = c
    return counts


@njit(cache=True, nogil=True)
def unbalance_sums(dist):
    """Return (mo, ub, ub2): absolute closer-count differences summed over
    adjacent pairs, all pairs, and pairs at distance at most two."""
    n = dist.shape[0]
    mo = 0
    ub = 0
    ub2 = 0
    for u in range(n):
        for v in range(u + 1, n):
            a = 0
            b = 0
            for w in range(n):
                duw = dist[u, w]
                dvw = dist[v, w]
                if duw < dvw:
                    a += 1
                elif dvw < duw:
                    b += 1
            diff = a - b if a >= b else b - a
            ub += diff
            duv = dist[u, v]
            if duv <= 2:
                ub2 += diff
                if duv == 1:
                    mo += diff
    return mo, ub, ub2


@njit(cache=True, nogil=True)
def tree_distances_from_parents(parent):
    """Distance matrix of a tree given parent pointers with parent[i] < i."""
    n = parent.shape[0]
    dist = np.zeros((n, n), dtype=np.int32)
    for i in range(1, n):
        p = parent[i]
        for j in range(i):
            d = dist[p, j] + 1
            dist[i, j] = d
            dist[j, i] = d
    return dist


@njit(cache=True, nogil=True)
def batch_tree_sums(parents):
    """(mo, ub, ub2) rows for a batch of trees given as a (t, n) parent matrix."""
    t = parents.shape[0]
    out = np.empty((t, 3), dtype=np.int64)
    for i in range(t):
        dist = tree_distances_from_parents(parents[i])
        mo, ub, ub2 = unbalance_sums(dist)
        out[i, 0] = mo
        out[i, 1] = ub
        out[i, 2] = ub2
    return out


# ---------------------------------------------------------------------------
# Canonical level sequences (used by the labeled-tree census)
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _enc_less(a, b, enc, enc_len):
    """Lexicographic comparison of the stored encodings of vertices a and b,
    a proper prefix ranking below its extension."""
    la = enc_len[a]
    lb = enc_len[b]
    m = la if la < lb else lb
    for i in range(m):
        xa = enc[a, i]
        xb = enc[b, i]
        if xa != xb:
            return xa < xb
    return la < lb


@njit(cache=True, nogil=True)
def _rooted_encoding(nbr_count, nbr, root, banned, parent, order, childbuf, enc, enc_len):
    """Write the canonical preorder depth sequence of the component reachable
    from root without crossing banned into enc[root]; return its size.

    Children are ordered by descending encoding, which makes the overall
    sequence the lexicographically greatest depth sequence for this rooting.
    """
    n = parent.shape[0]
    for i in range(n):
        parent[i] = -2
    parent[root] = -1
    if banned >= 0:
        parent[banned] = -3
    head = 0
    tail = 1
    order[0] = root
    while head < tail:
        u = order[head]
        head += 1
        for j in range(nbr_count[u]):
            v = nbr[u, j]
            if parent[v] == -2:
                parent[v] = u
                order[tail] = v
                tail += 1
    for t in range(tail - 1, -1, -1):
        v = order[t]
        nc = 0
        for j in range(nbr_count[v]):
            w = nbr[v, j]
            if parent[w] == v:
                childbuf[nc] = w
                nc += 1
        for a in range(1, nc):
            w = childbuf[a]
            b = a - 1
            while b >= 0 and _enc_less(childbuf[b], w, enc, enc_len):
                childbuf[b + 1] = childbuf[b]
                b -= 1
            childbuf[b + 1] = w
        pos = 1
        enc[v, 0] = 0
        for a in range(nc):
            c = childbuf[a]
            lc = enc_len[c]
            for x in range(lc):
                enc[v, pos + x] = enc[c, x] + 1
            pos += lc
        enc_len[v] = pos
    return tail


@njit(cache=True, nogil=True)
def _canonical_into(nbr_count, nbr, n, out, deg2, layerbuf, parent, order, childbuf, enc, enc_len):
    """Write the canonical level sequence of the tree into out[:n].

    Roots at the unique center, or for bicentral trees at the center whose own
    half is maximal by (size, then lexicographic rooted encoding); the other
    half becomes the first (deepest) root subtree.
    """
    if n == 1:
        out[0] = 0
        return
    for i in range(n):
        deg2[i] = nbr_count[i]
    head = 0
    tail = 0
    for v in range(n):
        if deg2[v] == 1:
            layerbuf[tail] = v
            tail += 1
    remaining = n
    while remaining > 2:
        wave_end = tail
        while head < wave_end:
            v = layerbuf[head]
            head += 1
            deg2[v] = -1
            remaining -= 1
            for j in range(nbr_count[v]):
                w = nbr[v, j]
                if deg2[w] > 0:
                    deg2[w] -= 1
                    if deg2[w] == 1:
                        layerbuf[tail] = w
                        tail += 1
    c1 = -1
    c2 = -1
    for v in range(n):
        if deg2[v] >= 0:
            if c1 < 0:
                c1 = v
            else:
                c2 = v
    if c2 < 0:
        _rooted_encoding(nbr_count, nbr, c1, -1, parent, order, childbuf, enc, enc_len)
        for i in range(n):
            out[i] = enc[c1, i]
        return
    s1 = _rooted_encoding(nbr_count, nbr, c1, c2, parent, order, childbuf, enc, enc_len)
    s2 = _rooted_encoding(nbr_count, nbr, c2, c1, parent, order, childbuf, enc, enc_len)
    win = c1
    if s1 != s2:
        if s2 > s1:
            win = c2
    else:
        for i in range(s1):
            xa = enc[c1, i]
            xb = enc[c2, i]
            if xa != xb:
                if xb > xa:
                    win = c2
                break
    lose = c2 if win == c1 else c1
    ll = enc_len[lose]
    lw = enc_len[win]
    out[0] = 0
    for i in range(ll):
        out[1 + i] = enc[lose, i] + 1
    for i in range(1, lw):
        out[ll + i] = enc[win, i]


@njit(cache=True, nogil=True)
def canonical_levels_from_edges(edges, n):
    """Canonical level sequence (int64 array) of the tree with the given edges."""
    nbr_count = np.zeros(n, dtype=np.int64)
    nbr = np.empty((n, n), dtype=np.int64)
    for e in range(edges.shape[0]):
        u = edges[e, 0]
        v = edges[e, 1]
        nbr[u, nbr_count[u]] = v
        nbr_count[u] += 1
        nbr[v, nbr_count[v]] = u
        nbr_count[v] += 1
    out = np.empty(n, dtype=np.int64)
    deg2 = np.empty(n, dtype=np.int64)
    layerbuf = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    childbuf = np.empty(n, dtype=np.int64)
    enc = np.empty((n, n), dtype=np.int64)
    enc_len = np.zeros(n, dtype=np.int64)
    _canonical_into(nbr_count, nbr, n, out, deg2, layerbuf, parent, order, childbuf, enc, enc_len)
    return out


@njit(cache=True, nogil=True)
def prufer_census_certs(n):
    """Canonical-form certificates for every labeled tree on n vertices.

    Decodes all n**(n-2) Prüfer codes in odometer order and packs each tree's
    canonical level sequence into a uint64 (4 bits per depth, valid for
    n <= 16). The caller deduplicates.
    """
    total = 1
    for _ in range(n - 2):
        total *= n
    certs = np.empty(total, dtype=np.uint64)
    code = np.zeros(max(n - 2, 1), dtype=np.int64)
    deg = np.empty(n, dtype=np.int64)
    used = np.empty(n, dtype=np.uint8)
    nbr_count = np.empty(n, dtype=np.int64)
    nbr = np.empty((n, n), dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    deg2 = np.empty(n, dtype=np.int64)
    layerbuf = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    childbuf = np.empty(n, dtype=np.int64)
    enc = np.empty((n, n), dtype=np.int64)
    enc_len = np.zeros(n, dtype=np.int64)
    for idx in range(total):
        for v in range(n):
            deg[v] = 1
            used[v] = 0
            nbr_count[v] = 0
        for j in range(n - 2):
            deg[code[j]] += 1
        for j in range(n - 2):
            leaf = -1
            for v in range(n):
                if deg[v] == 1 and used[v] == 0:
                    leaf = v
                    break
            x = code[j]
            nbr[leaf, nbr_count[leaf]] = x
            nbr_count[leaf] += 1
            nbr[x, nbr_count[x]] = leaf
            nbr_count[x] += 1
            used[leaf] = 1
            deg[leaf] -= 1
            deg[x] -= 1
        a = -1
        b = -1
        for v in range(n):
            if used[v] == 0 and deg[v] == 1:
                if a < 0:
                    a = v
                else:
                    b = v
        nbr[a, nbr_count[a]] = b
        nbr_count[a] += 1
        nbr[b, nbr_count[b]] = a
        nbr_count[b] += 1
        _canonical_into(nbr_count, nbr, n, out, deg2, layerbuf, parent, order, childbuf, enc, enc_len)
        cert = np.uint64(0)
        for i in range(n):
            cert |= np.uint64(out[i]) << np.uint64(4 * i)
        certs[idx] = cert
        j = n - 3
        while j >= 0:
            code[j] += 1
            if code[j] < n:
                break
            code[j] = 0
            j -= 1
    return certs
