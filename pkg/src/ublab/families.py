"""Constructors for the named tree families and their exact closed forms.

Stars, paths, spiders (one branch vertex, pendant paths as legs), and
balanced double stars, each with a documented deterministic labeling so that
golden outputs are byte-stable, plus the split/transform pair that detaches
the pendant legs around one branch vertex of a tree and re-attaches the same
number of vertices as a single pendant path.
"""

from dataclasses import dataclass

from ublab.errors import InvalidOrderError, InvalidSpecError, NoSplitError
from ublab.graphs import Graph
from ublab.treegen import canonical_form

__all__ = [
    "SpiderSpec",
    "CaseTwoSplit",
    "make_star",
    "make_path",
    "make_spider",
    "make_double_star",
    "ub_star_closed_form",
    "ub2_path_closed_form",
    "ub2_spider_closed_form",
    "ub2_double_star_closed_form",
    "case2_split",
    "case2_transform",
]


@dataclass(frozen=True)
class SpiderSpec:
    """Leg lengths of a spider: vertex counts per leg, center excluded.

    Lengths must be nonincreasing and at least 1; at least one leg.
    """

    legs: tuple

    def __post_init__(self):
        legs = tuple(int(x) for x in self.legs)
        object.__setattr__(self, "legs", legs)
        if len(legs) < 1:
            raise InvalidSpecError("spider needs at least one leg")
        if any(x < 1 for x in legs):
            raise InvalidSpecError(f"leg lengths must be at least 1, got {legs}")
        if any(legs[i] < legs[i + 1] for i in range(len(legs) - 1)):
            raise InvalidSpecError(f"leg lengths must be nonincreasing, got {legs}")

    @property
    def k(self):
        return len(self.legs)

    @property
    def order(self):
        return 1 + sum(self.legs)


def make_star(n):
    """Star on n vertices: center 0 adjacent to 1..n-1."""
    if n < 1:
        raise InvalidOrderError(f"star order must be at least 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def make_path(n):
    """Path on n vertices in label order 0-1-...-(n-1)."""
    if n < 1:
        raise InvalidOrderError(f"path order must be at least 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_spider(spec):
    """Spider with the given legs: center 0, legs labeled consecutively
    (leg i occupies the next ``legs[i]`` labels, walking outward)."""
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    edges = []
    nxt = 1
    for length in spec.legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(spec.order, edges)


def make_double_star(n):
    """Balanced double star on even n >= 4: adjacent centers 0 and 1, with
    leaves 2..n/2 on center 0 and n/2+1..n-1 on center 1."""
    if n < 4 or n % 2 != 0:
        raise InvalidOrderError(f"double star order must be even and >= 4, got {n}")
    half = n // 2
    edges = [(0, 1)]
    edges += [(0, i) for i in range(2, half + 1)]
    edges += [(1, i) for i in range(half + 1, n)]
    return Graph(n, edges)


def ub_star_closed_form(n):
    """ub of the star on n vertices: (n-1)(n-2)."""
    if n < 1:
        raise InvalidOrderError(f"order must be at least 1, got {n}")
    return (n - 1) * (n - 2)


def ub2_path_closed_form(n):
    """ub2 of the path on n vertices: (n-1)(n-2)."""
    if n < 1:
        raise InvalidOrderError(f"order must be at least 1, got {n}")
    return (n - 1) * (n - 2)


def ub2_double_star_closed_form(n):
    """ub2 of the balanced double star on even n >= 4:
    (n-2)^2 + 2(n/2 - 1)^2."""
    if n < 4 or n % 2 != 0:
        raise InvalidOrderError(f"double star order must be even and >= 4, got {n}")
    return (n - 2) ** 2 + 2 * (n // 2 - 1) ** 2


def ub2_spider_closed_form(spec):
    """Exact ub2 of a spider with at least two legs.

    With order n and nonincreasing legs n_1 >= ... >= n_k, a leg of length L
    contributes (n-2) + (n-3) + ... + (n-2L) when its reach 2L stays within
    n; when the longest leg overshoots (2*n_1 > n) it instead contributes
    (n-2) + ... + 1 + 0 + 1 + ... + (2*n_1 - n). The cross-leg correction
    sum of (n_i - n_j) over i < j is added either way.

    The k = 2 case (a path) is computed by the same expressions; tests
    compare it against direct computation but the guarantee is only relied
    on for k >= 3.
    """
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    if spec.k < 2:
        raise InvalidSpecError(
            f"closed form needs at least two legs, got {spec.k}"
        )
    n = spec.order
    legs = spec.legs
    total = 0
    for idx, length in enumerate(legs):
        if idx == 0 and 2 * length > n:
            over = 2 * length - n
            total += (n - 1) * (n - 2) // 2 + over * (over + 1) // 2
        else:
            total += (2 * length - 1) * n - length * (2 * length + 1) + 1
    k = spec.k
    for i in range(k):
        for j in range(i + 1, k):
            total += legs[i] - legs[j]
    return total


@dataclass(frozen=True)
class CaseTwoSplit:
    """A branch vertex of a tree together with its pendant legs and the one
    remaining component that still contains branch vertices.

    ``center`` has degree k + 1: k pendant legs (paths hanging off it, leg
    lengths nonincreasing) plus the edge to ``d``, its neighbor inside the
    heavy component. The path side — center plus legs — has n' = 1 + sum of
    leg lengths vertices, with 2n' <= n.
    """

    tree: Graph
    center: int
    d: int
    legs: tuple
    heavy: frozenset

    @property
    def k(self):
        return len(self.legs)

    @property
    def n_prime(self):
        return 1 + sum(self.legs)


def _components_without(g, c):
    """Vertex sets of the components of g - c, each sorted."""
    seen = {c}
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        for u in comp:
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def case2_split(g):
    """Find a branch vertex whose removal leaves pendant paths plus exactly
    one component that still holds branch vertices.

    Requires a tree with at least two vertices of degree >= 3; the chosen
    split additionally satisfies 2n' <= n. Among valid candidates the one
    minimizing (n', canonical form of the transformed tree, center label)
    is returned, which makes the choice deterministic. Raises NoSplitError
    when no candidate qualifies.
    """
    if not g.is_tree():
        raise NoSplitError("split requires a tree")
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(branch) < 2:
        raise NoSplitError(
            f"split requires at least two vertices of degree >= 3, found {len(branch)}"
        )
    branch_set = set(branch)
    best = None
    best_key = None
    for c in branch:
        comps = _components_without(g, c)
        leg_comps = [comp for comp in comps if not branch_set.intersection(comp)]
        heavy_comps = [comp for comp in comps if branch_set.intersection(comp)]
        if len(heavy_comps) != 1 or len(leg_comps) < 2:
            continue
        legs = tuple(sorted((len(comp) for comp in leg_comps), reverse=True))
        n_prime = 1 + sum(legs)
        if 2 * n_prime > g.n:
            continue
        heavy = frozenset(heavy_comps[0])
        d = next(w for w in g.adj[c] if w in heavy)
        split = CaseTwoSplit(tree=g, center=c, d=d, legs=legs, heavy=heavy)
        key = (n_prime, canonical_form(case2_transform(split)), c)
        if best_key is None or key < best_key:
            best = split
            best_key = key
    if best is None:
        raise NoSplitError("no branch vertex admits a valid split")
    return best


def case2_transform(split):
    """Detach the center and its legs, and hang the same number of vertices
    off d as a single pendant path instead.

    The heavy component keeps its labels and edges; the removed labels are
    reused for the new path in increasing order starting at d.
    """
    g = split.tree
    removed = sorted(set(range(g.n)) - set(split.heavy))
    edges = [e for e in g.edges if e[0] in split.heavy and e[1] in split.heavy]
    prev = split.d
    for v in removed:
        edges.append((prev, v))
        prev = v
    return Graph(g.n, edges)
