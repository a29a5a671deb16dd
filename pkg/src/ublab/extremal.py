"""Exhaustive per-order verification over all isomorphism classes of trees.

For each order n the harness enumerates every tree once, computes the three
unbalancedness sums, aggregates minima with their minimizer sets, and flags:

* ``theorem1_holds`` — the minimum of ub equals (n-1)(n-2);
* ``lemma1_holds``  — the minimum of ub2 is at least (n-1)(n-2);
* ``equality_case_ok`` — the ub minimizer set is exactly {star} for n >= 5
  and {star, path} at n = 4 (vacuously true for n <= 3).

Two finer checks cover the structural steps of the arguments: the
distance-three balance property of trees with ub == ub2, and the strict
drop in ub2 when the pendant legs around a branch vertex are re-hung as a
single path. A failed check is a reported outcome, not an exception — the
harness exists to attempt falsification.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ublab.backend import kernels
from ublab.errors import InvalidOrderError
from ublab.families import case2_split, case2_transform, make_path, make_star
from ublab.graphs import all_pairs_distances, invariant_sums
from ublab.relaxation import case2_bound, case2_objective
from ublab.treegen import (
    canonical_form,
    enumerate_free_trees,
    format_level_sequence,
    level_sequence_to_graph,
    parents_from_level_sequence,
)

__all__ = [
    "ExtremalReport",
    "CaseTwoRecord",
    "verify_order",
    "verify_range",
    "verify_distance3_equality_argument",
    "verify_case2_decrease",
    "case2_decrease_records",
    "reports_to_csv",
    "reports_to_json",
]

_BATCH = 4096

CSV_HEADER = "n,tree_count,min_ub,ub_minimizer_count,theorem1,min_ub2,lemma1,case2_ok,elapsed_ms"


@dataclass(frozen=True)
class ExtremalReport:
    """Aggregated verification outcome for one order."""

    n: int
    tree_count: int
    min_ub: int
    ub_minimizers: tuple
    min_ub2: int
    ub2_minimizers: tuple
    theorem1_holds: bool
    lemma1_holds: bool
    equality_case_ok: bool
    case2_ok: "bool | None"
    elapsed_ms: float

    def to_dict(self):
        return {
            "n": self.n,
            "tree_count": self.tree_count,
            "min_ub": self.min_ub,
            "ub_minimizers": [format_level_sequence(s) for s in self.ub_minimizers],
            "min_ub2": self.min_ub2,
            "ub2_minimizers": [format_level_sequence(s) for s in self.ub2_minimizers],
            "theorem1": self.theorem1_holds,
            "lemma1": self.lemma1_holds,
            "equality_case_ok": self.equality_case_ok,
            "case2_ok": self.case2_ok,
            "elapsed_ms": self.elapsed_ms,
        }


def _batched(iterable, size):
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _batch_stats(seqs, n):
    parents = np.zeros((len(seqs), n), dtype=np.int32)
    for i, seq in enumerate(seqs):
        parents[i] = parents_from_level_sequence(seq)
    return kernels.batch_tree_sums(parents)


def _expected_ub_minimizers(n):
    expected = {canonical_form(make_star(n))}
    if n == 4:
        expected.add(canonical_form(make_path(4)))
    return expected


def verify_order(n, jobs=1, include_case2=False):
    """Verify one order exhaustively and return its ExtremalReport.

    ``jobs`` sets the number of worker threads for the per-tree sums; the
    report is identical for every value. With ``include_case2`` the strict
    ub2-decrease check also runs (see verify_case2_decrease), recorded in
    ``case2_ok``.
    """
    if n < 1:
        raise InvalidOrderError(f"order must be at least 1, got {n}")
    start = time.perf_counter()
    tree_count = 0
    min_ub = None
    min_ub2 = None
    ub_minimizers = []
    ub2_minimizers = []
    batches = _batched(enumerate_free_trees(n), _BATCH)

    def consume(pairs):
        nonlocal tree_count, min_ub, min_ub2, ub_minimizers, ub2_minimizers
        for seqs, sums in pairs:
            tree_count += len(seqs)
            for i, seq in enumerate(seqs):
                ub = int(sums[i, 1])
                ub2 = int(sums[i, 2])
                if min_ub is None or ub < min_ub:
                    min_ub = ub
                    ub_minimizers = [seq]
                elif ub == min_ub:
                    ub_minimizers.append(seq)
                if min_ub2 is None or ub2 < min_ub2:
                    min_ub2 = ub2
                    ub2_minimizers = [seq]
                elif ub2 == min_ub2:
                    ub2_minimizers.append(seq)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            seq_batches = list(batches)
            sums_iter = ex.map(lambda b: _batch_stats(b, n), seq_batches)
            consume(zip(seq_batches, sums_iter))
    else:
        consume((seqs, _batch_stats(seqs, n)) for seqs in batches)

    floor_value = (n - 1) * (n - 2)
    ub_minimizers.sort()
    ub2_minimizers.sort()
    equality_ok = True
    if n >= 4:
        equality_ok = set(ub_minimizers) == _expected_ub_minimizers(n)
    case2_ok = None
    if include_case2:
        case2_ok = verify_case2_decrease(n)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return ExtremalReport(
        n=n,
        tree_count=tree_count,
        min_ub=min_ub,
        ub_minimizers=tuple(ub_minimizers),
        min_ub2=min_ub2,
        ub2_minimizers=tuple(ub2_minimizers),
        theorem1_holds=min_ub == floor_value,
        lemma1_holds=min_ub2 >= floor_value,
        equality_case_ok=equality_ok,
        case2_ok=case2_ok,
        elapsed_ms=elapsed_ms,
    )


def verify_range(n_lo, n_hi, jobs=1, include_case2=False):
    """One ExtremalReport per order in [n_lo, n_hi]."""
    if n_lo < 1 or n_hi < n_lo:
        raise InvalidOrderError(f"invalid order range {n_lo}..{n_hi}")
    return [
        verify_order(n, jobs=jobs, include_case2=include_case2)
        for n in range(n_lo, n_hi + 1)
    ]


def verify_distance3_equality_argument(n):
    """Check the structural facts behind the equality characterization.

    Over all trees of order n: whenever ub == ub2, every pair of vertices
    at distance three must be balanced; and for n >= 5 no tree of diameter
    at least three may attain ub == (n-1)(n-2). Returns True when both
    hold for every tree.
    """
    if n < 4:
        raise InvalidOrderError(f"distance-3 check needs order >= 4, got {n}")
    floor_value = (n - 1) * (n - 2)
    for seq in enumerate_free_trees(n):
        g = level_sequence_to_graph(seq)
        dist = all_pairs_distances(g)
        mo, ub, ub2 = kernels.unbalance_sums(dist)
        if ub == ub2:
            counts = kernels.closer_counts(dist)
            for u in range(n):
                for v in range(u + 1, n):
                    if dist[u, v] == 3 and counts[u, v] != counts[v, u]:
                        return False
        if n >= 5 and int(ub) == floor_value and int(dist.max()) >= 3:
            return False
    return True


@dataclass(frozen=True)
class CaseTwoRecord:
    """Outcome of the leg re-hanging check for one tree."""

    canonical: tuple
    n_prime: int
    k: int
    legs: tuple
    ub2_before: int
    ub2_after: int
    bound: int
    objective_value: int

    @property
    def decrease(self):
        return self.ub2_before - self.ub2_after

    @property
    def ok(self):
        return self.decrease > 0 and self.decrease >= self.bound


def case2_decrease_records(n):
    """One CaseTwoRecord per tree of order n with >= 2 branch vertices.

    Each record compares ub2 before/after re-hanging the legs of the chosen
    split as one pendant path, alongside the closed-form bound
    (3n' - 2k - 3)(k - 1) and the exact decrease expression evaluated at
    the split's actual legs.
    """
    records = []
    for seq in enumerate_free_trees(n):
        g = level_sequence_to_graph(seq)
        if sum(1 for v in range(g.n) if g.degree(v) >= 3) < 2:
            continue
        split = case2_split(g)
        transformed = case2_transform(split)
        _, _, ub2_before = invariant_sums(g)
        _, _, ub2_after = invariant_sums(transformed)
        records.append(
            CaseTwoRecord(
                canonical=seq,
                n_prime=split.n_prime,
                k=split.k,
                legs=split.legs,
                ub2_before=ub2_before,
                ub2_after=ub2_after,
                bound=case2_bound(split.n_prime, split.k),
                objective_value=int(case2_objective(g.n, split.n_prime, split.legs)),
            )
        )
    return records


def verify_case2_decrease(n):
    """True when every tree of order n with >= 2 branch vertices loses ub2
    under the leg re-hanging, by at least the closed-form bound."""
    if n < 1:
        raise InvalidOrderError(f"order must be at least 1, got {n}")
    return all(rec.ok for rec in case2_decrease_records(n))


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def _csv_bool(flag):
    if flag is None:
        return ""
    return "true" if flag else "false"


def reports_to_csv(reports, stable=False):
    """Render reports as CSV text (header + one row per order).

    With ``stable`` the elapsed_ms column is zeroed so outputs are
    byte-identical across runs and worker counts.
    """
    lines = [CSV_HEADER]
    for r in reports:
        elapsed = 0 if stable else round(r.elapsed_ms)
        lines.append(
            f"{r.n},{r.tree_count},{r.min_ub},{len(r.ub_minimizers)},"
            f"{_csv_bool(r.theorem1_holds)},{r.min_ub2},{_csv_bool(r.lemma1_holds)},"
            f"{_csv_bool(r.case2_ok)},{elapsed}"
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports, stable=False):
    """JSON-ready list of report dicts, minimizer texts included."""
    out = []
    for r in reports:
        d = r.to_dict()
        if stable:
            d["elapsed_ms"] = 0
        else:
            d["elapsed_ms"] = round(r.elapsed_ms)
        out.append(d)
    return out
