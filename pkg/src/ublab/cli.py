"""Command-line interface.

Subcommands:

* ``invariants`` — compute mo/ub/ub2 and balancedness flags for one graph,
  read as an edge list or a level sequence.
* ``enumerate``  — stream canonical level sequences, one tree per line.
* ``verify``     — run the exhaustive per-order checks (``theorem1``,
  ``lemma1``, ``case2``, ``all``) or the ``relaxations`` claim sweep.
* ``family``     — compare a family's closed-form value against direct
  computation.

Exit codes: 0 = verified/computed; 1 = verification failure or a domain
error on well-formed input (e.g. disconnected graph, mismatched family
value); 2 = usage or parse error. The ``UBLAB_MAX_ORDER`` environment
variable (default 20) caps enumeration orders as a safety rail.
"""

import argparse
import json
import os
import sys

from ublab.errors import GraphInputError, InvalidOrderError, UblabError
from ublab.extremal import (
    reports_to_csv,
    reports_to_json,
    verify_distance3_equality_argument,
    verify_range,
)
from ublab.families import (
    SpiderSpec,
    make_double_star,
    make_path,
    make_spider,
    make_star,
    ub2_double_star_closed_form,
    ub2_path_closed_form,
    ub2_spider_closed_form,
    ub_star_closed_form,
)
from ublab.graphs import (
    all_pairs_distances,
    closer_counts,
    compute_invariants,
    parse_edgelist,
)
from ublab.relaxation import (
    _sweep_violation,
    iter_sweep_solutions,
    solution_to_json,
)
from ublab.treegen import (
    canonical_text,
    enumerate_free_trees,
    format_level_sequence,
    level_sequence_to_graph,
    parse_level_sequence,
)

_DEFAULT_MAX_ORDER_CAP = 20


def _order_cap():
    raw = os.environ.get("UBLAB_MAX_ORDER", "").strip()
    if not raw:
        return _DEFAULT_MAX_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GraphInputError(f"UBLAB_MAX_ORDER={raw!r} is not an integer") from None
    if cap < 1:
        raise GraphInputError(f"UBLAB_MAX_ORDER must be at least 1, got {cap}")
    return cap


def _check_cap(order):
    cap = _order_cap()
    if order > cap:
        raise InvalidOrderError(
            f"order {order} exceeds the UBLAB_MAX_ORDER cap of {cap}"
        )


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read input file {path}: {exc}") from None


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ublab",
        description="Distance-unbalancedness invariants, tree enumeration, "
        "and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser(
        "invariants", help="compute mo/ub/ub2 for one graph"
    )
    p_inv.add_argument("--input", default="-", help="input path, or - for stdin")
    p_inv.add_argument(
        "--format",
        choices=("edgelist", "levelseq"),
        default="edgelist",
        help="input format (default: edgelist)",
    )
    p_inv.add_argument(
        "--counts",
        action="store_true",
        help="also emit the full closer-counts matrix",
    )
    p_inv.add_argument("--json", action="store_true", help="emit JSON")

    p_enum = sub.add_parser(
        "enumerate", help="stream canonical level sequences, one per line"
    )
    p_enum.add_argument("--order", type=int, required=True, help="tree order")
    p_enum.add_argument(
        "--limit", type=int, default=None, help="stop after this many trees"
    )
    p_enum.add_argument(
        "--json", action="store_true", help="emit a JSON array instead of lines"
    )

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "target",
        choices=("theorem1", "lemma1", "case2", "relaxations", "all"),
        help="which suite to run",
    )
    p_verify.add_argument("--min-order", type=int, default=2)
    p_verify.add_argument(
        "--max-order",
        type=int,
        default=None,
        help="largest order to verify (default 14; 13 for case2)",
    )
    p_verify.add_argument(
        "--max-n", type=int, default=20, help="relaxations sweep bound"
    )
    p_verify.add_argument("--jobs", type=int, default=1, help="worker threads")
    p_verify.add_argument("--json", action="store_true", help="emit JSON")
    p_verify.add_argument(
        "--csv", metavar="PATH", default=None, help="also write the CSV to PATH"
    )
    p_verify.add_argument(
        "--stable-output",
        action="store_true",
        help="zero the elapsed_ms column for byte-stable output",
    )

    p_family = sub.add_parser(
        "family", help="compare a closed form against direct computation"
    )
    p_family.add_argument(
        "kind", choices=("star", "path", "spider", "double-star")
    )
    p_family.add_argument("--order", type=int, default=None)
    p_family.add_argument(
        "--legs", default=None, help="comma-separated spider leg lengths"
    )
    p_family.add_argument("--json", action="store_true", help="emit JSON")
    return parser


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_invariants(args):
    text = _read_input(args.input)
    if args.format == "levelseq":
        levels = parse_level_sequence(text.strip())
        g = level_sequence_to_graph(levels)
    else:
        g = parse_edgelist(text)
    canonical = canonical_text(g) if g.is_tree() else None
    record = compute_invariants(g, canonical=canonical)
    if args.json:
        payload = record.to_dict()
        if args.counts:
            counts = closer_counts(g)
            payload["closer_counts"] = counts.tolist()
        print(json.dumps(payload, indent=2))
        return 0
    d = record.to_dict()
    parts = [f"n={d['n']}", f"mo={d['mo']}", f"ub={d['ub']}", f"ub2={d['ub2']}"]
    parts.append(f"distance_balanced={'true' if d['distance_balanced'] else 'false'}")
    parts.append(
        "highly_distance_balanced="
        + ("true" if d["highly_distance_balanced"] else "false")
    )
    if record.canonical is not None:
        parts.append(f"canonical={record.canonical}")
    print(" ".join(parts))
    if args.counts:
        counts = closer_counts(g, all_pairs_distances(g))
        for row in counts.tolist():
            print(" ".join(str(x) for x in row))
    return 0


def _cmd_enumerate(args):
    if args.order < 1:
        raise InvalidOrderError(f"order must be at least 1, got {args.order}")
    if args.limit is not None and args.limit < 0:
        raise InvalidOrderError(f"limit must be nonnegative, got {args.limit}")
    _check_cap(args.order)
    emitted = 0
    lines = []
    for seq in enumerate_free_trees(args.order):
        if args.limit is not None and emitted >= args.limit:
            break
        text = format_level_sequence(seq)
        if args.json:
            lines.append(text)
        else:
            print(text)
        emitted += 1
    if args.json:
        print(json.dumps(lines, indent=2))
    return 0


def _verify_relaxations(args):
    if args.max_n < 6:
        raise InvalidOrderError(f"--max-n must be at least 6, got {args.max_n}")
    entries = []
    ok = True
    for sol in iter_sweep_solutions(args.max_n):
        entries.append(solution_to_json(sol))
        if _sweep_violation(sol) is not None:
            ok = False
    print(json.dumps(entries, indent=2))
    return 0 if ok else 1


def _cmd_verify(args):
    if args.target == "relaxations":
        return _verify_relaxations(args)
    max_order = args.max_order
    if max_order is None:
        max_order = 13 if args.target == "case2" else 14
    if args.min_order < 1 or max_order < args.min_order:
        raise InvalidOrderError(
            f"invalid order range {args.min_order}..{max_order}"
        )
    if args.jobs < 1:
        raise InvalidOrderError(f"--jobs must be at least 1, got {args.jobs}")
    _check_cap(max_order)
    include_case2 = args.target in ("case2", "all")
    reports = verify_range(
        args.min_order, max_order, jobs=args.jobs, include_case2=include_case2
    )
    ok = True
    for r in reports:
        if args.target in ("theorem1", "all"):
            if not (r.theorem1_holds and r.equality_case_ok):
                ok = False
        if args.target in ("lemma1", "all") and not r.lemma1_holds:
            ok = False
        if include_case2 and r.case2_ok is not True:
            ok = False
    if args.target in ("theorem1", "all"):
        for n in range(max(args.min_order, 4), max_order + 1):
            if not verify_distance3_equality_argument(n):
                print(f"distance-3 equality argument failed at n={n}", file=sys.stderr)
                ok = False
    csv_text = reports_to_csv(reports, stable=args.stable_output)
    if args.json:
        print(json.dumps(reports_to_json(reports, stable=args.stable_output), indent=2))
    else:
        sys.stdout.write(csv_text)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    if args.target == "all":
        from ublab.relaxation import sweep_claims

        report = sweep_claims(args.max_n)
        if not report["ok"]:
            print(
                f"relaxations: {len(report['violations'])} violation(s)",
                file=sys.stderr,
            )
            ok = False
    return 0 if ok else 1


def _family_values(args):
    if args.kind == "spider":
        if not args.legs:
            raise GraphInputError("family spider requires --legs")
        try:
            legs = tuple(int(tok.strip()) for tok in args.legs.split(","))
        except ValueError:
            raise GraphInputError(f"--legs {args.legs!r} is not a comma-separated integer list") from None
        spec = SpiderSpec(legs)
        closed = ub2_spider_closed_form(spec)
        g = make_spider(spec)
        record = compute_invariants(g)
        return {
            "family": "spider",
            "legs": list(spec.legs),
            "n": spec.order,
            "invariant": "ub2",
            "closed": closed,
            "direct": record.ub2,
        }
    if args.order is None:
        raise GraphInputError(f"family {args.kind} requires --order")
    n = args.order
    if args.kind == "star":
        closed = ub_star_closed_form(n)
        record = compute_invariants(make_star(n))
        return {
            "family": "star",
            "n": n,
            "invariant": "ub",
            "closed": closed,
            "direct": record.ub,
        }
    if args.kind == "path":
        closed = ub2_path_closed_form(n)
        record = compute_invariants(make_path(n))
        return {
            "family": "path",
            "n": n,
            "invariant": "ub2",
            "closed": closed,
            "direct": record.ub2,
        }
    closed = ub2_double_star_closed_form(n)
    record = compute_invariants(make_double_star(n))
    return {
        "family": "double-star",
        "n": n,
        "invariant": "ub2",
        "closed": closed,
        "direct": record.ub2,
    }


def _cmd_family(args):
    payload = _family_values(args)
    payload["match"] = payload["closed"] == payload["direct"]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        parts = [f"family={payload['family']}"]
        if "legs" in payload:
            parts.append("legs=" + ",".join(str(x) for x in payload["legs"]))
        parts.append(f"n={payload['n']}")
        parts.append(f"invariant={payload['invariant']}")
        parts.append(f"closed={payload['closed']}")
        parts.append(f"direct={payload['direct']}")
        parts.append(f"match={'true' if payload['match'] else 'false'}")
        print(" ".join(parts))
    return 0 if payload["match"] else 1


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_family(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UblabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
