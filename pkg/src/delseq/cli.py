"""Command-line experiment harness.

Every subcommand prints one machine-readable table: CSV on stdout by default
or, with ``--format json``, a single object with "schema", "params" and
"rows" keys whose row values are the same strings as the CSV cells.  Output
is byte-identical across identical invocations.

Exit codes: 0 success, 1 verification failure (verify only), 2 invalid
arguments, 3 enumeration-cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .clustering import (
    cluster_size_closed,
    cluster_size_recurrence,
    count_singletons,
    maximal_initials_cluster,
    rho,
)
from .core import Rle, check_bits, g_chain, rle_decode, rle_encode
from .entropy import (
    SHANNON,
    double_deletion_classes,
    entropy,
    entropy_estimate_from_moments,
    parse_measure,
    posterior_shannon,
    single_deletion_classes,
)
from .exhaustive import (
    EnumerationCapExceeded,
    MAX_BITS_ENV,
    all_hamming_weights,
    all_weights,
)
from .hws import kappa_entropy_table, kappa_squared
from .superspace import build_posterior, total_masks, uncertainty_cardinality
from .verify import run_all, suite_names


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delseq",
        description="Exact combinatorics of binary deletion channels.",
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    common.add_argument(
        "--max-bits",
        type=int,
        default=None,
        help=f"enumeration cap in bits (default 22; env {MAX_BITS_ENV})",
    )

    p = sub.add_parser(
        "posterior",
        parents=[common],
        help="weights and probabilities over the uncertainty set",
        description="One row per supersequence y, sorted by y as a binary "
        "number, plus a trailing row ('total', mu, |Y|).",
    )
    p.add_argument("--x", required=True, help="received string, e.g. 110")
    p.add_argument("--n", required=True, type=int, help="supersequence length")
    p.set_defaults(run=cmd_posterior)

    p = sub.add_parser(
        "entropy-scan",
        parents=[common],
        help="entropy measures for every x of length m",
        description="2^m rows in binary order; kappa2 plus one column per "
        "requested measure.",
    )
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument(
        "--measures",
        default="shannon,renyi2,min",
        help="comma list of shannon, renyi2, renyi:<alpha>, min, hartley",
    )
    p.set_defaults(run=cmd_entropy_scan)

    p = sub.add_parser(
        "kappa",
        parents=[common],
        help="autocorrelation table, optionally with exact entropies",
        description="Rows sorted by kappa2 descending, ties by x ascending.",
    )
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(run=cmd_kappa)

    p = sub.add_parser(
        "clusters",
        parents=[common],
        help="per-cluster sizes by closed form, recurrence and brute force",
    )
    p.add_argument("--x", required=True)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(run=cmd_clusters)

    p = sub.add_parser(
        "singletons",
        parents=[common],
        help="singleton count by insertion-slot formula and brute force",
    )
    p.add_argument("--x", required=True)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(run=cmd_singletons)

    p = sub.add_parser(
        "classes",
        parents=[common],
        help="single/double-deletion weight classes with identity checks",
        description="Weight-class rows; the strings_ok and masks_ok columns "
        "carry the same identity verdict on every row.",
    )
    p.add_argument(
        "--x-rle",
        required=True,
        help="run lengths, e.g. 1,2,3 or s=0,1,2,3 to set the first symbol",
    )
    p.add_argument("--deletions", required=True, type=int, choices=(1, 2))
    p.set_defaults(run=cmd_classes)

    p = sub.add_parser(
        "gchain",
        parents=[common],
        help="entropy along the run-merging chain down to the constant string",
    )
    p.add_argument("--x", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--measure", default="shannon")
    p.set_defaults(run=cmd_gchain)

    p = sub.add_parser(
        "estimate",
        parents=[common],
        help="moment-based entropy estimate with its error bound",
    )
    p.add_argument("--x", required=True)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(run=cmd_estimate)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="run the oracle/property suites; nonzero exit on any violation",
        description="Suites: " + ", ".join(suite_names()) + ".",
    )
    p.add_argument("--max-n", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_verify)

    return parser


def emit(args, schema: str, params: dict, columns: list[str], rows) -> None:
    rows = [[str(cell) for cell in row] for row in rows]
    if args.format == "json":
        doc = {
            "schema": schema,
            "params": {k: str(v) for k, v in params.items()},
            "rows": [dict(zip(columns, row)) for row in rows],
        }
        print(json.dumps(doc, indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)


def parse_rle(text: str) -> Rle:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    first = 1
    if parts and parts[0].startswith("s="):
        first = int(parts[0][2:])
        parts = parts[1:]
    if not parts:
        raise ValueError(f"no run lengths in {text!r}")
    return Rle(first, tuple(int(p) for p in parts))


def format_rle(r: Rle) -> str:
    return f"s={r.first}," + ",".join(str(b) for b in r.runs)


def cmd_posterior(args) -> int:
    check_bits(args.x)
    p = build_posterior(args.x, args.n, max_bits=args.max_bits)
    rows = [[y, w, repr(w / p.mu)] for y, w in p.entries]
    rows.append(["total", p.mu, len(p)])
    emit(
        args,
        "posterior",
        {"x": args.x, "n": args.n},
        ["y", "omega", "prob"],
        rows,
    )
    return 0


def cmd_entropy_scan(args) -> int:
    measures = [parse_measure(tok) for tok in args.measures.split(",") if tok]
    if args.m < 1 or args.m > args.n:
        raise ValueError(f"need 1 <= m <= n, got n={args.n} m={args.m}")
    columns = ["x", "kappa2"] + [str(ms) for ms in measures]
    rows = []
    for i in range(1 << args.m):
        x = format(i, f"0{args.m}b")
        p = build_posterior(x, args.n, max_bits=args.max_bits)
        rows.append(
            [x, kappa_squared(x)] + [repr(entropy(p, ms)) for ms in measures]
        )
    emit(
        args,
        "entropy-scan",
        {"n": args.n, "m": args.m, "measures": args.measures},
        columns,
        rows,
    )
    return 0


def cmd_kappa(args) -> int:
    if args.m < 1:
        raise ValueError("m must be >= 1")
    if args.n is not None:
        table = kappa_entropy_table(args.n, args.m, max_bits=args.max_bits)
        rows = [[x, k2, repr(h)] for x, k2, h in table]
        columns = ["x", "kappa2", "shannon"]
    else:
        pairs = sorted(
            ((format(i, f"0{args.m}b"), kappa_squared(format(i, f"0{args.m}b")))
             for i in range(1 << args.m)),
            key=lambda row: (-row[1], row[0]),
        )
        rows = [[x, k2] for x, k2 in pairs]
        columns = ["x", "kappa2"]
    emit(args, "kappa", {"m": args.m, "n": args.n}, columns, rows)
    return 0


def cmd_clusters(args) -> int:
    x, n = args.x, args.n
    check_bits(x)
    m = len(x)
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= |x| <= n, got |x|={m} n={n}")
    weights = all_weights(x, n, max_bits=args.max_bits)
    ham = all_hamming_weights(n)
    hx = x.count("1")
    rows = []
    for c in range(n - m + 1):
        brute = int(np.count_nonzero((weights > 0) & (ham == hx + c)))
        rows.append(
            [
                c,
                cluster_size_closed(n, m, hx, c),
                cluster_size_recurrence(n, x, c),
                brute,
                maximal_initials_cluster(n, m, hx, c),
            ]
        )
    emit(
        args,
        "clusters",
        {"x": x, "n": n},
        ["c", "size_closed", "size_recurrence", "size_bruteforce", "maximal_initials"],
        rows,
    )
    return 0


def cmd_singletons(args) -> int:
    x, n = args.x, args.n
    check_bits(x)
    if not 1 <= len(x) <= n:
        raise ValueError(f"need 1 <= |x| <= n, got |x|={len(x)} n={n}")
    profile = rho(x)
    weights = all_weights(x, n, max_bits=args.max_bits)
    brute = int(np.count_nonzero(weights == 1))
    emit(
        args,
        "singletons",
        {"x": x, "n": n},
        ["rho0", "rho1", "count_formula", "count_bruteforce"],
        [[profile.rho0, profile.rho1, count_singletons(n, x), brute]],
    )
    return 0


def cmd_classes(args) -> int:
    x_rle = parse_rle(args.x_rle)
    make = single_deletion_classes if args.deletions == 1 else double_deletion_classes
    census = make(x_rle)
    strings_ok = census.string_count() == uncertainty_cardinality(
        census.n, census.m
    )
    masks_ok = census.mask_count() == total_masks(census.n, census.m)
    rows = [
        [w, mult, str(strings_ok).lower(), str(masks_ok).lower()]
        for w, mult in census.classes
    ]
    emit(
        args,
        "classes",
        {"x_rle": format_rle(x_rle), "deletions": args.deletions},
        ["weight", "multiplicity", "strings_ok", "masks_ok"],
        rows,
    )
    return 0


def cmd_gchain(args) -> int:
    check_bits(args.x)
    measure = parse_measure(args.measure)
    if not 1 <= len(args.x) <= args.n:
        raise ValueError(f"need 1 <= |x| <= n, got |x|={len(args.x)} n={args.n}")
    rows = []
    for step, r in enumerate(g_chain(rle_encode(args.x))):
        h = entropy(
            build_posterior(rle_decode(r), args.n, max_bits=args.max_bits),
            measure,
        )
        rows.append([step, format_rle(r), repr(h)])
    emit(
        args,
        "gchain",
        {"x": args.x, "n": args.n, "measure": str(measure)},
        ["step", "x_rle", str(measure)],
        rows,
    )
    return 0


def cmd_estimate(args) -> int:
    check_bits(args.x)
    if not 1 <= len(args.x) <= args.n:
        raise ValueError(f"need 1 <= |x| <= n, got |x|={len(args.x)} n={args.n}")
    est = entropy_estimate_from_moments(args.x, args.n, max_bits=args.max_bits)
    exact = posterior_shannon(args.x, args.n, max_bits=args.max_bits)
    emit(
        args,
        "estimate",
        {"x": args.x, "n": args.n},
        ["exact_h", "estimate", "error_bound"],
        [[repr(exact), repr(est.estimate), repr(est.bound)]],
    )
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.max_n, seed=args.seed)
    rows = []
    for r in results:
        note = "; ".join(r.failures[:2] + r.notes)
        rows.append(
            [r.name, r.checks, len(r.failures), "pass" if r.ok else "FAIL", note]
        )
    emit(
        args,
        "verify",
        {"max_n": args.max_n, "seed": args.seed},
        ["suite", "checks", "failures", "status", "note"],
        rows,
    )
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
