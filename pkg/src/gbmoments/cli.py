"""Command-line front end: JSON in, one JSON report out.

Every subcommand prints a single report object to stdout:

    {"subcommand": ..., "inputs": ..., "results": ..., "checks": [...],
     "pass": ..., "wall_time_s": ...}

The report is deterministic for fixed inputs except for the wall_time_s
field, which golden-file comparisons must strip.  Exit status: 0 if every
check passed (or there were none), 1 if a check failed, 2 for usage or
malformed input, 3 when a capacity limit was hit.

Scalars are rendered as exact "p/q" strings (plain "p" for integers) in
rational mode and as 17-significant-digit floats otherwise.  Color ids are
0-based: when a diagram models the two-sided color set {-1, +1}, id 0 is -1
and id 1 is +1.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time
from fractions import Fraction

from . import broken, fock, moments, qproduct
from . import words as W
from .cyclegraph import build_graph
from .partitions import (
    CapacityError,
    ColorArityError,
    colored_from_json,
    double_factorial,
    enumerate_colored,
    enumerate_pair_partitions,
    pair_partition_from_json,
)

USAGE_EXIT = 2
CAPACITY_EXIT = 3


def fmt_scalar(x) -> str | float:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return float(f"{x:.17g}")


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(Fraction(part) for part in text.split(","))


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _check(name: str, expected, actual) -> dict:
    return {
        "name": name,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def _t_handle_from_args(args) -> moments.TFunction:
    if args.t == "tn":
        return moments.tn_handle(args.N)
    if args.t == "thoma":
        tp = moments.ThomaParameter(args.alpha, args.beta)
        return moments.thoma_handle(tp)
    if args.t == "tensor":
        minus = moments.ThomaParameter(args.alpha_minus, args.beta_minus)
        plus = moments.ThomaParameter(args.alpha_plus, args.beta_plus)
        return moments.tensor_handle(
            lambda v: moments.t_uncolored(minus, v),
            lambda v: moments.t_uncolored(plus, v),
        )
    raise ValueError(f"unknown weight family {args.t!r}")


def _uncolored_t_from_args(args) -> moments.UncoloredTFunction:
    if args.t == "free":
        return moments.t_free
    if args.t == "tn":
        return moments.tn_uncolored_handle(args.N)
    raise ValueError(f"unknown weight family {args.t!r}")


def cmd_enumerate(args) -> tuple[dict, dict, list[dict]]:
    inputs = {"pairs": args.pairs, "colors": args.colors}
    if args.colors == 1:
        items = enumerate_pair_partitions(args.pairs)
        listing = [p.to_json() for p in items]
        expected = double_factorial(2 * args.pairs - 1)
    else:
        items = enumerate_colored(args.pairs, args.colors)
        listing = [p.to_json() for p in items]
        expected = double_factorial(2 * args.pairs - 1) * args.colors**args.pairs
    results = {"count": len(items), "partitions": listing}
    checks = [_check("count", expected, len(items))]
    return inputs, results, checks


def cmd_graph(args) -> tuple[dict, dict, list[dict]]:
    obj = _load_json(args.partition)
    p = colored_from_json(obj)
    analysis = build_graph(p)
    return {"partition": obj}, analysis.to_json(), []


def cmd_eval(args) -> tuple[dict, dict, list[dict]]:
    obj = _load_json(args.partition)
    p = colored_from_json(obj)
    handle = _t_handle_from_args(args)
    value = handle(p)
    return (
        {"partition": obj, "t": args.t},
        {"value": fmt_scalar(value)},
        [],
    )


def cmd_oracle(args) -> tuple[dict, dict, list[dict]]:
    obj = _load_json(args.word)
    w = W.word_from_json(obj)
    combinatorial = fock.rho_n_combinatorial(w, args.N)
    results = {"combinatorial": fmt_scalar(combinatorial)}
    checks = []
    if args.mode in ("dense", "both"):
        dense = fock.vacuum_expectation_dense(w, args.N)
        results["dense"] = fmt_scalar(dense)
        checks.append(
            _check("dense_equals_combinatorial", fmt_scalar(combinatorial), fmt_scalar(dense))
        )
    return {"word": obj, "N": args.N, "mode": args.mode}, results, checks


def _compare_row(job: tuple[dict, int]) -> dict:
    obj, n = job
    p = colored_from_json(obj)
    dense = fock.vacuum_expectation_dense(W.canonical_word(p), n)
    lam = fock.vacuum_expectation_lambda(p, n)
    formula = moments.t_colored(moments.thoma_n(n), p)
    ratio = moments.t_n(n, p)
    return {
        "partition": obj,
        "dense": fmt_scalar(dense),
        "lambda": fmt_scalar(lam),
        "character_formula": fmt_scalar(formula),
        "power_formula": fmt_scalar(ratio),
        "pass": dense == lam == formula == ratio,
    }


def _worker_count() -> int:
    raw = os.environ.get("GBMOMENTS_THREADS", "1")
    count = int(raw)
    if count < 1:
        raise ValueError("GBMOMENTS_THREADS must be a positive integer")
    return count


def cmd_compare(args) -> tuple[dict, dict, list[dict]]:
    jobs = [
        (p.to_json(), args.N)
        for m in range(1, args.max_pairs + 1)
        for p in enumerate_colored(m, 2)
    ]
    workers = _worker_count()
    if workers > 1:
        # results are assembled in submission order, so output stays
        # deterministic regardless of scheduling
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_compare_row, jobs, chunksize=16))
    else:
        rows = [_compare_row(job) for job in jobs]
    checks = [_check("all_agree", True, all(r["pass"] for r in rows))]
    checks += [
        _check(f"agreement_{json.dumps(r['partition'], sort_keys=True)}", True, False)
        for r in rows
        if not r["pass"]
    ]
    return (
        {"max_pairs": args.max_pairs, "N": args.N, "workers": workers},
        {"instances": len(rows), "matrix": rows},
        checks,
    )


def cmd_clt(args) -> tuple[dict, dict, list[dict]]:
    q = qproduct.QMatrix.of(_load_json(args.Q))
    v = pair_partition_from_json(_load_json(args.V))
    handle = _uncolored_t_from_args(args)
    ns = [int(x) for x in args.n.split(",")]
    limit = qproduct.t_q_limit(q, v)
    curve = qproduct.clt_error_curve(handle, q, v, ns)
    results = {
        "limit": fmt_scalar(limit),
        "errors": [{"n": n, "error": fmt_scalar(e)} for n, e in curve],
    }
    checks = []
    if len(curve) >= 2:
        checks.append(
            _check(
                "error_last_le_first",
                True,
                abs(curve[-1][1]) <= abs(curve[0][1]),
            )
        )
    return {"Q": args.Q, "V": args.V, "t": args.t, "n": ns}, results, checks


def cmd_pd_check(args) -> tuple[dict, dict, list[dict]]:
    family = broken.enumerate_broken(args.max_points, args.colors)
    if args.q12 is not None:
        if args.colors != 2:
            raise ValueError("--q12 needs a two-color family")
        q = qproduct.QMatrix.of(
            [[Fraction(1), args.q12], [args.q12, Fraction(1)]]
        )
        components = [moments.tn_uncolored_handle(args.N)] * 2
        handle = qproduct.q_product_handle(components, q)
    else:
        if args.t == "tn":
            tp = moments.thoma_n(args.N)
        elif args.t == "thoma":
            tp = moments.ThomaParameter(args.alpha, args.beta)
        else:
            raise ValueError("pd-check supports the tn and thoma families")
        if args.colors == 1:
            handle = lambda p: moments.t_uncolored(tp, p.base)
        else:
            handle = moments.thoma_handle(tp)
    min_eig, ok = qproduct.gram_psd_check(family, handle)
    results = {"family_size": len(family), "min_eigenvalue": min_eig}
    checks = [_check("psd", True, ok)]
    return (
        {"max_points": args.max_points, "colors": args.colors, "t": args.t},
        results,
        checks,
    )


def cmd_stirling(args) -> tuple[dict, dict, list[dict]]:
    value, ok = qproduct.stirling_check(args.N)
    return (
        {"N": args.N},
        {"value": fmt_scalar(Fraction(value)), "pass": ok},
        [_check("vanishes", True, ok)],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbmoments",
        description="Exact moments of colored-pair-partition Brownian motions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="enumerate (colored) pair partitions")
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--colors", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="cycle-graph analysis of a 2-colored partition")
    p.add_argument("--partition", required=True, help="JSON file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("eval", help="evaluate a moment weight on a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--t", choices=["tn", "thoma", "tensor"], required=True)
    _add_weight_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", help="vacuum expectation of a word")
    p.add_argument("--word", required=True, help="JSON file: [{b,i,k}, ...]")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--mode", choices=["dense", "combinatorial", "both"], default="both")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="formula-vs-oracle sweep")
    p.add_argument("--max-pairs", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("clt", help="averaged-product convergence curve")
    p.add_argument("--Q", required=True, help="JSON file: matrix rows")
    p.add_argument("--V", required=True, help="JSON file: pair partition")
    p.add_argument("--t", choices=["free", "tn"], required=True)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--n", required=True, help="comma-separated sizes")
    p.set_defaults(func=cmd_clt)

    p = sub.add_parser("pd-check", help="Gram positive-semidefiniteness check")
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--colors", type=int, default=1)
    p.add_argument("--t", choices=["tn", "thoma", "tensor"], default="tn")
    p.add_argument("--q12", type=parse_rational, default=None,
                   help="use the coupling-matrix product of two copies instead")
    _add_weight_flags(p)
    p.set_defaults(func=cmd_pd_check)

    p = sub.add_parser("stirling", help="signed cycle-count cancellation")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    return parser


def _add_weight_flags(p: argparse.ArgumentParser):
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--alpha", type=parse_rational_list, default=())
    p.add_argument("--beta", type=parse_rational_list, default=())
    p.add_argument("--alpha-minus", type=parse_rational_list, default=())
    p.add_argument("--beta-minus", type=parse_rational_list, default=())
    p.add_argument("--alpha-plus", type=parse_rational_list, default=())
    p.add_argument("--beta-plus", type=parse_rational_list, default=())


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        inputs, results, checks = args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return CAPACITY_EXIT
    except (ColorArityError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    elapsed = time.perf_counter() - start
    all_pass = all(c["pass"] for c in checks)
    report = {
        "subcommand": args.subcommand,
        "inputs": inputs,
        "results": results,
        "checks": checks,
        "pass": all_pass,
        "wall_time_s": round(elapsed, 6),
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if all_pass else 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
