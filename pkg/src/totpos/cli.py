"""Command-line surface: order checks, transform application, symmetric
completion, random generation, verification suites, and counterexample
search.

Exit codes: 0 success, 1 verification violation or exhausted search,
2 usage or parse errors.  Randomized subcommands take an explicit --seed
or print the one they chose, so every run is reproducible.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from . import kernels, verify
from .completion import stn_complete
from .generators import GenSpec, random_matrix
from .linalg import Matrix, Tolerance, tn_order, tp_order
from .transforms import apply, classify, spec_from_json, transform_from_json

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_matrix(path: str) -> Matrix:
    text = _read_text(path)
    try:
        if path.endswith(".csv"):
            return Matrix.from_csv(text)
        return Matrix.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot parse matrix from {path}: {exc}") from exc


def _emit(obj, out_path=None):
    text = json.dumps(obj, indent=2)
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_points(text: str):
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        from fractions import Fraction

        vals.append(Fraction(tok) if ("/" in tok or "." not in tok) else float(tok))
    return tuple(vals)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = random.SystemRandom().getrandbits(32)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _workers() -> int:
    cap = os.environ.get("TOTPOS_THREADS")
    if cap is None:
        return 1
    try:
        return max(1, int(cap))
    except ValueError:
        raise CliError(f"TOTPOS_THREADS={cap!r} is not an integer")


def _cmd_check(args) -> int:
    m = _load_matrix(args.matrix)
    if args.exact and not m.exact:
        raise CliError("--exact requires a matrix with exact rational entries")
    if not args.exact and m.exact and args.tol is not None:
        m = m.to_float()
    tol = Tolerance(zero_eps=args.tol) if args.tol is not None else Tolerance()
    k_max = math.inf if args.kmax is None else args.kmax
    fn = tn_order if args.mode == "tn" else tp_order
    report = fn(m, k_max=k_max, tol=tol)
    _emit(report.to_json(), args.out)
    return EXIT_OK


def _cmd_sample(args) -> int:
    spec = kernels.kernel_from_json(json.loads(_read_text(args.kernel)))
    xs = _parse_points(args.x)
    ys = _parse_points(args.y) if args.y else xs
    m = kernels.sample_kernel(spec, xs, ys)
    _emit(m.to_json(), args.out)
    return EXIT_OK


def _cmd_apply(args) -> int:
    transform = transform_from_json(json.loads(_read_text(args.transform)))
    mats = [_load_matrix(p) for p in args.inputs]
    out = apply(transform, mats)
    _emit(out.to_json(), args.out)
    return EXIT_OK


def _cmd_classify(args) -> int:
    transform = transform_from_json(json.loads(_read_text(args.transform)))
    spec = spec_from_json(json.loads(_read_text(args.spec)))
    verdict = classify(transform, spec, args.mode)
    _emit(
        {"admissible": verdict.admissible, "rule": verdict.rule, "reason": verdict.reason},
        args.out,
    )
    return EXIT_OK


def _cmd_complete(args) -> int:
    m = _load_matrix(args.matrix)
    try:
        result = stn_complete(m)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_json(), args.out)
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    spec = GenSpec(n=args.n, kind=args.kind, seed=seed)
    m = random_matrix(spec)
    obj = m.to_json()
    obj["seed"] = seed
    obj["class"] = args.kind
    _emit(obj, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    ids = None if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    try:
        report = verify.run_catalog(ids)
    except KeyError as exc:
        raise CliError(str(exc)) from exc
    print(report.table(), file=sys.stderr)
    _emit(report.to_json(), args.out)
    return EXIT_VIOLATION if report.has_violation else EXIT_OK


def _cmd_search(args) -> int:
    seed = _resolve_seed(args)
    params = json.loads(args.params) if args.params else {}
    params["family"] = args.family
    try:
        family = verify.family_from_json(params)
    except (TypeError, ValueError) as exc:
        raise CliError(f"bad family parameters: {exc}") from exc
    budget = verify.SearchBudget(seed=seed, max_trials=args.budget)
    try:
        result = verify.search_counterexample(family, budget, workers=_workers())
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_json(), args.out)
    return EXIT_OK if result.status == "witness" else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totpos",
        description="Total positivity toolkit: orders, transforms, completion, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="compute the TN or TP order of a matrix")
    p.add_argument("matrix", help="matrix file (JSON, or CSV for floats); - for stdin")
    p.add_argument("--mode", choices=("tn", "tp"), default="tn")
    p.add_argument("--kmax", type=int, default=None, help="largest minor size to test")
    p.add_argument("--exact", action="store_true", help="require the exact rational path")
    p.add_argument("--tol", type=float, default=None, help="zero threshold for float signs")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("sample", help="sample a kernel spec on grids")
    p.add_argument("--kernel", required=True, help="kernel spec JSON file; - for stdin")
    p.add_argument("--x", required=True, help="comma-separated row points")
    p.add_argument("--y", default=None, help="comma-separated column points (default: same as --x)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("apply", help="apply an entrywise transform to matrices")
    p.add_argument("--transform", required=True, help="transform JSON file")
    p.add_argument("inputs", nargs="+", help="matrix files, one per coordinate")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("classify", help="decide admissibility of a transform for given orders")
    p.add_argument("--transform", required=True)
    p.add_argument("--spec", required=True, help="order spec JSON file")
    p.add_argument("--mode", choices=("tn", "tp", "stn", "stp"), required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("complete", help="embed a TN 2x2 matrix into a symmetric TN 3x3")
    p.add_argument("matrix")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("gen", help="generate a random TN/TP/STN/STP matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="kind", choices=("tn", "tp", "stn", "stp"), required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run the determinant-identity catalog")
    p.add_argument("--suite", default="all", help="'all' or comma-separated entry ids")
    p.add_argument("--seed", type=int, default=0, help="accepted for interface stability")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="randomized counterexample search")
    p.add_argument("--family", required=True, choices=sorted(verify._FAMILIES))
    p.add_argument("--params", default=None, help="family parameters as inline JSON")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, TypeError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
