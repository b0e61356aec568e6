"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (a zero component, ``c = 0`` or a vanishing denominator).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import d6, verify
from .exact_arith import DomainError, format_rational, parse_rational

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

SEED_ENV = "GEOMCRYSTAL_SEED"
# not flags: the flag set is fixed, these only tune the verify run
TIMING_ENV = "GEOMCRYSTAL_TIMING"
JOBS_ENV = "GEOMCRYSTAL_JOBS"

_VARIETIES = {
    "v1": (d6.PointV1, d6.V1_NODES, d6.build_V1, d6.act_e_v1, d6.gamma_v1, d6.epsilon_v1),
    "v2": (d6.PointV2, d6.V2_NODES, d6.build_V2, d6.act_e_v2, d6.gamma_v2, d6.epsilon_v2),
}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _read_point(path: str, cls):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read point file: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in point file: {exc}") from None
    try:
        return cls.from_json(obj)
    except DomainError:
        raise
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad point: {exc}") from None


def _variety(name: str):
    return _VARIETIES[name]


def _node(k: int, variety: str) -> int:
    nodes = _VARIETIES[variety][1]
    if k not in nodes:
        raise UsageError(f"node {k} is not valid for {variety}; expected one of {list(nodes)}")
    return k


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except DomainError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_expand(args) -> int:
    cls, _, build, *_ = _variety(args.variety)
    vec = build(_read_point(args.point, cls))
    coeffs = vec.full_json()
    if args.json:
        print(_dump({"variety": args.variety, "coefficients": coeffs}))
    else:
        for s, r in coeffs.items():
            print(f"{s} {r}")
    return EXIT_OK


def cmd_act(args) -> int:
    cls, _, _, act, *_ = _variety(args.variety)
    k = _node(args.k, args.variety)
    c = _rational_arg(args.c)
    p = _read_point(args.point, cls)
    print(_dump(act(k, c, p).to_json()))
    return EXIT_OK


def cmd_eval(args) -> int:
    cls, _, _, _, gamma, epsilon = _variety(args.variety)
    k = _node(args.k, args.variety)
    fn = gamma if args.fn == "gamma" else epsilon
    value = format_rational(fn(k, _read_point(args.point, cls)))
    if args.json:
        print(_dump({"fn": args.fn, "variety": args.variety, "k": k, "value": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_sigma_bar(args) -> int:
    q, a = d6.sigma_bar(_read_point(args.point, d6.PointV1))
    out = q.to_json()
    out["a"] = format_rational(a)
    print(_dump(out))
    return EXIT_OK


def cmd_sigma_bar_inv(args) -> int:
    print(_dump(d6.sigma_bar_inv(_read_point(args.point, d6.PointV2)).to_json()))
    return EXIT_OK


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _env_int(SEED_ENV, verify.DEFAULT_SEED)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    jobs = max(1, _env_int(JOBS_ENV, 1))
    timing = os.environ.get(TIMING_ENV, "") not in ("", "0")
    try:
        verify.resolve_suite(args.suite, args.include_exploratory)
    except verify.UnknownCheck as exc:
        raise UsageError(f"unknown check in --suite: {exc.args[0]!r}; known: {', '.join(verify.CATALOG)}") from None
    report = verify.run_suite(
        args.suite,
        trials=args.trials,
        seed=seed,
        bound=args.bound,
        include_exploratory=args.include_exploratory,
        timing=timing,
        jobs=jobs,
    )
    print(_dump(report))
    return EXIT_OK if report["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomcrystal",
        description="Exact evaluation and verification of the D_6^(1) spin-node geometric crystal.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def point_arg(p):
        p.add_argument("--point", required=True, metavar="FILE", help='point JSON file, or "-" for stdin')

    def variety_arg(p):
        p.add_argument("--variety", required=True, choices=sorted(_VARIETIES))

    p = sub.add_parser("expand", parents=[common], help="print the 32 coefficients of V1(x) or V2(y)")
    variety_arg(p)
    point_arg(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("act", parents=[common], help="apply e_k^c to a point")
    variety_arg(p)
    p.add_argument("--k", required=True, type=int, metavar="NODE")
    p.add_argument("--c", required=True, metavar="RATIONAL")
    point_arg(p)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("eval", parents=[common], help="evaluate gamma_k or epsilon_k")
    p.add_argument("--fn", required=True, choices=("gamma", "epsilon"))
    variety_arg(p)
    p.add_argument("--k", required=True, type=int, metavar="NODE")
    point_arg(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sigma-bar", parents=[common], help="map a V1 point to V2, with the scalar a")
    point_arg(p)
    p.set_defaults(func=cmd_sigma_bar)

    p = sub.add_parser("sigma-bar-inv", parents=[common], help="map a V2 point back to V1")
    point_arg(p)
    p.set_defaults(func=cmd_sigma_bar_inv)

    p = sub.add_parser("verify", parents=[common], help="run the randomized identity checks")
    p.add_argument("--suite", default="all", help='"all" or a comma separated list of check names')
    p.add_argument("--trials", type=int, default=verify.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or {verify.DEFAULT_SEED}")
    p.add_argument("--bound", type=int, default=verify.DEFAULT_BOUND)
    p.add_argument("--include-exploratory", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"geomcrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ZeroDivisionError) as exc:
        print(f"geomcrystal: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
