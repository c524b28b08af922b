"""Command-line surface.

Exit codes: 0 when the requested check or suite passes, 1 when a checked
property fails (including a conjecture counterexample, which is a result,
not a crash), 2 for usage, parse, or bounds errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .betti import graded_betti, has_linear_resolution
from .core import all_variable_orders
from .corpus import CorpusSpec
from .errors import PolymatError
from .ioformats import (
    format_ideal,
    ideal_to_json_dict,
    load_ideal_text,
    parse_monomial,
    parse_variable_order,
)
from .lexsegment import arnehe_criterion, is_completely_lexsegment, lexsegment, shadow
from .polymatroid import exchange_failure
from .quotients import (
    has_quotients_with_linear_resolution,
    linear_quotients_failure,
    lq_all_orders_failure,
    sort_generators,
)
from .suites import (
    SCHEMA_VERSION,
    reproduce_remark,
    run_conjecture_search,
    run_localization_probe,
    run_theorem_suite,
)
from .version import __version__


def _add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("ideal", nargs="?", help="inline ideal, e.g. 'x1^2 + x1*x2'")
    p.add_argument("--file", help="read the ideal from a text or JSON file")
    p.add_argument("--n", type=int, help="ambient variable count (default: largest index used)")
    p.add_argument("--json", dest="json_path", help="also write a JSON result to this path")


def _load_ideal(args):
    if args.file and args.ideal:
        raise PolymatError("give the ideal inline or via --file, not both")
    if args.file:
        text = Path(args.file).read_text()
    elif args.ideal:
        text = args.ideal
    else:
        raise PolymatError("no ideal given")
    return load_ideal_text(text, getattr(args, "n", None))


def _emit_json(args, payload: dict) -> None:
    if getattr(args, "json_path", None):
        payload = {"schema": SCHEMA_VERSION, "tool": "polymat", "version": __version__, **payload}
        Path(args.json_path).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _cmd_check_poly(args) -> int:
    I = _load_ideal(args)
    witness = exchange_failure(I)
    if witness is None:
        print(f"polymatroidal: {format_ideal(I)}")
    else:
        print(f"NOT polymatroidal: {format_ideal(I)}")
        print(f"  exchange fails for u={witness.u}, v={witness.v}, variable x{witness.variable}")
    _emit_json(
        args,
        {
            "command": "check poly",
            "ideal": ideal_to_json_dict(I),
            "polymatroidal": witness is None,
            "witness": None
            if witness is None
            else {
                "u": list(witness.u.exponents),
                "v": list(witness.v.exponents),
                "variable": witness.variable,
            },
        },
    )
    return 0 if witness is None else 1


def _cmd_check_lq(args) -> int:
    I = _load_ideal(args)
    if args.all_orders:
        witness = lq_all_orders_failure(I, args.kind)
        if witness is None:
            print(f"linear quotients ({args.kind}) hold for all {I.n}! variable orders")
            ok = True
            payload = {"all_orders": True, "holds": True}
        else:
            order, failure = witness
            print(f"linear quotients ({args.kind}) FAIL for order {order}")
            print(f"  at position {failure.position}, blocker {failure.blocker}")
            ok = False
            payload = {
                "all_orders": True,
                "holds": False,
                "order": list(order.perm),
                "position": failure.position,
                "blocker": list(failure.blocker.exponents),
            }
    else:
        order = parse_variable_order(args.order)
        failure = linear_quotients_failure(sort_generators(I, args.kind, order))
        ok = failure is None
        if ok:
            print(f"linear quotients ({args.kind}, order {order}) hold")
            payload = {"order": list(order.perm), "holds": True}
        else:
            print(f"linear quotients ({args.kind}, order {order}) FAIL")
            print(f"  at position {failure.position}, blocker {failure.blocker}")
            payload = {
                "order": list(order.perm),
                "holds": False,
                "position": failure.position,
                "blocker": list(failure.blocker.exponents),
            }
    _emit_json(
        args,
        {"command": "check lq", "kind": args.kind, "ideal": ideal_to_json_dict(I), **payload},
    )
    return 0 if ok else 1


def _cmd_check_qwlr(args) -> int:
    I = _load_ideal(args)
    if args.all_orders:
        orders = list(all_variable_orders(I.n))
    else:
        orders = [parse_variable_order(args.order)]
    results = {}
    for order in orders:
        seq = sort_generators(I, args.kind, order)
        results[str(order)] = has_quotients_with_linear_resolution(seq)
    ok = all(results.values())
    for name, holds in results.items():
        print(f"quotients with linear resolution ({args.kind}, order {name}): "
              f"{'yes' if holds else 'NO'}")
    _emit_json(
        args,
        {
            "command": "check qwlr",
            "kind": args.kind,
            "ideal": ideal_to_json_dict(I),
            "results": results,
            "holds": ok,
        },
    )
    return 0 if ok else 1


def _cmd_betti(args) -> int:
    I = _load_ideal(args)
    table = graded_betti(I)
    print(table.triangle())
    d = I.is_equigenerated()
    if d is not None:
        linear = "yes" if has_linear_resolution(I) else "no"
        print(f"equigenerated in degree {d}; linear resolution: {linear}")
    else:
        print("not equigenerated; no linear resolution")
    _emit_json(
        args,
        {"command": "betti", "ideal": ideal_to_json_dict(I), **table.to_json_dict()},
    )
    return 0


def _cmd_lexsegment(args) -> int:
    if args.n is not None:
        n = args.n
    else:
        n = max(parse_monomial(args.u).n, parse_monomial(args.v).n)
    u = parse_monomial(args.u, n)
    v = parse_monomial(args.v, n)
    segment = lexsegment(u, v)
    depth = args.shadow_depth if args.shadow_depth is not None else max(1, n * u.degree)
    complete = is_completely_lexsegment(u, v, depth)
    criterion = arnehe_criterion(u, v)
    print(f"L({u}, {v}) has {len(segment)} monomials:")
    print("  " + " + ".join(str(m) for m in segment))
    print(f"shadow size: {len(shadow(segment))}")
    print(f"completely lexsegment (shadow depth {depth}): {'yes' if complete else 'no'}")
    print(f"linear-resolution criterion for the segment endpoints: "
          f"{'satisfied' if criterion else 'not satisfied'}")
    _emit_json(
        args,
        {
            "command": "lexsegment",
            "n": n,
            "u": list(u.exponents),
            "v": list(v.exponents),
            "segment": [list(m.exponents) for m in segment],
            "shadow_depth": depth,
            "completely_lexsegment": complete,
            "criterion": criterion,
        },
    )
    return 0


def _cmd_localize(args) -> int:
    I = _load_ideal(args)
    off = [int(t) for t in args.at.split(",")]
    J = I.localize(off)
    print(format_ideal(J))
    if J.is_unit:
        print("(unit ideal)")
    _emit_json(
        args,
        {
            "command": "localize",
            "ideal": ideal_to_json_dict(I),
            "at": off,
            "result": ideal_to_json_dict(J),
            "unit": J.is_unit,
        },
    )
    return 0


def _cmd_suite(args) -> int:
    if args.name == "remark":
        report = reproduce_remark()
    else:
        spec = CorpusSpec(
            n=args.n,
            d=args.d,
            mode=args.mode,
            m=args.m,
            count=args.count,
            seed=args.seed,
            start_mask=args.start_mask,
            dedupe_isomorphic=args.dedupe_isomorphic,
        )
        runner = {
            "theorem": run_theorem_suite,
            "conjecture": run_conjecture_search,
            "localization": run_localization_probe,
        }[args.name]
        report = runner(spec, jobs=args.jobs)
    print(report.summary())
    for verdict in report.verdicts:
        if verdict["verdict"] in ("MISMATCH", "COUNTEREXAMPLE", "VIOLATION", "fail"):
            print(f"  {json.dumps(verdict, sort_keys=True)}")
    if args.json_path:
        Path(args.json_path).write_text(report.to_json())
        print(f"report written to {args.json_path}")
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymat",
        description="Exact checks for equigenerated monomial ideals: the exchange "
        "property, linear quotients under variable-induced orderings, graded Betti "
        "numbers, lexsegments, and search suites.",
    )
    parser.add_argument("--version", action="version", version=f"polymat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="single-ideal property checks")
    check_sub = check.add_subparsers(dest="check_command", required=True)

    poly = check_sub.add_parser("poly", help="exchange property (polymatroidal)")
    _add_ideal_args(poly)
    poly.set_defaults(func=_cmd_check_poly)

    lq = check_sub.add_parser("lq", help="linear quotients for one or all variable orders")
    _add_ideal_args(lq)
    lq.add_argument("--kind", choices=("lex", "revlex"), required=True)
    group = lq.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", help="variable permutation, e.g. 3,2,1")
    group.add_argument("--all-orders", action="store_true")
    lq.set_defaults(func=_cmd_check_lq)

    qwlr = check_sub.add_parser("qwlr", help="quotients with linear resolution")
    _add_ideal_args(qwlr)
    qwlr.add_argument("--kind", choices=("lex", "revlex"), required=True)
    group = qwlr.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", help="variable permutation, e.g. 3,2,1")
    group.add_argument("--all-orders", action="store_true")
    qwlr.set_defaults(func=_cmd_check_qwlr)

    betti = sub.add_parser("betti", help="graded Betti numbers (Macaulay-style triangle)")
    _add_ideal_args(betti)
    betti.set_defaults(func=_cmd_betti)

    lexseg = sub.add_parser("lexsegment", help="lexsegment between two monomials")
    lexseg.add_argument("--u", required=True, help="lex-greater endpoint, e.g. x1^2")
    lexseg.add_argument("--v", required=True, help="lex-smaller endpoint, e.g. x1*x3")
    lexseg.add_argument("--n", type=int, help="ambient variable count")
    lexseg.add_argument("--shadow-depth", type=int, help="iterated-shadow depth to verify")
    lexseg.add_argument("--json", dest="json_path")
    lexseg.set_defaults(func=_cmd_lexsegment)

    localize = sub.add_parser("localize", help="substitute x_i -> 1 for given indices")
    _add_ideal_args(localize)
    localize.add_argument("--at", required=True, help="comma-separated 1-based indices")
    localize.set_defaults(func=_cmd_localize)

    suite = sub.add_parser("suite", help="corpus suites and the fixed example reproduction")
    suite.add_argument("name", choices=("theorem", "conjecture", "remark", "localization"))
    suite.add_argument("--n", type=int, default=3)
    suite.add_argument("--d", type=int, default=2)
    suite.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    suite.add_argument("--m", type=int, help="generator count (random mode)")
    suite.add_argument("--count", type=int, help="sample size (random mode)")
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    suite.add_argument("--start-mask", type=int, default=1, help="resume an exhaustive sweep")
    suite.add_argument(
        "--dedupe-isomorphic",
        action="store_true",
        help="keep one representative per variable-permutation orbit",
    )
    suite.add_argument("--json", dest="json_path", help="write the JSON report here")
    suite.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolymatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
