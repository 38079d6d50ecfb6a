"""Command-line surface over the warp, braid, catalog, and search modules.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
parse errors.  Every subcommand has a JSON mode with a stable schema.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import braid as braid_mod
from .catalog import CatalogError, load_catalog, main_rows, summarize, verify_catalog
from .codes import dt_to_gauss, format_dt, mirror, parse_dt, parse_gauss
from .invariants import load_jones_refs
from .search import conjecture_report, enumerate_alternating
from .warp import min_warp, warp_profile


class CliError(Exception):
    """Usage or parse failure; maps to exit code 2."""


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    try:
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from exc


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def cmd_warp(args) -> int:
    try:
        if args.dt is not None:
            source = _read_source(args.dt) if args.dt == "-" else args.dt
            gauss = dt_to_gauss(parse_dt(source))
        else:
            gauss = parse_gauss(_strip_comments(_read_source(args.gauss)))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.mirror:
        gauss = mirror(gauss)
    result = min_warp(gauss)
    payload = {
        "min_warp": result.degree,
        "basepoint": {"edge": result.base.edge, "forward": result.base.forward},
    }
    if args.all_basepoints:
        payload["profile_forward"] = warp_profile(gauss, forward=True)
        payload["profile_backward"] = warp_profile(gauss, forward=False)
    if args.json:
        print(json.dumps(payload))
        return 0
    print(f"min_warp: {result.degree}")
    print(f"basepoint: {result.base}")
    if args.all_basepoints:
        print(f"profile forward: {payload['profile_forward']}")
        print(f"profile backward: {payload['profile_backward']}")
    return 0


def _require_positive(word, op: str):
    if not word.is_positive():
        raise CliError(f"{op} requires a positive braid word")


def _require_knot(word):
    components = braid_mod.closure_components(word)
    if components != 1:
        raise CliError(f"closure has {components} components")


def cmd_braid(args) -> int:
    try:
        word = braid_mod.parse_braid(args.word, strands=args.strands)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    op = args.operation
    _require_knot(word)
    if op == "counts":
        a, b = braid_mod.ab_counts(word)
        print(json.dumps({"a": a, "b": b}) if args.json else f"({a}, {b})")
        return 0
    if op == "unknotting":
        _require_positive(word, "unknotting")
        value = braid_mod.positive_unknotting(word)
        print(json.dumps({"positive_unknotting": value}) if args.json else str(value))
        return 0
    if op == "closure-dt":
        from .codes import gauss_to_dt

        gauss, _ = braid_mod.closure_gauss(word)
        code = gauss_to_dt(gauss)
        print(json.dumps({"dt": list(code.entries)}) if args.json else format_dt(code))
        return 0
    _require_positive(word, "reduce")
    base, steps = braid_mod.reduce_to_base(word)
    if args.json:
        out = []
        for step in steps:
            out.append(
                {
                    "action": step.action,
                    "detail": str(step.detail),
                    "counts_before": list(step.counts_before),
                    "counts_after": list(step.counts_after),
                    "word": str(step.word),
                }
            )
        final = braid_mod.ab_counts(base)
        print(json.dumps({"steps": out, "final": {"a": final[0], "b": final[1]}}))
        return 0
    for step in steps:
        print(f"{step.action} {step.detail}: counts {step.counts_before} -> {step.counts_after}")
    a, b = braid_mod.ab_counts(base)
    print(f"base case: counts ({a}, {b}) on {base.strands} strands")
    return 0


def cmd_verify_catalog(args) -> int:
    try:
        entries = load_catalog(args.catalog)
    except CatalogError as exc:
        print(f"catalog verification failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        raise CliError(str(exc)) from exc
    try:
        refs = load_jones_refs(args.refs)
    except OSError as exc:
        raise CliError(f"refs not found: {exc}") from exc
    reports = verify_catalog(entries, refs=refs)
    failures = [r for r in reports if not r.passed]
    counts = summarize(main_rows(entries))
    if args.json:
        payload = {
            "rows": [json.loads(r.to_json()) for r in reports],
            "counts": {
                "src": counts.src,
                "rc": counts.rc,
                "neither": counts.neither,
                "unknown": counts.unknown,
            },
            "pass": not failures,
        }
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
    for report in failures:
        print(f"FAIL {report.to_json()}")
    print(f"verified {len(reports)} rows, {len(failures)} failures")
    print(f"SRC={counts.src} RC={counts.rc} Neither={counts.neither} Unknown={counts.unknown}")
    return 1 if failures else 0


def cmd_conjecture(args) -> int:
    rows = conjecture_report(args.max, cap=args.cap)
    if args.json:
        print(
            json.dumps(
                {
                    "rows": [
                        {
                            "crossings": r.crossings,
                            "computed": r.computed,
                            "predicted": r.predicted,
                            "match": r.matches,
                            "witness": list(r.witness.entries),
                        }
                        for r in rows
                    ]
                }
            )
        )
    else:
        for r in rows:
            status = "match" if r.matches else "MISMATCH"
            print(
                f"c={r.crossings} computed={r.computed} predicted={r.predicted} "
                f"{status} witness={format_dt(r.witness)}"
            )
    return 0 if all(r.matches for r in rows) else 1


def cmd_enumerate(args) -> int:
    codes = list(enumerate_alternating(args.crossings, cap=args.cap))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["crossings", "dt"])
            for code in codes:
                writer.writerow([args.crossings, format_dt(code)])
    if args.json:
        print(json.dumps({"crossings": args.crossings, "codes": [list(c.entries) for c in codes]}))
    else:
        for code in codes:
            print(format_dt(code))
        print(f"{len(codes)} diagrams at c={args.crossings}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rollercoaster")
    sub = parser.add_subparsers(dest="command", required=True)

    p_warp = sub.add_parser("warp", help="minimum warping degree of a diagram")
    group = p_warp.add_mutually_exclusive_group(required=True)
    group.add_argument("--dt", help="bracketed DT code, or - for stdin")
    group.add_argument("--gauss", help="file of signed crossing ids (positive = over), or -")
    p_warp.add_argument("--all-basepoints", action="store_true")
    p_warp.add_argument("--mirror", action="store_true")
    p_warp.add_argument("--json", action="store_true")
    p_warp.set_defaults(func=cmd_warp)

    p_braid = sub.add_parser("braid", help="positive braid closures and reductions")
    p_braid.add_argument("--word", required=True, help='letters like "1 2 -1" or "s1 s2^3"')
    p_braid.add_argument("--strands", type=int)
    p_braid.add_argument("--json", action="store_true")
    p_braid.add_argument(
        "operation", choices=["counts", "unknotting", "closure-dt", "reduce"]
    )
    p_braid.set_defaults(func=cmd_braid)

    p_verify = sub.add_parser("verify-catalog", help="recheck every table row")
    p_verify.add_argument("--catalog", help="CSV path; defaults to the packaged table")
    p_verify.add_argument("--refs", help="reference polynomial path; defaults to packaged")
    p_verify.add_argument("--json", metavar="OUT", help="write the full report as JSON")
    p_verify.set_defaults(func=cmd_verify_catalog)

    p_conj = sub.add_parser("conjecture", help="diagram-level minimum warping vs ceil(c/4)")
    p_conj.add_argument("--max", type=int, required=True)
    p_conj.add_argument("--cap", type=int, default=10)
    p_conj.add_argument("--json", action="store_true")
    p_conj.set_defaults(func=cmd_conjecture)

    p_enum = sub.add_parser("enumerate", help="reduced alternating diagrams at fixed size")
    p_enum.add_argument("--crossings", type=int, required=True)
    p_enum.add_argument("--cap", type=int, default=10)
    p_enum.add_argument("--csv", metavar="OUT")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
