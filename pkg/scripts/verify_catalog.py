"""Print the catalog verification report as a human-readable table.

For every row this re-derives the minimal warping degree from the stored
DT witness, checks the witness size against the rc-crossing column, and
identifies the diagram by its Jones polynomial.  The final lines give the
property-class census over the rows with at most nine crossings.

Run from the repository root:  python3 scripts/verify_catalog.py
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from rollercoaster.catalog import load_catalog, main_rows, summarize, verify_catalog


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--catalog", help="alternate catalog CSV (default: packaged)")
    parser.add_argument("--fail-fast", action="store_true", help="stop at the first failing row")
    args = parser.parse_args()

    entries = load_catalog(args.catalog) if args.catalog else load_catalog()
    start = time.perf_counter()
    header = f"{'row':>3}  {'name':<8} {'warp':>4} {'want':>4} {'size':>4}  {'rc':<9} {'identified':<10} result"
    print(header)
    print("-" * len(header))
    failures = 0
    for report in verify_catalog(entries):
        verdict = "ok" if report.passed else "FAIL " + ",".join(
            n for n, ok in report.checks if not ok
        )
        print(
            f"{report.row:>3}  {report.name:<8} {report.computed_min_warp:>4}"
            f" {report.expected:>4} {report.witness_crossings:>4}"
            f"  {report.rc_crossing:<9} {report.identification:<10} {verdict}"
        )
        if not report.passed:
            failures += 1
            if args.fail_fast:
                return 1
    elapsed = time.perf_counter() - start

    counts = summarize(main_rows(entries))
    print("-" * len(header))
    print(f"{len(entries)} rows verified in {elapsed:.1f}s, {failures} failures")
    print(
        f"property census over {len(main_rows(entries))} rows up to nine crossings:"
        f" SRC={counts.src} RC={counts.rc} Neither={counts.neither} Unknown={counts.unknown}"
    )
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
