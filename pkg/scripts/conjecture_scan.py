"""Scan alternating diagrams for the minimal-warp growth pattern.

For each crossing number c this enumerates every reduced alternating knot
diagram (one representative per rotation/reflection class, mirrors merged),
takes the minimum warping degree over the whole class, and compares it with
the conjectured value ceil(c / 4).  Prints one line per crossing number
with the witness code and the class count.

The enumeration cost grows roughly by 10x per crossing, so the default
stops at c = 8 (about a second); c = 10 is minutes.

Run from the repository root:  python3 scripts/conjecture_scan.py --max 8
"""

import argparse
import math
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from rollercoaster.search import a_min_warp, enumerate_alternating


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=8, help="largest crossing number to scan")
    parser.add_argument("--counts", action="store_true", help="also print class counts per c")
    args = parser.parse_args()
    if args.max < 3:
        parser.error("--max must be at least 3")

    all_match = True
    for c in range(3, args.max + 1):
        start = time.perf_counter()
        computed, witness = a_min_warp(c, cap=args.max)
        extra = ""
        if args.counts:
            classes = sum(1 for _ in enumerate_alternating(c, cap=args.max))
            extra = f" classes={classes}"
        elapsed = time.perf_counter() - start
        predicted = math.ceil(c / 4)
        mark = "match" if computed == predicted else "MISMATCH"
        print(
            f"c={c}: computed={computed} predicted={predicted}"
            f" {mark} witness={list(witness.entries)}{extra} ({elapsed:.1f}s)"
        )
        all_match = all_match and computed == predicted
    return 0 if all_match else 1


if __name__ == "__main__":
    raise SystemExit(main())
