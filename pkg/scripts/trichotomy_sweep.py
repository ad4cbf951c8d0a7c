"""Sweep all star pairs, check the trichotomy, show sample cross matrices.

Usage: python3 scripts/trichotomy_sweep.py [--samples N]
"""

import argparse
import time
from itertools import combinations

from dpone.curves import curve_table
from dpone.stars import (
    OverlappingStars,
    PairType,
    classify_pair,
    star_table,
    trichotomy_census,
)


def cross_matrix(a, b):
    p = curve_table().pairing
    return [[p[x][y] for y in b.curve_ids] for x in a.curve_ids]


def show(a, b, note):
    print(f"{note}: {a.text()}  x  {b.text()}")
    for row in cross_matrix(a, b):
        print("   " + " ".join(str(v) for v in row))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--samples", type=int, default=1, help="example pairs per type to print"
    )
    args = parser.parse_args()

    t0 = time.monotonic()
    census = trichotomy_census()
    dt = time.monotonic() - t0
    n = census.total_pairs
    print(f"{n} unordered pairs of distinct stars swept in {dt:.2f}s")
    print(f"  asynchronized {census.asynchronized}")
    print(f"  synchronized  {census.synchronized}")
    print(f"  abnormal      {census.abnormal}")
    print(f"  overlapping   {census.overlapping}")
    # every overlapping pair lies in the pencil of 28 stars through one
    # of the 120 Bertini pairs {X, bX}
    assert census.overlapping == 120 * 28 * 27 // 2

    stars = star_table().stars
    wanted = {p: args.samples for p in PairType}
    overlaps = args.samples
    for i, j in combinations(range(len(stars)), 2):
        if not any(wanted.values()) and overlaps == 0:
            break
        a, b = stars[i], stars[j]
        try:
            res = classify_pair(a, b)
        except OverlappingStars as exc:
            if overlaps > 0:
                overlaps -= 1
                names = sorted(curve_table().curve(c).name for c in exc.shared)
                show(a, b, f"overlapping (share {{{', '.join(names)}}})")
            continue
        if wanted[res.pair_type] > 0:
            wanted[res.pair_type] -= 1
            show(a, b, res.pair_type.value)


if __name__ == "__main__":
    main()
