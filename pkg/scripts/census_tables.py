"""Print the standing censuses: curves, stars, profiles, invariants.

Usage: python3 scripts/census_tables.py [--skip-pairs]
"""

import argparse
import time
from collections import Counter

from dpone.curves import enumerate_curves
from dpone.stars import (
    ActionKind,
    intersection_profile_census,
    invariant_curves,
    invariant_stars,
    star_table,
    trichotomy_census,
)
from dpone.weyl import CarterType3, representative_order3


def timed(label, fn):
    t0 = time.monotonic()
    out = fn()
    print(f"  [{time.monotonic() - t0:.2f}s] {label}")
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--skip-pairs", action="store_true", help="skip the 627k-pair sweep"
    )
    args = parser.parse_args()

    print("exceptional classes")
    curves = timed("enumerate", enumerate_curves)
    fams = Counter(c.family for c in curves)
    for fam in ("E", "L2", "Q", "C", "BQ", "BL", "BE"):
        print(f"  {fam:<3} {fams[fam]}")
    print(f"  total {len(curves)}")

    print("stars")
    table = timed("build", star_table)
    per_curve = Counter()
    for s in table.stars:
        per_curve.update(s.curve_ids)
    print(f"  total {len(table.stars)}; per curve {set(per_curve.values())}")

    print("outside-curve profiles")
    prof = timed("census", intersection_profile_census)
    print(
        f"  {prof.pairs_checked} incidences: {prof.all_ones} all-ones, "
        f"{prof.touching} touching"
    )

    if not args.skip_pairs:
        print("star-pair trichotomy")
        tri = timed("census", trichotomy_census)
        print(
            f"  {tri.total_pairs} pairs: {tri.asynchronized} async, "
            f"{tri.synchronized} sync, {tri.abnormal} abnormal, "
            f"{tri.overlapping} overlapping"
        )

    print("order-3 invariants")
    for ctype in CarterType3:
        m = representative_order3(ctype)
        inv = invariant_curves(m)
        acts = invariant_stars(m)
        triv = sum(1 for a in acts if a.kind is ActionKind.TRIVIAL)
        faith = sum(1 for a in acts if a.kind is ActionKind.FAITHFUL)
        print(
            f"  {ctype.display:<5} curves {len(inv):>2}  "
            f"pointwise stars {triv:>3}  faithful stars {faith:>2}"
        )


if __name__ == "__main__":
    main()
