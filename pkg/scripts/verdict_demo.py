"""Run the decision rules on the canned order-3 setups and one search.

Usage: python3 scripts/verdict_demo.py [--json]
"""

import argparse
import json

from dpone.cli import verdict_to_dict
from dpone.criteria import (
    ActionSetup,
    gamma_report,
    rationality_report,
    search_commuting_order3,
)
from dpone.lattice import GroupSpec, TRIVIAL_GROUP, fixed_rank
from dpone.stars import ActionKind, invariant_stars
from dpone.weyl import CarterType3, representative_order3


def canned_setups():
    yield "trivial", TRIVIAL_GROUP
    for ctype in CarterType3:
        yield ctype.display, GroupSpec((representative_order3(ctype),), "Gamma")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="dump full verdicts")
    args = parser.parse_args()

    print("Galois image acting alone")
    for name, gamma in canned_setups():
        report = gamma_report(gamma)
        rule = report.rule or "-"
        print(
            f"  {name:<7} rank {report.ranks['Gamma']}  "
            f"{report.verdict.value:<12} via {rule}"
        )
        if args.json:
            print(json.dumps(verdict_to_dict(report), indent=2))

    # geometric minimality: A2^3 plus a commuting rotation of its
    # pointwise-fixed star cuts the invariant rank to 1
    g = representative_order3(CarterType3.A2x3)
    pointwise = [
        a.star for a in invariant_stars(g) if a.kind is ActionKind.TRIVIAL
    ]
    h = search_commuting_order3(g, pointwise)
    setup = ActionSetup(GroupSpec((g, h), "G"), TRIVIAL_GROUP)
    report = rationality_report(setup)
    print("minimal G-surface demo (G of order 9, Gamma trivial)")
    print(f"  combined fixed rank {fixed_rank(setup.combined)}")
    cert = report.minimality
    print(f"  four-star certificate: rank {cert.combined_rank}")
    for s in cert.stars:
        print(f"    {s.text()}")


if __name__ == "__main__":
    main()
