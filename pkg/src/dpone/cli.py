"""Command-line front end: dumps, classification, lemma checks, verdicts.

Element inputs (-e, -g, -gamma) take a file path or inline text in any of
the three formats of the weyl module: cycle notation "(1 2 3)(4 5 6)",
a reflection word "s 1 2 1", or nine rows of nine integers.  Group files
may contain several elements separated by blank lines; # starts a
comment.  Exit codes: 0 ok, 1 check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations

import jsonschema

from .criteria import (
    ActionSetup,
    CarterWitness,
    CertificateViolation,
    EvenWitness,
    MinimalityCertificate,
    RationalityVerdict,
    StarsWitness,
    TripleWitness,
    TwoStarsWitness,
    Verdict,
    check_minimal_four_stars,
    check_rational_triple,
    check_rational_two_stars,
    gamma_report,
    rationality_report,
    replay_triple,
    search_commuting_order3,
)
from .curves import curve_table, enumerate_curves, search_exceptional_classes
from .lattice import (
    GroupSpec,
    LatticeIsometry,
    TRIVIAL_GROUP,
    cycles_string,
    fixed_rank,
    isometry_to_text,
    pair,
    permutation_of_isometry,
)
from .stars import (
    ActionKind,
    OverlappingStars,
    PairType,
    classify_pair,
    enumerate_stars,
    intersection_profile_census,
    invariant_curves,
    invariant_stars,
    profile,
    star_graph_automorphisms,
    star_table,
    trichotomy_census,
)
from .weyl import (
    CarterType3,
    carter_type_order3,
    element_order,
    enumerate_roots,
    parse_element,
    representative_order3,
    search_roots,
)

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["verdict", "rule", "witness", "ranks"],
    "properties": {
        "verdict": {"enum": ["Rational", "NotRational", "Inconclusive"]},
        "rule": {
            "anyOf": [
                {
                    "enum": [
                        "rational_two_stars",
                        "rational_triple",
                        "not_rational_carter",
                        "not_rational_stars",
                        "not_rational_even",
                    ]
                },
                {"type": "null"},
            ]
        },
        "witness": {
            "anyOf": [
                {
                    "type": "object",
                    "required": ["elements", "curves", "stars"],
                    "properties": {
                        "elements": {"type": "array", "items": {"type": "string"}},
                        "curves": {"type": "array", "items": {"type": "string"}},
                        "stars": {"type": "array", "items": {"type": "string"}},
                    },
                },
                {"type": "null"},
            ]
        },
        "ranks": {
            "type": "object",
            "required": ["G", "Gamma", "combined"],
            "properties": {
                "G": {"type": "integer"},
                "Gamma": {"type": "integer"},
                "combined": {"type": "integer"},
            },
        },
        "minimality": {
            "anyOf": [
                {
                    "type": "object",
                    "required": ["stars", "elements", "combined_rank"],
                },
                {"type": "null"},
            ]
        },
        "caveat": {"anyOf": [{"type": "string"}, {"type": "null"}]},
    },
}

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["order", "fixed_rank"],
    "properties": {
        "order": {"type": "integer"},
        "fixed_rank": {"type": "integer"},
        "carter_type": {"type": "string"},
    },
}

CENSUS_SCHEMA = {
    "type": "object",
    "required": ["invariant_curves", "trivial_stars", "faithful_stars", "pairwise"],
    "properties": {
        "invariant_curves": {"type": "array", "items": {"type": "string"}},
        "trivial_stars": {"type": "array", "items": {"type": "string"}},
        "faithful_stars": {"type": "array", "items": {"type": "string"}},
        "pairwise": {"type": "object"},
    },
}

LEMMA_SCHEMA = {
    "type": "object",
    "required": ["lemma", "ok", "detail"],
    "properties": {
        "lemma": {"type": "string"},
        "ok": {"type": "boolean"},
        "detail": {"type": "array", "items": {"type": "string"}},
    },
}


class CheckFailure(Exception):
    """A lemma check found a counterexample."""


def _read_source(value: str) -> str:
    if os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read()
    return value


def _strip_comments(text: str) -> str:
    lines = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].rstrip()
        lines.append(body)
    return "\n".join(lines)


def load_element(value: str) -> LatticeIsometry:
    return parse_element(_strip_comments(_read_source(value)))


def load_group(value: str | None, label: str) -> GroupSpec:
    """Group from blocks of element text separated by blank lines."""
    if value is None:
        return TRIVIAL_GROUP
    text = _strip_comments(_read_source(value))
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        if line.strip():
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    generators = tuple(
        parse_element("\n".join(b)) for b in blocks if b
    )
    if not generators:
        return TRIVIAL_GROUP
    return GroupSpec(generators, label)


def element_text(m: LatticeIsometry) -> str:
    """Cycle notation when the element permutes the E_i, else the matrix."""
    perm = permutation_of_isometry(m)
    if perm is not None:
        return cycles_string(perm)
    return " / ".join(
        " ".join(str(x) for x in row) for row in m.matrix
    )


def witness_to_dict(w) -> dict | None:
    if w is None:
        return None
    elements: list[str] = []
    curves: list[str] = []
    stars: list[str] = []
    if isinstance(w, CarterWitness):
        elements = [element_text(w.element)]
    elif isinstance(w, StarsWitness):
        elements = [element_text(w.element)]
        stars = [s.text() for s in w.stars]
    elif isinstance(w, EvenWitness):
        elements = [element_text(w.element)]
        stars = [w.star.text()]
    elif isinstance(w, TripleWitness):
        curves = list(w.names)
    elif isinstance(w, TwoStarsWitness):
        stars = [s.text() for s in w.stars]
    else:
        raise TypeError(f"unknown witness {w!r}")
    return {"elements": elements, "curves": curves, "stars": stars}


def minimality_to_dict(cert: MinimalityCertificate | None) -> dict | None:
    if cert is None:
        return None
    return {
        "stars": [s.text() for s in cert.stars],
        "elements": [element_text(m) for m in cert.elements],
        "combined_rank": cert.combined_rank,
    }


def verdict_to_dict(report: RationalityVerdict) -> dict:
    doc = {
        "verdict": report.verdict.value,
        "rule": report.rule,
        "witness": witness_to_dict(report.witness),
        "ranks": dict(report.ranks),
        "minimality": minimality_to_dict(report.minimality),
        "caveat": report.caveat,
    }
    jsonschema.validate(doc, VERDICT_SCHEMA)
    return doc


# ---------------------------------------------------------------------------
# subcommands

def cmd_list_curves(args) -> int:
    curves = enumerate_curves()
    if args.json:
        doc = [
            {"id": c.id, "name": c.name, "family": c.family,
             "coeffs": list(c.divisor.coeffs)}
            for c in curves
        ]
        print(json.dumps(doc, indent=2))
        return 0
    for c in curves:
        print(f"{c.name:<6} {c.family:<3} {c.divisor}")
    return 0


def cmd_list_roots(args) -> int:
    roots = enumerate_roots()
    if args.json:
        print(json.dumps([list(r.coeffs) for r in roots], indent=2))
        return 0
    for r in roots:
        print(r)
    return 0


def cmd_list_stars(args) -> int:
    stars = enumerate_stars()
    if args.json:
        print(json.dumps([s.text() for s in stars], indent=2))
        return 0
    print(f"{len(stars)} stars")
    for s in stars:
        print(s.text())
    return 0


def cmd_classify_element(args) -> int:
    m = load_element(args.element)
    order = element_order(m)
    rank = fixed_rank(m)
    doc = {"order": order, "fixed_rank": rank}
    line = f"order {order}, rank {rank}"
    if order == 3:
        ctype = carter_type_order3(m)
        doc["carter_type"] = ctype.display
        line += f", type {ctype.display}"
    if args.json:
        jsonschema.validate(doc, CLASSIFY_SCHEMA)
        print(json.dumps(doc, indent=2))
    else:
        print(line)
    return 0


def cmd_census(args) -> int:
    m = load_element(args.element)
    t = curve_table()
    inv = invariant_curves(m)
    actions = invariant_stars(m)
    trivial = [a.star for a in actions if a.kind is ActionKind.TRIVIAL]
    faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
    pairwise = {p.value: 0 for p in PairType}
    pairwise["overlapping"] = 0
    for a, b in combinations([a.star for a in actions], 2):
        try:
            pairwise[classify_pair(a, b).pair_type.value] += 1
        except OverlappingStars:
            pairwise["overlapping"] += 1
    if args.json:
        doc = {
            "invariant_curves": [t.curve(i).name for i in inv],
            "trivial_stars": [s.text() for s in trivial],
            "faithful_stars": [s.text() for s in faithful],
            "pairwise": pairwise,
        }
        jsonschema.validate(doc, CENSUS_SCHEMA)
        print(json.dumps(doc, indent=2))
        return 0
    print(
        f"invariant curves: {len(inv)}; faithful stars: {len(faithful)}; "
        f"trivial stars: {len(trivial)}"
    )
    for s in trivial:
        print(f"trivial  {s.text()}")
    for s in faithful:
        print(f"faithful {s.text()}")
    print(
        "pairwise: "
        + ", ".join(f"{k} {v}" for k, v in pairwise.items())
    )
    return 0


def cmd_report(args) -> int:
    g = load_group(args.g_group, "G")
    gamma = load_group(args.gamma, "Gamma")
    report = rationality_report(ActionSetup(g, gamma), cap=args.cap)
    print(json.dumps(verdict_to_dict(report), indent=2))
    return 0


# ---------------------------------------------------------------------------
# lemma suite

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailure(message)


def _lemma_dp1lines() -> list[str]:
    curves = enumerate_curves()
    _require(len(curves) == 240, f"expected 240 curves, got {len(curves)}")
    sizes = []
    for fam in ("E", "L2", "Q", "C", "BQ", "BL", "BE"):
        sizes.append(sum(1 for c in curves if c.family == fam))
    _require(
        sizes == [8, 28, 56, 56, 56, 28, 8],
        f"family sizes {sizes}",
    )
    solved = search_exceptional_classes()
    _require(
        sorted(solved) == sorted(c.divisor for c in curves),
        "independent solver disagrees with the closed forms",
    )
    return ["240 curves; families 8/28/56/56/56/28/8; OK"]


def _lemma_a2a22() -> list[str]:
    out = []
    for ctype, expected_rank in ((CarterType3.A2, 7), (CarterType3.A2x2, 5)):
        m = representative_order3(ctype)
        order, rank = element_order(m), fixed_rank(m)
        _require(order == 3, f"{ctype.display} representative has order {order}")
        _require(rank == expected_rank, f"{ctype.display} fixed rank {rank}")
        _require(carter_type_order3(m) is ctype, f"{ctype.display} misclassified")
        out.append(f"{ctype.display}: order 3, rank {rank}")
    out.append("OK")
    return out


def _lemma_davidinv() -> list[str]:
    out = []
    expected = {
        CarterType3.A2: (72, 1),
        CarterType3.A2x2: (12, 2),
        CarterType3.A2x3: (6, 12),
        CarterType3.A2x4: (0, 40),
    }
    for ctype, (n_inv, n_faithful) in expected.items():
        m = representative_order3(ctype)
        inv = invariant_curves(m)
        actions = invariant_stars(m)
        faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
        _require(
            len(inv) == n_inv,
            f"{ctype.display}: {len(inv)} invariant curves, expected {n_inv}",
        )
        _require(
            len(faithful) == n_faithful,
            f"{ctype.display}: {len(faithful)} faithful stars, expected {n_faithful}",
        )
        out.append(
            f"{ctype.display}: invariant curves {len(inv)}, faithful stars {len(faithful)}"
        )
    # the A2 representative: every invariant curve meets its faithful star all-ones
    m = representative_order3(CarterType3.A2)
    faithful = [
        a.star for a in invariant_stars(m) if a.kind is ActionKind.FAITHFUL
    ][0]
    for c in invariant_curves(m):
        p = profile(c, faithful)
        _require(
            p.kind.value == "all-ones",
            f"invariant curve {curve_table().curve(c).name} profile {p.vector}",
        )
    out.append("OK")
    return out


def _lemma_davidintersection() -> list[str]:
    census = intersection_profile_census()
    _require(
        census.pairs_checked == census.all_ones + census.touching,
        "profile census does not cover all outside pairs",
    )
    return [
        f"{census.pairs_checked} outside (curve, star) pairs: "
        f"{census.all_ones} all-ones, {census.touching} touching",
        "OK",
    ]


def _lemma_2daviddef() -> list[str]:
    census = trichotomy_census()
    classified = census.asynchronized + census.synchronized + census.abnormal
    _require(
        census.total_pairs == classified + census.overlapping,
        "trichotomy census does not cover all pairs",
    )
    return [
        f"{census.total_pairs} star pairs: {census.asynchronized} asynchronized, "
        f"{census.synchronized} synchronized, {census.abnormal} abnormal, "
        f"{census.overlapping} overlapping (share a Bertini pair)",
        "OK",
    ]


def _sample_pairs_by_type(per_type: int):
    """First per_type pairs of each kind, scanning in canonical order."""
    stars = enumerate_stars()
    found: dict[PairType, list] = {p: [] for p in PairType}
    for a, b in combinations(range(len(stars)), 2):
        sa, sb = stars[a], stars[b]
        if sa.support & sb.support:
            continue
        ptype = classify_pair(sa, sb).pair_type
        if len(found[ptype]) < per_type:
            found[ptype].append((sa, sb))
        if all(len(v) >= per_type for v in found.values()):
            break
    return found


def _lemma_davidauto() -> list[str]:
    expected = {
        PairType.ASYNCHRONIZED: 288,
        PairType.SYNCHRONIZED: 24,
        PairType.ABNORMAL: 16,
    }
    out = []
    for s in enumerate_stars()[:10]:
        n = star_graph_automorphisms([s])
        _require(n == 12, f"single star automorphisms {n} != 12")
    out.append("single star: 12")
    samples = _sample_pairs_by_type(10)
    for ptype, pairs in samples.items():
        for sa, sb in pairs:
            n = star_graph_automorphisms([sa, sb])
            _require(
                n == expected[ptype],
                f"{ptype.value} pair automorphisms {n} != {expected[ptype]}",
            )
        out.append(f"{ptype.value} pairs ({len(pairs)} sampled): {expected[ptype]}")
    out.append("OK")
    return out


def _lemma_davidmin() -> list[str]:
    g = representative_order3(CarterType3.A2x4)
    setup = ActionSetup(GroupSpec((g,), "G"), TRIVIAL_GROUP)
    cert = check_minimal_four_stars(setup)
    _require(cert is not None, "no four-star certificate for the A2^4 element")
    _require(cert.combined_rank == 1, f"combined rank {cert.combined_rank}")
    return [f"four-star certificate, combined rank {cert.combined_rank}", "OK"]


def _davidmin_pair(ctype: CarterType3) -> tuple[ActionSetup, MinimalityCertificate]:
    g = representative_order3(ctype)
    pointwise = [
        a.star for a in invariant_stars(g) if a.kind is ActionKind.TRIVIAL
    ]
    h = search_commuting_order3(g, pointwise)
    setup = ActionSetup(GroupSpec((g, h), "G"), TRIVIAL_GROUP)
    cert = check_minimal_four_stars(setup)
    _require(cert is not None, f"no certificate for the {ctype.display} pair")
    return setup, cert


def _lemma_davidmin1() -> list[str]:
    setup, cert = _davidmin_pair(CarterType3.A2x3)
    rank = fixed_rank(setup.combined)
    _require(rank == 1, f"direct rank {rank}")
    return [f"A2^3 with commuting rotation: rank {rank}, certificate found", "OK"]


def _lemma_davidmin2() -> list[str]:
    setup, cert = _davidmin_pair(CarterType3.A2x2)
    rank = fixed_rank(setup.combined)
    _require(rank == 1, f"direct rank {rank}")
    return [f"A2^2 with commuting rotations: rank {rank}, certificate found", "OK"]


def _lemma_ratcor() -> list[str]:
    out = []
    expected = {
        "trivial": (TRIVIAL_GROUP, Verdict.RATIONAL),
        "A2": (GroupSpec((representative_order3(CarterType3.A2),)), Verdict.RATIONAL),
        "A2^2": (GroupSpec((representative_order3(CarterType3.A2x2),)), Verdict.RATIONAL),
        "A2^3": (GroupSpec((representative_order3(CarterType3.A2x3),)), Verdict.NOT_RATIONAL),
        "A2^4": (GroupSpec((representative_order3(CarterType3.A2x4),)), Verdict.NOT_RATIONAL),
    }
    for name, (gamma, want) in expected.items():
        report = gamma_report(gamma)
        _require(
            report.verdict is want,
            f"{name}: verdict {report.verdict.value}, expected {want.value}",
        )
        out.append(f"{name}: {report.verdict.value} via {report.rule}")
        if isinstance(report.witness, TwoStarsWitness):
            a, b = report.witness.stars
            triple = TripleWitness(
                (a.curve_ids[0], b.curve_ids[0], a.curve_ids[1])
            )
            _require(
                replay_triple(gamma, triple),
                f"{name}: two-stars witness gives no triple",
            )
    # any asynchronized pair contains a qualifying triple
    for sa, sb in _sample_pairs_by_type(25)[PairType.ASYNCHRONIZED]:
        a, b, c = sa.curve_ids[0], sb.curve_ids[0], sa.curve_ids[1]
        p = curve_table().pairing
        _require(
            p[a][b] == 1 and p[b][c] == 1 and p[a][c] == 0,
            "asynchronized pair without an adjacent-plus-cross triple",
        )
    out.append("every sampled asynchronized pair yields a triple")
    out.append("OK")
    return out


LEMMAS = {
    "DP1lines": _lemma_dp1lines,
    "A2A22": _lemma_a2a22,
    "Davidinv": _lemma_davidinv,
    "Davidintersection": _lemma_davidintersection,
    "2Daviddef": _lemma_2daviddef,
    "Davidauto": _lemma_davidauto,
    "Davidmin": _lemma_davidmin,
    "Davidmin1": _lemma_davidmin1,
    "Davidmin2": _lemma_davidmin2,
    "RatCor-consistency": _lemma_ratcor,
}


def cmd_verify_lemma(args) -> int:
    checker = LEMMAS.get(args.name)
    if checker is None:
        print(
            f"unknown lemma {args.name!r}; choose from {', '.join(sorted(LEMMAS))}",
            file=sys.stderr,
        )
        return 2
    try:
        detail = checker()
        ok = True
    except CheckFailure as exc:
        detail = [f"FAIL: {exc}"]
        ok = False
    if args.json:
        doc = {"lemma": args.name, "ok": ok, "detail": detail}
        jsonschema.validate(doc, LEMMA_SCHEMA)
        print(json.dumps(doc, indent=2))
    else:
        for line in detail:
            print(line)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpone",
        description="Exact combinatorics of the degree-1 del Pezzo Picard lattice",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument(
        "--cap", type=int, default=10000, help="group closure size cap"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-curves", help="print the 240 exceptional curves")
    sub.add_parser("list-roots", help="print the 240 roots")
    sub.add_parser("list-stars", help="print all 1120 stars")

    p = sub.add_parser("classify-element", help="order, fixed rank, Carter type")
    p.add_argument("-e", "--element", required=True, help="element file or inline")

    p = sub.add_parser("census", help="invariant curves and stars of an element")
    p.add_argument("-e", "--element", required=True, help="element file or inline")

    p = sub.add_parser("verify-lemma", help="replay a named check")
    p.add_argument("name", help=", ".join(sorted(LEMMAS)))

    p = sub.add_parser("report", help="rationality verdict as JSON")
    p.add_argument("-g", dest="g_group", default=None, help="G generators file or inline")
    p.add_argument("-gamma", "--gamma", dest="gamma", default=None,
                   help="Gamma generators file or inline")
    return parser


COMMANDS = {
    "list-curves": cmd_list_curves,
    "list-roots": cmd_list_roots,
    "list-stars": cmd_list_stars,
    "classify-element": cmd_classify_element,
    "census": cmd_census,
    "verify-lemma": cmd_verify_lemma,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OverlappingStars) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CertificateViolation as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
