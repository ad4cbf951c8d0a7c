"""Rationality and minimality criteria with replayable certificates.

The setting: two commuting groups of isometries act on the lattice, G by
automorphisms of the surface and Gamma through the ground field.  "A
class is defined over the ground field" translates into "fixed by every
element of Gamma"; the rules below draw conclusions from the combinatorics
of fixed curves, invariant stars, and order-3 conjugacy classes.

Every check either returns None or a witness object that can be replayed
from scratch by the matching replay_* function.  The rules are sufficient
conditions, so Inconclusive is an honest verdict.  Rational verdicts are
a lattice-level statement: the lattice cannot see rational points, so
they assume the surface has one where the geometric argument needs it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .curves import curve_table
from .lattice import (
    CANONICAL_CLASS,
    GroupSpec,
    LatticeIsometry,
    TRIVIAL_GROUP,
    fixed_rank,
    group_closure,
    pair,
)
from .stars import (
    ActionKind,
    PairType,
    StarConfiguration,
    classify_pair,
    invariant_curves,
    invariant_stars,
    star_rotation,
    star_table,
)
from .weyl import CarterType3, carter_type_order3, element_order

RATIONAL_CAVEAT = (
    "lattice-level verdict: assumes the surface has a suitable rational point, "
    "which the lattice cannot see"
)


class CertificateViolation(RuntimeError):
    """A certificate was found whose direct re-verification failed."""


@dataclass(frozen=True)
class ActionSetup:
    """Commuting pair of groups acting on the lattice."""

    g_group: GroupSpec
    gamma_group: GroupSpec

    def __post_init__(self) -> None:
        for a in self.g_group.generators:
            for b in self.gamma_group.generators:
                if a @ b != b @ a:
                    raise ValueError("g_group and gamma_group do not commute")

    @property
    def combined(self) -> GroupSpec:
        return GroupSpec(
            self.g_group.generators + self.gamma_group.generators,
            label="combined",
        )


# ---------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class CarterWitness:
    element: LatticeIsometry
    carter_type: CarterType3


@dataclass(frozen=True)
class StarsWitness:
    element: LatticeIsometry
    stars: tuple[StarConfiguration, ...]


@dataclass(frozen=True)
class EvenWitness:
    element: LatticeIsometry
    order: int
    star: StarConfiguration


@dataclass(frozen=True)
class TripleWitness:
    curve_ids: tuple[int, int, int]

    @property
    def names(self) -> tuple[str, str, str]:
        t = curve_table()
        return tuple(t.curve(i).name for i in self.curve_ids)


@dataclass(frozen=True)
class TwoStarsWitness:
    stars: tuple[StarConfiguration, StarConfiguration]


@dataclass(frozen=True)
class MinimalityCertificate:
    stars: tuple[StarConfiguration, ...]
    elements: tuple[LatticeIsometry, ...]
    combined_rank: int


# ---------------------------------------------------------------------------
# not-rational rules

def check_not_rational_carter(
    gamma: GroupSpec, cap: int = 10000
) -> CarterWitness | None:
    """An order-3 element of class A2^3 or A2^4 in the closure."""
    for m in group_closure(gamma, cap):
        if m.is_identity():
            continue
        if element_order(m) != 3:
            continue
        ctype = carter_type_order3(m)
        if ctype in (CarterType3.A2x3, CarterType3.A2x4):
            return CarterWitness(m, ctype)
    return None


def _faithful_stars_of(m: LatticeIsometry) -> list[StarConfiguration]:
    return [
        a.star for a in invariant_stars(m) if a.kind is ActionKind.FAITHFUL
    ]


def check_not_rational_stars(
    gamma: GroupSpec, cap: int = 10000
) -> StarsWitness | None:
    """An order-3 element acting faithfully on three of its invariant stars."""
    for m in group_closure(gamma, cap):
        if m.is_identity() or element_order(m) != 3:
            continue
        faithful = _faithful_stars_of(m)
        if len(faithful) >= 3:
            return StarsWitness(m, tuple(faithful[:3]))
    return None


def _acts_antipodally(m: LatticeIsometry, star: StarConfiguration) -> bool:
    perm = curve_table().permutation_of(m)
    image = {perm[c] for c in star.curve_ids}
    if image != star.support:
        return False
    p = curve_table().pairing
    return all(p[c][perm[c]] == 3 for c in star.curve_ids)


def check_not_rational_even(
    gamma: GroupSpec, cap: int = 10000
) -> EvenWitness | None:
    """An even-order element acting on an invariant star as the antipode.

    Pairing 3 with the image forces H -> H_{i+3} on every member, the
    Bertini flip of the hexagon.
    """
    for m in group_closure(gamma, cap):
        if m.is_identity():
            continue
        order = element_order(m)
        if order % 2 != 0:
            continue
        for action in invariant_stars(m):
            if _acts_antipodally(m, action.star):
                return EvenWitness(m, order, action.star)
    return None


# ---------------------------------------------------------------------------
# rational rules

def check_rational_triple(
    gamma: GroupSpec, cap: int = 10000
) -> TripleWitness | None:
    """Fixed curves A, B, C with A.B = B.C = 1 and A.C = 0.

    The sum D = A + B + C then has D^2 = 1 and D.K = -3, the shape of a
    plane model; both equalities are re-checked on the found triple.
    """
    inv = invariant_curves(gamma)
    p = curve_table().pairing
    for a in inv:
        for b in inv:
            if p[a][b] != 1:
                continue
            for c in inv:
                if c > a and p[b][c] == 1 and p[a][c] == 0:
                    witness = TripleWitness((a, b, c))
                    _verify_triple_sum(witness)
                    return witness
    return None


def _verify_triple_sum(w: TripleWitness) -> None:
    t = curve_table()
    d = sum((t.curve(i).divisor for i in w.curve_ids[1:]),
            t.curve(w.curve_ids[0]).divisor)
    if pair(d, d) != 1 or pair(d, CANONICAL_CLASS) != -3:
        raise CertificateViolation(f"triple sum fails the plane-model check: {w}")


def _all_ones_cross(a: StarConfiguration, b: StarConfiguration) -> bool:
    p = curve_table().pairing
    return all(p[x][y] == 1 for x in a.curve_ids for y in b.curve_ids)


def check_rational_two_stars(
    gamma: GroupSpec, cap: int = 10000
) -> TwoStarsWitness | None:
    """Two pointwise-fixed stars that are asynchronized.

    Asynchronized means all 36 cross pairings equal 1, so the scan tests
    that directly and classify_pair confirms the hit.
    """
    pointwise = [
        a.star for a in invariant_stars(gamma) if a.kind is ActionKind.TRIVIAL
    ]
    for a, b in combinations(pointwise, 2):
        if a.support & b.support:
            continue
        if _all_ones_cross(a, b):
            if classify_pair(a, b).pair_type is not PairType.ASYNCHRONIZED:
                raise CertificateViolation("all-ones pair not asynchronized")
            return TwoStarsWitness((a, b))
    return None


# ---------------------------------------------------------------------------
# minimality

def search_commuting_order3(
    g: LatticeIsometry, faithful_on
) -> LatticeIsometry:
    """Find an order-3 isometry commuting with g, faithful on given stars.

    Candidates are products of plane rotations of the requested stars
    (exponents 1 and 2); a rotation of a star whose curves g fixes
    commutes with g automatically, but every condition is checked rather
    than assumed.
    """
    stars = list(faithful_on)
    if not stars:
        raise ValueError("need at least one star to act on")
    rotations = [star_rotation(s) for s in stars]

    def build(exps: tuple[int, ...]) -> LatticeIsometry:
        m = LatticeIsometry.identity()
        for r, e in zip(rotations, exps):
            for _ in range(e):
                m = m @ r
        return m

    t = curve_table()
    exponents = [(e,) for e in (1, 2)]
    for _ in range(len(stars) - 1):
        exponents = [prev + (e,) for prev in exponents for e in (1, 2)]
    for exps in exponents:
        h = build(exps)
        if h @ g != g @ h or element_order(h) != 3:
            continue
        perm = t.permutation_of(h)
        faithful = all(
            {perm[c] for c in s.curve_ids} == s.support
            and any(perm[c] != c for c in s.curve_ids)
            for s in stars
        )
        if faithful:
            return h
    raise ValueError("no commuting order-3 element found over the star planes")


def check_minimal_four_stars(
    setup: ActionSetup, cap: int = 10000
) -> MinimalityCertificate | None:
    """Four pairwise-asynchronized invariant stars, each rotated by G.

    Stars must be setwise invariant under the combined group; each needs
    an order-3 element of G acting faithfully on it.  When the clique
    exists the fixed rank of the combined group is computed directly and
    must equal 1.
    """
    order3 = [
        m
        for m in group_closure(setup.g_group, cap)
        if not m.is_identity() and element_order(m) == 3
    ]
    if not order3:
        return None
    t = curve_table()
    perms = {m: t.permutation_of(m) for m in order3}

    candidates: list[tuple[StarConfiguration, LatticeIsometry]] = []
    for action in invariant_stars(setup.combined):
        s = action.star
        for m in order3:
            perm = perms[m]
            if {perm[c] for c in s.curve_ids} == s.support and any(
                perm[c] != c for c in s.curve_ids
            ):
                candidates.append((s, m))
                break

    chosen: list[tuple[StarConfiguration, LatticeIsometry]] = []

    def compatible(s: StarConfiguration) -> bool:
        return all(
            not (s.support & prev.support) and _all_ones_cross(s, prev)
            for prev, _ in chosen
        )

    def rec(start: int) -> bool:
        if len(chosen) == 4:
            return True
        for idx in range(start, len(candidates)):
            s, m = candidates[idx]
            if compatible(s):
                chosen.append((s, m))
                if rec(idx + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    stars = tuple(s for s, _ in chosen)
    elements = tuple(m for _, m in chosen)
    for a, b in combinations(stars, 2):
        if classify_pair(a, b).pair_type is not PairType.ASYNCHRONIZED:
            raise CertificateViolation("clique member pair not asynchronized")
    rank = fixed_rank(setup.combined)
    if rank != 1:
        raise CertificateViolation(
            f"four-star certificate found but combined fixed rank is {rank}"
        )
    return MinimalityCertificate(stars, elements, rank)


# ---------------------------------------------------------------------------
# replay

def replay_carter(gamma: GroupSpec, w: CarterWitness, cap: int = 10000) -> bool:
    if w.element not in group_closure(gamma, cap):
        return False
    if element_order(w.element) != 3:
        return False
    return carter_type_order3(w.element) is w.carter_type and w.carter_type in (
        CarterType3.A2x3,
        CarterType3.A2x4,
    )


def replay_stars(gamma: GroupSpec, w: StarsWitness, cap: int = 10000) -> bool:
    if w.element not in group_closure(gamma, cap):
        return False
    if element_order(w.element) != 3:
        return False
    if len(set(w.stars)) < 3:
        return False
    faithful = set(_faithful_stars_of(w.element))
    return all(s in faithful for s in w.stars)


def replay_even(gamma: GroupSpec, w: EvenWitness, cap: int = 10000) -> bool:
    if w.element not in group_closure(gamma, cap):
        return False
    if element_order(w.element) != w.order or w.order % 2 != 0:
        return False
    return _acts_antipodally(w.element, w.star)


def replay_triple(gamma: GroupSpec, w: TripleWitness) -> bool:
    a, b, c = w.curve_ids
    inv = set(invariant_curves(gamma))
    if not {a, b, c} <= inv:
        return False
    p = curve_table().pairing
    if not (p[a][b] == 1 and p[b][c] == 1 and p[a][c] == 0):
        return False
    _verify_triple_sum(w)
    return True


def replay_two_stars(gamma: GroupSpec, w: TwoStarsWitness) -> bool:
    a, b = w.stars
    inv = set(invariant_curves(gamma))
    if not (a.support <= inv and b.support <= inv):
        return False
    return classify_pair(a, b).pair_type is PairType.ASYNCHRONIZED


def replay_minimality(
    setup: ActionSetup, cert: MinimalityCertificate, cap: int = 10000
) -> bool:
    if len(set(cert.stars)) != 4 or len(cert.elements) != 4:
        return False
    closure = group_closure(setup.g_group, cap)
    t = curve_table()
    combined_perms = [
        t.permutation_of(m) for m in setup.combined.generators
    ]
    for s, m in zip(cert.stars, cert.elements):
        if m not in closure or element_order(m) != 3:
            return False
        for perm in combined_perms:
            if {perm[c] for c in s.curve_ids} != s.support:
                return False
        perm = t.permutation_of(m)
        if {perm[c] for c in s.curve_ids} != s.support:
            return False
        if all(perm[c] == c for c in s.curve_ids):
            return False
    for a, b in combinations(cert.stars, 2):
        if classify_pair(a, b).pair_type is not PairType.ASYNCHRONIZED:
            return False
    return fixed_rank(setup.combined) == 1 == cert.combined_rank


# ---------------------------------------------------------------------------
# the report

class Verdict(enum.Enum):
    RATIONAL = "Rational"
    NOT_RATIONAL = "NotRational"
    INCONCLUSIVE = "Inconclusive"


RULES = (
    ("rational_two_stars", Verdict.RATIONAL, check_rational_two_stars),
    ("rational_triple", Verdict.RATIONAL, check_rational_triple),
    ("not_rational_carter", Verdict.NOT_RATIONAL, check_not_rational_carter),
    ("not_rational_stars", Verdict.NOT_RATIONAL, check_not_rational_stars),
    ("not_rational_even", Verdict.NOT_RATIONAL, check_not_rational_even),
)


@dataclass(frozen=True)
class RationalityVerdict:
    verdict: Verdict
    rule: str | None
    witness: object | None
    ranks: dict[str, int]
    minimality: MinimalityCertificate | None
    caveat: str | None


def rationality_report(setup: ActionSetup, cap: int = 10000) -> RationalityVerdict:
    """Run the decision rules in fixed order and report the first hit.

    Rational rules run first because their witnesses are cheap to check;
    the verdict also carries the fixed ranks of G, Gamma and the combined
    group, and a minimality certificate when one exists.
    """
    verdict, rule, witness = Verdict.INCONCLUSIVE, None, None
    for name, v, checker in RULES:
        w = checker(setup.gamma_group, cap)
        if w is not None:
            verdict, rule, witness = v, name, w
            break
    ranks = {
        "G": fixed_rank(setup.g_group),
        "Gamma": fixed_rank(setup.gamma_group),
        "combined": fixed_rank(setup.combined),
    }
    minimality = check_minimal_four_stars(setup, cap)
    caveat = RATIONAL_CAVEAT if verdict is Verdict.RATIONAL else None
    return RationalityVerdict(verdict, rule, witness, ranks, minimality, caveat)


def gamma_report(gamma: GroupSpec, cap: int = 10000) -> RationalityVerdict:
    """Report for a Galois image acting alone (G trivial)."""
    return rationality_report(ActionSetup(TRIVIAL_GROUP, gamma), cap)
