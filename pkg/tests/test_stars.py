from itertools import combinations

import pytest

from helpers import sample_pairs_by_type

from dpone.curves import bertini, curve_table, s8_action
from dpone.lattice import CANONICAL_CLASS, pair
from dpone.stars import (
    ActionKind,
    OverlappingStars,
    PairType,
    ProfileKind,
    StarConfiguration,
    classify_pair,
    enumerate_stars,
    intersection_profile_census,
    invariant_curves,
    invariant_stars,
    is_star,
    profile,
    star_graph_automorphisms,
    star_plane,
    star_rotation,
    star_table,
    star_through,
    trichotomy_census,
)
from dpone.weyl import CarterType3, element_order, representative_order3


def names_of(star):
    return set(star.names)


def star_of_names(*names):
    t = curve_table()
    return frozenset(t.id_of_name(n) for n in names)


def test_star_through_example():
    s = star_through("E7", "E8")
    assert s.names == ("E7", "E8", "C7-8", "bE7", "bE8", "C8-7")


def test_star_through_rejects_meeting_curves():
    with pytest.raises(ValueError):
        star_through("E1", "L12")


def test_star_pattern_invariants():
    s = star_through("E7", "E8")
    t = curve_table()
    ids = s.curve_ids
    for i in range(6):
        assert t.pairing[ids[i]][ids[(i + 1) % 6]] == 0
        assert t.pairing[ids[i]][ids[(i + 2) % 6]] == 2
        assert t.pairing[ids[i]][ids[(i + 3) % 6]] == 3
        assert bertini(t.curve(ids[i])).id == ids[(i + 3) % 6]
    k = CANONICAL_CLASS
    divisors = [t.curve(i).divisor for i in ids]
    for i in range(6):
        assert divisors[i] + divisors[(i + 3) % 6] == -2 * k
        total3 = divisors[i] + divisors[(i + 2) % 6] + divisors[(i + 4) % 6]
        assert total3 == -3 * k
    assert sum(divisors[1:], divisors[0]) == -6 * k


def test_is_star():
    s = star_through("E7", "E8")
    assert is_star(s.curve_ids)
    assert not is_star(s.curve_ids[:5] + (s.curve_ids[4],))
    shuffled = (s.curve_ids[0], s.curve_ids[2], s.curve_ids[1],
                s.curve_ids[3], s.curve_ids[4], s.curve_ids[5])
    assert not is_star(shuffled)


def test_star_equality_ignores_labeling():
    s = star_through("E7", "E8")
    rotated = StarConfiguration(s.curve_ids[2:] + s.curve_ids[:2])
    reflected = StarConfiguration(tuple(reversed(s.curve_ids)))
    assert s == rotated == reflected
    assert len({s, rotated, reflected}) == 1


def test_enumerate_stars_totals():
    stars = enumerate_stars()
    assert len(stars) == 1120
    table = star_table()
    for c in range(240):
        assert len(table.stars_containing(c)) == 28


def test_every_disjoint_pair_yields_its_star():
    t = curve_table()
    count = 0
    for i in range(240):
        for j in t.disjoint[i]:
            if j > i:
                s = star_through(i, j)
                assert {i, j} <= s.support
                count += 1
    assert count == 6720


def test_stars_stable_under_isometry():
    g = s8_action("(1 5)(2 6)(3 7)(4 8)")
    t = curve_table()
    perm = t.permutation_of(g)
    table = star_table()
    for s in table.stars[:50]:
        image = tuple(perm[c] for c in s.curve_ids)
        assert is_star(image)
        assert StarConfiguration(image).canonical_key in table.id_by_key


def test_bertini_fixes_every_star_antipodally():
    from dpone.curves import bertini_isometry

    b = bertini_isometry()
    t = curve_table()
    perm = t.permutation_of(b)
    for s in enumerate_stars():
        for i, c in enumerate(s.curve_ids):
            assert perm[c] == s.curve_ids[(i + 3) % 6]


def test_classify_pair_overlap_raises_with_bertini_pair():
    s1 = star_through("E7", "E8")
    s2 = star_through("E6", "E7")
    with pytest.raises(OverlappingStars) as exc:
        classify_pair(s1, s2)
    shared = exc.value.shared
    assert shared == star_of_names("E7", "bE7")


def test_classify_pair_rejects_equal_stars():
    s = star_through("E7", "E8")
    with pytest.raises(OverlappingStars):
        classify_pair(s, StarConfiguration(s.curve_ids[1:] + s.curve_ids[:1]))


def test_classified_examples():
    a2x2_stars = [
        a.star
        for a in invariant_stars(representative_order3(CarterType3.A2x2))
        if a.kind is ActionKind.TRIVIAL
    ]
    assert len(a2x2_stars) == 2
    res = classify_pair(*a2x2_stars)
    assert res.pair_type is PairType.ASYNCHRONIZED


def test_classification_returns_matching_orderings():
    samples = sample_pairs_by_type(3)
    t = curve_table()
    from dpone.stars import PATTERNS

    for ptype, pairs in samples.items():
        pat = PATTERNS[ptype]
        for sa, sb in pairs:
            res = classify_pair(sa, sb)
            assert res.pair_type is ptype
            for i in range(6):
                for j in range(6):
                    assert (
                        t.pairing[res.ordering_a[i]][res.ordering_b[j]]
                        == pat[i, j]
                    )


def test_trichotomy_census_totals():
    census = trichotomy_census()
    assert census.total_pairs == 1120 * 1119 // 2
    assert census.overlapping == 45360
    assert (
        census.asynchronized + census.synchronized + census.abnormal
        == census.total_pairs - census.overlapping
    )


def test_overlap_count_closed_form():
    # stars through a curve all contain its Bertini partner, so overlaps
    # come one per unordered pair of the 28 stars through a Bertini pair
    table = star_table()
    t = curve_table()
    for c in range(0, 240, 17):
        through = set(table.stars_containing(c))
        assert through == set(table.stars_containing(t.bertini_ids[c]))
    n_pairs = 28 * 27 // 2
    assert trichotomy_census().overlapping == 120 * n_pairs


def test_census_agrees_with_classify_pair_samples():
    census = trichotomy_census()
    samples = sample_pairs_by_type(5)
    for ptype, pairs in samples.items():
        assert len(pairs) == 5
    # per-star tallies derived from the census are consistent
    assert census.asynchronized * 2 // 1120 == 120
    assert census.synchronized * 2 // 1120 == 270
    assert census.abnormal * 2 // 1120 == 648


def test_profile_shapes():
    s = star_through("E7", "E8")
    t = curve_table()
    res = profile("E6", s)
    assert res.kind is ProfileKind.TOUCHING
    assert res.vector[res.anchor] == 0
    assert res.vector[(res.anchor + 1) % 6] == 0
    base = (0, 0, 1, 2, 2, 1)
    assert tuple(res.vector[(i + res.anchor) % 6] for i in range(6)) == base
    ones = profile("L78", s)
    assert ones.kind is ProfileKind.ALL_ONES
    assert sum(ones.vector) == 6
    with pytest.raises(ValueError):
        profile("E7", s)


def test_profile_census():
    census = intersection_profile_census()
    assert census.pairs_checked == 1120 * 234
    assert census.all_ones + census.touching == census.pairs_checked
    assert census.all_ones == 80640
    assert census.touching == 181440


def test_touching_anchor_matches_adjacency():
    # a curve disjoint from two neighbors of a star anchors at that edge
    s = star_through("E7", "E8")
    res = profile("E6", s)
    t = curve_table()
    i, j = res.anchor, (res.anchor + 1) % 6
    e6 = t.id_of_name("E6")
    assert t.pairing[e6][s.curve_ids[i]] == 0
    assert t.pairing[e6][s.curve_ids[j]] == 0


def test_invariant_census_a2():
    g = representative_order3(CarterType3.A2)
    inv = invariant_curves(g)
    assert len(inv) == 72
    actions = invariant_stars(g)
    faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
    assert len(faithful) == 1
    assert faithful[0].support == star_of_names(
        "C1-2", "C3-2", "C3-1", "C2-1", "C2-3", "C1-3"
    )
    for c in inv:
        assert profile(c, faithful[0]).kind is ProfileKind.ALL_ONES


def test_invariant_census_a2x2():
    g = representative_order3(CarterType3.A2x2)
    assert len(invariant_curves(g)) == 12
    actions = invariant_stars(g)
    trivial = [a.star for a in actions if a.kind is ActionKind.TRIVIAL]
    faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
    assert len(trivial) == 2
    assert len(faithful) == 2
    assert {s.support for s in trivial} == {
        star_of_names("E7", "E8", "C7-8", "bE7", "bE8", "C8-7"),
        star_of_names("L78", "bQ123", "Q456", "bL78", "Q123", "bQ456"),
    }
    assert {s.support for s in faithful} == {
        star_of_names("C1-2", "C3-2", "C3-1", "C2-1", "C2-3", "C1-3"),
        star_of_names("C4-5", "C6-5", "C6-4", "C5-4", "C5-6", "C4-6"),
    }
    for a, b in combinations(trivial + faithful, 2):
        assert classify_pair(a, b).pair_type is PairType.ASYNCHRONIZED


def test_invariant_census_a2x3():
    g = representative_order3(CarterType3.A2x3)
    inv = invariant_curves(g)
    assert len(inv) == 6
    actions = invariant_stars(g)
    trivial = [a.star for a in actions if a.kind is ActionKind.TRIVIAL]
    faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
    assert len(trivial) == 1
    assert trivial[0].support == frozenset(inv)
    assert len(faithful) == 12
    for s in faithful:
        assert classify_pair(trivial[0], s).pair_type is PairType.ASYNCHRONIZED


def test_invariant_census_a2x4():
    g = representative_order3(CarterType3.A2x4)
    assert invariant_curves(g) == ()
    actions = invariant_stars(g)
    assert len(actions) == 40
    assert all(a.kind is ActionKind.FAITHFUL for a in actions)


def test_faithful_action_is_two_step_rotation():
    g = representative_order3(CarterType3.A2)
    t = curve_table()
    perm = t.permutation_of(g)
    faithful = [
        a.star for a in invariant_stars(g) if a.kind is ActionKind.FAITHFUL
    ][0]
    ids = faithful.curve_ids
    shift = ids.index(perm[ids[0]])
    assert shift in (2, 4)
    for i in range(6):
        assert perm[ids[i]] == ids[(i + shift) % 6]


def test_faithful_invariant_pairs_never_abnormal():
    for ctype in CarterType3:
        g = representative_order3(ctype)
        actions = invariant_stars(g)
        faithful = [a.star for a in actions if a.kind is ActionKind.FAITHFUL]
        others = [a.star for a in actions]
        for f in faithful:
            for s in others:
                if f == s:
                    continue
                res = classify_pair(f, s)
                assert res.pair_type in (
                    PairType.ASYNCHRONIZED,
                    PairType.SYNCHRONIZED,
                )


def test_star_graph_automorphism_orders():
    stars = enumerate_stars()
    assert star_graph_automorphisms([stars[0]]) == 12
    samples = sample_pairs_by_type(2)
    expected = {
        PairType.ASYNCHRONIZED: 288,
        PairType.SYNCHRONIZED: 24,
        PairType.ABNORMAL: 16,
    }
    for ptype, pairs in samples.items():
        for sa, sb in pairs:
            assert star_graph_automorphisms([sa, sb]) == expected[ptype]


def test_star_plane_and_rotation():
    s = star_through("E7", "E8")
    a, b = star_plane(s)
    assert pair(a, a) == -2 and pair(b, b) == -2
    assert pair(a, b) == 1
    assert pair(a, CANONICAL_CLASS) == 0
    rot = star_rotation(s)
    assert element_order(rot) == 3
    t = curve_table()
    perm = t.permutation_of(rot)
    ids = s.curve_ids
    shift = ids.index(perm[ids[0]])
    assert shift in (2, 4)


def test_star_text_format():
    s = star_through("E7", "E8")
    assert s.text() == "{E7, E8, C7-8, bE7, bE8, C8-7}"
