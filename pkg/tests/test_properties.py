from functools import reduce

import hypothesis.strategies as st
from hypothesis import assume, given, settings

from dpone.curves import bertini, curve_table
from dpone.lattice import (
    CANONICAL_CLASS,
    DivisorClass,
    LatticeIsometry,
    cycles_string,
    isometry_from_text,
    isometry_to_text,
    pair,
    parse_cycles,
    permutation_isometry,
    simple_roots,
)
from dpone.stars import is_star, profile, star_table, star_through
from dpone.weyl import carter_type_order3, element_order, reflection, representative_order3, CarterType3

coeffs9 = st.tuples(*[st.integers(-9, 9)] * 9)
divisors = coeffs9.map(DivisorClass)
words = st.lists(st.integers(0, 7), max_size=8)
perms = st.permutations(list(range(1, 9)))
curve_ids = st.integers(0, 239)
star_ids = st.integers(0, 1119)

ROOT_REFLECTIONS = None


def word_isometry(word):
    global ROOT_REFLECTIONS
    if ROOT_REFLECTIONS is None:
        ROOT_REFLECTIONS = tuple(reflection(r) for r in simple_roots())
    gens = [ROOT_REFLECTIONS[i] for i in word]
    return reduce(lambda a, b: a @ b, gens, LatticeIsometry.identity())


@given(divisors, divisors)
def test_pairing_symmetric(a, b):
    assert pair(a, b) == pair(b, a)


@given(divisors, divisors, divisors, st.integers(-5, 5), st.integers(-5, 5))
def test_pairing_bilinear(a, b, c, m, n):
    assert pair(a * m + b * n, c) == m * pair(a, c) + n * pair(b, c)


@given(words)
def test_word_isometry_fixes_k(word):
    m = word_isometry(word)
    assert m.apply(CANONICAL_CLASS) == CANONICAL_CLASS


@given(words, divisors, divisors)
def test_word_isometry_preserves_pairing(word, a, b):
    m = word_isometry(word)
    assert pair(m.apply(a), m.apply(b)) == pair(a, b)


@settings(max_examples=30, deadline=None)
@given(words)
def test_word_isometry_permutes_curves(word):
    m = word_isometry(word)
    perm = curve_table().permutation_of(m)
    assert sorted(perm) == list(range(240))


@settings(max_examples=20, deadline=None)
@given(words, star_ids)
def test_word_isometry_maps_stars_to_stars(word, sid):
    m = word_isometry(word)
    t = curve_table()
    perm = t.permutation_of(m)
    s = star_table().stars[sid]
    image = [t.curve(perm[c]).divisor for c in s.curve_ids]
    assert is_star(image)


@settings(max_examples=20, deadline=None)
@given(words, st.sampled_from(list(CarterType3)))
def test_carter_type_conjugation_invariant(word, ctype):
    g = representative_order3(ctype)
    w = word_isometry(word)
    conj = w @ g @ w.inverse()
    assert element_order(conj) == 3
    assert carter_type_order3(conj) is ctype


@given(curve_ids)
def test_bertini_involution(c):
    t = curve_table()
    curve = t.curve(c)
    assert bertini(bertini(curve)).id == c


@given(curve_ids, curve_ids)
def test_bertini_preserves_pairing(a, b):
    t = curve_table()
    ba, bb = bertini(t.curve(a)).id, bertini(t.curve(b)).id
    assert t.pairing[a][b] == t.pairing[ba][bb]


@given(curve_ids, curve_ids)
def test_star_through_shape(a, b):
    t = curve_table()
    assume(a != b and t.pairing[a][b] == 0)
    ca, cb = t.curve(a), t.curve(b)
    s = star_through(ca, cb)
    assert s == star_through(cb, ca)
    ids = s.curve_ids
    assert ids[0] == a and ids[1] == b
    assert t.bertini_ids[ids[0]] == ids[3]
    for i in range(6):
        for d in (1, 2, 3):
            assert t.pairing[ids[i]][ids[(i + d) % 6]] == (0, 0, 2, 3)[d]


@given(curve_ids, star_ids)
def test_profile_vector_sums_to_six(c, sid):
    s = star_table().stars[sid]
    assume(c not in s.support)
    res = profile(c, s)
    assert sum(res.vector) == 6
    k = res.anchor or 0
    assert res.vector[k:] + res.vector[:k] in (
        (1, 1, 1, 1, 1, 1),
        (0, 0, 1, 2, 2, 1),
    )


@given(star_ids, st.integers(0, 5), st.booleans())
def test_star_canonical_key_relabelling(sid, shift, flip):
    from dpone.stars import StarConfiguration

    s = star_table().stars[sid]
    ids = s.curve_ids
    if flip:
        ids = tuple(reversed(ids))
    ids = ids[shift:] + ids[:shift]
    assert StarConfiguration(ids) == s


@given(perms)
def test_cycles_round_trip(p):
    mapping = {i + 1: v for i, v in enumerate(p)}
    text = cycles_string(mapping)
    parsed = parse_cycles(text)
    assert {i: parsed.get(i, i) for i in range(1, 9)} == mapping


@given(perms)
def test_isometry_text_round_trip(p):
    m = permutation_isometry({i + 1: v for i, v in enumerate(p)})
    assert isometry_from_text(isometry_to_text(m)) == m


@given(words)
def test_word_isometry_text_round_trip(word):
    m = word_isometry(word)
    assert isometry_from_text(isometry_to_text(m)) == m
