"""Shared sampling utilities for the test suite."""

from itertools import combinations

from dpone.stars import PairType, classify_pair, enumerate_stars


def sample_pairs_by_type(per_type: int) -> dict:
    """First per_type star pairs of each kind, scanning canonical order."""
    stars = enumerate_stars()
    found = {p: [] for p in PairType}
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
