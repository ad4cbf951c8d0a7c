"""Rank-9 Picard lattice of a degree-1 del Pezzo surface.

Divisor classes are integer 9-vectors in the basis (L, E1..E8), where L
is the line class of the plane and E1..E8 the exceptional classes of the
eight blown-up points.  The intersection pairing is the diagonal form of
signature (1, 8), the canonical class is K = (-3; 1, ..., 1), and every
symmetry of interest is an integer matrix preserving the pairing and
fixing K.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union

RANK = 9

# Diagonal of the intersection form in basis order (L, E1..E8).
FORM_DIAG = (1, -1, -1, -1, -1, -1, -1, -1, -1)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integer divisor class (c_L; c_1, ..., c_8)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != RANK:
            raise ValueError(f"expected {RANK} coefficients, got {len(self.coeffs)}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError(f"coefficients must be integers: {self.coeffs!r}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        head, *tail = self.coeffs
        return f"({head}; {', '.join(str(c) for c in tail)})"


def divisor(*coeffs: int) -> DivisorClass:
    """Build a class from nine integers (c_L, c_1, ..., c_8)."""
    return DivisorClass(tuple(coeffs))


LINE = divisor(1, 0, 0, 0, 0, 0, 0, 0, 0)

#: The canonical class K; -K = 3L - (E1 + ... + E8) and K*K = 1.
CANONICAL_CLASS = divisor(-3, 1, 1, 1, 1, 1, 1, 1, 1)


def exceptional(i: int) -> DivisorClass:
    """The class E_i of the i-th blown-up point, i in 1..8."""
    if not 1 <= i <= 8:
        raise ValueError(f"exceptional index must be in 1..8, got {i}")
    coeffs = [0] * RANK
    coeffs[i] = 1
    return DivisorClass(tuple(coeffs))


def pair(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection pairing: c_L c'_L - sum_i c_i c'_i."""
    return sum(d * x * y for d, x, y in zip(FORM_DIAG, a.coeffs, b.coeffs))


def simple_roots() -> tuple[DivisorClass, ...]:
    """The eight simple roots L-E1-E2-E3, E1-E2, ..., E7-E8, in this order.

    They generate the sublattice of classes orthogonal to K, which is the
    E8 root lattice.
    """
    first = divisor(1, -1, -1, -1, 0, 0, 0, 0, 0)
    chain = tuple(exceptional(i) - exceptional(i + 1) for i in range(1, 8))
    return (first,) + chain


Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if len(m) != RANK or any(len(row) != RANK for row in m):
        raise ValueError(f"expected a {RANK}x{RANK} integer matrix")
    return m


def is_isometry(matrix: Iterable[Iterable[int]]) -> bool:
    """Whether the matrix preserves the pairing on all basis pairs and fixes K."""
    try:
        m = _as_matrix(matrix)
    except (ValueError, TypeError):
        return False
    # M^T G M == G checks preservation on every basis pair at once.
    for i in range(RANK):
        col_i = [m[r][i] for r in range(RANK)]
        for j in range(i, RANK):
            val = sum(FORM_DIAG[r] * col_i[r] * m[r][j] for r in range(RANK))
            expected = FORM_DIAG[i] if i == j else 0
            if val != expected:
                return False
    k = CANONICAL_CLASS.coeffs
    for r in range(RANK):
        if sum(m[r][c] * k[c] for c in range(RANK)) != k[r]:
            return False
    return True


@dataclass(frozen=True)
class LatticeIsometry:
    """A 9x9 integer matrix acting on coefficient column vectors.

    Validated at construction: it must preserve the pairing and fix K
    (which forces determinant +-1).  Invalid matrices are rejected.
    """

    matrix: Matrix

    def __post_init__(self) -> None:
        m = _as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        if not is_isometry(m):
            raise ValueError("matrix does not preserve the pairing and fix K")

    @classmethod
    def identity(cls) -> "LatticeIsometry":
        return cls(tuple(tuple(int(i == j) for j in range(RANK)) for i in range(RANK)))

    def apply(self, v: DivisorClass) -> DivisorClass:
        return DivisorClass(
            tuple(sum(row[c] * v.coeffs[c] for c in range(RANK)) for row in self.matrix)
        )

    def __matmul__(self, other: "LatticeIsometry") -> "LatticeIsometry":
        a, b = self.matrix, other.matrix
        rows = []
        for i in range(RANK):
            ai = a[i]
            rows.append(
                tuple(
                    sum(ai[k] * b[k][j] for k in range(RANK)) for j in range(RANK)
                )
            )
        return LatticeIsometry(tuple(rows))

    def inverse(self) -> "LatticeIsometry":
        # M^T G M = G gives M^-1 = G M^T G with G the diagonal form.
        m = self.matrix
        inv = tuple(
            tuple(FORM_DIAG[i] * m[j][i] * FORM_DIAG[j] for j in range(RANK))
            for i in range(RANK)
        )
        return LatticeIsometry(inv)

    def is_identity(self) -> bool:
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(RANK)
            for j in range(RANK)
        )

    def __repr__(self) -> str:
        return f"LatticeIsometry({self.matrix[0]}, ...)"


@dataclass(frozen=True)
class GroupSpec:
    """A finitely generated group of lattice isometries."""

    generators: tuple[LatticeIsometry, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))


TRIVIAL_GROUP = GroupSpec((), "trivial")

GroupLike = Union[GroupSpec, LatticeIsometry, Sequence[LatticeIsometry]]


def _generators_of(g: GroupLike) -> tuple[LatticeIsometry, ...]:
    if isinstance(g, GroupSpec):
        return g.generators
    if isinstance(g, LatticeIsometry):
        return (g,)
    return tuple(g)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col]:
                q = work[i][col]
                row = [work[i][j] * p - work[rank][j] * q for j in range(ncols)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                work[i] = row
        rank += 1
        if rank == len(work):
            break
    return rank


def fixed_rank(g: GroupLike) -> int:
    """Rank of the common fixed subspace {v : Mv = v for every generator M}.

    Computed over the rationals; the fixed sublattice is saturated, so
    this equals the rank of the invariant Picard lattice.
    """
    gens = _generators_of(g)
    if not gens:
        return RANK
    rows: list[list[int]] = []
    for m in gens:
        for i in range(RANK):
            rows.append(
                [m.matrix[i][j] - (1 if i == j else 0) for j in range(RANK)]
            )
    return RANK - integer_rank(rows)


def group_closure(g: GroupLike, cap: int = 10000) -> list[LatticeIsometry]:
    """All distinct products of the generators, breadth-first, identity first.

    Raises if the closure exceeds ``cap``; every group in this artifact's
    scope has order at most 72, so a large closure signals a bad input.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = _generators_of(g)
    identity = LatticeIsometry.identity()
    seen: dict[Matrix, LatticeIsometry] = {identity.matrix: identity}
    queue = [identity]
    while queue:
        current = queue.pop(0)
        for gen in gens:
            nxt = current @ gen
            if nxt.matrix not in seen:
                if len(seen) >= cap:
                    raise ValueError(f"group closure exceeds cap {cap}")
                seen[nxt.matrix] = nxt
                queue.append(nxt)
    return list(seen.values())


# -- permutation shorthand and text I/O ------------------------------------

def parse_cycles(text: str) -> dict[int, int]:
    """Parse cycle notation such as "(1 2 3)(4 5 6)" into a mapping on 1..8.

    "()" denotes the identity.  Separators may be spaces or commas.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation string")
    if s in ("()", "id"):
        return {}
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed cycle string: {text!r}")
    mapping: dict[int, int] = {}
    for chunk in s[1:-1].split(")("):
        parts = [p for p in chunk.replace(",", " ").split() if p]
        if not parts:
            continue
        try:
            idxs = [int(p) for p in parts]
        except ValueError as exc:
            raise ValueError(f"malformed cycle string: {text!r}") from exc
        if any(not 1 <= i <= 8 for i in idxs):
            raise ValueError(f"cycle indices must be in 1..8: {text!r}")
        if len(set(idxs)) != len(idxs) or any(i in mapping for i in idxs):
            raise ValueError(f"repeated index in cycles: {text!r}")
        for a, b in zip(idxs, idxs[1:] + idxs[:1]):
            mapping[a] = b
    return mapping


def cycles_string(mapping: dict[int, int]) -> str:
    """Canonical cycle notation for a permutation of 1..8; identity -> "()"."""
    seen: set[int] = set()
    cycles = []
    for start in range(1, 9):
        if start in seen or mapping.get(start, start) == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        cycles.append(cyc)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycles)


def permutation_isometry(mapping: dict[int, int]) -> LatticeIsometry:
    """The isometry fixing L and sending E_i to E_{mapping[i]}."""
    full = {i: mapping.get(i, i) for i in range(1, 9)}
    if sorted(full.values()) != list(range(1, 9)):
        raise ValueError(f"not a permutation of 1..8: {mapping!r}")
    rows = [[0] * RANK for _ in range(RANK)]
    rows[0][0] = 1
    for i, j in full.items():
        rows[j][i] = 1
    return LatticeIsometry(tuple(tuple(r) for r in rows))


def permutation_of_isometry(m: LatticeIsometry) -> dict[int, int] | None:
    """Inverse of :func:`permutation_isometry`; None if m is not of that shape."""
    mat = m.matrix
    cols = []
    for j in range(RANK):
        col = tuple(mat[i][j] for i in range(RANK))
        if sum(col) != 1 or any(x not in (0, 1) for x in col):
            return None
        cols.append(col.index(1))
    if cols[0] != 0 or sorted(cols[1:]) != list(range(1, RANK)):
        return None
    return {i: cols[i] for i in range(1, RANK) if cols[i] != i}


def isometry_to_text(m: LatticeIsometry) -> str:
    """Nine lines of nine space-separated integers, row-major."""
    return "\n".join(" ".join(str(x) for x in row) for row in m.matrix)


def isometry_from_text(text: str) -> LatticeIsometry:
    """Parse the 9-line matrix format; rows act on column coefficient vectors."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    return LatticeIsometry(_as_matrix(rows))
