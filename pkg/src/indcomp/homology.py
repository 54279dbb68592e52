"""Exact integer homology: Smith normal form, reduced groups, Betti numbers.

All arithmetic is exact (Python integers), so coefficient growth during
elimination can never corrupt a result.  Smith normal form runs in two
phases: a sparse sweep that eliminates +-1 pivots chosen for low fill-in
(boundary matrices are almost entirely reducible this way and unit pivots
cause no coefficient growth), then a classic dense reduction of the small
leftover block, which is where any torsion lives.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .complexes import IntegerMatrix, SimplicialComplex, boundary_matrix


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = self.invariant_factors
        for k, d in enumerate(factors):
            if d <= 0:
                raise ValueError(f"invariant factor {d} not positive")
            if k and factors[k] % factors[k - 1]:
                raise ValueError(f"divisibility chain broken at {factors[k-1]} | {factors[k]}")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        col_rows.setdefault(c, set()).add(r)

    unit_pivots = _eliminate_unit_pivots(rows, col_rows)

    if rows:
        residual = _dense_factors(rows)
    else:
        residual = []
    factors = _divisibility_chain([1] * unit_pivots + residual)
    return SmithForm(tuple(factors))


def _eliminate_unit_pivots(
    rows: dict[int, dict[int, int]], col_rows: dict[int, set[int]]
) -> int:
    """Schur-eliminate +-1 pivots in place; returns how many were used.

    Pivots come from the sparsest column currently holding a unit entry
    (lazy heap over column populations), taking the unit with the sparsest
    row within it, which keeps fill-in low.  Clearing the pivot column by
    row operations leaves the pivot row removable outright: the implied
    column operations would touch no other row.
    """
    count = 0
    heap = [(len(rs), c) for c, rs in col_rows.items()]
    heapq.heapify(heap)
    unitless: list[int] = []

    while heap:
        col_n, c0 = heapq.heappop(heap)
        live = col_rows.get(c0)
        if live is None:
            continue
        if len(live) != col_n:
            heapq.heappush(heap, (len(live), c0))
            continue
        r0 = None
        row_n = None
        for r in live:
            if rows[r][c0] in (1, -1) and (row_n is None or len(rows[r]) < row_n):
                r0, row_n = r, len(rows[r])
        if r0 is None:
            # no unit here now; row updates may create one later
            unitless.append(c0)
            continue

        sign = rows[r0][c0]
        pivot_row = rows.pop(r0)
        for c in pivot_row:
            col_rows[c].discard(r0)
            if not col_rows[c]:
                del col_rows[c]

        touched = set()
        for r in list(col_rows.get(c0, ())):
            row = rows[r]
            factor = row[c0] * sign  # row -= factor * pivot_row, zeroing column c0
            for c, v in pivot_row.items():
                new = row.get(c, 0) - factor * v
                if new:
                    if c not in row:
                        col_rows.setdefault(c, set()).add(r)
                        touched.add(c)
                    row[c] = new
                elif c in row:
                    del row[c]
                    col_rows[c].discard(r)
                    touched.add(c)
                    if not col_rows[c]:
                        del col_rows[c]
            if not row:
                del rows[r]
        col_rows.pop(c0, None)
        count += 1

        for c in touched:
            if c in col_rows:
                heapq.heappush(heap, (len(col_rows[c]), c))
        if unitless:
            for c in unitless:
                if c in col_rows:
                    heapq.heappush(heap, (len(col_rows[c]), c))
            unitless.clear()
    return count


def _dense_factors(rows: dict[int, dict[int, int]]) -> list[int]:
    """Classic Smith reduction of a small dense block."""
    row_ids = sorted(rows)
    col_ids = sorted({c for row in rows.values() for c in row})
    col_pos = {c: j for j, c in enumerate(col_ids)}
    mat = [[0] * len(col_ids) for _ in row_ids]
    for i, r in enumerate(row_ids):
        for c, v in rows[r].items():
            mat[i][col_pos[c]] = v

    factors: list[int] = []
    top = 0
    n_rows = len(mat)
    n_cols = len(col_ids)
    while True:
        # locate a minimal-magnitude nonzero entry at or below/right of top
        pr = pc = -1
        best = None
        for i in range(top, n_rows):
            for j in range(top, n_cols):
                v = mat[i][j]
                if v and (best is None or abs(v) < best):
                    best, pr, pc = abs(v), i, j
        if best is None:
            break
        mat[top], mat[pr] = mat[pr], mat[top]
        if pc != top:
            for row in mat:
                row[top], row[pc] = row[pc], row[top]

        while True:
            # clear the pivot column
            for i in range(top + 1, n_rows):
                a, b = mat[top][top], mat[i][top]
                if not b:
                    continue
                if b % a == 0:
                    q = b // a
                    for j in range(top, n_cols):
                        mat[i][j] -= q * mat[top][j]
                else:
                    g, x, y = xgcd(a, b)
                    a_g, b_g = a // g, b // g
                    for j in range(top, n_cols):
                        s, t = mat[top][j], mat[i][j]
                        mat[top][j] = x * s + y * t
                        mat[i][j] = -b_g * s + a_g * t
            # clear the pivot row
            row_dirty = False
            for j in range(top + 1, n_cols):
                a, b = mat[top][top], mat[top][j]
                if not b:
                    continue
                if b % a == 0:
                    q = b // a
                    for i in range(top, n_rows):
                        mat[i][j] -= q * mat[i][top]
                else:
                    g, x, y = xgcd(a, b)
                    a_g, b_g = a // g, b // g
                    for i in range(top, n_rows):
                        s, t = mat[i][top], mat[i][j]
                        mat[i][top] = x * s + y * t
                        mat[i][j] = -b_g * s + a_g * t
                    row_dirty = True  # column ops may have refilled the pivot column
            if row_dirty:
                continue
            if any(mat[i][top] for i in range(top + 1, n_rows)):
                continue
            # absorb any entry the pivot does not divide, then redo
            d = mat[top][top]
            culprit = None
            for i in range(top + 1, n_rows):
                for j in range(top + 1, n_cols):
                    if mat[i][j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            for j in range(top, n_cols):
                mat[top][j] += mat[culprit][j]
        factors.append(abs(mat[top][top]))
        top += 1
        if top >= n_rows or top >= n_cols:
            break
    return factors


def _divisibility_chain(factors: list[int]) -> list[int]:
    """Normalize a factor multiset into the unique divisibility chain."""
    fs = sorted(abs(f) for f in factors if f)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if fs[j] % fs[i]:
                    g = gcd(fs[i], fs[j])
                    fs[i], fs[j] = g, fs[i] * fs[j] // g
                    changed = True
        if changed:
            fs.sort()
    return fs


class HomologyGroups:
    """Reduced integral homology, one group per dimension from -1 up.

    Each group is (free rank, torsion coefficients in divisibility order).
    Dimensions outside the stored range are trivial.
    """

    __slots__ = ("_groups", "top_dimension")

    def __init__(self, groups: dict[int, tuple[int, tuple[int, ...]]]):
        self._groups = dict(groups)
        self.top_dimension = max(self._groups, default=-1)

    def rank(self, i: int) -> int:
        return self._groups.get(i, (0, ()))[0]

    def torsion(self, i: int) -> tuple[int, ...]:
        return self._groups.get(i, (0, ()))[1]

    @property
    def betti_vector(self) -> list[int]:
        """Free ranks for dimensions 0..top (dimension -1 excluded)."""
        return [self.rank(i) for i in range(0, self.top_dimension + 1)]

    @property
    def total_betti(self) -> int:
        return sum(self.betti_vector)

    @property
    def euler(self) -> int:
        return sum(-b if i & 1 else b for i, b in enumerate(self.betti_vector))

    @property
    def has_torsion(self) -> bool:
        return any(t for _, t in self._groups.values())

    def nontrivial_dimensions(self) -> list[int]:
        return sorted(i for i, (r, t) in self._groups.items() if r or t)

    def as_dict(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return dict(self._groups)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyGroups):
            return NotImplemented
        dims = set(self._groups) | set(other._groups)
        return all(
            self.rank(i) == other.rank(i) and self.torsion(i) == other.torsion(i)
            for i in dims
        )

    def __repr__(self) -> str:
        parts = [
            f"H~{i}=Z^{r}" + (f"+{'+'.join(f'Z/{d}' for d in t)}" if t else "")
            for i, (r, t) in sorted(self._groups.items())
            if r or t
        ]
        return "HomologyGroups(" + (", ".join(parts) or "trivial") + ")"


def reduced_homology(k: SimplicialComplex) -> HomologyGroups:
    """Reduced homology over Z of the augmented chain complex.

    For each i >= -1: free rank = null(d_i) - rank(d_{i+1}); torsion = the
    invariant factors of d_{i+1} exceeding 1.  The complex {empty} has
    H~_{-1} = Z, everything else trivial.
    """
    top = k.top_dimension
    snf = {i: smith_normal_form(boundary_matrix(k, i)) for i in range(0, top + 2)}
    groups: dict[int, tuple[int, tuple[int, ...]]] = {}
    for i in range(-1, top + 1):
        f_i = k.face_count(i)
        rank_i = snf[i].rank if i >= 0 else 0
        rank_next = snf[i + 1].rank if i + 1 in snf else 0
        torsion = tuple(d for d in snf[i + 1].invariant_factors if d > 1) if i + 1 in snf else ()
        groups[i] = (f_i - rank_i - rank_next, torsion)
    return HomologyGroups(groups)


def betti(k: SimplicialComplex) -> list[int]:
    """Reduced Betti numbers for dimensions 0..top."""
    return reduced_homology(k).betti_vector


def total_betti(k: SimplicialComplex) -> int:
    """Sum of reduced Betti numbers over dimensions >= 0."""
    return reduced_homology(k).total_betti


def euler_from_betti(k: SimplicialComplex) -> int:
    """Alternating sum of reduced Betti numbers over dimensions >= 0."""
    return reduced_homology(k).euler


@dataclass(frozen=True)
class HomologyType:
    """Coarse shape of the homology: a point, a single sphere, or neither."""

    kind: str  # "point" | "sphere" | "other"
    dim: int | None = None

    def __str__(self) -> str:
        if self.kind == "sphere":
            return f"sphere-like({self.dim})"
        return f"{self.kind}-like"


POINT_LIKE = HomologyType("point")
OTHER = HomologyType("other")


def sphere_like(d: int) -> HomologyType:
    if d < -1:
        raise ValueError(f"sphere dimension {d} < -1")
    return HomologyType("sphere", d)


def classify_groups(h: HomologyGroups) -> HomologyType:
    if h.has_torsion:
        return OTHER
    nontrivial = h.nontrivial_dimensions()
    if not nontrivial:
        return POINT_LIKE
    if len(nontrivial) == 1 and h.rank(nontrivial[0]) == 1:
        return sphere_like(nontrivial[0])
    return OTHER


def homology_class(k: SimplicialComplex) -> HomologyType:
    """Point-like, sphere-like(d), or other; sphere-like(-1) is {empty}."""
    return classify_groups(reduced_homology(k))
