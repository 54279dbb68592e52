"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from indcomp.enumeration import enumerate_graphs
from indcomp.graphs import Graph, bits


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    """One representative per isomorphism class, n = 1..6."""
    return [g for n in range(1, 7) for g in enumerate_graphs(n, dedup=True)]


@pytest.fixture(scope="session")
def corpus7() -> list[Graph]:
    """One representative per isomorphism class, n = 1..7."""
    return [g for n in range(1, 8) for g in enumerate_graphs(n, dedup=True)]


# -- independent oracles -----------------------------------------------------


def brute_force_independent_sets(g: Graph) -> list[int]:
    """All independent-set masks by exhaustive subset scan."""
    return [m for m in range(1 << g.n) if g.is_independent(m)]


def brute_force_chordless_cycles(g: Graph) -> set[frozenset[int]]:
    """Vertex sets of induced cycles, by scanning every vertex subset."""
    found = set()
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            degs = [sum(g.has_edge(u, v) for v in subset if v != u) for u in subset]
            if any(d != 2 for d in degs):
                continue
            edge_count = sum(degs) // 2
            if edge_count != size:
                continue
            # degree-2 regular with |E| = |V|: connected iff one cycle
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                u = frontier.pop()
                for v in subset:
                    if v not in seen and g.has_edge(u, v):
                        seen.add(v)
                        frontier.append(v)
            if len(seen) == size:
                found.add(frozenset(subset))
    return found


def burnside_graph_count(n: int) -> int:
    """Number of isomorphism classes of graphs on n vertices, by orbit
    counting: average over all vertex permutations of 2^(edge-orbit count)."""
    if n == 0:
        return 1
    total = 0
    edges = list(combinations(range(n), 2))
    for perm in permutations(range(n)):
        remaining = set(edges)
        orbit_count = 0
        while remaining:
            e = remaining.pop()
            orbit_count += 1
            u, v = e
            while True:
                u, v = perm[u], perm[v]
                e2 = (u, v) if u < v else (v, u)
                if e2 in remaining:
                    remaining.remove(e2)
                elif e2 == e:
                    break
        total += 1 << orbit_count
    return total // math.factorial(n)


def brute_force_min_code(g: Graph) -> int:
    """Canonical code by literal minimization over all n! permutations."""
    n = g.n
    best = None
    for perm in permutations(range(n)):
        code = 0
        for j in range(1, n):
            for i in range(j):
                code = code << 1 | (g.adj[perm[i]] >> perm[j] & 1)
        if best is None or code < best:
            best = code
    return best or 0


def rational_rank(rows: list[list[int]]) -> int:
    """Matrix rank over Q by exact fraction Gaussian elimination."""
    mat = [[Fraction(v) for v in row] for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    rank = 0
    col = 0
    while rank < n_rows and col < n_cols:
        pivot_row = next((i for i in range(rank, n_rows) if mat[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(n_rows):
            if i != rank and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return 1
    mat = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def minors_gcd(rows: list[list[int]], k: int) -> int:
    """gcd of the absolute values of all k x k minors (0 when all vanish)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    g = 0
    for row_idx in combinations(range(n_rows), k):
        for col_idx in combinations(range(n_cols), k):
            sub = [[rows[i][j] for j in col_idx] for i in row_idx]
            g = math.gcd(g, abs(bareiss_determinant(sub)))
    return g


def signed_independent_set_sum(g: Graph) -> int:
    """Sum of (-1)^|A| over all independent sets A, empty set included."""
    total = 0
    for mask in brute_force_independent_sets(g):
        total += -1 if bin(mask).count("1") & 1 else 1
    return total


def maximal_faces(complex_) -> list[int]:
    """Facets of a complex: faces with no proper superset in the complex."""
    all_faces = [m for m in complex_.all_faces()]
    facets = []
    for face in all_faces:
        if not any(face != other and face & other == face for other in all_faces):
            facets.append(face)
    return facets


def vertices_of(mask: int) -> list[int]:
    return list(bits(mask))
