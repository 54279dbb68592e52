"""Canonical labeling by minimum adjacency code, and small-graph streams.

The canonical code of a graph is the minimum, over all vertex orderings, of
the upper-triangle column-major edge bit string (the same bit layout graph6
uses), read as an integer with the (0,1) bit most significant.  Isomorphic
graphs and only isomorphic graphs share a code.  The minimum is found by
branch-and-bound over partial orderings: siblings are visited in increasing
column value, a branch dies as soon as its prefix exceeds the best full code
seen, and candidates that are twins of an already-tried sibling are skipped
(swapping twins is an automorphism, so their subtrees are identical).
"""

from __future__ import annotations

from typing import Iterator

from .formats import _pack_edge_bits
from .graphs import Graph, GraphError, bits

DEDUP_MAX_VERTICES = 8


def edge_code(g: Graph) -> int:
    """Edge bits of g under its current labeling (not canonical)."""
    code = 0
    for j in range(1, g.n):
        for i in range(j):
            code = code << 1 | (g.adj[i] >> j & 1)
    return code


def graph_from_code(n: int, code: int) -> Graph:
    nbits = n * (n - 1) // 2
    if code >> nbits:
        raise GraphError(f"edge code too wide for n={n}")
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def canonical_code(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    adj = g.adj
    total_bits = n * (n - 1) // 2
    degrees = [row.bit_count() for row in adj]
    best: int | None = None

    # search stack holds (placed tuple, remaining mask, code prefix, bits used)
    stack: list[tuple[tuple[int, ...], int, int, int]] = [((), (1 << n) - 1, 0, 0)]
    while stack:
        placed, remaining, prefix, used_bits = stack.pop()
        j = len(placed)
        if j == n:
            if best is None or prefix < best:
                best = prefix
            continue

        cands = []
        for u in bits(remaining):
            col = 0
            for p in placed:
                col = col << 1 | (adj[p] >> u & 1)
            cands.append((col, degrees[u], u))
        cands.sort()

        tried: list[tuple[int, int]] = []
        children = []
        for col, _, u in cands:
            child_prefix = prefix << j | col
            if best is not None and child_prefix > best >> (total_bits - used_bits - j):
                break
            twin = False
            for tcol, w in tried:
                if tcol == col and adj[u] & ~(1 << w) == adj[w] & ~(1 << u):
                    twin = True
                    break
            if twin:
                continue
            tried.append((col, u))
            children.append((placed + (u,), remaining ^ 1 << u, child_prefix, used_bits + j))
        # LIFO stack: push best column last so it is explored first
        stack.extend(reversed(children))

    assert best is not None
    return best


def canonical_graph6(g: Graph) -> str:
    """graph6 string of the canonically relabeled graph."""
    return chr(63 + g.n) + _pack_edge_bits(g.n, canonical_code(g))


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


# -- refinement-based canonical labeling -------------------------------------
#
# Minimum-code canonicalization explodes on sparse graphs beyond ~10 vertices
# (vast numbers of orderings tie on an all-zero prefix and none can be
# pruned), so memo keys use individualization-refinement instead: stabilize a
# vertex coloring by neighbor-color signatures, branch on the vertices of the
# first non-singleton color class, and take the minimum leaf code.  Every
# choice made is label-independent, so isomorphic graphs get equal codes;
# a leaf code is the edge code of an actual relabeling, so equal codes mean
# isomorphic graphs.


def _stable_coloring(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def _code_under_order(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        vj = order[j]
        for i in range(j):
            code = code << 1 | (adj[order[i]] >> vj & 1)
    return code


def refined_canonical_code(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    adj = g.adj
    best: int | None = None

    def descend(colors: list[int]) -> None:
        nonlocal best
        colors = _stable_coloring(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next(
            (cells[c] for c in sorted(cells) if len(cells[c]) > 1), None
        )
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code_under_order(adj, order)
            if best is None or code < best:
                best = code
            return
        tried: list[int] = []
        for u in target:
            if any(adj[u] & ~(1 << w) == adj[w] & ~(1 << u) for w in tried):
                continue  # twins: swapping them is an automorphism
            tried.append(u)
            branched = colors.copy()
            branched[u] = n  # fresh color, larger than any stable id
            descend(branched)

    descend([0] * n)
    assert best is not None
    return best


def refined_canonical_graph6(g: Graph) -> str:
    """graph6 of a canonical relabeling found by individualization-refinement.

    Equal strings exactly characterize isomorphism, like canonical_graph6,
    but this stays fast on sparse graphs of a few dozen vertices; the
    relabeling is generally a different representative than the minimum-code
    one.
    """
    return chr(63 + g.n) + _pack_edge_bits(g.n, refined_canonical_code(g))


_dedup_cache: dict[int, list[Graph]] = {}


def _dedup_classes(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by code.

    Built by extending each (n-1)-vertex representative with a new vertex
    attached in all 2^(n-1) ways; every n-vertex class arises this way
    because deleting any vertex of a representative lands in some smaller
    class.
    """
    if n in _dedup_cache:
        return _dedup_cache[n]
    if n == 0:
        reps = [Graph.empty(0)]
    else:
        codes = set()
        for h in _dedup_classes(n - 1):
            for attach in range(1 << (n - 1)):
                codes.add(canonical_code(h.add_vertex(attach)))
        reps = [graph_from_code(n, code) for code in sorted(codes)]
    _dedup_cache[n] = reps
    return reps


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All graphs on n labeled vertices, or one per isomorphism class.

    Labeled mode streams all 2^(n(n-1)/2) graphs in edge-code order; the
    caller owns the blowup.  Dedup mode is capped at n <= 8.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if dedup:
        if n > DEDUP_MAX_VERTICES:
            raise GraphError(f"dedup enumeration caps at n={DEDUP_MAX_VERTICES}, got {n}")
        yield from _dedup_classes(n)
    else:
        for code in range(1 << (n * (n - 1) // 2)):
            yield graph_from_code(n, code)
