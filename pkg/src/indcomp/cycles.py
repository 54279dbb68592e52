"""Chordless (induced) cycle enumeration and the ternary-graph test.

A graph is ternary when it has no induced cycle of length divisible by 3.
Cycles are enumerated by canonical path extension: induced paths grow from
their least vertex (the anchor), all other vertices strictly larger, and a
cycle is emitted only in the orientation whose second vertex is smaller than
its last.  Each chordless cycle therefore appears exactly once up to
rotation and reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graphs import Graph, bits


@dataclass(frozen=True)
class CycleWitness:
    """A chordless cycle, listed in traversal order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def is_chordless_cycle(g: Graph, vertices: tuple[int, ...]) -> bool:
    """True when ``vertices`` traverses an induced cycle of g."""
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            adjacent = g.has_edge(vertices[a], vertices[b])
            consecutive = b - a == 1 or (a == 0 and b == k - 1)
            if adjacent != consecutive:
                return False
    return True


def iter_chordless_cycles(g: Graph) -> Iterator[CycleWitness]:
    adj = g.adj
    n = g.n
    full = g.vertex_mask
    for a in range(n):
        above = full & ~((2 << a) - 1)
        for u in bits(adj[a] & above):
            # stack entries: (path, used mask, mask adjacent to interior vertices)
            stack = [((a, u), 1 << a | 1 << u, 0)]
            while stack:
                path, used, interior_adj = stack.pop()
                last = path[-1]
                # candidates extend the induced path: adjacent to last,
                # larger than the anchor, unused, no chord to the interior
                cand = adj[last] & above & ~used & ~interior_adj
                closing = cand & adj[a]
                for v in bits(closing):
                    if path[1] < v:
                        yield CycleWitness(path + (v,))
                for v in bits(cand & ~adj[a]):
                    stack.append((path + (v,), used | 1 << v, interior_adj | adj[last]))


def enumerate_chordless_cycles(
    g: Graph, stop_predicate: Callable[[CycleWitness], bool] | None = None
) -> list[CycleWitness]:
    """All chordless cycles, each once; stops early (inclusive) when
    ``stop_predicate`` fires on an emitted cycle."""
    out: list[CycleWitness] = []
    for witness in iter_chordless_cycles(g):
        out.append(witness)
        if stop_predicate is not None and stop_predicate(witness):
            break
    return out


def is_ternary(g: Graph) -> tuple[bool, CycleWitness | None]:
    """Whether g has no induced cycle of length divisible by 3.

    Returns (False, witness) with a violating cycle, or (True, None).
    """
    for witness in iter_chordless_cycles(g):
        if witness.length % 3 == 0:
            return False, witness
    return True, None
