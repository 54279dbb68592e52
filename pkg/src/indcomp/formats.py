"""graph6 (short form) and plain edge-list text codecs.

graph6 layout: header byte 63+n, then the upper triangle of the adjacency
matrix column by column (bit (i, j) for i < j, columns in increasing j),
packed big-endian into 6-bit groups, each group offset by 63, zero-padded
to a 6-bit boundary.  Only the short form (n <= 62) is supported.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

G6_MAX_VERTICES = 62
_OPTIONAL_PREFIX = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(_OPTIONAL_PREFIX):
        base = len(_OPTIONAL_PREFIX)
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 string", base)

    header = ord(line[0])
    if header == 126:
        raise Graph6Error("long-form header (n > 62) not supported", base)
    if not 63 <= header <= 63 + G6_MAX_VERTICES:
        raise Graph6Error(f"invalid header byte {header}", base)
    n = header - 63

    nbits = n * (n - 1) // 2
    ngroups = -(-nbits // 6)
    body = line[1:]
    if len(body) < ngroups:
        raise Graph6Error(
            f"truncated bit stream: need {ngroups} data bytes, found {len(body)}",
            base + 1 + len(body),
        )
    if len(body) > ngroups:
        raise Graph6Error("trailing garbage after bit stream", base + 1 + ngroups)

    value = 0
    for k, ch in enumerate(body):
        group = ord(ch) - 63
        if not 0 <= group <= 63:
            raise Graph6Error(f"invalid data byte {ord(ch)}", base + 1 + k)
        value = value << 6 | group

    pad = ngroups * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + ngroups)
    value >>= pad

    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    if g.n > G6_MAX_VERTICES:
        raise GraphError(f"graph6 short form caps at {G6_MAX_VERTICES} vertices, got {g.n}")
    return chr(63 + g.n) + _pack_edge_bits(g.n, _edge_code(g))


def _edge_code(g: Graph) -> int:
    """Upper-triangle column-major edge bits as one integer, first pair most significant."""
    code = 0
    for j in range(1, g.n):
        for i in range(j):
            code = code << 1 | (g.adj[i] >> j & 1)
    return code


def _pack_edge_bits(n: int, code: int) -> str:
    nbits = n * (n - 1) // 2
    ngroups = -(-nbits // 6)
    value = code << (ngroups * 6 - nbits)
    return "".join(chr(63 + (value >> 6 * (ngroups - 1 - k) & 63)) for k in range(ngroups))


def parse_edge_list(text: str) -> Graph:
    """Decode the plain text format: first line ``n m``, then m lines ``u v``."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"line 1: expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"line 1: expected integers 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {k}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {k}: expected integers 'u v', got {ln!r}") from None
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
