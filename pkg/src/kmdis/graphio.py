"""graph6 and plain edge-list interchange formats."""

from __future__ import annotations

from .tree_core import Graph, Tree

HEADER = ">>graph6<<"


def _size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise ValueError("graph6 size field supports at most 258047 vertices here")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (upper triangle, column by column)."""
    flat = []
    for j in range(1, g.n):
        col = g.adj[j]
        flat.extend(col >> i & 1 for i in range(j))
    flat.extend([0] * (-len(flat) % 6))
    body = [
        sum(bit << (5 - pos) for pos, bit in enumerate(flat[i:i + 6]))
        for i in range(0, len(flat), 6)
    ]
    text = "".join(chr(x + 63) for x in _size_bytes(g.n) + body)
    return HEADER + text if header else text


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    data = [ord(c) - 63 for c in text]
    if not data or any(not 0 <= x <= 63 for x in data):
        raise ValueError(f"not a graph6 string: {text!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n, rest = (data[1] << 12) | (data[2] << 6) | data[3], data[4:]
    else:
        raise ValueError("graph6 sizes above 258047 are not supported")
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ValueError(f"graph6 body length {len(rest)} does not match n={n}")
    flat = [(x >> (5 - pos)) & 1 for x in rest for pos in range(6)]
    if any(flat[need:]):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if flat[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` pairs, 0-indexed.

    Blank lines and ``#`` comments are ignored.
    """
    rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise ValueError("edge list must start with the vertex count on its own line")
    n = int(rows[0][0])
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"malformed edge line: {' '.join(r)!r}")
        edges.append((int(r[0]), int(r[1])))
    return Graph.from_edges(n, edges)


def as_tree(g: Graph) -> Tree:
    """Re-validate a graph as a tree; raises ``ValueError`` if it is not one."""
    return g if isinstance(g, Tree) else Tree(g.n, g.adj)
