"""Enumeration and counting of maximal distance-k independent sets.

A set is distance-k independent exactly when it is independent in the
k-th power graph (edges between distinct vertices at distance <= k), and
maximality carries over, so everything reduces to maximal independent
set enumeration on the power graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .graphio import to_graph6
from .tree_core import Graph, Tree, balls, bits, leaves, to_list


@dataclass(frozen=True)
class PowerGraph:
    base: Graph
    k: int
    adj: tuple[int, ...]


def power_graph(g: Graph, k: int) -> PowerGraph:
    if k < 1:
        raise ValueError("k must be at least 1")
    return PowerGraph(g, k, tuple(b & ~(1 << v) for v, b in enumerate(balls(g, k))))


def maximal_independent_sets(adj: tuple[int, ...] | list[int]) -> Iterator[int]:
    """Yield every maximal independent set of the graph given by neighbour masks.

    Bron-Kerbosch with pivoting run on the complement graph: a maximal
    clique of the complement is a maximal independent set of the input.
    """
    n = len(adj)
    if n == 0:
        yield 0
        return
    full = (1 << n) - 1
    co = [full & ~adj[v] & ~(1 << v) for v in range(n)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p:
            if not x:
                yield r
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (p & co[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~co[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & co[v], x & co[v])
            p &= ~bit
            x |= bit

    yield from expand(0, full, 0)


@dataclass(frozen=True)
class MdisFamily:
    """All k-MDISs of ``graph``, as masks sorted by value."""

    graph: Graph
    k: int
    sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [to_list(s) for s in self.sets]

    def to_text(self) -> str:
        return "".join(" ".join(map(str, s)) + "\n" for s in self.as_lists())

    def to_json(self) -> str:
        return json.dumps(
            {"graph": to_graph6(self.graph), "k": self.k, "count": len(self.sets), "sets": self.as_lists()}
        )


def enumerate_mdis(g: Graph, k: int) -> MdisFamily:
    sets = sorted(maximal_independent_sets(power_graph(g, k).adj))
    return MdisFamily(g, k, tuple(sets))


def mdi(g: Graph, k: int, limit: int | None = None) -> int:
    """Number of k-MDISs of ``g``.

    With ``limit`` set, counting stops once the count exceeds ``limit`` and
    ``limit + 1`` is returned; callers that only need to compare against a
    threshold use this to skip the rest of the search.
    """
    count = 0
    for _ in maximal_independent_sets(power_graph(g, k).adj):
        count += 1
        if limit is not None and count > limit:
            break
    return count


def mdi_star(t: Tree, leaf: int, k: int) -> int:
    """Count k-MDISs ``J`` containing ``leaf`` such that some ``w`` outside ``J``
    has ``N_k[w]`` meeting ``J`` exactly in ``leaf``."""
    if t.n < 2 or not leaves(t) >> leaf & 1:
        raise ValueError(f"vertex {leaf} is not a leaf of the tree")
    b = balls(t, k)
    me = 1 << leaf
    count = 0
    for j in maximal_independent_sets(power_graph(t, k).adj):
        if j & me and any(b[w] & j == me for w in range(t.n) if not j >> w & 1):
            count += 1
    return count


# ---------------------------------------------------------------------------
# non-tree example graphs

def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, connections) -> Graph:
    """Circulant graph: ``i ~ i +- c (mod n)`` for every offset ``c``."""
    offsets = sorted(set(connections))
    if n < 3 or not offsets or any(not 1 <= c <= n // 2 for c in offsets):
        raise ValueError(f"offsets must lie in 1..{n // 2}")
    edges = {tuple(sorted((i, (i + c) % n))) for i in range(n) for c in offsets}
    return Graph.from_edges(n, sorted(edges))


def hypercube(d: int) -> Graph:
    if not 1 <= d <= 6:
        raise ValueError("hypercube dimension must be in 1..6")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])
