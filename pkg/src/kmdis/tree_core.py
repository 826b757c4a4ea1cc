"""Graph and tree data model with metric and structural queries.

Vertex sets are plain ``int`` bit masks (bit ``v`` set means vertex ``v`` is
a member).  Graphs are capped at 64 vertices so every set fits one word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour mask of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return to_list(self.adj[v])

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertices


class Tree(Graph):
    """A connected graph with exactly ``n - 1`` edges."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.num_edges() != self.n - 1 or not self.is_connected():
            raise ValueError("not a tree: must be connected with n-1 edges")

    @classmethod
    def from_parents(cls, parents: list[int]) -> "Tree":
        """Build from a parent array; the root has parent ``-1``."""
        return cls.from_edges(len(parents), [(p, v) for v, p in enumerate(parents) if p >= 0])


def path_tree(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """The star S_n on ``n`` vertices, centre 0."""
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


# ---------------------------------------------------------------------------
# metric queries

@lru_cache(maxsize=4096)
def distances(g: Graph) -> tuple[tuple[int | None, ...], ...]:
    """All-pairs hop distances by BFS; ``None`` marks unreachable pairs."""
    table = []
    for s in range(g.n):
        row: list[int | None] = [None] * g.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in bits(g.adj[u]):
                if row[w] is None:
                    row[w] = du
                    queue.append(w)
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=4096)
def balls(g: Graph, s: int) -> tuple[int, ...]:
    """Closed balls ``N_s[v]`` for every vertex, as masks."""
    if s < 0:
        raise ValueError("radius must be non-negative")
    d = distances(g)
    out = []
    for v in range(g.n):
        mask = 0
        for u, duv in enumerate(d[v]):
            if duv is not None and duv <= s:
                mask |= 1 << u
        out.append(mask)
    return tuple(out)


def ball(g: Graph, v: int, s: int) -> int:
    """Closed ball N_s[v]: vertices at distance at most ``s`` from ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return balls(g, s)[v]


def sphere(g: Graph, v: int, s: int) -> int:
    """Vertices at distance exactly ``s`` from ``v``."""
    if s == 0:
        return 1 << v
    return ball(g, v, s) & ~ball(g, v, s - 1)


def eccentricity(t: Graph, v: int) -> int:
    row = distances(t)[v]
    if any(d is None for d in row):
        raise ValueError("eccentricity undefined on a disconnected graph")
    return max(row)


def _eccentricities(t: Tree) -> list[int]:
    return [max(row) for row in distances(t)]


def diameter(t: Tree) -> int:
    return max(_eccentricities(t))


def center(t: Tree) -> int:
    """Mask of the one or two vertices of minimum eccentricity."""
    ecc = _eccentricities(t)
    lo = min(ecc)
    return to_mask(v for v, e in enumerate(ecc) if e == lo)


def center_by_stripping(t: Tree) -> int:
    """Centre by repeatedly deleting all leaves (independent of distances)."""
    alive = t.vertices
    while alive.bit_count() > 2:
        strip = 0
        for v in bits(alive):
            if (t.adj[v] & alive).bit_count() <= 1:
                strip |= 1 << v
        alive &= ~strip
    return alive


# ---------------------------------------------------------------------------
# structural queries

def leaves(t: Tree) -> int:
    if t.n == 1:
        return 1
    return to_mask(v for v in range(t.n) if t.adj[v].bit_count() == 1)


def branching_vertices(t: Tree) -> int:
    return to_mask(v for v in range(t.n) if t.adj[v].bit_count() >= 3)


def _leaf_eccentricity_extremes(t: Tree, pick) -> int:
    ecc = _eccentricities(t)
    lv = to_list(leaves(t))
    target = pick(ecc[v] for v in lv)
    return to_mask(v for v in lv if ecc[v] == target)


def diametral_leaves(t: Tree) -> int:
    return _leaf_eccentricity_extremes(t, max)


def central_leaves(t: Tree) -> int:
    return _leaf_eccentricity_extremes(t, min)


def pendant_paths(t: Tree) -> list[list[int]]:
    """Maximal leaf-anchored paths avoiding branching vertices.

    Each path is listed from its leaf inwards.  When the tree is itself a
    path, the central vertex (or both central vertices) are excluded so
    the two halves are reported separately.
    """
    if t.n <= 2:
        return []
    stop = branching_vertices(t)
    if not stop:
        stop = center(t)
    paths = []
    for leaf in bits(leaves(t)):
        path = [leaf]
        prev, cur = -1, leaf
        while True:
            nxt = [w for w in bits(t.adj[cur]) if w != prev]
            if not nxt or stop >> nxt[0] & 1:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        paths.append(path)
    return paths


def components(g: Graph, within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``."""
    out = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & within & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def main_subtree_masks(t: Tree) -> list[int]:
    """Vertex masks of the components left after deleting the centre."""
    return components(t, t.vertices & ~center(t))


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..m-1``; also returns new->old map."""
    old = to_list(mask)
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    sub = Graph.from_edges(len(old), edges)
    if len(edges) == sub.n - 1 and sub.is_connected():
        sub = Tree(sub.n, sub.adj)
    return sub, old


def main_subtrees(t: Tree) -> list[Tree]:
    return [induced_subgraph(t, m)[0] for m in main_subtree_masks(t)]


def delete_vertex(t: Tree, v: int) -> Tree:
    """Remove leaf ``v``; vertices above ``v`` shift down by one."""
    if t.n < 2 or t.adj[v].bit_count() != 1:
        raise ValueError(f"vertex {v} is not a deletable leaf")
    sub, _ = induced_subgraph(t, t.vertices & ~(1 << v))
    return sub


def add_leaf(t: Tree, v: int) -> Tree:
    """Attach a new vertex ``n`` to ``v``."""
    n = t.n
    adj = list(t.adj) + [1 << v]
    adj[v] |= 1 << n
    return Tree(n + 1, tuple(adj))


# ---------------------------------------------------------------------------
# k-twins and reductions

def _require_k(k: int) -> None:
    if k < 2:
        raise ValueError("k-twin notions are defined only for k >= 2")


def twin_vertices(t: Tree, k: int) -> int:
    """Mask of all k-twins: vertices sharing their closed k-ball with another vertex."""
    _require_k(k)
    seen: dict[int, int] = {}
    for v, b in enumerate(balls(t, k)):
        seen[b] = seen.get(b, 0) | 1 << v
    return to_mask(v for group in seen.values() if group.bit_count() > 1 for v in bits(group))


def is_k_twin(t: Tree, u: int, k: int) -> bool:
    return bool(twin_vertices(t, k) >> u & 1)


def diametral_k_twins(t: Tree, k: int) -> int:
    return diametral_leaves(t) & twin_vertices(t, k)


def k_special_pairs(t: Tree, k: int) -> list[tuple[int, int]]:
    """Pairs of diametral twin leaves whose closed k-balls differ."""
    cand = to_list(diametral_k_twins(t, k))
    b = balls(t, k)
    return [(x, y) for i, x in enumerate(cand) for y in cand[i + 1:] if b[x] != b[y]]


def reduce_step(t: Tree, k: int) -> list[tuple[int, Tree]]:
    """Every k-twin leaf together with the tree left after deleting it."""
    if t.n < 2:
        return []
    cand = leaves(t) & twin_vertices(t, k)
    return [(v, delete_vertex(t, v)) for v in bits(cand)]


def is_m_reducible(t: Tree, k: int, m: int) -> bool:
    """Whether a chain of ``m`` successive twin-leaf deletions exists."""
    from .canon import canonical_form

    if m < 1:
        raise ValueError("m must be at least 1")
    _require_k(k)
    dead: set[tuple] = set()

    def search(tree: Tree, left: int) -> bool:
        if left == 0:
            return True
        key = (canonical_form(tree), left)
        if key in dead:
            return False
        for _, smaller in reduce_step(tree, k):
            if search(smaller, left - 1):
                return True
        dead.add(key)
        return False

    return search(t, m)
