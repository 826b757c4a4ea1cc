"""Slow, obviously-correct reference implementations used by the tests.

Nothing here imports the package: graphs are plain ``(n, edge list)`` pairs.
"""

from collections import deque
from itertools import permutations, product
from math import factorial


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_dist(n, edges):
    adj = adjacency(n, edges)
    out = []
    for s in range(n):
        d = [None] * n
        d[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if d[w] is None:
                    d[w] = d[u] + 1
                    q.append(w)
        out.append(d)
    return out


def brute_mdis(n, edges, k):
    """All maximal distance-k independent sets by checking every subset."""
    dist = bfs_dist(n, edges)
    near = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and dist[u][v] is not None and dist[u][v] <= k:
                near[u] |= 1 << v
    found = []
    for s in range(1 << n):
        members = [v for v in range(n) if s >> v & 1]
        if any(near[v] & s for v in members):
            continue
        if all(near[v] & s for v in range(n) if not s >> v & 1):
            found.append(sorted(members))
    return sorted(found)


def prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    return edges + [(u, v)]


def tree_code(n, edges):
    """Isomorphism invariant of a tree: lexicographically least rooted AHU string."""
    adj = adjacency(n, edges)

    def enc(v, parent):
        return "(" + "".join(sorted(enc(w, v) for w in adj[v] if w != parent)) + ")"

    return min(enc(r, -1) for r in range(n))


def _nonincreasing_multiplicity_sequences(n):
    # Prufer sequences where label i occurs at least as often as label i+1;
    # relabelling by degree shows every isomorphism class has one.
    def rec(prefix_counts, remaining):
        if remaining == 0:
            yield prefix_counts
            return
        cap = prefix_counts[-1] if prefix_counts else remaining
        if len(prefix_counts) == n:
            return
        for c in range(min(cap, remaining), 0, -1):
            yield from rec(prefix_counts + [c], remaining - c)

    for counts in rec([], n - 2):
        labels = [i for i, c in enumerate(counts) for _ in range(c)]
        yield from set(permutations(labels))


def unlabeled_tree_count(n, exhaustive_limit=7):
    """t(n) from decoded Prufer sequences and tree_code deduplication."""
    if n <= 2:
        return 1
    if n <= exhaustive_limit:
        seqs = product(range(n), repeat=n - 2)
    else:
        seqs = _nonincreasing_multiplicity_sequences(n)
    return len({tree_code(n, prufer_decode(list(s), n)) for s in seqs})


def labeled_count_by_classes(classes):
    """Sum of n!/|Aut| over (n, automorphism count) pairs."""
    return sum(factorial(n) // aut for n, aut in classes)


def contains_subtree(host_n, host_edges, pat_n, pat_edges):
    """Is there an injective edge-preserving map from the pattern into the host?"""
    hadj = adjacency(host_n, host_edges)
    padj = adjacency(pat_n, pat_edges)
    order = []
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        order.append(u)
        for w in sorted(padj[u]):
            if w not in seen:
                seen.add(w)
                q.append(w)
    image = {}

    def extend(i):
        if i == len(order):
            return True
        p = order[i]
        placed = [image[w] for w in padj[p] if w in image]
        cands = range(host_n) if not placed else hadj[placed[0]]
        for h in cands:
            if h in image.values():
                continue
            if all(x in hadj[h] for x in placed):
                image[p] = h
                if extend(i + 1):
                    return True
                del image[p]
        return False

    return extend(0)


def named_edges(pairs):
    """Turn ``"a/b,c/d"``-style vertex-name pairs into ``(n, edges)`` with names numbered
    in order of first appearance."""
    ids = {}
    edges = []
    for pair in pairs.replace(" ", "").replace("\n", "").split(","):
        if not pair:
            continue
        u, v = pair.split("/")
        edges.append((ids.setdefault(u, len(ids)), ids.setdefault(v, len(ids))))
    return len(ids), edges
