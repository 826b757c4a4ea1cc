"""Canonical forms, isomorphism and subtree containment for trees.

A canonical form is built from sorted rooted level sequences (AHU style).
A tree with one central vertex is keyed by the level sequence rooted
there; a tree with a central edge is cut at that edge and keyed by the
ordered pair of the two halves' sequences.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from collections import Counter

from .tree_core import Tree, bits, center, to_list

CanonicalForm = tuple[tuple[int, ...], ...]


def _rooted_sequence(t: Tree, v: int, parent: int) -> tuple[int, ...]:
    kids = sorted(
        (_rooted_sequence(t, c, v) for c in bits(t.adj[v]) if c != parent),
        reverse=True,
    )
    seq = [0]
    for kid in kids:
        seq.extend(x + 1 for x in kid)
    return tuple(seq)


@lru_cache(maxsize=65536)
def canonical_form(t: Tree) -> CanonicalForm:
    cs = to_list(center(t))
    if len(cs) == 1:
        return (_rooted_sequence(t, cs[0], -1),)
    a, b = cs
    halves = sorted((_rooted_sequence(t, a, b), _rooted_sequence(t, b, a)), reverse=True)
    return tuple(halves)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def _parents_from_sequence(seq: tuple[int, ...], offset: int) -> list[int]:
    parents = []
    stack: list[int] = []
    for i, depth in enumerate(seq):
        del stack[depth:]
        parents.append(stack[-1] + offset if stack else -1)
        stack.append(i)
    return parents


def tree_from_canonical(key: CanonicalForm) -> Tree:
    """Inverse of :func:`canonical_form` up to labelling."""
    parents = _parents_from_sequence(key[0], 0)
    if len(key) == 2:
        second = _parents_from_sequence(key[1], len(parents))
        second[0] = 0
        parents += second
    return Tree.from_parents(parents)


def _rooted_automorphisms(t: Tree, v: int, parent: int) -> tuple[tuple[int, ...], int]:
    kids = [_rooted_automorphisms(t, c, v) for c in bits(t.adj[v]) if c != parent]
    count = 1
    for _, a in kids:
        count *= a
    for mult in Counter(code for code, _ in kids).values():
        count *= factorial(mult)
    kids.sort(reverse=True)
    seq = [0]
    for code, _ in kids:
        seq.extend(x + 1 for x in code)
    return tuple(seq), count


def automorphism_count(t: Tree) -> int:
    cs = to_list(center(t))
    if len(cs) == 1:
        return _rooted_automorphisms(t, cs[0], -1)[1]
    a, b = cs
    code_a, aut_a = _rooted_automorphisms(t, a, b)
    code_b, aut_b = _rooted_automorphisms(t, b, a)
    return aut_a * aut_b * (2 if code_a == code_b else 1)


def _has_saturating_matching(left: int, options: list[list[int]]) -> bool:
    """Kuhn's augmenting paths; every left vertex must be matched."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in options[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(left))


def contains_subtree(host: Tree, pattern: Tree) -> bool:
    """Whether ``pattern`` is isomorphic to a (not necessarily induced) subgraph of ``host``.

    The pattern is rooted at one of its central vertices; for each host
    vertex as the image of that root, children are matched recursively by
    bipartite matching between pattern branches and host branches.
    """
    if pattern.n > host.n:
        return False
    memo: dict[tuple[int, int, int, int], bool] = {}

    def fits(pv: int, pp: int, hv: int, hp: int) -> bool:
        key = (pv, pp, hv, hp)
        hit = memo.get(key)
        if hit is not None:
            return hit
        pkids = [c for c in bits(pattern.adj[pv]) if c != pp]
        hkids = [c for c in bits(host.adj[hv]) if c != hp]
        ok = len(pkids) <= len(hkids)
        if ok and pkids:
            options = [[j for j, hc in enumerate(hkids) if fits(pc, pv, hc, hv)] for pc in pkids]
            ok = all(options) and _has_saturating_matching(len(pkids), options)
        memo[key] = ok
        return ok

    root = to_list(center(pattern))[0]
    return any(fits(root, -1, hv, -1) for hv in range(host.n))
