"""Enumeration of unlabeled free trees.

Trees are produced as canonical level sequences rooted at a central vertex
using the Wright-Richmond-Odlyzko-McKay successor scheme, so each
isomorphism class appears exactly once and no post-filtering is needed.
A level sequence lists vertex depths in preorder; the root has depth 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .tree_core import Tree

MAX_ORDER = 20


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_ORDER}, got {n}")


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted level sequence in decreasing canonical order.

    ``p`` defaults to the last position deeper than 1; the suffix from
    ``p`` on is refilled by repeating the block that starts at the parent
    of ``p``.
    """
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split into the first root branch (re-rooted) and the remainder."""
    m = len(seq)
    ones = [i for i, d in enumerate(seq) if d == 1]
    if len(ones) > 1:
        m = ones[1]
    first = [d - 1 for d in seq[1:m]]
    rest = [0] + seq[m:]
    return first, rest


def _next_free(seq: list[int]) -> list[int]:
    """Return ``seq`` if it is a valid free-tree sequence, else the next candidate.

    A sequence is valid when its root is central: the remainder must be at
    least as tall as the first branch and, at equal heights, no smaller in
    size and, at equal size, no smaller in order.
    """
    first, rest = _split(seq)
    h1, h2 = max(first), max(rest)
    valid = h2 >= h1
    if valid and h1 == h2:
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            valid = False
    if valid:
        return seq
    p = len(first)
    nxt = _next_rooted(seq, p)
    if seq[p] > 2:
        new_first, _ = _split(nxt)
        tail = list(range(1, max(new_first) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Central-rooted canonical level sequences of all free trees on ``n`` vertices."""
    _check_order(n)
    if n == 1:
        yield (0,)
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        yield tuple(seq)
        seq = _next_rooted(seq)


def tree_from_levels(seq: tuple[int, ...] | list[int]) -> Tree:
    parents = []
    stack: list[int] = []
    for i, depth in enumerate(seq):
        del stack[depth:]
        parents.append(stack[-1] if stack else -1)
        stack.append(i)
    return Tree.from_parents(parents)


class TreeStream:
    """Deterministic stream of free trees on ``n`` vertices.

    With ``total > 1`` only every ``total``-th tree starting at index
    ``shard`` is emitted; the shards of one ``n`` partition the stream.
    Iterating twice yields the same sequence.
    """

    def __init__(self, n: int, shard: int = 0, total: int = 1):
        _check_order(n)
        if total < 1 or not 0 <= shard < total:
            raise ValueError(f"invalid shard {shard}/{total}")
        self.n = n
        self.shard = shard
        self.total = total

    def __iter__(self) -> Iterator[Tree]:
        for i, seq in enumerate(level_sequences(self.n)):
            if i % self.total == self.shard:
                yield tree_from_levels(seq)

    def __repr__(self) -> str:
        return f"TreeStream(n={self.n}, shard={self.shard}, total={self.total})"


def all_free_trees(n: int) -> TreeStream:
    return TreeStream(n)


def stream_partition(n: int, shard: int, total: int) -> TreeStream:
    return TreeStream(n, shard, total)


@lru_cache(maxsize=None)
def t(m: int) -> int:
    """Number of unlabeled trees on ``m`` vertices, by counting the stream."""
    return sum(1 for _ in level_sequences(m))


@lru_cache(maxsize=None)
def _rooted_counts(m: int) -> tuple[int, ...]:
    r = [0, 1]
    for size in range(1, m):
        total = 0
        for j in range(1, size + 1):
            s = sum(d * r[d] for d in range(1, j + 1) if j % d == 0)
            total += s * r[size - j + 1]
        r.append(total // size)
    return tuple(r)


def count_free_trees(m: int) -> int:
    """Number of unlabeled trees on ``m`` vertices via Otter's formula.

    Works for any ``m >= 1`` without enumeration.
    """
    if m < 1:
        raise ValueError("m must be positive")
    r = _rooted_counts(m)
    pairs = sum(r[i] * r[m - i] for i in range(1, m))
    if m % 2 == 0:
        pairs -= r[m // 2]
    return r[m] - pairs // 2
