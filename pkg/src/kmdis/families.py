"""The lower bound f_k(n), named extremal trees and Add-closures.

Descriptor strings (parse/format round-trip)::

    P(n=5)  Star(n=5)  S(p=3,m=2)  S'(p=4,m=3)  S''(p=3)  S'''(p=3)
    B(3,2;s=2)  Bfam(5;s=2)
    Add(k=4,r=2,base=S'(p=5,m=3),variant=twin_free)
    Add(k=2,r=1,base=S'(p=3,m=2),variant=special_free)

``S''`` and ``S'''`` always have arm length 2.  ``Bfam(p;s)`` is the
family of all ``B(p1,p2;s)`` with ``p1 + p2 = p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .canon import canonical_form, contains_subtree
from .tree_core import (
    Tree,
    add_leaf,
    diameter,
    diametral_k_twins,
    distances,
    k_special_pairs,
    path_tree,
    star_tree,
)

TWIN_FREE = "twin_free"
SPECIAL_FREE = "special_free"


def f(k: int, n: int) -> int:
    """Minimum number of k-MDISs over all n-vertex trees."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if n <= k + 1:
        return n
    return n - (n - k % 2) // (k // 2 + 1) + 1


def lemma1_check(k: int, n: int) -> bool:
    """Step behaviour of ``f``: flat steps exactly at the divisibility points,
    and a shift by ``k//2 + 1`` in ``n`` adds ``k//2``."""
    h = k // 2 + 1
    step = f(k, n) - f(k, n - 1)
    flat = (n - k % 2) % h == 0
    first = step == 0 if flat else step == 1
    return first and f(k, n + h) == f(k, n) + k // 2


# ---------------------------------------------------------------------------
# constructors

def spider(arms: list[int]) -> Tree:
    """Centre 0 with one pendant path of each given length."""
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edges(nxt, edges)


def s_tree(p: int, m: int) -> Tree:
    """S_{p,m}: ``p`` paths on ``m`` vertices hung from a new centre."""
    return spider([m] * p)


def s_prime(p: int, m: int) -> Tree:
    """S_{p,m} with one deepest leaf removed."""
    return spider([m] * (p - 1) + [m - 1])


def s_dprime(p: int) -> Tree:
    """S'_{p,2} plus a leaf at its centre."""
    return spider([2] * (p - 1) + [1, 1])


def s_tprime(p: int) -> Tree:
    """S_{p-1,2} plus a leaf on a degree-2 neighbour of the centre."""
    return add_leaf(s_tree(p - 1, 2), 1)


def b_tree(p1: int, p2: int, s: int) -> Tree:
    """Adjacent central vertices 0 and 1 carrying ``p1`` and ``p2`` paths on ``s`` vertices."""
    edges = [(0, 1)]
    nxt = 2
    for hub, count in ((0, p1), (1, p2)):
        for _ in range(count):
            prev = hub
            for _ in range(s):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree.from_edges(nxt, edges)


def b_family(p: int, s: int) -> list[Tree]:
    return [b_tree(p1, p - p1, s) for p1 in range(1, p // 2 + 1)]


# ---------------------------------------------------------------------------
# Add-closures

def _variant_ok(t: Tree, k: int, variant: str) -> bool:
    if variant == TWIN_FREE:
        return not diametral_k_twins(t, k)
    return not k_special_pairs(t, k)


def add_closure(base, k: int, r: int, variant: str = TWIN_FREE) -> list[Tree]:
    """All trees with ``r`` more vertices than a base tree, the same diameter,
    containing the base, and free of diametral k-twins (``twin_free``) or
    of k-special pairs (``special_free``).

    ``base`` may be a tree or a list of trees (the closure of a family is
    the union).  One representative per isomorphism class is returned,
    sorted by canonical form.
    """
    if variant not in (TWIN_FREE, SPECIAL_FREE):
        raise ValueError(f"unknown variant {variant!r}")
    if k < 2 or r < 0:
        raise ValueError("need k >= 2 and r >= 0")
    bases = [base] if isinstance(base, Tree) else list(base)
    found: dict = {}
    for b in bases:
        if diametral_k_twins(b, k):
            raise ValueError("base tree has diametral k-twins")
        d = diameter(b)
        level = {canonical_form(b): b}
        for _ in range(r):
            grown: dict = {}
            for t in level.values():
                ecc = [max(row) for row in distances(t)]
                for v in range(t.n):
                    if ecc[v] + 1 <= d:
                        bigger = add_leaf(t, v)
                        grown.setdefault(canonical_form(bigger), bigger)
            level = grown
        for key, t in level.items():
            if key in found:
                continue
            if diameter(t) == d and contains_subtree(t, b) and _variant_ok(t, k, variant):
                found[key] = t
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# descriptors

_GRAMMAR = {
    # kind: (printed name, positional fields)
    "P": ("P", ("n",)),
    "S_star": ("Star", ("n",)),
    "S_nm": ("S", ("p", "m")),
    "S_prime": ("S'", ("p", "m")),
    "S_dprime": ("S''", ("p",)),
    "S_tprime": ("S'''", ("p",)),
    "B_single": ("B", ("p1", "p2", "s")),
    "B_family": ("Bfam", ("p", "s")),
    "Add": ("Add", ("k", "r")),
    "AddStar": ("Add", ("k", "r")),
}
_BY_NAME = {name: kind for kind, (name, _) in _GRAMMAR.items() if kind != "AddStar"}
_MIN = {"P": (1,), "S_star": (1,), "S_nm": (1, 1), "S_prime": (1, 1), "S_dprime": (2,),
        "S_tprime": (3,), "B_single": (1, 1, 1), "B_family": (2, 1), "Add": (2, 0), "AddStar": (2, 0)}


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    params: tuple[int, ...]
    base: "FamilyDescriptor | None" = None

    def __post_init__(self) -> None:
        if self.kind not in _GRAMMAR:
            raise ValueError(f"unknown family kind {self.kind!r}")
        fields = _GRAMMAR[self.kind][1]
        if len(self.params) != len(fields):
            raise ValueError(f"{self.kind} takes parameters {fields}")
        for name, value, lo in zip(fields, self.params, _MIN[self.kind]):
            if value < lo:
                raise ValueError(f"{self.kind}: {name} must be at least {lo}")
        is_add = self.kind in ("Add", "AddStar")
        if is_add != (self.base is not None):
            raise ValueError("a base descriptor is required exactly for Add kinds")
        if self.base is not None and self.base.kind in ("Add", "AddStar"):
            raise ValueError("nested Add closures are not supported")

    @property
    def variant(self) -> str | None:
        return {"Add": TWIN_FREE, "AddStar": SPECIAL_FREE}.get(self.kind)

    def __str__(self) -> str:
        name, fields = _GRAMMAR[self.kind]
        p = self.params
        if self.kind == "B_single":
            return f"B({p[0]},{p[1]};s={p[2]})"
        if self.kind == "B_family":
            return f"Bfam({p[0]};s={p[1]})"
        args = ",".join(f"{k}={v}" for k, v in zip(fields, p))
        if self.base is not None:
            args += f",base={self.base},variant={self.variant}"
        return f"{name}({args})"


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur.strip())
    return parts


_HEAD = re.compile(r"\s*([A-Za-z]+'*\*?)\s*\((.*)\)\s*$", re.S)


def parse_descriptor(text: str) -> FamilyDescriptor:
    m = _HEAD.match(text)
    if not m:
        raise ValueError(f"malformed family descriptor: {text!r}")
    name, body = m.groups()
    star = name.endswith("*")
    name = name.rstrip("*")
    if name not in _BY_NAME:
        raise ValueError(f"unknown family name {name!r}")
    kind = _BY_NAME[name]
    fields = _GRAMMAR[kind][1]
    if kind == "Add":
        fields = fields + ("base", "variant")
    values: dict[str, str] = {}
    for pos, arg in enumerate(_split_args(body)):
        key, eq, val = arg.partition("=")
        if eq and "(" not in key:
            key = key.strip()
        else:
            if pos >= len(fields):
                raise ValueError(f"too many arguments in {text!r}")
            key, val = fields[pos], arg
        if key not in fields or key in values:
            raise ValueError(f"unexpected or repeated argument {key!r} in {text!r}")
        values[key] = val.strip()
    base = None
    if kind == "Add":
        if "base" not in values:
            raise ValueError("Add needs a base")
        base = parse_descriptor(values.pop("base"))
        variant = values.pop("variant", SPECIAL_FREE if star else TWIN_FREE)
        if variant not in (TWIN_FREE, SPECIAL_FREE):
            raise ValueError(f"unknown variant {variant!r}")
        if variant == SPECIAL_FREE:
            kind = "AddStar"
        fields = fields[:2]
    missing = [k for k in fields if k not in values]
    if missing:
        raise ValueError(f"missing argument(s) {missing} in {text!r}")
    try:
        params = tuple(int(values[k]) for k in fields)
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    return FamilyDescriptor(kind, params, base)


def make(desc: FamilyDescriptor | str):
    """Build the tree (or list of trees, for families and closures) named by ``desc``."""
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    p = desc.params
    kind = desc.kind
    if kind == "P":
        return path_tree(p[0])
    if kind == "S_star":
        return star_tree(p[0])
    if kind == "S_nm":
        return s_tree(*p)
    if kind == "S_prime":
        return s_prime(*p)
    if kind == "S_dprime":
        return s_dprime(*p)
    if kind == "S_tprime":
        return s_tprime(*p)
    if kind == "B_single":
        return b_tree(*p)
    if kind == "B_family":
        return b_family(*p)
    base = make(desc.base)
    return add_closure(base, p[0], p[1], desc.variant)
