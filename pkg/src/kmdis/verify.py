"""Exhaustive desk-scale verification sweeps and lemma checks.

A sweep scans every unlabeled tree on ``n`` vertices, records the minimum
number of k-MDISs and the trees attaining it, and compares them with the
set predicted by the characterization of minimal trees.  Predictions are
built only from the family constructors, never from sweep output.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator

from .canon import CanonicalForm, canonical_form
from .families import f, lemma1_check, make, s_prime, s_tree, b_family, add_closure
from .mdis import mdi, mdi_star, power_graph, maximal_independent_sets
from .tree_core import (
    Graph,
    Tree,
    balls,
    bits,
    branching_vertices,
    center,
    central_leaves,
    delete_vertex,
    diameter,
    diametral_k_twins,
    diametral_leaves,
    disjoint_union,
    induced_subgraph,
    leaves,
    main_subtree_masks,
    path_tree,
    pendant_paths,
    to_mask,
    twin_vertices,
)
from .treegen import TreeStream, all_free_trees, count_free_trees, t as tree_count

DEFAULT_CAP = 16


@dataclass
class VerificationReport:
    k: int
    n: int
    min_mdi: int
    f_value: int
    minimizers: list[CanonicalForm]
    predicted: list[CanonicalForm]
    verdict: str
    timing: float | None = None
    shard: str = "0/1"

    @property
    def count(self) -> int:
        return len(self.minimizers)

    def to_dict(self, include_timing: bool = False) -> dict:
        d = asdict(self)
        d["minimizers"] = [[list(part) for part in key] for key in self.minimizers]
        d["predicted"] = [[list(part) for part in key] for key in self.predicted]
        if not include_timing:
            d["timing"] = None
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        d["minimizers"] = [tuple(tuple(part) for part in key) for key in d["minimizers"]]
        d["predicted"] = [tuple(tuple(part) for part in key) for key in d["predicted"]]
        return cls(**d)

    def csv_row(self) -> list:
        return [self.k, self.n, self.f_value, self.min_mdi, self.count, self.verdict]


CSV_HEADER = ["k", "n", "f", "min", "count", "verdict"]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def _verdict(min_mdi: int, f_value: int, minimizers, predicted) -> str:
    return "match" if min_mdi == f_value and set(minimizers) == set(predicted) else "mismatch"


# ---------------------------------------------------------------------------
# predicted minimizers

@lru_cache(maxsize=None)
def _family_keys(desc: str) -> tuple[CanonicalForm, ...]:
    built = make(desc)
    trees = [built] if isinstance(built, Tree) else built
    return tuple(canonical_form(x) for x in trees)


def predicted_descriptors(k: int, n: int) -> list[str] | None:
    """Descriptors whose union is the predicted class of k-minimal n-vertex trees.

    ``None`` means every n-vertex tree is predicted to be minimal.
    """
    if n <= k + 1:
        return None
    h = k // 2 + 1
    if k % 2 == 0:
        if n == k + 2:
            return [f"P(n={k + 2})"]
        if n <= 3 * k // 2 + 2:
            r = n - k - 2
            return [
                f"Add(k={k},r={r},base=P(n={k + 2}),variant=special_free)",
                f"Add(k={k},r={r - 1},base=P(n={k + 3}),variant=twin_free)",
            ]
        p, r = divmod(n, h)
        return [f"Add(k={k},r={r},base=S'(p={p},m={h}),variant=twin_free)"]
    p, r = divmod(n - 1, h)
    if r == 0:
        return [f"S(p={p},m={h})"]
    return [
        f"Add(k={k},r={r},base=S(p={p},m={h}),variant=special_free)",
        f"Add(k={k},r={r - 1},base=Bfam({p};s={h}),variant=twin_free)",
    ]


def predicted_minimizers(k: int, n: int) -> list[CanonicalForm]:
    descs = predicted_descriptors(k, n)
    if descs is None:
        keys = {canonical_form(x) for x in all_free_trees(n)}
    else:
        keys = {key for d in descs for key in _family_keys(d)}
    return sorted(keys)


# ---------------------------------------------------------------------------
# sweeps

def _scan(k: int, n: int, shard: int, total: int, progress: Callable[[int], None] | None = None):
    best: int | None = None
    keys: list[CanonicalForm] = []
    for i, tree in enumerate(TreeStream(n, shard, total), 1):
        c = mdi(tree, k, best)
        if best is None or c < best:
            best, keys = c, [canonical_form(tree)]
        elif c == best:
            keys.append(canonical_form(tree))
        if progress is not None and i % 2000 == 0:
            progress(i)
    return best, keys


def _scan_args(args):
    return _scan(*args)


def _merge(parts) -> tuple[int | None, list[CanonicalForm]]:
    present = [p for p in parts if p[0] is not None]
    if not present:
        return None, []
    best = min(p[0] for p in present)
    keys = sorted({key for b, ks in present if b == best for key in ks})
    return best, keys


def sweep(
    k: int,
    n: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    shard: tuple[int, int] = (0, 1),
    progress: Callable[[int], None] | None = None,
) -> VerificationReport:
    """Minimum of mdi_k over all n-vertex trees versus ``f`` and the predicted minimizers.

    ``shard = (i, t)`` restricts the scan to one round-robin shard of the
    tree stream (a partial report); ``jobs`` splits the scanned trees over
    worker processes.  The result does not depend on ``jobs``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}")
    i, total = shard
    start = time.perf_counter()
    if jobs <= 1:
        best, keys = _scan(k, n, i, total, progress)
        keys = sorted(set(keys))
    else:
        # sub-shards of shard i/total: indices congruent to i + total*j mod total*jobs
        tasks = [(k, n, i + total * j, total * jobs) for j in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = []
            for part in pool.map(_scan_args, tasks):
                parts.append(part)
                if progress is not None:
                    progress(len(parts))
        best, keys = _merge(parts)
    predicted = predicted_minimizers(k, n)
    fv = f(k, n)
    min_mdi = best if best is not None else -1
    return VerificationReport(
        k=k,
        n=n,
        min_mdi=min_mdi,
        f_value=fv,
        minimizers=keys,
        predicted=predicted,
        verdict=_verdict(min_mdi, fv, keys, predicted),
        timing=round(time.perf_counter() - start, 3),
        shard=f"{i}/{total}",
    )


def merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    """Combine partial reports from the shards of one ``(k, n)`` sweep."""
    if not reports:
        raise ValueError("nothing to merge")
    k, n = reports[0].k, reports[0].n
    if any((r.k, r.n) != (k, n) for r in reports):
        raise ValueError("reports are for different (k, n)")
    best, keys = _merge([(r.min_mdi if r.minimizers else None, r.minimizers) for r in reports])
    fv = f(k, n)
    predicted = reports[0].predicted
    min_mdi = best if best is not None else -1
    timings = [r.timing for r in reports if r.timing is not None]
    return VerificationReport(k, n, min_mdi, fv, keys, predicted,
                              _verdict(min_mdi, fv, keys, predicted),
                              round(sum(timings), 3) if timings else None, "0/1")


# ---------------------------------------------------------------------------
# minimizer counts

def count_rules(k: int, n: int) -> list[tuple[str, Callable[[int], bool]]]:
    """Statements about the number of k-minimal n-vertex trees that apply at ``(k, n)``."""
    rules: list[tuple[str, Callable[[int], bool]]] = []
    h = k // 2 + 1
    if n <= k + 1:
        rules.append((f"all t({n}) trees minimal", lambda c: c == tree_count(n)))
    if n >= 4:
        unique = n >= k + 2 and (n - k % 2) % h == 0
        rules.append(("unique iff n>=k+2 and h | n-(k mod 2)", lambda c: (c == 1) == unique))
    if k % 2 == 0 and n >= 2:
        bound = count_free_trees(k * k)
        rules.append((f"at most t(k^2)={bound}", lambda c: c <= bound))
    if k % 2 == 1 and k >= 3 and n >= 4 and (n - 1) % ((k + 1) // 2) != 0:
        hi = count_free_trees(k * k) * n
        rules.append(("between n/(k+1) and t(k^2)*n", lambda c: n / (k + 1) <= c <= hi))
    if k == 2:
        if n <= 3:
            rules.append(("k=2, n<=3: unique", lambda c: c == 1))
        elif n % 2 == 0:
            rules.append(("k=2, even n: unique", lambda c: c == 1))
        else:
            rules.append(("k=2, odd n>=5: two", lambda c: c == 2))
    if k == 3:
        if n >= 5 and n % 2 == 1:
            rules.append(("k=3, odd n>=5: unique", lambda c: c == 1))
        elif n >= 6 and n % 2 == 0:
            rules.append(("k=3, even n>=6: floor((n+6)/4)", lambda c: c == (n + 6) // 4))
    return rules


def check_counts(k: int, n: int, report: VerificationReport | None = None) -> bool:
    if report is None:
        report = sweep(k, n)
    return all(rule(report.count) for _, rule in count_rules(k, n))


# ---------------------------------------------------------------------------
# forests

def partitions(n: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` into parts ``>= smallest``, parts non-decreasing."""
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def isolate_free_forests(n: int, min_components: int = 2) -> Iterator[Graph]:
    """Forests on ``n`` vertices without isolated vertices, one per isomorphism class."""
    for parts in partitions(n, 2):
        if len(parts) < min_components:
            continue
        groups = []
        for size in sorted(set(parts)):
            trees = list(all_free_trees(size))
            groups.append(list(combinations_with_replacement(trees, parts.count(size))))
        for choice in product(*groups):
            yield disjoint_union(*(tr for grp in choice for tr in grp))


def two_p2_values(k: int) -> tuple[int, int]:
    """(observed, expected) number of k-MDISs of the forest 2P_2, for k >= 2."""
    observed = mdi(disjoint_union(path_tree(2), path_tree(2)), k)
    expected = f(2, 4) + 1 if k == 2 else f(k, 4)
    return observed, expected


def check_forests(k: int, n: int) -> bool:
    """Every disconnected isolate-free n-vertex forest has more than f_k(n) k-MDISs."""
    if n > 12:
        raise ValueError("forest sweep is capped at n = 12")
    ok = True
    if k >= 2:
        observed, expected = two_p2_values(k)
        ok = observed == expected
    if n >= 5:
        bound = f(k, n)
        ok = ok and all(mdi(g, k, bound) > bound for g in isolate_free_forests(n))
    return ok


# ---------------------------------------------------------------------------
# lemma checks; each returns a list of human-readable counterexamples

def _trees(ns) -> Iterator[Tree]:
    for n in ns:
        yield from all_free_trees(n)


def _lemma1(ks=range(2, 11), ns=range(1, 201), **_):
    return [f"k={k} n={n}" for k in ks for n in ns if n >= k + 2 and not lemma1_check(k, n)]


def _lemma2(ks=range(2, 7), ps=range(2, 6), **_):
    bad = []
    for k in ks:
        h = k // 2 + 1
        for p in ps:
            if mdi(s_prime(p, h), k) != f(k, p * h):
                bad.append(f"(i) k={k} p={p}")
            if mdi(s_tree(p, h), k) != f(k, p * h + 1):
                bad.append(f"(ii) k={k} p={p}")
            target = f(k, p * h + 2)
            for b in b_family(p, h):
                c = mdi(b, k)
                if c < target or (c == target) != (k % 2 == 1):
                    bad.append(f"(iii) k={k} p={p} mdi={c} f={target}")
    return bad


def _lemma3(ks=range(1, 7), ns=range(2, 11), **_):
    bad = []
    for tree in _trees(ns):
        for k in ks:
            total = mdi(tree, k)
            for leaf in bits(leaves(tree)):
                if total != mdi(delete_vertex(tree, leaf), k) + mdi_star(tree, leaf, k):
                    bad.append(f"k={k} {canonical_form(tree)} leaf={leaf}")
    return bad


def _lemma4(ks=range(1, 7), ns=range(2, 11), **_):
    bad = []
    for tree in _trees(ns):
        lv = leaves(tree)
        for k in ks:
            b = balls(tree, k + 1)
            total = None
            for u in bits(lv):
                if b[u] & lv & ~(1 << u):
                    continue
                total = mdi(tree, k) if total is None else total
                if not mdi(delete_vertex(tree, u), k) < total:
                    bad.append(f"k={k} {canonical_form(tree)} leaf={u}")
    return bad


def _lemma5(ks=range(2, 11), **_):
    bad = []
    for k in ks:
        got = [mdi(path_tree(k + j), k) for j in (2, 3, 4, 5)]
        if got[:3] != [k + 1, k + 2, k + 4] or got[3] < k + 6:
            bad.append(f"k={k} values={got}")
    return bad


def _mdis_containing(tree: Tree, k: int, u: int) -> int:
    return sum(1 for j in maximal_independent_sets(power_graph(tree, k).adj) if j >> u & 1)


def _lemma6(ks=range(2, 7), ns=range(3, 11), **_):
    bad = []
    for tree in _trees(ns):
        d = diameter(tree)
        dl = diametral_leaves(tree)
        for k in ks:
            cand = leaves(tree) & twin_vertices(tree, k)
            if not cand:
                continue
            total = mdi(tree, k)
            for u in bits(cand):
                drop = total - mdi(delete_vertex(tree, u), k)
                if drop < 1:
                    bad.append(f"(i) k={k} {canonical_form(tree)} u={u}")
                if _mdis_containing(tree, k, u) == 1 and drop != 1:
                    bad.append(f"(i-eq) k={k} {canonical_form(tree)} u={u}")
                if dl >> u & 1 and d >= k + 2 and drop < 2:
                    bad.append(f"(ii) k={k} {canonical_form(tree)} u={u}")
    return bad


def _remove_path(tree: Tree, path: list[int]) -> Tree:
    sub, _ = induced_subgraph(tree, tree.vertices & ~to_mask(path))
    return sub


def _twin_pendant_pairs(tree: Tree):
    """(w, s, path) for every branching w with at least two pendant s-paths attached."""
    branching = branching_vertices(tree)
    seen: dict[tuple[int, int], list[list[int]]] = {}
    for path in pendant_paths(tree):
        end = path[-1]
        ws = [w for w in bits(tree.adj[end]) if branching >> w & 1 and w not in path]
        if ws:
            seen.setdefault((ws[0], len(path)), []).append(path)
    for (w, s), paths in seen.items():
        if len(paths) >= 2:
            yield w, s, paths[0]


def _lemma7(ks=range(2, 7), ns=range(4, 11), **_):
    bad = []
    for tree in _trees(ns):
        for w, s, path in _twin_pendant_pairs(tree):
            smaller = _remove_path(tree, path)
            for k in ks:
                if k >= 2 * s:
                    need = s
                elif k in (2 * s - 1, 2 * s - 2):
                    need = s - 1
                else:
                    continue
                if mdi(tree, k) < mdi(smaller, k) + need:
                    bad.append(f"k={k} s={s} {canonical_form(tree)}")
    return bad


def _lemma8(ks=range(2, 7), ns=range(4, 13), **_):
    bad = []
    for tree in _trees(ns):
        d = diameter(tree)
        noncentral = branching_vertices(tree) & ~center(tree)
        if not noncentral:
            continue
        for k in ks:
            if d <= k + 3 - k % 2 and not leaves(tree) & twin_vertices(tree, k):
                bad.append(f"k={k} {canonical_form(tree)}")
    return bad


def _lemma9(ks=(3, 5), ns=range(4, 15), **_):
    bad = []
    for k in (k for k in ks if k % 2 == 1 and k >= 3):
        h = k // 2 + 1
        for n in ns:
            spiders = {canonical_form(s_tree(p, h)) for p in range(2, n) if p * h + 1 == n}
            brooms = {canonical_form(b) for p in range(2, n) if p * h + 2 == n for b in b_family(p, h)}
            for tree in all_free_trees(n):
                d = diameter(tree)
                if d not in (k + 1, k + 2):
                    continue
                twin_free = not leaves(tree) & twin_vertices(tree, k)
                expect = spiders if d == k + 1 else brooms
                if twin_free != (canonical_form(tree) in expect):
                    bad.append(f"k={k} diam={d} {canonical_form(tree)}")
    return bad


def _central_leaf_choices(tree: Tree) -> list[int]:
    """Central leaves whose main subtree is largest among main subtrees holding a central leaf."""
    cl = central_leaves(tree)
    subs = [m for m in main_subtree_masks(tree) if m & cl]
    if not subs:
        return []
    top = max(m.bit_count() for m in subs)
    return [v for m in subs if m.bit_count() == top for v in bits(m & cl)]


def _lemma10(ks=range(2, 7), ps=range(2, 5), **_):
    bad = []
    for k in ks:
        h = k // 2 + 1
        for p in ps:
            for r in range(1, k // 2 + 1):
                for part, base, variant in (
                    ("i", s_prime(p, h), "twin_free"),
                    ("ii", s_tree(p, h), "special_free"),
                ):
                    if diametral_k_twins(base, k):
                        continue  # closure undefined for this base
                    below = {canonical_form(x) for x in add_closure(base, k, r - 1, variant)}
                    for tree in add_closure(base, k, r, variant):
                        for leaf in _central_leaf_choices(tree):
                            if canonical_form(delete_vertex(tree, leaf)) not in below:
                                bad.append(f"({part}) k={k} p={p} r={r} {canonical_form(tree)} leaf={leaf}")
    return bad


def _lemma11(ks=(2, 4, 6), ns=range(4, 13), **_):
    # stated for even k only: diameter k + 1 then has a central edge
    bad = []
    for k in (k for k in ks if k % 2 == 0):
        for n in ns:
            if n < k + 2:
                continue
            eq = set(_family_keys(f"Add(k={k},r={n - k - 2},base=P(n={k + 2}),variant=special_free)"))
            for tree in all_free_trees(n):
                if diameter(tree) != k + 1:
                    continue
                c = mdi(tree, k)
                if c < n - 1 or (c == n - 1) != (canonical_form(tree) in eq):
                    bad.append(f"k={k} n={n} mdi={c} {canonical_form(tree)}")
    return bad


def _minimal_class_check(tree_filter, keys_for, ks, ns, strict_when=None):
    """Shared shape of the diameter-restricted bound lemmas.

    ``keys_for(k, n)`` gives the equality class (``None``: no claim for this n);
    an empty class means the bound is strict.
    """
    bad = []
    for k in ks:
        for n in ns:
            eq = keys_for(k, n)
            if eq is None:
                continue
            fv = f(k, n)
            for tree in all_free_trees(n):
                if not tree_filter(tree, k):
                    continue
                c = mdi(tree, k)
                if c < fv or (c == fv) != (canonical_form(tree) in eq):
                    bad.append(f"k={k} n={n} mdi={c} f={fv} {canonical_form(tree)}")
    return bad


def _keys(*descs: str) -> set:
    return {key for d in descs for key in _family_keys(d)}


def _lemma12(ks=(2, 4, 6), ns=range(4, 15), **_):
    def keys_for(k, n):
        h = k // 2 + 1
        p, r = divmod(n, h)
        if p < 2:
            return None
        if r == 0:
            return _keys(f"S'(p={p},m={h})")
        if p == 2:
            return _keys(f"Add(k={k},r={r},base=P(n={k + 2}),variant=special_free)",
                         f"Add(k={k},r={r - 1},base=P(n={k + 3}),variant=twin_free)")
        return _keys(f"Add(k={k},r={r},base=S'(p={p},m={h}),variant=twin_free)")

    return _minimal_class_check(lambda t, k: diameter(t) <= k + 2, keys_for,
                                [k for k in ks if k % 2 == 0], ns)


def _strict(diam_ok, parity):
    def check(ks=None, ns=range(4, 15), **_):
        ks = ks if ks is not None else range(2, 7)
        return _minimal_class_check(diam_ok, lambda k, n: set(),
                                    [k for k in ks if k % 2 == parity], ns)
    return check


def _lemma15(ks=(3, 5), ns=range(4, 15), **_):
    def keys_for(k, n):
        h = k // 2 + 1
        p, r = divmod(n - 1, h)
        if p < 2:
            return None
        return _keys(f"Add(k={k},r={r},base=S(p={p},m={h}),variant=special_free)")

    return _minimal_class_check(lambda t, k: diameter(t) == k + 1, keys_for,
                                [k for k in ks if k % 2 == 1], ns)


def _lemma16(ks=(3, 5), ns=range(4, 15), **_):
    def keys_for(k, n):
        h = k // 2 + 1
        p, r = divmod(n - 1, h)
        if p < 2:
            return None
        if r == 0:
            return set()
        return _keys(f"Add(k={k},r={r - 1},base=Bfam({p};s={h}),variant=twin_free)")

    return _minimal_class_check(lambda t, k: diameter(t) == k + 2, keys_for,
                                [k for k in ks if k % 2 == 1], ns)


LEMMAS: dict[int, Callable[..., list[str]]] = {
    1: _lemma1,
    2: _lemma2,
    3: _lemma3,
    4: _lemma4,
    5: _lemma5,
    6: _lemma6,
    7: _lemma7,
    8: _lemma8,
    9: _lemma9,
    10: _lemma10,
    11: _lemma11,
    12: _lemma12,
    13: _strict(lambda t, k: diameter(t) == k + 3, 0),
    14: _strict(lambda t, k: diameter(t) >= k + 4, 0),
    15: _lemma15,
    16: _lemma16,
    17: _strict(lambda t, k: diameter(t) >= k + 3, 1),
}


def lemma_failures(lemma_id: int, **ranges) -> list[str]:
    if lemma_id not in LEMMAS:
        raise ValueError(f"unknown lemma id {lemma_id}; known: {sorted(LEMMAS)}")
    return LEMMAS[lemma_id](**{k: v for k, v in ranges.items() if v is not None})


def check_lemma(lemma_id: int, **ranges) -> bool:
    """True when the numbered lemma holds on every instance in the given ranges.

    Accepted range keywords: ``ks``, ``ns`` and (lemmas 2 and 10) ``ps``.
    """
    return not lemma_failures(lemma_id, **ranges)
