"""Command-line interface.

stdout carries data, stderr carries progress and diagnostics.  Exit status
is 0 on success or match, 1 on any mismatch or failed check, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, graphio, mdis, treegen, verify
from .tree_core import Graph, Tree, path_tree, star_tree


def _int_range(text: str) -> list[int]:
    """Parse ``5``, ``2-6`` or ``1,3,5-7``."""
    out: list[int] = []
    for chunk in text.split(","):
        lo, dash, hi = chunk.partition("-")
        try:
            a = int(lo)
            b = int(hi) if dash else a
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
        if b < a:
            raise argparse.ArgumentTypeError(f"empty range {chunk!r}")
        out.extend(range(a, b + 1))
    return out


def _shard(text: str) -> tuple[int, int]:
    i, slash, total = text.partition("/")
    try:
        pair = int(i), int(total)
    except ValueError:
        raise argparse.ArgumentTypeError(f"shard must look like i/t, got {text!r}") from None
    if not slash or pair[1] < 1 or not 0 <= pair[0] < pair[1]:
        raise argparse.ArgumentTypeError(f"invalid shard {text!r}")
    return pair


def parse_graph(text: str) -> Graph:
    """Resolve a graph argument: builtin shape, family descriptor, file path or graph6."""
    head, _, rest = text.partition(":")
    builtins = {
        "path": lambda a: path_tree(int(a)),
        "star": lambda a: star_tree(int(a)),
        "cycle": lambda a: mdis.cycle(int(a)),
        "hypercube": lambda a: mdis.hypercube(int(a)),
        "circulant": lambda a: mdis.circulant(int(a.split(":")[0]), [int(x) for x in a.split(":")[1].split(",")]),
    }
    if head in builtins and rest:
        return builtins[head](rest)
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
        first = text.strip().splitlines()[0] if text.strip() else ""
        if first.isdigit():
            g = graphio.from_edge_list(text)
        else:
            g = graphio.from_graph6(first)
        return _maybe_tree(g)
    if "(" in text:
        built = families.make(text)
        if not isinstance(built, Tree):
            raise ValueError(f"{text} names a family of {len(built)} trees, not a single graph")
        return built
    return _maybe_tree(graphio.from_graph6(text))


def _maybe_tree(g: Graph) -> Graph:
    try:
        return graphio.as_tree(g)
    except ValueError:
        return g


def _emit_trees(trees, fmt: str) -> None:
    for tr in trees:
        if fmt == "g6":
            print(graphio.to_graph6(tr))
        elif fmt == "json":
            print(json.dumps({"n": tr.n, "edges": tr.edges(), "graph6": graphio.to_graph6(tr)}))
        else:
            sys.stdout.write(graphio.to_edge_list(tr))


def cmd_count(args) -> int:
    g = parse_graph(args.graph)
    count = mdis.mdi(g, args.k)
    if args.format == "json":
        print(json.dumps({"graph": graphio.to_graph6(g), "k": args.k, "count": count}))
    else:
        print(count)
    return 0


def cmd_list(args) -> int:
    fam = mdis.enumerate_mdis(parse_graph(args.graph), args.k)
    if args.format == "json":
        print(fam.to_json())
    else:
        sys.stdout.write(fam.to_text())
    return 0


def cmd_gen_trees(args) -> int:
    i, total = args.shard
    _emit_trees(treegen.stream_partition(args.n, i, total), args.format)
    return 0


def cmd_construct(args) -> int:
    built = families.make(args.family)
    _emit_trees([built] if isinstance(built, Tree) else built, args.format)
    return 0


def cmd_closure(args) -> int:
    base = families.make(args.base)
    _emit_trees(families.add_closure(base, args.k, args.r, args.variant), args.format)
    return 0


def _progress(k: int, n: int):
    def report(done: int) -> None:
        print(f"[sweep k={k} n={n}] {done} units done", file=sys.stderr)
    return report


def cmd_sweep(args) -> int:
    reports = []
    for k in args.k:
        for n in args.n:
            progress = None if args.quiet else _progress(k, n)
            r = verify.sweep(k, n, cap=args.cap, jobs=args.jobs, shard=args.shard, progress=progress)
            if not args.quiet:
                print(f"[sweep k={k} n={n}] min={r.min_mdi} f={r.f_value} count={r.count} {r.verdict}",
                      file=sys.stderr)
            reports.append(r)
    if args.format == "csv":
        sys.stdout.write(verify.reports_to_csv(reports))
    elif args.format == "text":
        for r in reports:
            print(f"k={r.k} n={r.n} f={r.f_value} min={r.min_mdi} count={r.count} {r.verdict}")
    else:
        for r in reports:
            print(r.to_json(include_timing=args.timing))
    return 0 if all(r.verdict == "match" for r in reports) else 1


def cmd_check(args) -> int:
    ok = True
    if args.lemma is not None:
        failures = verify.lemma_failures(args.lemma, ks=args.k, ns=args.n, ps=args.p)
        for line in failures:
            print(f"lemma {args.lemma} fails: {line}")
        print(f"lemma {args.lemma}: {'holds' if not failures else 'FAILS'}")
        ok = not failures
    if args.counts:
        for k in args.k or [2, 3]:
            for n in args.n or range(1, 13):
                report = verify.sweep(k, n, cap=args.cap)
                good = verify.check_counts(k, n, report)
                print(f"counts k={k} n={n} count={report.count}: {'ok' if good else 'FAILS'}")
                ok = ok and good
    return 0 if ok else 1


def cmd_forests(args) -> int:
    ok = True
    for k in args.k:
        for n in args.n:
            good = verify.check_forests(k, n)
            print(f"forests k={k} n={n}: {'ok' if good else 'FAILS'}")
            ok = ok and good
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kmdis", description="Maximal distance-k independent sets in trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", help="number of k-MDISs of a graph")
    s.add_argument("--graph", required=True, help="path:n, cycle:n, circulant:n:o1,o2, hypercube:d, "
                   "star:n, a family descriptor, a graph6 string or an edge-list file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("list", help="list all k-MDISs of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("gen-trees", help="all unlabeled trees on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shard", type=_shard, default=(0, 1))
    s.add_argument("--format", choices=["g6", "text", "json"], default="g6")
    s.set_defaults(func=cmd_gen_trees)

    s = sub.add_parser("construct", help="build a named tree or family")
    s.add_argument("--family", required=True)
    s.add_argument("--format", choices=["g6", "text", "json"], default="g6")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("closure", help="Add-closure of a base tree or family")
    s.add_argument("--base", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--variant", choices=[families.TWIN_FREE, families.SPECIAL_FREE], default=families.TWIN_FREE)
    s.add_argument("--format", choices=["g6", "text", "json"], default="g6")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("sweep", help="exhaustive minimum and minimizer check")
    s.add_argument("--k", type=_int_range, required=True)
    s.add_argument("--n", type=_int_range, required=True)
    s.add_argument("--cap", type=int, default=verify.DEFAULT_CAP)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--shard", type=_shard, default=(0, 1))
    s.add_argument("--format", choices=["json", "csv", "text"], default="json")
    s.add_argument("--timing", action="store_true", help="include wall-clock seconds in JSON")
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("check", help="lemma checks and minimizer-count checks")
    s.add_argument("--lemma", type=int)
    s.add_argument("--counts", action="store_true")
    s.add_argument("--k", type=_int_range)
    s.add_argument("--n", type=_int_range)
    s.add_argument("--p", type=_int_range)
    s.add_argument("--cap", type=int, default=verify.DEFAULT_CAP)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("forests", help="disconnected isolate-free forests exceed the tree bound")
    s.add_argument("--k", type=_int_range, required=True)
    s.add_argument("--n", type=_int_range, required=True)
    s.set_defaults(func=cmd_forests)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and args.lemma is None and not args.counts:
        parser.error("check needs --lemma ID or --counts")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"kmdis {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
