"""Command-line front end.

Graph-valued output is graph6 by default (one line per graph) so commands
compose through pipes; analysis and campaign reports are JSON. Exit status
is 0 on success, 1 when a campaign finds violations or ``iso`` finds no
isomorphism, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, Sequence

from . import theorems
from .eccentric import eccentric_graph
from .enumeration import enumerate_connected_graphs, enumerate_free_trees
from .graph import (
    FAMILY_ARITY,
    FamilySpec,
    Graph,
    GraphError,
    complement,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    generate,
    is_connected,
    parse_edgelist,
    read_graph6_lines,
)
from .iso import find_isomorphism
from .metrics import eccentricity_profile
from .trees import is_tree, tree_centers

VERIFY = {
    "theorem2": theorems.verify_theorem2,
    "tree-diameter": theorems.verify_tree_diameter_bound,
    "two-center": theorems.verify_two_center_structure,
    "lemma5": theorems.verify_lemma5,
    "table1": theorems.verify_table1,
    "grid": None,
}
VERIFY_DEFAULT_N = {
    "theorem2": 6, "tree-diameter": 14, "two-center": 14, "lemma5": 14, "table1": 30,
}
SEARCH = {
    "akiyama-gap": theorems.search_akiyama_gap,
    "same-diameter": theorems.search_problem1,
    "self-ecc": theorems.search_problem2,
}


class UsageError(Exception):
    pass


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _looks_like_edgelist(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.startswith("n ")
    return False


def read_graphs(path: str, fmt: str) -> Iterator[Graph]:
    text = _read_source(path)
    if fmt == "auto":
        fmt = "edgelist" if _looks_like_edgelist(text) else "graph6"
    if fmt == "edgelist":
        yield parse_edgelist(text)
    elif fmt == "graph6":
        yield from read_graph6_lines(text.splitlines())
    else:
        raise UsageError(f"unsupported input format {fmt!r}")


def read_one(path: str, fmt: str) -> Graph:
    graphs = list(read_graphs(path, fmt))
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g).decode() + "\n"
    if fmt == "edgelist":
        return emit_edgelist(g)
    return emit_dot(g)


def analyze(g: Graph) -> dict:
    out: dict = {"n": g.n, "m": g.m, "connected": is_connected(g)}
    if g.n == 0 or not out["connected"]:
        return out
    prof = eccentricity_profile(g)
    out.update(
        ecc=list(prof.ecc),
        diameter=prof.diameter,
        radius=prof.radius,
        centers=sorted(prof.centers),
        diametrical=sorted(prof.diametrical),
        self_centered=prof.is_self_centered(),
        is_tree=is_tree(g),
    )
    for i, members in prof.shells.items():
        out[f"S_{i}"] = sorted(members)
    if out["is_tree"]:
        out["tree_centers"] = sorted(tree_centers(g))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eccgraph", description="Eccentric graphs and exhaustive checks of their structure."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, *, output: bool = True) -> None:
        p.add_argument("--in-fmt", choices=["auto", "graph6", "edgelist"], default="auto")
        if output:
            p.add_argument("--fmt", choices=["graph6", "edgelist", "dot"], default="graph6")

    for name, helptext in (("ecc", "print the eccentric graph"), ("complement", "print the complement")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", help='graph file, or "-" for standard input')
        add_io(p)

    p = sub.add_parser("analyze", help="eccentricity profile as JSON")
    p.add_argument("input")
    add_io(p, output=False)

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    add_io(p, output=False)

    p = sub.add_parser("gen", help="generate a standard family member")
    p.add_argument("family", choices=sorted(FAMILY_ARITY))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--fmt", choices=["graph6", "edgelist", "dot"], default="graph6")

    p = sub.add_parser("enum", help="stream graphs as graph6 lines")
    p.add_argument("kind", choices=["trees", "graphs"])
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", choices=sorted(VERIFY))
    p.add_argument("--max-n", type=int, help="size bound (table1: largest family parameter)")

    p = sub.add_parser("search", help="run a search campaign")
    p.add_argument("campaign", choices=sorted(SEARCH))
    p.add_argument("--max-n", type=int, default=6)
    return parser


def _dispatch(args: argparse.Namespace, out) -> int:
    cmd = args.command
    if cmd in ("ecc", "complement"):
        op = eccentric_graph if cmd == "ecc" else complement
        for g in read_graphs(args.input, args.in_fmt):
            out.write(format_graph(op(g), args.fmt))
        return 0
    if cmd == "analyze":
        for g in read_graphs(args.input, args.in_fmt):
            out.write(json.dumps(analyze(g)) + "\n")
        return 0
    if cmd == "iso":
        g, h = read_one(args.first, args.in_fmt), read_one(args.second, args.in_fmt)
        res = find_isomorphism(g, h)
        if res.isomorphic:
            out.write("isomorphic\n")
            out.write(" ".join(f"{u}->{v}" for u, v in enumerate(res.mapping)) + "\n")
            return 0
        out.write("not isomorphic\n")
        return 1
    if cmd == "gen":
        out.write(format_graph(generate(FamilySpec(args.family, tuple(args.params))), args.fmt))
        return 0
    if cmd == "enum":
        gen = enumerate_free_trees if args.kind == "trees" else enumerate_connected_graphs
        for g in gen(args.n):
            out.write(emit_graph6(g).decode() + "\n")
        return 0
    if cmd == "verify":
        if args.campaign == "grid":
            report = theorems.grid_fixture_check()
        else:
            bound = args.max_n if args.max_n is not None else VERIFY_DEFAULT_N[args.campaign]
            report = VERIFY[args.campaign](bound)
    else:
        report = SEARCH[args.campaign](args.max_n)
    out.write(report.to_json() + "\n")
    return 0 if report.ok else 1


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _dispatch(args, out)
    except (GraphError, UsageError) as exc:
        print(f"eccgraph: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())
