from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from eccgraph.cli import run
from eccgraph.eccentric import eccentric_graph
from eccgraph.graph import cycle, emit_graph6, parse_edgelist, parse_graph6, path, sstar
from eccgraph.iso import find_isomorphism

ROOT = Path(__file__).resolve().parent.parent
FIG2 = str(ROOT / "fixtures" / "figure2.g6")


def call(*argv, stdin=None):
    out = io.StringIO()
    if stdin is not None:
        old, sys.stdin = sys.stdin, io.StringIO(stdin)
    try:
        code = run(list(argv), out)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue()


def test_gen_then_ecc_pipeline():
    code, g6 = call("gen", "path", "5")
    assert code == 0
    code, out = call("ecc", "-", stdin=g6)
    assert code == 0
    assert find_isomorphism(parse_graph6(out.strip()), sstar(1, 1))


def test_real_pipe_through_module_entry_point():
    gen = subprocess.run(
        [sys.executable, "-m", "eccgraph", "gen", "path", "5"], capture_output=True, text=True, check=True
    )
    ecc = subprocess.run(
        [sys.executable, "-m", "eccgraph", "ecc", "-"],
        input=gen.stdout, capture_output=True, text=True, check=True,
    )
    assert find_isomorphism(parse_graph6(ecc.stdout.strip()), sstar(1, 1))


def test_analyze_figure2():
    code, out = call("analyze", FIG2)
    assert code == 0
    report = json.loads(out)
    assert report["S_3"] == [0, 1, 2, 3]
    assert report["diameter"] == 3 and report["radius"] == 2


def test_analyze_disconnected_and_tree():
    _, out = call("analyze", "-", stdin="n 4\n0 1\n2 3\n")
    assert json.loads(out) == {"n": 4, "m": 2, "connected": False}
    _, out = call("analyze", "-", stdin=emit_graph6(path(6)).decode())
    report = json.loads(out)
    assert report["is_tree"] and report["tree_centers"] == [2, 3]


def test_complement_and_formats():
    code, out = call("complement", "-", "--fmt", "edgelist", stdin="n 3\n0 1\n")
    assert code == 0
    assert parse_edgelist(out).edges() == [(0, 2), (1, 2)]
    code, out = call("ecc", FIG2, "--fmt", "dot")
    assert code == 0 and out.startswith("graph") and out.count("--") == 13


def test_input_format_adapters_agree():
    g = cycle(6)
    _, a = call("ecc", "-", stdin=emit_graph6(g).decode())
    _, b = call("ecc", "-", "--in-fmt", "edgelist", stdin="n 6\n" + "".join(f"{u} {v}\n" for u, v in g.edges()))
    assert a == b == emit_graph6(eccentric_graph(g)).decode() + "\n"


def test_multi_graph_stream():
    code, out = call("enum", "trees", "--n", "6")
    assert code == 0 and len(out.split()) == 6
    code, ecc = call("ecc", "-", stdin=out)
    assert code == 0 and len(ecc.split()) == 6


def test_enum_graphs_count():
    code, out = call("enum", "graphs", "--n", "4")
    assert code == 0 and len(out.split()) == 38


def test_iso_exit_codes(tmp_path):
    a, b, c = tmp_path / "a.g6", tmp_path / "b.g6", tmp_path / "c.g6"
    a.write_text(emit_graph6(eccentric_graph(path(4))).decode())
    b.write_text(emit_graph6(path(4)).decode())
    c.write_text(emit_graph6(cycle(4)).decode())
    code, out = call("iso", str(a), str(b))
    assert code == 0 and out.startswith("isomorphic")
    assert len(out.splitlines()[1].split()) == 4
    code, out = call("iso", str(a), str(c))
    assert code == 1 and out == "not isomorphic\n"


def test_verify_reports_json():
    code, out = call("verify", "tree-diameter", "--max-n", "12")
    report = json.loads(out)
    assert code == 0 and report["violations"] == []
    assert report["checked"] == sum([1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551])
    code, out = call("verify", "grid")
    assert code == 0 and json.loads(out)["campaign"] == "grid"


def test_search_with_violations_exits_one():
    code, out = call("search", "same-diameter", "--max-n", "5")
    assert code == 1 and json.loads(out)["violations"]
    code, out = call("search", "akiyama-gap", "--max-n", "5")
    assert code == 0 and json.loads(out)["findings"]


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["frobnicate"], None),
        (["gen", "path"], None),
        (["gen", "cycle", "2"], None),
        (["gen", "path", "-1"], None),
        (["ecc", "-"], "not graph6 \x01\n"),
        (["ecc", "-"], "n 3\n0 0\n"),
        (["ecc", "-"], "n 4\n0 1\n2 3\n"),
        (["ecc", "/nonexistent/file"], None),
        (["enum", "graphs", "--n", "8"], None),
        (["enum", "trees", "--n", "19"], None),
        (["verify", "theorem2", "--max-n", "8"], None),
        (["search", "self-ecc", "--max-n", "1"], None),
        (["ecc", "-", "--fmt", "svg"], "Bw\n"),
    ],
)
def test_usage_and_input_errors_exit_two(argv, stdin, capsys):
    code, _ = call(*argv, stdin=stdin)
    assert code == 2
    assert capsys.readouterr().err
