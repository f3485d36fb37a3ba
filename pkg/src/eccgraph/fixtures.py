"""Graphs transcribed from the drawings, shipped as edge-list files."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_edgelist, parse_graph6


def _text(name: str) -> str:
    return resources.files("eccgraph").joinpath("fixtures").joinpath(name).read_text()


def load(name: str) -> Graph:
    text = _text(name)
    if name.endswith(".g6"):
        return parse_graph6(text.strip())
    return parse_edgelist(text)


def figure2() -> Graph:
    return load("figure2.edgelist")


def figure2_ecc() -> Graph:
    return load("figure2_ecc.edgelist")


def figure3_tree() -> Graph:
    return load("figure3.edgelist")


def figure4_grid() -> Graph:
    return load("figure4_grid.edgelist")


def figure4_ecc() -> Graph:
    return load("figure4_ecc.edgelist")
