from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from eccgraph.eccentric import eccentric_graph
from eccgraph.graph import (
    GraphError,
    complement,
    complete,
    cycle,
    grid,
    make_graph,
    parse_graph6,
    path,
)
from eccgraph.iso import audit_mapping, canonical_form, find_isomorphism
from eccgraph import fixtures

from conftest import graphs
from oracles import brute_isomorphic, labeled_trees


def test_examples():
    assert find_isomorphism(cycle(5), eccentric_graph(cycle(5))).isomorphic
    res = find_isomorphism(eccentric_graph(path(4)), complement(path(4)))
    assert res.isomorphic
    assert brute_isomorphic(4, eccentric_graph(path(4)).edges(), complement(path(4)).edges())
    assert not find_isomorphism(complete(3), path(3)).isomorphic


def test_different_orders_not_isomorphic():
    assert not find_isomorphism(path(3), path(4))


def test_mapping_audits():
    g = fixtures.figure2()
    h = g.relabel([6, 5, 4, 3, 2, 1, 0])
    res = find_isomorphism(g, h)
    assert res.isomorphic and audit_mapping(g, h, res.mapping)
    assert not audit_mapping(g, h, list(range(7)))
    assert not audit_mapping(g, h, [0] * 7)


def test_regular_nonisomorphic_pair():
    # C6 and two triangles: same degrees, refinement cannot split them
    two_triangles = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not find_isomorphism(cycle(6), two_triangles)
    # 3-prism vs K33: both 3-regular on 6 vertices
    prism = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = make_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert not find_isomorphism(prism, k33)


@pytest.mark.parametrize("g", [cycle(9), grid(3, 4), fixtures.figure3_tree(), complete(8), path(16)])
def test_random_relabelings_found(g):
    rng = random.Random(7)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        res = find_isomorphism(g, h)
        assert res.isomorphic and audit_mapping(g, h, res.mapping)


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=200)
def test_agrees_with_brute_force(g, h):
    if g.n != h.n:
        assert not find_isomorphism(g, h)
        return
    expected = brute_isomorphic(g.n, g.edges(), h.edges())
    res = find_isomorphism(g, h)
    assert res.isomorphic == expected
    assert find_isomorphism(h, g).isomorphic == expected
    if expected:
        assert audit_mapping(g, h, res.mapping)


@given(graphs(max_n=8), st.randoms())
def test_canonical_form_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert parse_graph6(canonical_form(g)).m == g.m


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=200)
def test_canonical_form_separates(g, h):
    if g.n == h.n:
        same = canonical_form(g) == canonical_form(h)
        assert same == find_isomorphism(g, h).isomorphic


def test_canonical_form_examples():
    assert canonical_form(path(3)) == canonical_form(make_graph(3, [(1, 0), (0, 2)]))
    forms = {canonical_form(make_graph(4, t)) for t in labeled_trees(4)}
    assert sum(1 for _ in labeled_trees(4)) == 16
    assert len(forms) == 2


def test_canonical_form_cap():
    with pytest.raises(GraphError, match="n <= 10"):
        canonical_form(path(11))
    canonical_form(path(10))
