"""Tree recognition, centers, the two-center split and diametrical leaf triples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    MixedExtensionSpec,
    bits,
    is_connected,
    make_graph,
    mixed_extension_p4,
)
from .metrics import all_pairs_distances, eccentricities


class NotATreeError(GraphError):
    pass


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError("input is not a tree")


def tree_centers(t: Graph) -> frozenset[int]:
    """Strip leaves layer by layer until at most two vertices remain."""
    _require_tree(t)
    alive = (1 << t.n) - 1
    count = t.n
    while count > 2:
        leaves = 0
        for v in bits(alive):
            if (t.rows[v] & alive).bit_count() <= 1:
                leaves |= 1 << v
        alive &= ~leaves
        count -= leaves.bit_count()
    return frozenset(bits(alive))


@dataclass(frozen=True)
class TwoCenterDecomposition:
    c1: int
    c2: int
    v1: frozenset[int]
    v2: frozenset[int]
    u1: frozenset[int]  # diametrical vertices on the c1 side
    u2: frozenset[int]
    tc1: frozenset[int]  # v1 - u1
    tc2: frozenset[int]
    n: int
    radius: int
    diameter: int

    @property
    def part_sizes(self) -> tuple[int, int, int, int]:
        """Sizes in path order of the predicted P4 extension: Tc1, U2, U1, Tc2."""
        return (len(self.tc1), len(self.u2), len(self.u1), len(self.tc2))


def _side(t: Graph, start: int, banned: int) -> frozenset[int]:
    """Vertices reachable from ``start`` without passing through ``banned``."""
    seen = frontier = 1 << start
    block = ~(1 << banned)
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= t.rows[v]
        frontier = nxt & ~seen & block
        seen |= frontier
    return frozenset(bits(seen))


def two_center_decomposition(t: Graph) -> TwoCenterDecomposition:
    centers = sorted(tree_centers(t))
    if len(centers) != 2:
        raise GraphError("decomposition requires two centers")
    c1, c2 = centers
    ecc = eccentricities(t)
    d, r = max(ecc), min(ecc)
    v1 = _side(t, c1, c2)
    v2 = frozenset(range(t.n)) - v1
    u1 = frozenset(v for v in v1 if ecc[v] == d)
    u2 = frozenset(v for v in v2 if ecc[v] == d)
    return TwoCenterDecomposition(
        c1=c1, c2=c2, v1=v1, v2=v2, u1=u1, u2=u2,
        tc1=v1 - u1, tc2=v2 - u2, n=t.n, radius=r, diameter=d,
    )


def literal_center_sets(t: Graph, dec: TwoCenterDecomposition) -> tuple[frozenset[int], frozenset[int]]:
    """The sets ``{x in V_i : d(x, c_i) < radius}`` taken at face value.

    Diametrical vertices sit at distance ``radius - 1`` from their center, so
    this reading swallows ``U_i``; it is kept only to report the mismatch.
    """
    dist = all_pairs_distances(t)
    a = frozenset(x for x in dec.v1 if dist(x, dec.c1) < dec.radius)
    b = frozenset(x for x in dec.v2 if dist(x, dec.c2) < dec.radius)
    return a, b


def predicted_two_center_ecc(dec: TwoCenterDecomposition) -> Graph:
    """Tc1 x U2, U2 x U1 and U1 x Tc2 joined completely, on the tree's own labels.

    Built as the P4 coclique extension with parts (Tc1, U2, U1, Tc2), then
    relabeled onto the tree; K2 has empty Tc parts and is joined directly.
    """
    parts = (dec.tc1, dec.u2, dec.u1, dec.tc2)
    if all(parts):
        perm = [v for part in parts for v in sorted(part)]
        return mixed_extension_p4(MixedExtensionSpec(*dec.part_sizes)).relabel(perm)
    edges = []
    for a, b in ((dec.tc1, dec.u2), (dec.u2, dec.u1), (dec.u1, dec.tc2)):
        edges.extend((x, y) for x in a for y in b)
    return make_graph(dec.n, edges)


@dataclass(frozen=True)
class LeafTriple:
    x: int
    y: int
    z: int


def diametrical_leaf_triple(t: Graph) -> Optional[LeafTriple]:
    """Lexicographically least triple of leaves pairwise at distance diameter, if any."""
    if len(tree_centers(t)) != 1:
        raise GraphError("leaf triple condition applies to one-center trees")
    if t.n < 3:
        return None
    dist = all_pairs_distances(t)
    ecc = eccentricities(t)
    d = max(ecc)
    far = [v for v in range(t.n) if t.degree(v) == 1 and ecc[v] == d]
    for x, y, z in combinations(far, 3):
        if dist(x, y) == dist(x, z) == dist(y, z) == d:
            return LeafTriple(x, y, z)
    return None
