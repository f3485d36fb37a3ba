"""The eccentric graph: ``u ~ v`` iff ``d(u, v)`` equals ``ecc(u)`` or ``ecc(v)``."""

from __future__ import annotations

from .graph import Graph, GraphError
from .metrics import DisconnectedGraphError, distance_layers


def eccentric_rows(g: Graph) -> tuple[tuple[int, ...], list[int], list[list[int]]]:
    """Rows of ecc(g) together with the eccentricities and BFS layers used.

    The farthest BFS layer from ``u`` is exactly the set of ``v`` with
    ``d(u, v) = ecc(u)``; the eccentric graph is the symmetric closure of
    those sets.
    """
    n = g.n
    if n == 0:
        raise GraphError("eccentric graph undefined on the empty graph")
    layers = [distance_layers(g, s) for s in range(n)]
    reached = 0
    for layer in layers[0]:
        reached |= layer
    if reached != (1 << n) - 1:
        raise DisconnectedGraphError("eccentric graph")
    ecc = [len(ls) - 1 for ls in layers]
    rows = [0] * n
    for u in range(n):
        far = layers[u][-1] if ecc[u] else 0
        rows[u] |= far
        bit = 1 << u
        while far:
            low = far & -far
            rows[low.bit_length() - 1] |= bit
            far ^= low
    return tuple(rows), ecc, layers


def eccentric_graph(g: Graph) -> Graph:
    return Graph.trusted(eccentric_rows(g)[0])
