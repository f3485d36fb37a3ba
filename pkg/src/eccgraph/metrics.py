"""Hop distances, eccentricities and the data derived from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, bits

# Distance between vertices in different components. None makes any
# arithmetic on an unreachable pair fail loudly.
UNREACHABLE = None


class DisconnectedGraphError(GraphError):
    def __init__(self, what: str = "eccentricity"):
        super().__init__(f"{what} undefined on disconnected graph")


def distance_layers(g: Graph, source: int) -> list[int]:
    """BFS from ``source``; element ``k`` is the bitmask of vertices at distance ``k``."""
    rows = g.rows
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def all_layers(g: Graph) -> list[list[int]]:
    return [distance_layers(g, s) for s in range(g.n)]


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    rows: tuple[tuple[Optional[int], ...], ...]

    def __call__(self, u: int, v: int) -> Optional[int]:
        return self.rows[u][v]

    def __getitem__(self, uv: tuple[int, int]) -> Optional[int]:
        return self.rows[uv[0]][uv[1]]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    out = []
    for s in range(g.n):
        row: list[Optional[int]] = [UNREACHABLE] * g.n
        for k, layer in enumerate(distance_layers(g, s)):
            for v in bits(layer):
                row[v] = k
        out.append(tuple(row))
    return DistanceMatrix(g.n, tuple(out))


def eccentricities(g: Graph) -> list[int]:
    """Per-vertex eccentricity; raises on disconnected input."""
    if g.n == 0:
        raise GraphError("eccentricity undefined on the empty graph")
    full = (1 << g.n) - 1
    out = []
    for s in range(g.n):
        layers = distance_layers(g, s)
        if s == 0:
            reached = 0
            for layer in layers:
                reached |= layer
            if reached != full:
                raise DisconnectedGraphError()
        out.append(len(layers) - 1)
    return out


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    diameter: int
    radius: int
    shells: dict[int, frozenset[int]]  # S_i: eccentricity -> vertices
    centers: frozenset[int]
    diametrical: frozenset[int]

    def shell(self, i: int) -> frozenset[int]:
        return self.shells.get(i, frozenset())

    def is_self_centered(self) -> bool:
        return self.diameter == self.radius


def profile_from_ecc(ecc: list[int] | tuple[int, ...]) -> EccentricityProfile:
    shells: dict[int, set[int]] = {}
    for v, e in enumerate(ecc):
        shells.setdefault(e, set()).add(v)
    d, r = max(ecc), min(ecc)
    return EccentricityProfile(
        ecc=tuple(ecc),
        diameter=d,
        radius=r,
        shells={i: frozenset(s) for i, s in sorted(shells.items())},
        centers=frozenset(shells[r]),
        diametrical=frozenset(shells[d]),
    )


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    return profile_from_ecc(eccentricities(g))


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def is_self_centered(g: Graph, d: int) -> bool:
    ecc = eccentricities(g)
    return max(ecc) == min(ecc) == d
