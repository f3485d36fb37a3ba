"""Exact isomorphism testing and a brute-force canonical form for small graphs.

Both routines start from colour refinement (1-dimensional Weisfeiler-Leman)
to split vertices into classes that any isomorphism must respect, then search
only over assignments that stay inside those classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError, bits, emit_graph6

CANONICAL_MAX_N = 10


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: Optional[tuple[int, ...]] = None  # mapping[u] is the image of u

    def __bool__(self) -> bool:
        return self.isomorphic


NOT_ISOMORPHIC = IsoResult(False)


def refine_colors(graphs: Sequence[Graph]) -> list[list[int]]:
    """Stable colouring computed jointly, so colour ids are comparable across ``graphs``.

    Ids are ranks of sorted signatures, hence independent of vertex labels.
    """
    colors = [g.degrees() for g in graphs]
    distinct = len({c for cs in colors for c in cs})
    while True:
        sigs = [
            [(cs[u], tuple(sorted(cs[v] for v in bits(g.rows[u])))) for u in range(g.n)]
            for g, cs in zip(graphs, colors)
        ]
        rank = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[rank[s] for s in ss] for ss in sigs]
        if len(rank) == distinct:
            return colors
        distinct = len(rank)


def audit_mapping(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is a bijection with ``u~v in g <=> mapping[u]~mapping[v] in h``."""
    n = g.n
    if h.n != n or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    for u in range(n):
        image = 0
        for v in bits(g.rows[u]):
            image |= 1 << mapping[v]
        if image != h.rows[mapping[u]]:
            return False
    return True


def _search_order(g: Graph, colors: list[int], class_size: dict[int, int]) -> list[int]:
    # Rarest colour first, then keep growing along edges so each new vertex
    # is pinned by as many already-mapped neighbours as possible.
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-(g.rows[u] & placed).bit_count(), class_size[colors[u]], u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_isomorphism(g: Graph, h: Graph) -> IsoResult:
    if g.n != h.n or g.m != h.m:
        return NOT_ISOMORPHIC
    if g.rows == h.rows:
        return IsoResult(True, tuple(range(g.n)))
    if sorted(g.degrees()) != sorted(h.degrees()):
        return NOT_ISOMORPHIC
    cg, ch = refine_colors([g, h])
    if sorted(cg) != sorted(ch):
        return NOT_ISOMORPHIC

    n = g.n
    by_color: dict[int, int] = {}
    class_size: dict[int, int] = {}
    for v, c in enumerate(ch):
        by_color[c] = by_color.get(c, 0) | 1 << v
        class_size[c] = class_size.get(c, 0) + 1
    order = _search_order(g, cg, class_size)
    mapping = [-1] * n
    grows, hrows = g.rows, h.rows

    def extend(i: int, placed_g: int, used_h: int) -> bool:
        if i == n:
            return True
        v = order[i]
        target = 0
        for w in bits(grows[v] & placed_g):
            target |= 1 << mapping[w]
        cands = by_color[cg[v]] & ~used_h
        while cands:
            low = cands & -cands
            c = low.bit_length() - 1
            cands ^= low
            if hrows[c] & used_h == target:
                mapping[v] = c
                if extend(i + 1, placed_g | 1 << v, used_h | low):
                    return True
        mapping[v] = -1
        return False

    if not extend(0, 0, 0):
        return NOT_ISOMORPHIC
    result = tuple(mapping)
    if not audit_mapping(g, h, result):
        raise AssertionError("isomorphism search produced a mapping that fails the audit")
    return IsoResult(True, result)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h).isomorphic


def canonical_form(g: Graph) -> bytes:
    """graph6 string of the lexicographically greatest class-respecting relabeling.

    Vertices are laid out class by class in refined-colour order, and every
    ordering within classes is explored with prefix pruning. Because the
    classes are label-invariant, two graphs get equal output iff isomorphic.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise GraphError(f"canonical form limited to n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return emit_graph6(g)
    (colors,) = refine_colors([g])
    slots = sorted(range(n), key=lambda v: colors[v])
    slot_color = [colors[v] for v in slots]
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)

    rows = g.rows
    record = [-1] * n  # best prefix seen at each depth
    order = [0] * n
    best_order: list[int] = []
    used = [False] * n

    # Swapping twins (equal neighbourhoods, with or without each other) is an
    # automorphism, so only the first unused twin needs trying at a position.
    open_key = list(rows)
    closed_key = [row | 1 << v for v, row in enumerate(rows)]

    def dfs(j: int, prefix: int) -> None:
        nonlocal best_order
        tried_open: set[int] = set()
        tried_closed: set[int] = set()
        for v in members[slot_color[j]]:
            if used[v] or open_key[v] in tried_open or closed_key[v] in tried_closed:
                continue
            tried_open.add(open_key[v])
            tried_closed.add(closed_key[v])
            col = 0
            row = rows[v]
            for i in range(j):
                col = col << 1 | (row >> order[i] & 1)
            p = prefix << j | col
            if p < record[j]:
                continue
            if p > record[j]:
                record[j] = p
                for k in range(j + 1, n):
                    record[k] = -1
            order[j] = v
            if j == n - 1:
                best_order = order[:]
                continue
            used[v] = True
            dfs(j + 1, p)
            used[v] = False

    dfs(0, 0)
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return emit_graph6(g.relabel(perm))
