"""Exhaustive generators: free trees up to isomorphism, labeled connected graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, GraphError

FREE_TREE_MAX_N = 18
LABELED_MAX_N = 7


# --- free trees ------------------------------------------------------------
#
# A free tree is carried as the canonical level sequence of the tree rooted at
# a center: preorder depths with sibling subtrees in decreasing lexicographic
# order. Rooted trees are walked in decreasing order with the standard
# successor; a sequence is kept when the root really is a center and, for
# bicentral trees, when it is the preferred one of the two centers. Runs of
# rejected sequences are jumped over instead of being generated.


def next_rooted(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Successor of a canonical rooted-tree level sequence, or None after the star.

    With ``p`` given, the change is forced to start at index ``p``.
    """
    if p is None:
        p = len(seq) - 1
        while p > 0 and seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:]
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def split_first_subtree(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split into the root's first subtree (re-rooted at depth 0) and everything else."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    first = [x - 1 for x in seq[1:m]]
    rest = [0] + seq[m:]
    return first, rest


def _is_free_canonical(first: list[int], rest: list[int]) -> bool:
    hf, hr = max(first), max(rest)
    if hr < hf:
        return False
    if hr == hf:
        if len(first) > len(rest):
            return False
        if len(first) == len(rest) and first > rest:
            return False
    return True


def _admit(seq: list[int]) -> Optional[list[int]]:
    """Return ``seq`` if admissible, else the next admissible sequence after it."""
    first, rest = split_first_subtree(seq)
    if _is_free_canonical(first, rest):
        return seq
    p = len(first)
    nxt = next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        # Everything until the first subtree shrinks fails the center test;
        # jump to the sequence whose remainder is a single deep enough path.
        new_first, _ = split_first_subtree(nxt)
        h = max(new_first)
        tail = list(range(1, h + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def level_sequence_to_graph(seq: list[int]) -> Graph:
    n = len(seq)
    rows = [0] * n
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(seq):
        if depth:
            parent = last_at_depth[depth - 1]
            rows[i] |= 1 << parent
            rows[parent] |= 1 << i
        last_at_depth[depth] = i
    return Graph.trusted(tuple(rows))


def free_tree_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= FREE_TREE_MAX_N:
        raise GraphError(f"free tree enumeration supports 1 <= n <= {FREE_TREE_MAX_N}, got {n}")
    if n <= 2:
        yield list(range(n))
        return
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _admit(seq)
        if seq is None:
            return
        yield seq
        seq = next_rooted(seq)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices; vertex 0 is a center."""
    for seq in free_tree_sequences(n):
        yield level_sequence_to_graph(seq)


# --- labeled connected graphs ----------------------------------------------


def _subset_rows(n: int, pairs: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    table = []
    for s in range(1 << len(pairs)):
        rows = [0] * n
        k = 0
        while s:
            if s & 1:
                u, v = pairs[k]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            s >>= 1
            k += 1
        table.append(tuple(rows))
    return table


def _connected_rows(rows: tuple[int, ...], full: int) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def connected_rows_range(n: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Connected edge subsets with index in ``[start, stop)``, as adjacency rows.

    Subset bit ``k`` selects the ``k``-th pair of ``combinations(range(n), 2)``.
    Rows are assembled from two precomputed half tables so each subset costs
    ``n`` ORs rather than one test per pair.
    """
    pairs = list(combinations(range(n), 2))
    lo_bits = len(pairs) // 2
    lo = _subset_rows(n, pairs[:lo_bits])
    hi = _subset_rows(n, pairs[lo_bits:])
    full = (1 << n) - 1
    lo_mask = (1 << lo_bits) - 1
    for s in range(start, stop):
        a = lo[s & lo_mask]
        b = hi[s >> lo_bits]
        rows = tuple(x | y for x, y in zip(a, b))
        if _connected_rows(rows, full):
            yield rows


def subset_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices exactly once."""
    if not 1 <= n <= LABELED_MAX_N:
        raise GraphError(f"labeled enumeration capped at n={LABELED_MAX_N}, got {n}")
    for rows in connected_rows_range(n, 0, subset_count(n)):
        yield Graph.trusted(rows)
