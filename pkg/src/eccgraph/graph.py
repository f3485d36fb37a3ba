"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex: bit ``v`` of
``rows[u]`` is set iff ``u ~ v``. Every algorithm in the package treats a
:class:`Graph` as read-only, so values can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 258047


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex outside [0, {self.n})")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @classmethod
    def trusted(cls, rows: tuple[int, ...]) -> Graph:
        """Wrap rows already known to be valid, skipping the O(m) audit."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", rows)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``u`` renamed ``perm[u]``."""
        new = [0] * self.n
        for u, row in enumerate(self.rows):
            acc = 0
            for v in bits(row):
                acc |= 1 << perm[v]
            new[perm[u]] = acc
        return Graph(self.n, tuple(new))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)))


def edge_set_equal(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.rows == h.rows


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


# --- standard families -----------------------------------------------------

FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "double_star": 2,
    "sstar": 2,
    "grid": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in FAMILY_ARITY:
            raise GraphError(f"unknown family {self.family!r}")
        if len(self.params) != FAMILY_ARITY[self.family]:
            raise GraphError(
                f"{self.family} takes {FAMILY_ARITY[self.family]} parameter(s), "
                f"got {len(self.params)}"
            )
        if any(p < 0 for p in self.params):
            raise GraphError(f"{self.family} parameters must be >= 0, got {self.params}")


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices in total: center 0, leaves ``1..n-1``."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def double_star(a: int, b: int) -> Graph:
    """Centers 0 and 1; leaves ``2..a+1`` on 0, then ``b`` leaves on 1."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return make_graph(a + b + 2, edges)


def sstar(a: int, b: int) -> Graph:
    """Triangle 0-1-2 with ``a`` pendants on 0 and ``b`` pendants on 1."""
    edges = [(0, 1), (1, 2), (0, 2)]
    edges += [(0, 3 + i) for i in range(a)]
    edges += [(1, 3 + a + i) for i in range(b)]
    return make_graph(a + b + 3, edges)


def grid(r: int, c: int) -> Graph:
    """``r x c`` lattice, row-major labels, horizontal and vertical unit edges."""
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return make_graph(r * c, edges)


_GENERATORS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "double_star": double_star,
    "sstar": sstar,
    "grid": grid,
}


def _family_order(spec: FamilySpec) -> int:
    p = spec.params
    if spec.family == "grid":
        return p[0] * p[1]
    if spec.family == "complete_bipartite":
        return p[0] + p[1]
    if spec.family == "double_star":
        return p[0] + p[1] + 2
    if spec.family == "sstar":
        return p[0] + p[1] + 3
    return p[0]


def generate(spec: FamilySpec) -> Graph:
    if _family_order(spec) == 0:
        raise GraphError(f"{spec.family}{spec.params} has no vertices")
    return _GENERATORS[spec.family](*spec.params)


@dataclass(frozen=True)
class MixedExtensionSpec:
    """Coclique extension of P4 with part sizes ``p1..p4`` in path order."""

    p1: int
    p2: int
    p3: int
    p4: int

    def __post_init__(self) -> None:
        if min(self.sizes) < 1:
            raise GraphError(f"coclique part sizes must be >= 1, got {self.sizes}")

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (self.p1, self.p2, self.p3, self.p4)


def mixed_extension_p4(spec: MixedExtensionSpec) -> Graph:
    parts = []
    start = 0
    for p in spec.sizes:
        parts.append(range(start, start + p))
        start += p
    edges = [(u, v) for i in range(3) for u in parts[i] for v in parts[i + 1]]
    return make_graph(start, edges)


# --- serialization ---------------------------------------------------------

def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 supports n <= {GRAPH6_MAX_N}, got {n}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = 0
    nbits = 0
    rows = g.rows
    for v in range(1, n):
        row = rows[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.rstrip(b"\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} outside [63, 126]", base + i)
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("eight-byte size form exceeds supported n", base + 1)
        if len(data) < 4:
            raise Graph6Error("truncated four-byte size", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise Graph6Error(f"n={n} must use the one-byte size form", base + 1)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph", base + pos + need)
    if nbits % 6 and need and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield parse_graph6(line)


def emit_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if n is None:
                if len(fields) != 2 or fields[0] != "n":
                    raise GraphError(f"line {lineno}: expected 'n <count>', got {raw!r}")
                n = int(fields[1])
                continue
            if len(fields) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: non-integer field in {raw!r}") from None
    if n is None:
        raise GraphError("edge list has no 'n <count>' line")
    return make_graph(n, edges)


def emit_dot(g: Graph) -> str:
    lines = ["graph {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
