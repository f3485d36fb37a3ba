from __future__ import annotations

import pytest
from hypothesis import strategies as st

from eccgraph.graph import make_graph

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_n=0, max_n=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if connected:
        # a random spanning tree underneath guarantees connectivity
        edges += [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return make_graph(n, edges)


def permutations_of(n):
    return st.permutations(list(range(n)))


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (key, passed, note)."""

    def record(key: str, passed: bool, note: str = "") -> None:
        ACCEPTANCE[key] = (passed, note)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        passed, note = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {key}  {note}")
