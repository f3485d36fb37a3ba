"""List isomorphism classes where the eccentric graph is connected yet has larger diameter.

    python3 scripts/diameter_counterexamples.py --max-n 6
"""

from __future__ import annotations

import argparse
from collections import Counter

from eccgraph.eccentric import eccentric_graph
from eccgraph.enumeration import enumerate_connected_graphs
from eccgraph.graph import is_connected
from eccgraph.iso import canonical_form
from eccgraph.metrics import eccentricities


def counterexamples(n: int) -> Counter:
    found: Counter = Counter()
    for g in enumerate_connected_graphs(n):
        e = eccentric_graph(g)
        if not is_connected(e):
            continue
        d, de = max(eccentricities(g)), max(eccentricities(e))
        if de > d:
            found[(canonical_form(g).decode(), d, de)] += 1
    return found


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        found = counterexamples(n)
        print(f"n={n}: {len(found)} classes, {sum(found.values())} labeled graphs")
        for (g6, d, de), count in sorted(found.items()):
            print(f"  {g6}  diam={d}  diam(ecc)={de}  labeled={count}")


if __name__ == "__main__":
    main()
