"""Executable forms of the eccentric-graph conditions and exhaustive campaigns.

Labeled campaigns split the edge-subset index range into chunks and hand
them to a process pool (``ECC_THREADS`` workers, default ``os.cpu_count()``).
Chunk results are merged in one place and every output list is sorted by
graph6 string, so the report does not depend on the worker count.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, NamedTuple, Optional

from . import fixtures
from .eccentric import eccentric_graph, eccentric_rows
from .enumeration import (
    LABELED_MAX_N,
    FREE_TREE_MAX_N,
    connected_rows_range,
    enumerate_free_trees,
    subset_count,
)
from .graph import (
    Graph,
    GraphError,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    double_star,
    edge_set_equal,
    emit_graph6,
    grid,
    is_connected,
    path,
    sstar,
    star,
)
from .iso import canonical_form, find_isomorphism
from .metrics import distance_layers, eccentricities
from .trees import (
    diametrical_leaf_triple,
    literal_center_sets,
    predicted_two_center_ecc,
    tree_centers,
    two_center_decomposition,
)

DEFAULT_VIOLATION_CAP = 100


# --- conditions ------------------------------------------------------------


def _shell_masks(ecc: list[int]) -> tuple[bool, int]:
    """(all eccentricities in {2, 3}, bitmask of S_3)."""
    ok = all(e in (2, 3) for e in ecc)
    s3 = 0
    for v, e in enumerate(ecc):
        if e == 3:
            s3 |= 1 << v
    return ok, s3


def _corrected(ecc: list[int], layers: list[list[int]]) -> bool:
    if len(ecc) == 1:
        return True
    ok, s3 = _shell_masks(ecc)
    if not ok:
        return False
    m = s3
    while m:
        low = m & -m
        u = low.bit_length() - 1
        if len(layers[u]) > 2 and layers[u][2] & s3:
            return False
        m ^= low
    return True


def _akiyama(g: Graph, ecc: list[int]) -> bool:
    if g.n == 1:
        return True
    ok, s3 = _shell_masks(ecc)
    if not ok:
        return False
    members = [v for v in range(g.n) if s3 >> v & 1]
    rows = g.rows
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if rows[u] & rows[v]:
                return False
    return True


def corrected_condition(g: Graph) -> bool:
    """Eccentricities all in {2, 3} and no two eccentricity-3 vertices at distance 2.

    ``K1`` is accepted: its eccentric graph and complement coincide.
    """
    ecc = eccentricities(g)
    return _corrected(ecc, [distance_layers(g, s) for s in range(g.n)])


def akiyama_condition(g: Graph) -> bool:
    """Eccentricities all in {2, 3} and no two eccentricity-3 vertices with a common neighbour."""
    return _akiyama(g, eccentricities(g))


def ecc_iso_complement(g: Graph) -> bool:
    return find_isomorphism(eccentric_graph(g), complement(g)).isomorphic


@dataclass
class GraphFacts:
    """Everything the labeled campaigns need about one connected graph."""

    g: Graph
    ecc: list[int]
    ecc_graph: Graph
    layers: list[list[int]]

    @classmethod
    def of(cls, g: Graph) -> GraphFacts:
        rows, ecc, layers = eccentric_rows(g)
        return cls(g, ecc, Graph.trusted(rows), layers)

    @property
    def corrected(self) -> bool:
        return _corrected(self.ecc, self.layers)

    @property
    def akiyama(self) -> bool:
        return _akiyama(self.g, self.ecc)

    @property
    def iso_complement(self) -> bool:
        return find_isomorphism(self.ecc_graph, complement(self.g)).isomorphic


# --- reports ---------------------------------------------------------------


@dataclass
class VerificationReport:
    campaign: str
    bounds: dict
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    anomalies: list[str] = field(default_factory=list)
    elapsed_ms: int = 0
    labeled_findings: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.labeled_findings is None:
            del out["labeled_findings"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class _Collector:
    def __init__(self, cap: int):
        self.cap = cap
        self.checked = 0
        self.violations: list[dict] = []
        self.violation_total = 0

    def violation(self, g: Graph, detail: str) -> None:
        self.violation_total += 1
        if len(self.violations) < self.cap:
            self.violations.append({"graph6": emit_graph6(g).decode(), "detail": detail})

    def finish(self, report: VerificationReport, started: float) -> VerificationReport:
        report.checked = self.checked
        report.violations = sorted(self.violations, key=lambda v: (v["graph6"], v["detail"]))
        if self.violation_total > len(self.violations):
            report.anomalies.append(
                f"violation list capped at {self.cap} of {self.violation_total}"
            )
        report.elapsed_ms = int((time.perf_counter() - started) * 1000)
        return report


def worker_count() -> int:
    raw = os.environ.get("ECC_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(f"ECC_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise GraphError(f"ECC_THREADS must be a positive integer, got {raw!r}")
    return value


# --- labeled campaigns -----------------------------------------------------
#
# Classifiers are module-level so chunks can be pickled.


class Verdict(NamedTuple):
    detail: Optional[str]  # violation diagnostic, None when the claim held
    found: bool = False  # belongs in the findings of a search
    skipped: bool = False  # claim not applicable to this instance


def classify_theorem2(g: Graph) -> Verdict:
    f = GraphFacts.of(g)
    corrected, iso, akiyama = f.corrected, f.iso_complement, f.akiyama
    if corrected != iso:
        return Verdict(f"corrected_condition={corrected} but ecc(G)~complement(G) is {iso}")
    if akiyama and not corrected:
        return Verdict("akiyama_condition holds but corrected_condition fails")
    return Verdict(None)


def classify_akiyama_gap(g: Graph) -> Verdict:
    f = GraphFacts.of(g)
    if not f.iso_complement or f.akiyama:
        return Verdict(None)
    if not f.corrected:
        return Verdict("ecc(G)~complement(G) and akiyama fails, yet corrected_condition fails", True)
    return Verdict(None, True)


def classify_problem1(g: Graph) -> Verdict:
    f = GraphFacts.of(g)
    if not is_connected(f.ecc_graph):
        return Verdict(None, skipped=True)
    d, de = max(f.ecc), max(eccentricities(f.ecc_graph))
    if de > d:
        return Verdict(f"diam(ecc(G))={de} exceeds diam(G)={d}")
    return Verdict(None, d == de)


def classify_problem2(g: Graph) -> Verdict:
    f = GraphFacts.of(g)
    return Verdict(None, find_isomorphism(g, f.ecc_graph).isomorphic)


CLASSIFIERS: dict[str, Callable[[Graph], Verdict]] = {
    "theorem2": classify_theorem2,
    "akiyama-gap": classify_akiyama_gap,
    "same-diameter": classify_problem1,
    "self-ecc": classify_problem2,
}


@dataclass
class ChunkResult:
    checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    violation_total: int = 0
    findings: dict[str, int] = field(default_factory=dict)  # canonical graph6 -> labeled count
    skipped: int = 0


def run_chunk(name: str, n: int, start: int, stop: int, cap: int) -> ChunkResult:
    classify = CLASSIFIERS[name]
    out = ChunkResult()
    for rows in connected_rows_range(n, start, stop):
        g = Graph.trusted(rows)
        detail, found, skipped = classify(g)
        out.checked += 1
        out.skipped += skipped
        if detail is not None:
            out.violation_total += 1
            if len(out.violations) < cap:
                out.violations.append((emit_graph6(g).decode(), detail))
        if found:
            key = canonical_form(g).decode()
            out.findings[key] = out.findings.get(key, 0) + 1
    return out


def _chunks(max_n: int, min_n: int) -> list[tuple[int, int, int]]:
    jobs = []
    for n in range(min_n, max_n + 1):
        total = subset_count(n)
        step = max(1, total // 64)
        jobs.extend((n, s, min(s + step, total)) for s in range(0, total, step))
    return jobs


def labeled_campaign(
    name: str, max_n: int, min_n: int = 1, cap: int = DEFAULT_VIOLATION_CAP
) -> VerificationReport:
    if not 1 <= min_n <= max_n <= LABELED_MAX_N:
        raise GraphError(f"labeled campaigns need 1 <= n <= {LABELED_MAX_N}, got {min_n}..{max_n}")
    started = time.perf_counter()
    jobs = _chunks(max_n, min_n)
    workers = min(worker_count(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            futures = [pool.submit(run_chunk, name, n, a, b, cap) for n, a, b in jobs]
            parts = [f.result() for f in futures]
    else:
        parts = [run_chunk(name, n, a, b, cap) for n, a, b in jobs]

    report = VerificationReport(name, {"min_n": min_n, "max_n": max_n})
    col = _Collector(cap)
    findings: dict[str, int] = {}
    skipped = 0
    for part in parts:
        col.checked += part.checked
        col.violation_total += part.violation_total
        for g6, detail in part.violations:
            if len(col.violations) < cap:
                col.violations.append({"graph6": g6, "detail": detail})
        for key, count in part.findings.items():
            findings[key] = findings.get(key, 0) + count
        skipped += part.skipped
    report.findings = sorted(findings)
    if name != "theorem2":
        report.labeled_findings = sum(findings.values())
    if skipped:
        report.anomalies.append(
            f"{skipped} graphs have a disconnected eccentric graph; "
            "the diameter bound is not asserted for them"
        )
    return col.finish(report, started)


def verify_theorem2(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Corrected condition <=> ecc(G) isomorphic to complement(G), every connected labeled graph."""
    if not 2 <= max_n <= LABELED_MAX_N:
        raise GraphError(f"max_n must be in [2, {LABELED_MAX_N}], got {max_n}")
    return labeled_campaign("theorem2", max_n, cap=cap)


def search_akiyama_gap(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Graphs with ecc(G) isomorphic to complement(G) that fail the common-neighbour condition."""
    if not 2 <= max_n <= LABELED_MAX_N:
        raise GraphError(f"max_n must be in [2, {LABELED_MAX_N}], got {max_n}")
    return labeled_campaign("akiyama-gap", max_n, cap=cap)


def search_problem1(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Findings have diam(ecc(G)) = diam(G); violations have a connected ecc(G) of larger diameter.

    The bound diam(ecc(G)) <= diam(G) fails from n = 5 on (the house graph has
    diameter 2 and its eccentric graph is P5), so violations are expected there.
    """
    if not 2 <= max_n <= LABELED_MAX_N:
        raise GraphError(f"max_n must be in [2, {LABELED_MAX_N}], got {max_n}")
    return labeled_campaign("same-diameter", max_n, cap=cap)


def search_problem2(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    if not 2 <= max_n <= LABELED_MAX_N:
        raise GraphError(f"max_n must be in [2, {LABELED_MAX_N}], got {max_n}")
    return labeled_campaign("self-ecc", max_n, cap=cap)


# --- tree campaigns --------------------------------------------------------


def _trees_upto(max_n: int, min_n: int = 1) -> Iterable[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_free_trees(n)


def _check_range(max_n: int, lo: int, hi: int) -> None:
    if not lo <= max_n <= hi:
        raise GraphError(f"max_n must be in [{lo}, {hi}], got {max_n}")


def verify_tree_diameter_bound(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """diam(ecc(T)) <= 3 and <= diam(T) for every free tree on at most ``max_n`` vertices."""
    _check_range(max_n, 2, FREE_TREE_MAX_N)
    started = time.perf_counter()
    report = VerificationReport("tree-diameter", {"max_n": max_n})
    col = _Collector(cap)
    for t in _trees_upto(max_n):
        col.checked += 1
        e = eccentric_graph(t)
        if not is_connected(e):
            col.violation(t, "ecc(T) is disconnected")
            continue
        d_ecc, d_t = max(eccentricities(e)), max(eccentricities(t))
        if d_ecc > 3:
            col.violation(t, f"diam(ecc(T))={d_ecc} > 3")
        if d_ecc > d_t:
            col.violation(t, f"diam(ecc(T))={d_ecc} > diam(T)={d_t}")
        if len(tree_centers(t)) == 2:
            if t.n == 2:
                continue
            if d_ecc != 3:
                col.violation(t, f"two-center tree with diam(ecc(T))={d_ecc}, expected 3")
    report.anomalies.append("K2 has two centers but ecc(K2)=K2 has diameter 1 (all other two-center trees reach 3)")
    return col.finish(report, started)


def _check_two_center(t: Graph) -> tuple[Optional[str], tuple[int, int, int, int], bool]:
    """(violation detail, part sizes, whether the literal distance<radius reading differs)."""
    dec = two_center_decomposition(t)
    ecc = eccentricities(t)
    problems = []
    if not dec.u1 or not dec.u2:
        problems.append("a side has no diametrical vertex")
    # in K2 both centers are diametrical and the Tc parts are empty
    if t.n > 2 and (dec.c1 not in dec.tc1 or dec.c2 not in dec.tc2):
        problems.append("a center is diametrical")
    if any(ecc[x] >= dec.diameter for x in dec.tc1 | dec.tc2):
        problems.append("non-diametrical part contains a diametrical vertex")
    for c, side, far in ((dec.c1, dec.v1, dec.u1), (dec.c2, dec.v2, dec.u2)):
        layers = distance_layers(t, c)
        depth = {v: k for k, layer in enumerate(layers) for v in range(t.n) if layer >> v & 1}
        if max(depth[x] for x in side) != dec.radius - 1:
            problems.append("side depth differs from radius - 1")
        if {x for x in side if depth[x] == dec.radius - 1} != set(far):
            problems.append("diametrical side vertices are not exactly those at depth radius - 1")
    if not edge_set_equal(eccentric_graph(t), predicted_two_center_ecc(dec)):
        problems.append("ecc(T) differs from the predicted P4 coclique extension")
    lit1, lit2 = literal_center_sets(t, dec)
    literal_differs = (lit1, lit2) != (dec.tc1, dec.tc2)
    return ("; ".join(problems) or None), dec.part_sizes, literal_differs


def verify_two_center_structure(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """ecc(T) equals the P4 coclique extension built from the two-center split, labels and all."""
    _check_range(max_n, 2, 14)
    started = time.perf_counter()
    col = _Collector(cap)
    literal_mismatch = 0

    fixture = fixtures.figure3_tree()
    detail, sizes, differs = _check_two_center(fixture)
    col.checked += 1
    literal_mismatch += differs
    if detail:
        col.violation(fixture, f"figure3 fixture: {detail}")
    if sizes != (3, 2, 5, 5):
        col.violation(fixture, f"figure3 fixture part sizes {sizes}, expected (3, 2, 5, 5)")

    for t in _trees_upto(max_n, 2):
        if len(tree_centers(t)) != 2:
            continue
        col.checked += 1
        detail, _, differs = _check_two_center(t)
        literal_mismatch += differs
        if detail:
            col.violation(t, detail)

    for k in range(1, 8):
        t = path(2 * k)
        predicted = predicted_two_center_ecc(two_center_decomposition(t))
        col.checked += 1
        if not find_isomorphism(predicted, double_star(k - 1, k - 1)).isomorphic:
            col.violation(t, f"predicted ecc(P{2 * k}) is not double_star({k - 1}, {k - 1})")

    report = VerificationReport(
        "two-center", {"max_n": max_n, "fixture_sizes": list(sizes), "even_paths_upto": 14}
    )
    if literal_mismatch:
        report.anomalies.append(
            f"{literal_mismatch} decompositions: the literal set {{x : d(x, c_i) < radius}} "
            "includes the diametrical vertices; the non-diametrical remainder is used instead"
        )
    return col.finish(report, started)


def lemma5_status(t: Graph) -> tuple[Optional[str], Optional[str]]:
    """(violation detail, anomaly note) for one one-center tree."""
    triple = diametrical_leaf_triple(t)
    e = eccentric_graph(t)
    ecc_e = eccentricities(e) if is_connected(e) else None
    two_sc = ecc_e is not None and max(ecc_e) == min(ecc_e) == 2
    d = max(eccentricities(t))
    if d <= 2:
        if t.n < 3:
            return None, None
        has = "exists" if triple else "absent"
        kind = f"{max(ecc_e)}-self-centered" if ecc_e and max(ecc_e) == min(ecc_e) else "not self-centered"
        return None, (
            f"{emit_graph6(t).decode()}: star on {t.n} vertices, diameter {d}; "
            f"leaf triple {has}, ecc(T) has {e.m} edges and is {kind}"
        )
    problems = []
    if (triple is not None) != two_sc:
        problems.append(f"leaf triple {'exists' if triple else 'absent'} but ecc(T) 2-self-centered is {two_sc}")
    if triple is None and (ecc_e is None or max(ecc_e) != 3):
        problems.append(f"no leaf triple but diam(ecc(T)) is {None if ecc_e is None else max(ecc_e)}, expected 3")
    return ("; ".join(problems) or None), None


def verify_lemma5(max_n: int, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Leaf triple <=> ecc(T) 2-self-centered, and no triple => diam(ecc(T)) = 3.

    Asserted for one-center trees of diameter >= 4; diameter-2 trees (stars)
    go to the anomaly list.
    """
    _check_range(max_n, 4, 14)
    started = time.perf_counter()
    report = VerificationReport("lemma5", {"max_n": max_n, "min_diameter": 4})
    col = _Collector(cap)
    for t in _trees_upto(max_n, 3):
        if len(tree_centers(t)) != 1:
            continue
        detail, note = lemma5_status(t)
        if note:
            report.anomalies.append(note)
            continue
        col.checked += 1
        if detail:
            col.violation(t, detail)
    return col.finish(report, started)


# --- fixed families --------------------------------------------------------


def table1_rows(max_param: int) -> Iterable[tuple[str, Graph, Graph]]:
    """(label, graph, predicted eccentric graph) for every admissible parameter."""
    for n in range(1, max_param + 1):
        yield f"complete({n})", complete(n), complete(n)
    for n in range(2, max_param + 1):
        yield f"star({n})", star(n), complete(n)
    for n in range(2, max_param + 1):
        yield f"cycle({2 * n})", cycle(2 * n), disjoint_union(*[complete(2)] * n)
    for n in range(2, max_param + 1):
        yield f"cycle({2 * n - 1})", cycle(2 * n - 1), cycle(2 * n - 1)
    for n in range(1, max_param + 1):
        yield f"path({2 * n})", path(2 * n), double_star(n - 1, n - 1)
    for k in range(1, max_param + 1):
        yield f"path({2 * k + 1})", path(2 * k + 1), sstar(k - 1, k - 1)
    for a in range(2, max_param + 1):
        for b in range(a, max_param + 1):
            yield (
                f"complete_bipartite({a},{b})",
                complete_bipartite(a, b),
                disjoint_union(complete(a), complete(b)),
            )


def verify_table1(max_param: int = 30, cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    if max_param < 3:
        raise GraphError(f"max_param must be >= 3, got {max_param}")
    started = time.perf_counter()
    report = VerificationReport("table1", {"max_param": max_param})
    col = _Collector(cap)
    for label, g, predicted in table1_rows(max_param):
        col.checked += 1
        if not find_isomorphism(eccentric_graph(g), predicted).isomorphic:
            col.violation(g, f"{label}: eccentric graph not isomorphic to the predicted form")
    odd_ones = [
        m for m in range(1, max_param + 1)
        if not find_isomorphism(
            eccentric_graph(complete_bipartite(1, m)), disjoint_union(complete(1), complete(m))
        ).isomorphic
    ]
    if odd_ones:
        report.anomalies.append(
            f"complete_bipartite(1,m) is a star: its eccentric graph is K_(m+1), not K_1 + K_m, "
            f"for m in {odd_ones[0]}..{odd_ones[-1]}; the bipartite row is checked for both sides >= 2"
        )
    return col.finish(report, started)


def grid_fixture_check() -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("grid", {"rows": 3, "cols": 4})
    col = _Collector(DEFAULT_VIOLATION_CAP)
    g = grid(3, 4)
    e = eccentric_graph(g)
    col.checked = 1
    d_g = max(eccentricities(g))
    if d_g != 5:
        col.violation(g, f"grid diameter {d_g}, expected 5")
    if not is_connected(e):
        col.violation(g, "eccentric graph of the grid is disconnected")
    else:
        d_e = max(eccentricities(e))
        if d_e != 5:
            col.violation(g, f"diam(ecc(grid))={d_e}, expected 5")
    if not find_isomorphism(e, fixtures.figure4_ecc()).isomorphic:
        col.violation(g, "eccentric graph not isomorphic to the transcribed drawing")
    if not find_isomorphism(g, fixtures.figure4_grid()).isomorphic:
        col.violation(g, "grid(3,4) not isomorphic to the transcribed grid drawing")
    if not edge_set_equal(eccentric_graph(fixtures.figure4_grid()), fixtures.figure4_ecc()):
        report.anomalies.append(
            "drawn eccentric graph matches only up to isomorphism, not on the drawn labels"
        )
    return col.finish(report, started)
