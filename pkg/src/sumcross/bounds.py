"""Inequality checkers.  Each one instantiates a single bound on a concrete
instance and returns a BoundReport with both sides, a verdict, and enough
context to reproduce the computation.

Proven bounds with explicit constants run in assert mode; statements with
unspecified constants or hidden log factors, and bounds whose small-instance
regime is not pinned down, run in report mode and never fail a suite.

Verdicts are computed in exact integer arithmetic (square roots squared
out, decimal constants as fractions); the stored lhs/rhs floats are for
human consumption only.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .arcgraph import (
    ArcGraph,
    build_sum_graph,
    count_crossings_fast,
    count_crossings_oracle,
    count_intersections,
    degree_sequence,
    has_parallel_edges,
)
from .sets import (
    IntegerSet,
    RepProfile,
    energy,
    is_dcd,
    level_set_size,
    consecutive_difference_multiplicity,
    representation_profile,
    satisfies_doubling,
    sumset,
)

__all__ = [
    "BoundReport",
    "check_sumset_lower",
    "check_crossing_upper",
    "check_crossing_lower",
    "check_degree_weighted_crossing",
    "check_bipartite_crossing",
    "check_energy_lower",
    "check_heavy_subset",
    "check_level_set_count",
    "check_multiplicity_lower",
    "check_intersection_lower",
    "check_doubling_lower",
    "run_all_checks",
    "reports_to_jsonable",
]

ASSERT = "assert"
REPORT = "report"


@dataclass(frozen=True)
class BoundReport:
    """One bound on one instance.

    The comparison direction is recorded in the name suffix: ``_ge`` means
    the claim is lhs >= rhs, ``_lt`` means lhs < rhs.  ``ratio`` is
    lhs/rhs when rhs is positive, else None.
    """

    name: str
    lhs: float
    rhs: float
    mode: str
    satisfied: bool
    ratio: Optional[float]
    context: dict

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "mode": self.mode,
            "satisfied": self.satisfied,
            "ratio": self.ratio,
            "context": self.context,
        }


def _ratio(lhs, rhs) -> Optional[float]:
    if rhs <= 0:
        return None
    try:
        return float(lhs) / float(rhs)
    except OverflowError:
        return None


def _sumset_size(A, B, cached=None) -> int:
    return cached if cached is not None else len(sumset(A, B))


def check_sumset_lower(A: IntegerSet, B: IntegerSet, *,
                       sumset_size: int | None = None) -> BoundReport:
    """|A+B| >= |A| sqrt(|B|) / sqrt(27) when A has distinct consecutive
    differences.  Non-dcd A demotes the report to report mode."""
    k, l = len(A), len(B)
    s = _sumset_size(A, B, sumset_size)
    pre = is_dcd(A)
    satisfied = 27 * s * s >= k * k * l
    rhs = k * math.sqrt(l) / math.sqrt(27.0)
    return BoundReport(
        "sumset_lower_ge", float(s), rhs, ASSERT if pre else REPORT,
        satisfied, _ratio(s, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s, "preconditionDcd": pre})


def check_crossing_upper(A: IntegerSet, B: IntegerSet, *,
                         crossings: int | None = None,
                         graph: ArcGraph | None = None) -> BoundReport:
    """Crossings of the sum graph are at most C(|B|,2)(2|A|-1), hence at
    most |B|^2 |A|.  Both forms are required for a pass; the weaker one is
    the recorded lhs, the sharp one sits in the context."""
    k, l = len(A), len(B)
    if crossings is None:
        if graph is None:
            graph = build_sum_graph(A, B)
        crossings = count_crossings_fast(graph)
    pre = is_dcd(A)
    sharp = (l * (l - 1) // 2) * (2 * k - 1)
    weak = l * l * k
    satisfied = crossings <= sharp and crossings <= weak
    return BoundReport(
        "crossing_upper_ge", float(weak), float(crossings),
        ASSERT if pre else REPORT, satisfied, _ratio(weak, crossings),
        {"aSize": k, "bSize": l, "crossings": crossings,
         "sharpBound": sharp, "sharpSatisfied": crossings <= sharp,
         "preconditionDcd": pre})


def check_crossing_lower(A: IntegerSet, B: IntegerSet, *,
                         crossings: int | None = None,
                         graph: ArcGraph | None = None,
                         sumset_size: int | None = None) -> BoundReport:
    """One-page drawing lower bound cr >= e^3 / (27 n^2) with e = |B|(|A|-1)
    edges and n = |A+B| vertices.  Report-only: the cited bound speaks about
    optimal drawings and its small-instance correction terms are unknown, so
    instances like |B| = 1 legitimately fall below it."""
    if len(A) < 2:
        raise ValueError("A must have at least two elements")
    k, l = len(A), len(B)
    if crossings is None:
        if graph is None:
            graph = build_sum_graph(A, B)
        crossings = count_crossings_fast(graph)
    s = _sumset_size(A, B, sumset_size)
    e = l * (k - 1)
    satisfied = 27 * s * s * crossings >= e**3
    rhs = e**3 / (27.0 * s * s)
    return BoundReport(
        "crossing_lower_ge", float(crossings), rhs, REPORT, satisfied,
        _ratio(crossings, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s, "edges": e,
         "crossings": crossings, "preconditionDcd": is_dcd(A)})


def check_degree_weighted_crossing(graph: ArcGraph, *,
                                   crossings: int | None = None) -> BoundReport:
    """cr(G) >= (1/36000n) * sum_i i*d_i^3 - 4.01 n^2 over the nonincreasing
    degree sequence of a simple graph."""
    if has_parallel_edges(graph):
        raise ValueError("degree-weighted bound needs a simple graph")
    if crossings is None:
        crossings = count_crossings_fast(graph)
    n = graph.num_vertices
    degrees = degree_sequence(graph)
    weighted = sum(i * d**3 for i, d in enumerate(degrees, start=1))
    # 4.01 n^2 = 144360 n^3 / (36000 n); compare integers, no floats
    satisfied = 36000 * n * crossings >= weighted - 144360 * n**3
    rhs = weighted / (36000.0 * n) - 4.01 * n * n
    return BoundReport(
        "degree_weighted_crossing_ge", float(crossings), rhs, ASSERT,
        satisfied, _ratio(crossings, rhs),
        {"vertices": n, "edges": graph.num_edges, "crossings": crossings,
         "weightedDegreeCubes": weighted})


def check_bipartite_crossing(graph: ArcGraph, part_u) -> BoundReport:
    """cr >= e^3 / (108 |U||V|) for the bipartite subgraph of cross edges,
    asserted only under the edge-density hypothesis e >= 6 max(|U|,|V|)."""
    U = set(part_u)
    n = graph.num_vertices
    if any(not 0 <= u < n for u in U):
        raise ValueError("part contains an out-of-range vertex index")
    cross = tuple(e for e in graph.edges if (e.u in U) != (e.v in U))
    e = len(cross)
    size_u = len(U)
    size_v = n - size_u
    crossings = count_crossings_oracle(
        ArcGraph(graph.positions, cross, validate=False))
    # parallel edges never cross, so the cubic bound only holds for simple
    # cross subgraphs; multigraphs are recorded, not asserted
    simple = len({(x.u, x.v) for x in cross}) == e
    hypothesis = simple and e >= 6 * max(size_u, size_v)
    if size_u and size_v:
        satisfied = 108 * size_u * size_v * crossings >= e**3
        rhs = e**3 / (108.0 * size_u * size_v)
    else:
        satisfied = e == 0
        rhs = 0.0
    return BoundReport(
        "bipartite_crossing_ge", float(crossings), rhs,
        ASSERT if hypothesis else REPORT, satisfied, _ratio(crossings, rhs),
        {"uSize": size_u, "vSize": size_v, "crossEdges": e,
         "hypothesisMet": hypothesis})


def check_energy_lower(A: IntegerSet, B: IntegerSet, *,
                       profile: RepProfile | None = None,
                       sumset_size: int | None = None) -> BoundReport:
    """|A+B| against E_1.5(A,B)^(2/3).  The underlying statement hides a
    log factor, so this is report-only bookkeeping of the ratio."""
    if len(A) != len(B):
        raise ValueError("sets must have equal size")
    if profile is None:
        profile = representation_profile(A, B)
    s = sumset_size if sumset_size is not None else len(profile.counts)
    e15 = float(energy(profile, 1.5).value)
    rhs = e15 ** (2.0 / 3.0)
    return BoundReport(
        "energy_lower_ge", float(s), rhs, REPORT, s >= rhs, _ratio(s, rhs),
        {"aSize": len(A), "bSize": len(B), "sumsetSize": s,
         "energy15": e15, "logSumsetSize": math.log(s),
         "preconditionDcd": is_dcd(A)})


def check_heavy_subset(A: IntegerSet, B: IntegerSet, S: IntegerSet, *,
                       profile: RepProfile | None = None) -> BoundReport:
    """Given a subset S of the sumset carrying representation mass
    |A||B|/Delta, the sumset must satisfy |A+B| >= |B||A|^2 / ((2 Delta)^3 |S|).
    Delta is computed from S itself, so the mass hypothesis holds with
    equality."""
    if profile is None:
        profile = representation_profile(A, B)
    counts = profile.counts
    missing = [x for x in S if x not in counts]
    if missing:
        raise ValueError(f"{missing[0]} is not in the sumset")
    k, l = len(A), len(B)
    mass = sum(counts[x] for x in S)
    size_s = len(S)
    s = len(counts)
    delta = (k * l) / mass
    # rhs = mass^3 / (8 k l^2 |S|) after substituting Delta
    satisfied = 8 * k * l * l * size_s * s >= mass**3
    rhs = mass**3 / (8.0 * k * l * l * size_s)
    return BoundReport(
        "heavy_subset_ge", float(s), rhs,
        ASSERT if is_dcd(A) else REPORT, satisfied, _ratio(s, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s, "subsetSize": size_s,
         "subsetMass": mass, "delta": delta,
         "secondCaseHypothesisHeld": k * l * l >= 6 * s,
         "preconditionDcd": is_dcd(A)})


def check_level_set_count(A: IntegerSet, B: IntegerSet, t: int, *,
                          profile: RepProfile | None = None,
                          level_size: int | None = None) -> BoundReport:
    """Values represented at least t >= 2 times are few:
    |S_t| < 3 |A+B|^(1/2) |A|^(1/2) |B| / t^(3/2)."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if profile is None:
        profile = representation_profile(A, B)
    k, l = len(A), len(B)
    s = len(profile.counts)
    size_t = level_set_size(profile, t) if level_size is None else level_size
    satisfied = size_t * size_t * t**3 < 9 * s * k * l * l
    rhs = 3.0 * math.sqrt(s * k) * l / t**1.5
    return BoundReport(
        "level_set_count_lt", float(size_t), rhs,
        ASSERT if is_dcd(A) else REPORT, satisfied, _ratio(size_t, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s, "t": t,
         "levelSetSize": size_t, "preconditionDcd": is_dcd(A)})


def check_multiplicity_lower(A: IntegerSet, B: IntegerSet, *,
                             sumset_size: int | None = None) -> BoundReport:
    """|A+B| against |A| sqrt(|B|/m) where m is the largest multiplicity of
    a consecutive difference of A.  The constant in the statement is
    unspecified, so the ratio is recorded, never asserted."""
    k, l = len(A), len(B)
    m = consecutive_difference_multiplicity(A)
    s = _sumset_size(A, B, sumset_size)
    satisfied = m * s * s >= k * k * l
    rhs = k * math.sqrt(l / m)
    return BoundReport(
        "multiplicity_lower_ge", float(s), rhs, REPORT, satisfied,
        _ratio(s, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s, "multiplicity": m})


def check_intersection_lower(graph: ArcGraph) -> BoundReport:
    """int(G) >= 0.0658 e^3 / n^2 once e >= 2.25 n; below that edge density
    the bound is only recorded.  0.0658 = 329/5000 exactly.

    Parallel edges share both endpoints and never intersect, so arbitrarily
    many of them add nothing to int(G); the bound is asserted for simple
    graphs only."""
    e = graph.num_edges
    n = graph.num_vertices
    intersections = count_intersections(graph)
    hypothesis = 4 * e >= 9 * n and not has_parallel_edges(graph)
    satisfied = 5000 * n * n * intersections >= 329 * e**3
    rhs = 0.0658 * e**3 / (n * n) if n else 0.0
    return BoundReport(
        "intersection_lower_ge", float(intersections), rhs,
        ASSERT if hypothesis else REPORT, satisfied,
        _ratio(intersections, rhs),
        {"vertices": n, "edges": e, "intersections": intersections,
         "hypothesisMet": hypothesis})


def check_doubling_lower(A: IntegerSet, B: IntegerSet, *,
                         sumset_size: int | None = None) -> BoundReport:
    """|A+B| >= (2 / 3 sqrt(3)) |A| sqrt(|B|) when A has distinct
    consecutive differences within a factor of two of each other."""
    k, l = len(A), len(B)
    pre = len(A) >= 2 and is_dcd(A) and satisfies_doubling(A)
    s = _sumset_size(A, B, sumset_size)
    satisfied = 27 * s * s >= 4 * k * k * l
    rhs = 2.0 * k * math.sqrt(l) / (3.0 * math.sqrt(3.0))
    return BoundReport(
        "doubling_lower_ge", float(s), rhs, ASSERT if pre else REPORT,
        satisfied, _ratio(s, rhs),
        {"aSize": k, "bSize": l, "sumsetSize": s,
         "preconditionDoublingDcd": pre})


# ---------------------------------------------------------------------------
# Suite runner.


def _argmax_value(profile: RepProfile) -> int:
    # deterministic: largest count, ties broken by the smaller sum value
    return min(profile.counts, key=lambda x: (-profile.counts[x], x))


def run_all_checks(A: IntegerSet, B: IntegerSet, *,
                   oracle_edge_limit: int = 2500) -> list[BoundReport]:
    """Run every checker that applies to (A, B) and return the reports
    sorted by (name, context digest).

    The quadratic counters (bipartite split, intersection number) only run
    when the sum graph has at most ``oracle_edge_limit`` edges; everything
    else scales to millions of edges.
    """
    profile = representation_profile(A, B)
    s = len(profile.counts)
    reports = [
        check_sumset_lower(A, B, sumset_size=s),
        check_multiplicity_lower(A, B, sumset_size=s) if len(A) >= 2 else None,
        check_doubling_lower(A, B, sumset_size=s),
    ]
    if len(A) >= 2:
        graph = build_sum_graph(A, B)
        crossings = count_crossings_fast(graph)
        reports.append(check_crossing_upper(A, B, crossings=crossings))
        reports.append(check_crossing_lower(A, B, crossings=crossings,
                                            sumset_size=s))
        if not has_parallel_edges(graph):
            reports.append(
                check_degree_weighted_crossing(graph, crossings=crossings))
        if graph.num_edges <= oracle_edge_limit:
            even = range(0, graph.num_vertices, 2)
            reports.append(check_bipartite_crossing(graph, even))
            reports.append(check_intersection_lower(graph))
    if len(A) == len(B):
        reports.append(check_energy_lower(A, B, profile=profile, sumset_size=s))
    reports.append(check_heavy_subset(A, B, profile.support(), profile=profile))
    top = _argmax_value(profile)
    reports.append(check_heavy_subset(A, B, IntegerSet((top,)), profile=profile))
    # one histogram pass gives every level-set size at once
    max_r = profile.max_multiplicity()
    hist = Counter(profile.counts.values())
    suffix = [0] * (max_r + 2)
    for t in range(max_r, 1, -1):
        suffix[t] = suffix[t + 1] + hist.get(t, 0)
    for t in range(2, max_r + 1):
        reports.append(check_level_set_count(A, B, t, profile=profile,
                                             level_size=suffix[t]))
    reports = [r for r in reports if r is not None]
    return sorted(reports, key=lambda r: (r.name, _context_digest(r.context)))


def _context_digest(context: dict) -> str:
    payload = json.dumps(context, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def reports_to_jsonable(reports: list[BoundReport]) -> list[dict]:
    return [r.as_dict() for r in reports]
