"""Geometric graphs drawn on a line: vertices are points on the x axis and
every edge is an upper semicircular arc.  Two arcs cross iff their endpoint
intervals strictly interleave; they intersect iff the open intervals overlap
at all (interleaving or nesting) and the edges share no vertex.

Only the order of the positions matters for any count here, never the
coordinates themselves.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import NamedTuple, Optional, Sequence

from .sets import IntegerSet, sumset

__all__ = [
    "Edge",
    "ArcGraph",
    "CrossingStats",
    "build_sum_graph",
    "count_crossings_oracle",
    "count_crossings_fast",
    "count_intersections",
    "max_translate_pair_crossings",
    "degree_sequence",
    "has_parallel_edges",
    "crossing_stats",
]


class Edge(NamedTuple):
    u: int
    v: int
    label: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class ArcGraph:
    """Vertex positions (strictly increasing) plus edges as index pairs u < v.

    ``validate=False`` skips the invariant scan; builders that guarantee
    validity by construction use it to avoid an extra pass over millions
    of edges.
    """

    positions: tuple[int, ...]
    edges: tuple[Edge, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        if not validate:
            return
        for x, y in zip(self.positions, self.positions[1:]):
            if x >= y:
                raise ValueError("positions must be strictly increasing")
        n = len(self.positions)
        for e in self.edges:
            if not (0 <= e.u < e.v < n):
                raise ValueError(f"edge {e} out of range or not u < v")

    @property
    def num_vertices(self) -> int:
        return len(self.positions)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CrossingStats:
    crossings: int
    intersections: int
    max_translate_pair_crossings: Optional[int]
    degree_sequence: tuple[int, ...]

    def as_dict(self) -> dict:
        """JSON form with fixed key order for golden-file comparisons."""
        return {
            "crossings": self.crossings,
            "intersections": self.intersections,
            "maxTranslatePairCrossings": self.max_translate_pair_crossings,
            "degreeSequence": list(self.degree_sequence),
        }


def build_sum_graph(A: IntegerSet, B: IntegerSet) -> ArcGraph:
    """The sum graph of (A, B): one vertex per value of A+B and, for every
    b in B, a path through a_1+b, ..., a_k+b.  Edges are labeled with the
    (gap index, translate index) pair that produced them.  When A does not
    have distinct consecutive differences the same vertex pair can occur
    twice; such parallel edges are retained.
    """
    if len(A) < 2:
        raise ValueError("A must have at least two elements")
    positions = sumset(A, B).elements
    index = {value: i for i, value in enumerate(positions)}
    ae = A.elements
    edges = []
    for j, b in enumerate(B.elements):
        prev = index[ae[0] + b]
        for i in range(1, len(ae)):
            cur = index[ae[i] + b]
            edges.append(Edge(prev, cur, (i - 1, j)))
            prev = cur
    return ArcGraph(positions, tuple(edges), validate=False)


def _index_pairs(graph: ArcGraph) -> list[tuple[int, int]]:
    return sorted((e.u, e.v) for e in graph.edges)


def count_crossings_oracle(graph: ArcGraph) -> int:
    """Reference crossing count: scan all edge pairs and test the strict
    interleaving predicate.  Quadratic, kept deliberately simple."""
    edges = _index_pairs(graph)
    m = len(edges)
    count = 0
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if c >= b:
                # later edges start even further right: no interleave possible
                break
            if a < c and b < d:
                count += 1
    return count


def count_crossings_fast(graph: ArcGraph) -> int:
    """Crossing count in O(m log n): sweep edges by left endpoint and, for
    each edge, count previously opened arcs whose right endpoint falls
    strictly inside it (a Fenwick tree over right-endpoint ranks).

    Edges sharing a left endpoint are processed as one group, queries
    first, insertions after, so pairs with a common vertex never count;
    equal right endpoints are excluded by the strict rank range.
    """
    m = len(graph.edges)
    if m < 2:
        return 0
    n = len(graph.positions)
    edges = _index_pairs(graph)
    tree = [0] * (n + 1)
    total = 0
    i = 0
    while i < m:
        u = edges[i][0]
        j = i
        while j < m and edges[j][0] == u:
            v = edges[j][1]
            # inserted right endpoints w with u < w < v, i.e. ranks in (u+1, v]
            t = v
            while t:
                total += tree[t]
                t &= t - 1
            t = u + 1
            while t:
                total -= tree[t]
                t &= t - 1
            j += 1
        for idx in range(i, j):
            t = edges[idx][1] + 1
            while t <= n:
                tree[t] += 1
                t += t & (-t)
        i = j
    return total


def count_intersections(graph: ArcGraph) -> int:
    """Vertex-disjoint edge pairs whose open intervals share an interior
    point; counts nesting as well as interleaving, so the result is never
    below the crossing count."""
    edges = _index_pairs(graph)
    m = len(edges)
    count = 0
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if c >= b:
                break
            # here a <= c < b; overlap needs all four endpoints distinct
            if a < c and d != b:
                count += 1
    return count


def max_translate_pair_crossings(graph: ArcGraph) -> int:
    """Largest crossing count between the edge sets of two translates,
    maximized over unordered translate pairs.  Requires labeled edges."""
    groups: dict[int, list[tuple[int, int]]] = {}
    for e in graph.edges:
        if e.label is None:
            raise ValueError("edges must carry (gap, translate) labels")
        groups.setdefault(e.label[1], []).append((e.u, e.v))
    if len(groups) < 2:
        return 0
    keys = sorted(groups)
    best = 0
    for x in range(len(keys)):
        ex = groups[keys[x]]
        for y in range(x + 1, len(keys)):
            c = 0
            for a, b in ex:
                for cc, dd in groups[keys[y]]:
                    if a < cc < b < dd or cc < a < dd < b:
                        c += 1
            if c > best:
                best = c
    return best


def degree_sequence(graph: ArcGraph) -> tuple[int, ...]:
    """Vertex degrees sorted nonincreasing; parallel edges count twice."""
    deg = [0] * len(graph.positions)
    for e in graph.edges:
        deg[e.u] += 1
        deg[e.v] += 1
    deg.sort(reverse=True)
    return tuple(deg)


def has_parallel_edges(graph: ArcGraph) -> bool:
    return len({(e.u, e.v) for e in graph.edges}) < len(graph.edges)


def crossing_stats(graph: ArcGraph) -> CrossingStats:
    """All counting statistics for one graph in one bundle."""
    labeled = all(e.label is not None for e in graph.edges)
    return CrossingStats(
        crossings=count_crossings_fast(graph),
        intersections=count_intersections(graph),
        max_translate_pair_crossings=(
            max_translate_pair_crossings(graph) if labeled else None),
        degree_sequence=degree_sequence(graph),
    )
