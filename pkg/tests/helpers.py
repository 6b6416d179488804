"""Shared generators and independent brute-force oracles for the tests.

The oracles here deliberately re-derive quantities from first principles
(nested loops, both-orientation predicates) so that library shortcuts are
checked against something that cannot share their bugs.
"""

import random

from sumcross import ArcGraph, Edge, IntegerSet


def random_dcd_set(rng: random.Random, size: int, max_gap: int | None = None,
                   offset: int = 0) -> IntegerSet:
    """Cumulative sums of distinct positive gaps in random order."""
    if size == 1:
        return IntegerSet((offset,))
    max_gap = max_gap or 3 * size
    gaps = rng.sample(range(1, max(max_gap, size) + 1), size - 1)
    acc = [offset]
    for g in gaps:
        acc.append(acc[-1] + g)
    return IntegerSet(tuple(acc))


def random_doubling_dcd_set(rng: random.Random, size: int) -> IntegerSet:
    """Distinct gaps drawn from [g, 2g], so max gap <= 2 * min gap."""
    if size == 1:
        return IntegerSet((0,))
    g = size  # [g, 2g] holds g+1 integers, enough for size-1 distinct gaps
    gaps = rng.sample(range(g, 2 * g + 1), size - 1)
    acc = [0]
    for gap in gaps:
        acc.append(acc[-1] + gap)
    return IntegerSet(tuple(acc))


def random_integer_set(rng: random.Random, size: int, lo: int = -1000,
                       hi: int = 1000) -> IntegerSet:
    return IntegerSet(tuple(sorted(rng.sample(range(lo, hi + 1), size))))


def random_arcgraph(rng: random.Random, max_n: int = 60,
                    max_m: int = 300) -> ArcGraph:
    """Random positions and random index pairs; parallel edges and heavy
    endpoint sharing are allowed on purpose."""
    n = rng.randint(2, max_n)
    positions = tuple(sorted(rng.sample(range(-10 * max_n, 10 * max_n), n)))
    m = rng.randint(0, max_m)
    edges = []
    for _ in range(m):
        u = rng.randrange(n - 1)
        v = rng.randrange(u + 1, n)
        edges.append(Edge(u, v))
    return ArcGraph(positions, tuple(edges))


def crossings_by_definition(graph: ArcGraph) -> int:
    """Independent quadratic crossing count: test both orientations of the
    strict-interleaving predicate on raw positions, no sorting, no pruning."""
    pos = graph.positions
    es = [(pos[e.u], pos[e.v]) for e in graph.edges]
    total = 0
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if (a < c < b < d) or (c < a < d < b):
                total += 1
    return total


def intersections_by_definition(graph: ArcGraph) -> int:
    """Independent intersection count straight from the definition:
    vertex-disjoint edges whose closed position intervals share an
    interior point."""
    es = [(e.u, e.v) for e in graph.edges]
    pos = graph.positions
    total = 0
    for i in range(len(es)):
        u1, v1 = es[i]
        for j in range(i + 1, len(es)):
            u2, v2 = es[j]
            if len({u1, v1, u2, v2}) != 4:
                continue
            if max(pos[u1], pos[u2]) < min(pos[v1], pos[v2]):
                total += 1
    return total


def additive_quadruples(A: IntegerSet, B: IntegerSet) -> int:
    """Literal count of (a, a', b, b') with a + b == a' + b'."""
    total = 0
    for a1 in A:
        for a2 in A:
            for b1 in B:
                for b2 in B:
                    if a1 + b1 == a2 + b2:
                        total += 1
    return total


def pairwise_sums_distinct(A: IntegerSet) -> bool:
    """Sidon property by literal enumeration of the i <= j sums."""
    sums = [A[i] + A[j] for i in range(len(A)) for j in range(i, len(A))]
    return len(set(sums)) == len(sums)
