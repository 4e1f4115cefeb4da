"""Named hypergraphs: forbidden patterns and the dense host constructions.

Patterns use fixed vertex numberings so that witnesses and file dumps are
stable.  The expanding-fan family and its relatives:

  fan_pattern(t)       5+t vertices; edges 123, 124, and 34k for each of the
                       t+1 extra apexes k = 5..5+t.  t = 0 is the classical
                       three-edge fan.
  book_pattern(t)      3+t vertices; the t+1 edges 12k.  A host omits it
                       exactly when every codegree is at most t.
  k4_minus()           three of the four triples on four vertices.
  split_fan()          the fan with apexes 3, 4 doubled: 7 vertices, edges
                       123, 124, 345, 567.
  tripartite_fan()     the 20-vertex, 18-edge expansion gadget: the fan plus
                       three 4-apex stars through vertex 5 and three
                       connector edges (numbering in make order: 1..5, then
                       the three connectors, then groups a_i^1 a_i^2 b_i^1
                       b_i^2 for i = 1, 2, 3).

Hosts: the balanced complete tripartite 3-graph, its enrichment with
codegree-capped inside blocks, the satellite-set variant, and the
quadrilateral-capped apex construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .c4free import C4FreeResult, densest_c4_free
from .core import Hypergraph3, Partition3, Triple, blow_up
from .designs import CodegreeCapResult, ValueBound, densest_codegree_capped


def fan_pattern(t: int) -> Hypergraph3:
    """Two triples through the pair {1,2} joined to t+1 apexes over {3,4}."""
    if t < 0:
        raise ValueError("need t >= 0")
    edges = [(1, 2, 3), (1, 2, 4)]
    for k in range(5, 6 + t):
        edges.append((3, 4, k))
    return Hypergraph3.of(5 + t, edges)


def book_pattern(t: int) -> Hypergraph3:
    """t+1 triples through the pair {1,2}; forbidding it caps codegrees at t."""
    if t < 0:
        raise ValueError("need t >= 0")
    return Hypergraph3.of(3 + t, [(1, 2, k) for k in range(3, 4 + t)])


def k4_minus() -> Hypergraph3:
    return Hypergraph3.of(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])


def split_fan() -> Hypergraph3:
    """The fan with its third edge doubled onto fresh vertices 6, 7."""
    return Hypergraph3.of(7, [(1, 2, 3), (1, 2, 4), (3, 4, 5), (5, 6, 7)])


def tripartite_fan() -> Hypergraph3:
    """The 18-edge expansion gadget on 20 vertices.

    Vertices: 1..5 as in the fan; connectors c12=6, c23=7, c31=8; then for
    each group i = 1, 2, 3 the four vertices a_i^1, a_i^2, b_i^1, b_i^2 at
    9+4(i-1) ... 12+4(i-1).  Edges: the fan's 123, 124, 345; all twelve
    {5, a_i^l, b_i^m}; and the three connectors {c12, b_1^2, a_2^2},
    {c23, b_2^2, a_3^2}, {c31, b_3^2, a_1^2}.
    """
    def a(i, l):
        return 9 + 4 * (i - 1) + (l - 1)

    def b(i, l):
        return 11 + 4 * (i - 1) + (l - 1)

    edges = [(1, 2, 3), (1, 2, 4), (3, 4, 5)]
    for i in (1, 2, 3):
        for l in (1, 2):
            for mm in (1, 2):
                edges.append(tuple(sorted((5, a(i, l), b(i, mm)))))
    edges.append(tuple(sorted((6, b(1, 2), a(2, 2)))))
    edges.append(tuple(sorted((7, b(2, 2), a(3, 2)))))
    edges.append(tuple(sorted((8, b(3, 2), a(1, 2)))))
    return Hypergraph3.of(20, edges)


PATTERN_TAGS = ("fan", "book", "k4minus", "splitfan", "tripartitefan")


def pattern_by_tag(tag: str, t: int = 0) -> Hypergraph3:
    """Look up a pattern for the command line; t feeds the parametrised ones."""
    makers = {
        "fan": lambda: fan_pattern(t),
        "book": lambda: book_pattern(t),
        "k4minus": k4_minus,
        "splitfan": split_fan,
        "tripartitefan": tripartite_fan,
    }
    if tag not in makers:
        raise ValueError(f"unknown pattern tag {tag!r}; known: {PATTERN_TAGS}")
    return makers[tag]()


# ---------------------------------------------------------------------------
# Host constructions.

def balanced_parts(n: int) -> tuple[int, int, int]:
    return (n // 3, (n + 1) // 3, (n + 2) // 3)


def tripartite_count(n: int) -> int:
    a, b, c = balanced_parts(n)
    return a * b * c


def make_complete_tripartite(n: int) -> tuple[Hypergraph3, Partition3]:
    """Balanced complete tripartite 3-graph; parts are consecutive ranges
    with sizes floor(n/3) <= floor((n+1)/3) <= floor((n+2)/3)."""
    a, b, c = balanced_parts(n)
    v1 = range(1, a + 1)
    v2 = range(a + 1, a + b + 1)
    v3 = range(a + b + 1, n + 1)
    edges = [tuple(sorted((x, y, z))) for x in v1 for y in v2 for z in v3]
    return Hypergraph3.of(n, edges), Partition3.of(n, (v1, v2, v3))


@dataclass(frozen=True)
class ExtremalResult:
    """Tripartite host enriched with codegree-capped blocks inside parts."""

    h: Hypergraph3
    partition: Partition3
    bound: ValueBound
    inner: tuple[CodegreeCapResult, CodegreeCapResult, CodegreeCapResult]

    @property
    def tiers(self) -> tuple[str, str, str]:
        return tuple(r.tier for r in self.inner)


def _embed_inner(edges: list[Triple], block: Hypergraph3, part) -> None:
    verts = sorted(part)
    for e in block.edges_sorted():
        edges.append(tuple(sorted(verts[v - 1] for v in e)))


def make_extremal(n: int, t: int, budget: float | None = None) -> ExtremalResult:
    """The conjectured-extremal host: balanced complete tripartite plus a
    densest codegree-at-most-t 3-graph inside each part.

    The bound is exact iff all three inside blocks are certified extremal;
    otherwise it is the achieved total against the sum of upper bounds.
    """
    base, part = make_complete_tripartite(n)
    edges = list(base.edges_sorted())
    inner = []
    bound = ValueBound.exact(base.m)
    for p in part.parts:
        res = densest_codegree_capped(len(p), t, budget)
        inner.append(res)
        achieved = res.h.m
        bound = ValueBound(bound.lo + achieved, bound.hi + res.bound.hi)
        _embed_inner(edges, res.h, p)
    return ExtremalResult(Hypergraph3.of(n, edges), part, bound,
                          tuple(inner))


def make_satellite(n: int, t: int, sizes: tuple[int, int, int]) -> Hypergraph3:
    """Satellite-set host: a complete 3-graph on the first t vertices, all
    crossing triples over three parts of the given sizes, and every triple
    with one satellite vertex and two vertices in the same part."""
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be non-negative")
    if t < 0 or t + sum(sizes) != n:
        raise ValueError(f"t + sizes must total n={n}")
    sat = list(range(1, t + 1))
    parts = []
    start = t + 1
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    edges = []
    for i in range(len(sat)):
        for j in range(i + 1, len(sat)):
            for k in range(j + 1, len(sat)):
                edges.append((sat[i], sat[j], sat[k]))
    for x in parts[0]:
        for y in parts[1]:
            for z in parts[2]:
                edges.append(tuple(sorted((x, y, z))))
    for v in sat:
        for p in parts:
            for i in range(len(p)):
                for j in range(i + 1, len(p)):
                    edges.append(tuple(sorted((v, p[i], p[j]))))
    return Hypergraph3.of(n, edges)


def satellite_count(n: int, t: int, sizes: tuple[int, int, int]) -> int:
    w1, w2, w3 = sizes
    return (w1 * w2 * w3 + t * sum(math.comb(w, 2) for w in sizes)
            + math.comb(t, 3))


@dataclass(frozen=True)
class ApexResult:
    """Tripartite host on n-1 vertices plus an apex whose inside links are
    complete in two parts and quadrilateral-free in the third."""

    h: Hypergraph3
    partition: Partition3  # of the first n-1 vertices
    c4: C4FreeResult

    @property
    def count(self) -> int:
        return self.h.m


def make_apex_host(n: int, budget: float | None = None) -> ApexResult:
    """The apex construction on n vertices: complete tripartite on 1..n-1,
    apex vertex n, apex links inside parts one and two complete, inside the
    largest part a densest C4-free graph."""
    if n < 4:
        raise ValueError("need n >= 4")
    base, part = make_complete_tripartite(n - 1)
    edges = list(base.edges_sorted())
    v1, v2, v3 = (sorted(p) for p in part.parts)
    for p in (v1, v2):
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                edges.append(tuple(sorted((p[i], p[j], n))))
    c4 = densest_c4_free(len(v3), budget)
    for a, b in sorted(c4.edges):
        edges.append(tuple(sorted((v3[a - 1], v3[b - 1], n))))
    return ApexResult(Hypergraph3.of(n, edges), part, c4)


__all__ = [
    "fan_pattern", "book_pattern", "k4_minus", "split_fan", "tripartite_fan",
    "pattern_by_tag", "PATTERN_TAGS", "balanced_parts", "tripartite_count",
    "make_complete_tripartite", "make_extremal", "make_satellite",
    "satellite_count", "make_apex_host", "ExtremalResult", "ApexResult",
    "blow_up",
]
