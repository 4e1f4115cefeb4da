"""Immutable primitives for 3-uniform hypergraphs on vertex set {1, ..., n}.

Edges are strictly increasing integer triples.  Wherever an order on triples
matters (file output, branching in searches, tie-breaking) we use colex order:
(a1, b1, c1) < (a2, b2, c2) iff (c1, b1, a1) < (c2, b2, a2) lexicographically.
Under colex the triples inside {1, ..., v} form a prefix of the triples inside
{1, ..., v + 1}, which the search modules rely on.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

Triple = tuple[int, int, int]
Pair = tuple[int, int]


class Timeout:
    """Singleton sentinel for budgeted searches that ran out of time.

    Kept distinct from None so "no witness exists" and "gave up" can never be
    confused by callers.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TIMEOUT"


TIMEOUT = Timeout()


class Budget:
    """Wall-clock deadline shared by the recursive searches.

    A budget of None never expires.  Expiry is checked at coarse granularity
    (every few thousand nodes) so the overhead stays negligible.
    """

    def __init__(self, seconds: float | None = None):
        self.seconds = seconds
        self._deadline = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._deadline is not None and time.monotonic() > self._deadline


def normalize_triple(e) -> Triple:
    a, b, c = sorted(e)
    if a == b or b == c:
        raise ValueError(f"triple {e!r} has repeated vertices")
    return (a, b, c)


def colex_key(e: Triple) -> tuple[int, int, int]:
    return (e[2], e[1], e[0])


def colex_index(e: Triple) -> int:
    """Rank of a strictly increasing triple in colex order, starting at 0."""
    a, b, c = e
    return math.comb(c - 1, 3) + math.comb(b - 1, 2) + (a - 1)


def triple_at_colex_index(r: int) -> Triple:
    """Inverse of colex_index."""
    c = 3
    while math.comb(c, 3) <= r:
        c += 1
    r -= math.comb(c - 1, 3)
    b = 2
    while math.comb(b, 2) <= r:
        b += 1
    r -= math.comb(b - 1, 2)
    return (r + 1, b, c)


def all_triples(n: int) -> list[Triple]:
    """All strictly increasing triples in {1..n}, in colex order."""
    return [(a, b, c) for c in range(3, n + 1)
            for b in range(2, c) for a in range(1, b)]


@dataclass(frozen=True)
class Hypergraph3:
    """A 3-uniform hypergraph with vertex set {1, ..., n}.

    Instances are immutable; all "mutators" return new hypergraphs.  Build
    through ``Hypergraph3.of`` which validates labels and rejects duplicate
    triples (mirroring the strictness of the file formats).
    """

    n: int
    edges: frozenset[Triple]

    @staticmethod
    def of(n: int, triples) -> "Hypergraph3":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in triples:
            e = normalize_triple(e)
            if not (1 <= e[0] and e[2] <= n):
                raise ValueError(f"triple {e} outside vertex range 1..{n}")
            if e in seen:
                raise ValueError(f"duplicate triple {e}")
            seen.add(e)
        return Hypergraph3(n, frozenset(seen))

    @staticmethod
    def empty(n: int) -> "Hypergraph3":
        return Hypergraph3.of(n, ())

    @staticmethod
    def complete(n: int) -> "Hypergraph3":
        return Hypergraph3(n, frozenset(all_triples(n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edges_sorted(self) -> list[Triple]:
        return sorted(self.edges, key=colex_key)

    def has_edge(self, e) -> bool:
        return normalize_triple(e) in self.edges

    def with_edge(self, e) -> "Hypergraph3":
        e = normalize_triple(e)
        if not (1 <= e[0] and e[2] <= self.n):
            raise ValueError(f"triple {e} outside vertex range 1..{self.n}")
        return Hypergraph3(self.n, self.edges | {e})

    def without_edge(self, e) -> "Hypergraph3":
        return Hypergraph3(self.n, self.edges - {normalize_triple(e)})

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        d = {v: 0 for v in range(1, self.n + 1)}
        for a, b, c in self.edges:
            d[a] += 1
            d[b] += 1
            d[c] += 1
        return d

    def codegree(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("codegree needs two distinct vertices")
        return sum(1 for e in self.edges if u in e and v in e)

    def codegree_map(self) -> dict[Pair, int]:
        """Codegree of every pair that lies in at least one edge."""
        d: dict[Pair, int] = {}
        for a, b, c in self.edges:
            for p in ((a, b), (a, c), (b, c)):
                d[p] = d.get(p, 0) + 1
        return d

    def max_codegree(self) -> int:
        cm = self.codegree_map()
        return max(cm.values()) if cm else 0

    def link_of_pair(self, u: int, v: int) -> frozenset[int]:
        """Vertices z such that {u, v, z} is an edge."""
        if u == v:
            raise ValueError("pair link needs two distinct vertices")
        out = []
        for e in self.edges:
            if u in e and v in e:
                (z,) = set(e) - {u, v}
                out.append(z)
        return frozenset(out)

    def link_pairs(self, v: int) -> frozenset[Pair]:
        """Pairs {a, b} (as sorted tuples) with {v, a, b} an edge."""
        out = []
        for e in self.edges:
            if v in e:
                a, b = sorted(set(e) - {v})
                out.append((a, b))
        return frozenset(out)

    def restricted_link_pairs(self, x: int, s, t) -> frozenset[Pair]:
        """Pairs {a, b} with a in s, b in t and {x, a, b} an edge.

        For s == t the pair {a, b} is listed once, not twice; the returned
        tuples are sorted, so the count is ``len(...)`` either way.
        """
        s = frozenset(s)
        t = frozenset(t)
        out = []
        for a, b in self.link_pairs(x):
            if (a in s and b in t) or (a in t and b in s):
                out.append((a, b))
        return frozenset(out)

    def restricted_degree(self, x: int, s, t) -> int:
        return len(self.restricted_link_pairs(x, s, t))

    def induced(self, vertices) -> "Hypergraph3":
        """Induced sub-hypergraph, relabelled onto {1..k} by sorted order."""
        vs = sorted(set(vertices))
        idx = {v: i + 1 for i, v in enumerate(vs)}
        keep = [e for e in self.edges if all(v in idx for v in e)]
        return Hypergraph3.of(len(vs), [tuple(sorted(idx[v] for v in e)) for e in keep])

    def relabel(self, perm: dict[int, int]) -> "Hypergraph3":
        """Apply a bijection {1..n} -> {1..n} to every edge."""
        if sorted(perm) != list(range(1, self.n + 1)) or \
                sorted(perm.values()) != list(range(1, self.n + 1)):
            raise ValueError("relabelling must be a permutation of 1..n")
        return Hypergraph3(
            self.n,
            frozenset(tuple(sorted((perm[a], perm[b], perm[c])))
                      for a, b, c in self.edges))

    def isolated_vertices(self) -> list[int]:
        used = set(itertools.chain.from_iterable(self.edges))
        return [v for v in range(1, self.n + 1) if v not in used]


@dataclass(frozen=True)
class Partition3:
    """An ordered partition of {1, ..., n} into three (possibly empty) parts."""

    n: int
    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]

    @staticmethod
    def of(n: int, parts) -> "Partition3":
        ps = tuple(frozenset(p) for p in parts)
        if len(ps) != 3:
            raise ValueError("need exactly three parts")
        union = ps[0] | ps[1] | ps[2]
        if len(union) != len(ps[0]) + len(ps[1]) + len(ps[2]):
            raise ValueError("parts overlap")
        if union != set(range(1, n + 1)):
            raise ValueError(f"parts must cover 1..{n} exactly")
        return Partition3(n, ps)

    @property
    def sizes(self) -> tuple[int, int, int]:
        return tuple(len(p) for p in self.parts)

    def part_of(self, v: int) -> int:
        """Index (0, 1 or 2) of the part containing v."""
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise ValueError(f"vertex {v} not in partition")

    def is_balanced(self) -> bool:
        lo = self.n // 3
        return all(lo <= s <= lo + 1 for s in self.sizes)


def crossing_split(h: Hypergraph3, part: Partition3) -> tuple[int, int]:
    """Count (crossing, non-crossing) edges of h relative to a 3-partition.

    An edge is crossing when its three vertices lie in three distinct parts.
    """
    if part.n != h.n:
        raise ValueError("partition and hypergraph disagree on n")
    where = {}
    for i, p in enumerate(part.parts):
        for v in p:
            where[v] = i
    crossing = 0
    for a, b, c in h.edges:
        if len({where[a], where[b], where[c]}) == 3:
            crossing += 1
    return crossing, h.m - crossing


def blow_up(h: Hypergraph3, k: int) -> Hypergraph3:
    """Replace every vertex by k clones and every edge by the complete
    tripartite 3-graph on the three clone classes.

    Vertex v's clones are (v-1)*k + 1, ..., v*k, so the construction is
    deterministic and composes: blowing up by a then b relabels to the same
    hypergraph as blowing up by a*b once.
    """
    if k < 1:
        raise ValueError("blow-up factor must be >= 1")
    clones = {v: range((v - 1) * k + 1, v * k + 1) for v in range(1, h.n + 1)}
    edges = []
    for a, b, c in h.edges:
        for x in clones[a]:
            for y in clones[b]:
                for z in clones[c]:
                    edges.append(tuple(sorted((x, y, z))))
    return Hypergraph3.of(h.n * k, edges)
