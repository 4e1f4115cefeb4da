"""Dense quadrilateral-free simple graphs on m vertices.

A graph is C4-free iff every vertex pair has at most one common neighbour.
Three supply tiers, best applicable wins:

  exact     m <= EXACT_CAP: branch and bound over vertex neighbourhoods
            proves optimality.
  polarity  the orthogonal polarity graph of the projective plane over
            GF(q) for the smallest prime q with q*q + q + 1 >= m, trimmed
            down to m vertices by deleting minimum-degree vertices.  At
            m = q*q + q + 1 this is the classical q(q+1)^2/2-edge graph.
  greedy    scan pairs in lexicographic order, keep an edge whenever it
            closes no quadrilateral.  Used when it beats the trimmed
            polarity graph (small m far below the next plane order).

The result records which tier produced it and whether the count is known to
be the maximum, so callers never mistake a good construction for a proven
optimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import TIMEOUT, Budget, Pair

EXACT_CAP = 10


@dataclass(frozen=True)
class C4FreeResult:
    m: int
    edges: frozenset[Pair]
    tier: str
    exact: bool

    @property
    def count(self) -> int:
        return len(self.edges)


def is_c4_free(m: int, edges) -> bool:
    adj = [0] * (m + 1)
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return all((adj[u] & adj[v]).bit_count() <= 1
               for u, v in itertools.combinations(range(1, m + 1), 2))


def _greedy(m: int) -> set[Pair]:
    adj = [0] * (m + 1)
    edges: set[Pair] = set()
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            # Adding ab creates a C4 iff some pair gains a second common
            # neighbour, i.e. a neighbour of a already shares a neighbour
            # with b (or vice versa).
            ok = True
            for w in range(1, m + 1):
                if adj[a] >> w & 1 and w != b and (adj[w] & adj[b]).bit_count() > 0:
                    ok = False
                    break
                if adj[b] >> w & 1 and w != a and (adj[w] & adj[a]).bit_count() > 0:
                    ok = False
                    break
            if ok and (adj[a] & adj[b]).bit_count() <= 1:
                edges.add((a, b))
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return edges


def polarity_graph(q: int) -> set[Pair]:
    """Orthogonal polarity graph of PG(2, q), q prime: vertices are the
    projective points, x ~ y iff x . y = 0 (mod q), loops discarded."""
    points = []
    for x in range(q):
        for y in range(q):
            points.append((1, x, y))
    for y in range(q):
        points.append((0, 1, y))
    points.append((0, 0, 1))
    idx = {p: i + 1 for i, p in enumerate(points)}
    edges = set()
    for p, r in itertools.combinations(points, 2):
        if sum(a * b for a, b in zip(p, r)) % q == 0:
            edges.add((idx[p], idx[r]))
    return edges


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, int(q ** 0.5) + 1):
        if q % d == 0:
            return False
    return True


_EXACT_VALUES: dict[int, int] = {0: 0, 1: 0, 2: 1, 3: 3}
_EXACT_SETS: dict[int, frozenset] = {}


def _exact_value(k: int, clock: Budget) -> int:
    val = _EXACT_VALUES.get(k)
    if val is None:
        val = _exact_max(k, clock)[0]
    return val


def _exact_max(m: int, clock: Budget):
    """Maximum C4-free edge set by DFS over vertex back-neighbourhoods.

    Vertex j picks its neighbours among the earlier vertices of its own
    component, largest sets first; an empty pick closes the component, and
    later vertices may not reach back past it (every graph has a
    component-contiguous labelling, so this loses nothing).  In a C4-free
    graph each vertex pair has at most one common neighbour, so a
    neighbourhood consumes the pairs inside it and no pair is consumed
    twice; that is the admissibility check.  Pruning combines a knapsack
    bound on edges into the current component prefix (degree costs
    C(d, 2) consumable pairs) with exact maxima for the smaller sizes the
    remaining suffix could form, computed first and cached.  The greedy
    construction seeds the incumbent.
    """
    cached = _EXACT_SETS.get(m)
    if cached is not None:
        return len(cached), cached
    for k in range(4, m):
        _exact_value(k, clock)
    seed = _greedy(m)
    best: list = [len(seed), frozenset(seed)]
    adj = [0] * (m + 1)
    edges: list[Pair] = []
    ticks = [0]
    knap_cache: dict[tuple[int, int, int], int] = {}

    def knap(nv: int, cap: int, r: int) -> int:
        # Max total prefix-degree over nv suffix vertices, each at most
        # cap, when r prefix pairs may still gain a common neighbour.
        key = (nv, cap, r)
        got = knap_cache.get(key)
        if got is not None:
            return got
        got = nv if cap >= 1 else 0
        left = r
        for d in range(1, cap):
            take = min(nv, left // d)
            got += take
            left -= take * d
            if take < nv:
                break
        knap_cache[key] = got
        return got

    def dfs(j: int, floor: int):
        ticks[0] += 1
        if ticks[0] % 256 == 0 and clock.expired():
            raise _C4Budget
        if j > m:
            if len(edges) > best[0]:
                best[0] = len(edges)
                best[1] = frozenset(edges)
            return
        have = len(edges)
        prev = range(floor, j)
        r = sum(1 for a, b in itertools.combinations(prev, 2)
                if not adj[a] & adj[b])
        left = m - j + 1
        if have + knap(left, j - floor, r) + _EXACT_VALUES[left] <= best[0]:
            return
        dcap = j - floor
        while dcap * (dcap - 1) // 2 > r:
            dcap -= 1
        for size in range(dcap, 0, -1):
            if (have + size + knap(left - 1, j + 1 - floor, r)
                    + _EXACT_VALUES[left - 1] <= best[0]):
                continue
            for cand in itertools.combinations(prev, size):
                ok = True
                for x in range(size):
                    ax = adj[cand[x]]
                    for y in range(x + 1, size):
                        if ax & adj[cand[y]]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                for a in cand:
                    adj[a] |= 1 << j
                    adj[j] |= 1 << a
                    edges.append((a, j))
                dfs(j + 1, floor)
                for a in cand:
                    adj[a] &= ~(1 << j)
                    edges.pop()
                adj[j] = 0
        if have + _EXACT_VALUES[left] > best[0]:
            dfs(j + 1, j)

    dfs(2, 1)
    _EXACT_VALUES[m] = best[0]
    _EXACT_SETS[m] = best[1]
    return best[0], best[1]


class _C4Budget(Exception):
    pass


def densest_c4_free(m: int, budget: float | None = None) -> C4FreeResult:
    """Densest known C4-free graph on m vertices, exact below EXACT_CAP."""
    if m < 0:
        raise ValueError("need m >= 0")
    if m <= 1:
        return C4FreeResult(m, frozenset(), "exact", True)
    if m <= EXACT_CAP:
        clock = Budget(budget)
        try:
            _, edges = _exact_max(m, clock)
            return C4FreeResult(m, edges, "exact", True)
        except _C4Budget:
            pass
    trimmed = _trimmed_polarity(m)
    greedy = _greedy(m)
    if len(trimmed) >= len(greedy):
        return C4FreeResult(m, frozenset(trimmed), "polarity", False)
    return C4FreeResult(m, frozenset(greedy), "greedy", False)


def _poly_order(m: int) -> int:
    q = 2
    while q * q + q + 1 < m or not _is_prime(q):
        q += 1
    return q


def _trimmed_polarity(m: int) -> set[Pair]:
    """Polarity graph of the smallest prime-order plane with >= m points,
    trimmed to m vertices by deleting minimum-degree vertices (the
    absolute points go first, each costing only q edges)."""
    q = _poly_order(m)
    edges = polarity_graph(q)
    alive = set(range(1, q * q + q + 2))
    while len(alive) > m:
        deg = {v: 0 for v in alive}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        victim = min(alive, key=lambda v: (deg[v], v))
        alive.discard(victim)
        edges = {(a, b) for a, b in edges if victim not in (a, b)}
    relabel = {v: i + 1 for i, v in enumerate(sorted(alive))}
    return {tuple(sorted((relabel[a], relabel[b]))) for a, b in edges}
