"""Pattern containment in 3-graphs: detectors, embeddings, copy counts.

Embeddings here are subhypergraph embeddings: an injection of pattern
vertices into host vertices carrying every pattern edge onto a host edge
(host edges outside the image are irrelevant).  All searches are
deterministic: pattern vertices are processed in a fixed connectivity order
and host candidates in ascending label order, so the first witness found is a
reproducible function of the input.

The expanding-fan family gets a dedicated polynomial detector
(``contains_fan``): a copy is pinned down by its spine pair {3,4}, the
carrier pair {1,2}, and enough spare apexes, all of which are readable from
pair links without backtracking.
"""

from __future__ import annotations

from .canon import MAX_CORE, canonical_form
from .core import TIMEOUT, Budget, Hypergraph3, Pair


def max_codegree_check(h: Hypergraph3, t: int):
    """(True, None) if every codegree is <= t, else (False, worst pair).

    The reported pair is the colex-least one attaining the maximum codegree.
    """
    cm = h.codegree_map()
    if not cm:
        return True, None
    worst = max(cm.values())
    if worst <= t:
        return True, None
    pair = min((p for p, c in cm.items() if c == worst),
               key=lambda p: (p[1], p[0]))
    return False, pair


def _pair_iter(n: int):
    """Pairs of {1..n} in colex order."""
    for b in range(2, n + 1):
        for a in range(1, b):
            yield (a, b)


def contains_fan(h: Hypergraph3, t: int, budget: float | None = None):
    """Witness embedding of the (5+t)-vertex expanding fan, or None.

    A copy needs a spine pair {c, d} carrying t+1 apexes, plus a disjoint
    pair {a, b} with both abc and abd edges; the apexes must avoid a and b.
    Scanning spine pairs and carrier pairs in colex order makes the witness
    deterministic.  Polynomial, so the budget is only a formality here.
    """
    if t < 0:
        raise ValueError("need t >= 0")
    if h.n < 5 + t:
        return None
    clock = Budget(budget)
    link_pairs = {v: h.link_pairs(v) for v in range(1, h.n + 1)}
    for c, d in _pair_iter(h.n):
        apexes = h.link_of_pair(c, d)
        if len(apexes) < t + 1:
            continue
        if clock.expired():
            return TIMEOUT
        carrier = sorted(link_pairs[c] & link_pairs[d],
                         key=lambda p: (p[1], p[0]))
        for a, b in carrier:
            if a in (c, d) or b in (c, d):
                continue
            spare = sorted(apexes - {a, b})
            if len(spare) < t + 1:
                continue
            emb = {1: a, 2: b, 3: c, 4: d}
            for i, z in enumerate(spare[:t + 1]):
                emb[5 + i] = z
            return emb
    return None


def find_embedding(host: Hypergraph3, pattern: Hypergraph3,
                   budget: float | None = None,
                   forced: dict[int, int] | None = None):
    """First embedding of pattern into host, None, or TIMEOUT.

    Backtracking with dynamic most-constrained-first ordering: at every step
    the unmapped pattern vertex with the fewest remaining host candidates is
    branched on (ties to higher degree, then lower label, so runs are
    reproducible).  A pattern edge with two mapped endpoints shrinks the
    third endpoint's candidates to the host pair link; with one mapped
    endpoint, to that image's neighbourhood.  ``forced`` pre-assigns pattern
    vertices and restricts the search to extensions of that partial map.
    """
    state = _EmbedState(host, pattern, Budget(budget), forced)
    if state.infeasible:
        return None
    try:
        found = state.search(first_only=True)
    except _EmbedBudget:
        return TIMEOUT
    return dict(found[0]) if found else None


def count_embeddings(host: Hypergraph3, pattern: Hypergraph3,
                     budget: float | None = None):
    """Number of labelled embeddings of pattern into host, or TIMEOUT."""
    state = _EmbedState(host, pattern, Budget(budget), None)
    if state.infeasible:
        return 0
    try:
        return state.count()
    except _EmbedBudget:
        return TIMEOUT


def count_copies(host: Hypergraph3, pattern: Hypergraph3,
                 budget: float | None = None):
    """Number of distinct copies: labelled embeddings over automorphisms."""
    autos = count_embeddings(pattern, pattern, budget)
    if autos is TIMEOUT:
        return TIMEOUT
    total = count_embeddings(host, pattern, budget)
    if total is TIMEOUT:
        return TIMEOUT
    assert total % autos == 0
    return total // autos


def verify_embedding(host: Hypergraph3, pattern: Hypergraph3,
                     emb: dict[int, int]) -> bool:
    """Re-check an embedding map by direct edge mapping.

    True iff emb is injective on all pattern vertices into host vertices
    and the image of every pattern edge is a host edge.
    """
    if sorted(emb) != list(range(1, pattern.n + 1)):
        return False
    values = list(emb.values())
    if len(set(values)) != len(values):
        return False
    if not all(1 <= v <= host.n for v in values):
        return False
    return all(tuple(sorted((emb[a], emb[b], emb[c]))) in host.edges
               for a, b, c in pattern.edges)


class _EmbedBudget(Exception):
    pass


class _EmbedState:
    def __init__(self, host: Hypergraph3, pattern: Hypergraph3,
                 clock: Budget, forced: dict[int, int] | None):
        self.host = host
        self.pattern = pattern
        self.clock = clock
        self.infeasible = pattern.n > host.n or pattern.m > host.m
        self.ticks = 0
        if self.infeasible:
            return
        self.p_edges = pattern.edges_sorted()
        self.p_incident = {v: [] for v in range(1, pattern.n + 1)}
        for e in self.p_edges:
            for v in e:
                self.p_incident[v].append(e)
        self.p_degree = {v: len(self.p_incident[v])
                         for v in range(1, pattern.n + 1)}
        self.h_degree = host.degrees()
        self.h_neighbors = {v: set() for v in range(1, host.n + 1)}
        self.h_pair_link: dict[Pair, set[int]] = {}
        self.h_incident = {v: [] for v in range(1, host.n + 1)}
        for a, b, c in host.edges:
            self.h_neighbors[a].update((b, c))
            self.h_neighbors[b].update((a, c))
            self.h_neighbors[c].update((a, b))
            self.h_pair_link.setdefault((a, b), set()).add(c)
            self.h_pair_link.setdefault((a, c), set()).add(b)
            self.h_pair_link.setdefault((b, c), set()).add(a)
            for v in (a, b, c):
                self.h_incident[v].append((a, b, c))
        self.swap_class = self._swap_classes()
        self.assignment: dict[int, int] = {}
        self.used: set[int] = set()
        self.forced = dict(forced) if forced else {}
        for pv, hv in self.forced.items():
            if not (1 <= pv <= pattern.n and 1 <= hv <= host.n):
                raise ValueError(f"forced map {pv}->{hv} out of range")
        if len(set(self.forced.values())) != len(self.forced):
            self.infeasible = True

    def _swap_ok(self, u: int, w: int) -> bool:
        """Whether exchanging host vertices u and w maps edges to edges."""
        edges = self.host.edges
        for e in self.h_incident[u]:
            if w in e:
                continue
            if tuple(sorted(w if x == u else x for x in e)) not in edges:
                return False
        for e in self.h_incident[w]:
            if u in e:
                continue
            if tuple(sorted(u if x == w else x for x in e)) not in edges:
                return False
        return True

    def _swap_classes(self) -> list[int]:
        """Partition host vertices into interchangeability classes.

        Two vertices land in one class when some chain of verified
        transpositions links them; conjugation makes every transposition
        within a class an automorphism, so while all members are unused a
        first-witness search only ever needs the least available one.
        """
        parent = list(range(self.host.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        by_deg: dict[int, list[int]] = {}
        for v in range(1, self.host.n + 1):
            by_deg.setdefault(self.h_degree[v], []).append(v)
        for vs in by_deg.values():
            for i, u in enumerate(vs):
                for w in vs[i + 1:]:
                    if find(u) != find(w) and self._swap_ok(u, w):
                        parent[find(w)] = find(u)
        return [find(v) for v in range(self.host.n + 1)]

    def _candidates(self, pv: int) -> list[int]:
        base = None
        # Pattern edges with two mapped endpoints restrict pv to the host
        # pair link; with one mapped endpoint, to that image's
        # neighbourhood.
        for e in self.p_incident[pv]:
            others = [u for u in e if u != pv]
            placed = [u for u in others if u in self.assignment]
            if len(placed) == 2:
                key = tuple(sorted((self.assignment[placed[0]],
                                    self.assignment[placed[1]])))
                link = self.h_pair_link.get(key)
                if link is None:
                    return []
                base = link if base is None else base & link
            elif len(placed) == 1:
                nb = self.h_neighbors[self.assignment[placed[0]]]
                base = nb if base is None else base & nb
            if base is not None and not base:
                return []
        if base is None:
            base = range(1, self.host.n + 1)
        deg = self.p_degree[pv]
        return sorted(hv for hv in base
                      if hv not in self.used and self.h_degree[hv] >= deg)

    def _pick(self):
        """The unmapped vertex with the fewest candidates, with its list."""
        best = None
        for pv in range(1, self.pattern.n + 1):
            if pv in self.assignment:
                continue
            cands = self._candidates(pv)
            key = (len(cands), -self.p_degree[pv], pv)
            if best is None or key < best[0]:
                best = (key, pv, cands)
                if not cands:
                    break
        return best[1], best[2]

    def _place_forced(self) -> bool:
        for pv in sorted(self.forced, key=lambda v: (-self.p_degree[v], v)):
            hv = self.forced[pv]
            if hv in self.used or self.h_degree[hv] < self.p_degree[pv] \
                    or not self._consistent(pv, hv):
                return False
            self.assignment[pv] = hv
            self.used.add(hv)
        return True

    def _consistent(self, pv: int, hv: int) -> bool:
        for e in self.p_incident[pv]:
            if all(u == pv or u in self.assignment for u in e):
                img = tuple(sorted(hv if u == pv else self.assignment[u]
                                   for u in e))
                if img[0] == img[1] or img[1] == img[2]:
                    return False
                if img not in self.host.edges:
                    return False
        return True

    def search(self, first_only: bool):
        results = []
        if not self._place_forced():
            return results

        def extend() -> bool:
            self.ticks += 1
            if self.ticks % 1024 == 0 and self.clock.expired():
                raise _EmbedBudget
            if len(self.assignment) == self.pattern.n:
                results.append(dict(self.assignment))
                return first_only
            pv, cands = self._pick()
            if first_only:
                # One representative per interchangeability class suffices
                # for a witness; enumeration must keep them all.
                seen: set[int] = set()
                reps = []
                for hv in cands:
                    if self.swap_class[hv] not in seen:
                        seen.add(self.swap_class[hv])
                        reps.append(hv)
                cands = reps
            for hv in cands:
                if not self._consistent(pv, hv):
                    continue
                self.assignment[pv] = hv
                self.used.add(hv)
                if extend():
                    return True
                del self.assignment[pv]
                self.used.discard(hv)
            return False

        extend()
        return results

    def count(self) -> int:
        total = [0]
        if not self._place_forced():
            return 0

        def extend():
            self.ticks += 1
            if self.ticks % 1024 == 0 and self.clock.expired():
                raise _EmbedBudget
            if len(self.assignment) == self.pattern.n:
                total[0] += 1
                return
            pv, cands = self._pick()
            for hv in cands:
                if not self._consistent(pv, hv):
                    continue
                self.assignment[pv] = hv
                self.used.add(hv)
                extend()
                del self.assignment[pv]
                self.used.discard(hv)

        extend()
        return total[0]


# ---------------------------------------------------------------------------
# Structure recognition, used to dispatch specialised checks.

def book_cap(pattern: Hypergraph3) -> int | None:
    """If all pattern edges share one pair, the codegree cap t it enforces
    (pattern has t+1 edges); else None."""
    if pattern.m == 0:
        return None
    edges = pattern.edges_sorted()
    common = set(_pairs_of(edges[0]))
    for e in edges[1:]:
        common &= set(_pairs_of(e))
    if not common:
        return None
    return pattern.m - 1


def fan_extra(pattern: Hypergraph3) -> int | None:
    """t if pattern is isomorphic to the expanding fan with t extra apexes."""
    from .constructions import fan_pattern
    t = pattern.m - 3
    if t < 0 or pattern.n - len(pattern.isolated_vertices()) != 5 + t:
        return None
    if pattern.n - len(pattern.isolated_vertices()) > MAX_CORE:
        return None
    if canonical_form(pattern.induced(
            [v for v in range(1, pattern.n + 1)
             if v not in set(pattern.isolated_vertices())])) == \
            canonical_form(fan_pattern(t)):
        return t
    return None


def is_k4_minus(pattern: Hypergraph3) -> bool:
    from .constructions import k4_minus
    core = [v for v in range(1, pattern.n + 1)
            if v not in set(pattern.isolated_vertices())]
    if len(core) != 4 or pattern.m != 3:
        return False
    return canonical_form(pattern.induced(core)) == canonical_form(k4_minus())


def contains_pattern(h: Hypergraph3, pattern: Hypergraph3,
                     budget: float | None = None):
    """Witness embedding of pattern in h, None, or TIMEOUT, dispatching to
    the specialised detectors when the pattern's structure allows."""
    t = fan_extra(pattern)
    if t is not None and pattern.n == 5 + t:
        return contains_fan(h, t, budget)
    cap = book_cap(pattern)
    if cap is not None and pattern.n == 3 + cap:
        ok, pair = max_codegree_check(h, cap)
        if ok:
            return None
        a, b = pair
        apexes = sorted(h.link_of_pair(a, b))
        emb = {1: a, 2: b}
        for i, z in enumerate(apexes[:cap + 1]):
            emb[3 + i] = z
        return emb
    return find_embedding(h, pattern, budget)


def _pairs_of(e):
    a, b, c = e
    return ((a, b), (a, c), (b, c))
