"""Exact Turan-type searches over 3-graphs at desk scale.

``turan_exact`` maximises edges over hosts on {1..n} omitting every pattern
in a family.  It branches over triples in colex order, include branch first,
with three pruning forces:

  * capacity bounds: remaining triple count, pair-codegree slack when a
    pattern is a book (all edges through one pair), and 4-set capacity when
    the family contains the 4-vertex 3-edge pattern;
  * incremental detection: a triple is added only if no forbidden copy
    through it appears, so states are always pattern-free;
  * isomorph rejection: whenever all triples inside {1..v} are decided, the
    included graph's canonical form keys a visited set.  A revisit cannot
    beat the incumbent that the first visit was explored under, so the
    subtree is skipped.

Everything is deterministic: fixed orders, no concurrency, and reruns yield
identical witnesses.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .canon import canonical_form
from .core import (TIMEOUT, Budget, Hypergraph3, Pair, Partition3, Triple,
                   all_triples, colex_key)
from .detection import (book_cap, fan_extra, find_embedding, is_k4_minus)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a Turan search: value bracket, witness, statistics."""

    n: int
    best: int
    upper: int
    witness: Hypergraph3
    nodes: int
    optimal: bool

    @property
    def status(self) -> str:
        return "optimal" if self.optimal else "budget"


class _FamilyChecks:
    """Per-family incremental machinery shared by the searches.

    Keeps codegrees, pair links and per-vertex link pairs current under
    add/remove, and answers "does adding e create a forbidden copy" without
    rescanning the host.
    """

    def __init__(self, n: int, patterns):
        self.n = n
        self.edge_set: set[Triple] = set()
        self.cod: dict[Pair, int] = {}
        self.linkp: dict[Pair, set[int]] = {}
        self.lpairs: dict[int, set[Pair]] = {v: set() for v in range(1, n + 1)}
        self.book_t: int | None = None
        self.fan_ts: list[int] = []
        self.k4 = False
        self.generic: list[Hypergraph3] = []
        for p in patterns:
            cap = book_cap(p)
            ft = fan_extra(p)
            if cap is not None and p.n == 3 + cap:
                if self.book_t is None or cap < self.book_t:
                    self.book_t = cap
            elif ft is not None and p.n == 5 + ft:
                self.fan_ts.append(ft)
            elif is_k4_minus(p) and p.n == 4:
                self.k4 = True
            else:
                self.generic.append(p)
        self.fan_ts.sort()
        # Pair slack for the book capacity bound.
        if self.book_t is not None:
            self.slack = self.book_t * math.comb(n, 2)
        # Edges used inside each 4-subset, for the K4-minus capacity bound.
        if self.k4:
            self.quad_used: dict[tuple, int] = {}
            self.quad_capacity = 2 * math.comb(n, 4)

    def _apply(self, e: Triple, sign: int) -> None:
        a, b, c = e
        if sign > 0:
            self.edge_set.add(e)
        else:
            self.edge_set.discard(e)
        for p, z in (((a, b), c), ((a, c), b), ((b, c), a)):
            self.cod[p] = self.cod.get(p, 0) + sign
            if sign > 0:
                self.linkp.setdefault(p, set()).add(z)
            else:
                self.linkp[p].discard(z)
        for v, pair in ((a, (b, c)), ((b), (a, c)), ((c), (a, b))):
            if sign > 0:
                self.lpairs[v].add(pair)
            else:
                self.lpairs[v].discard(pair)
        if self.book_t is not None:
            self.slack -= 3 * sign
        if self.k4:
            others = [w for w in range(1, self.n + 1) if w not in e]
            for w in others:
                q = tuple(sorted((a, b, c, w)))
                before = self.quad_used.get(q, 0)
                self.quad_used[q] = before + sign
                if sign > 0 and before < 2:
                    self.quad_capacity -= 1
                elif sign < 0 and before <= 2:
                    self.quad_capacity += 1

    def violates(self, e: Triple) -> bool:
        """Would a forbidden copy through e exist after adding e?  Call with
        structures already updated to include e."""
        a, b, c = e
        if self.book_t is not None:
            for p in ((a, b), (a, c), (b, c)):
                if self.cod[p] > self.book_t:
                    return True
        if self.k4:
            for w in range(1, self.n + 1):
                if w in e:
                    continue
                siblings = sum(
                    1 for s in (tuple(sorted((a, b, w))),
                                tuple(sorted((a, c, w))),
                                tuple(sorted((b, c, w))))
                    if s in self.edge_set)
                if siblings >= 2:
                    return True
        for t in self.fan_ts:
            if self._fan_through(e, t):
                return True
        if self.generic:
            host = Hypergraph3(self.n, frozenset(self.edge_set))
            for p in self.generic:
                if _embedding_through(host, p, e):
                    return True
        return False

    def _fan_through(self, e: Triple, t: int) -> bool:
        # Any new fan copy's spine pair {3,4} meets e, so only those spines
        # need scanning.
        spines = set()
        for x in e:
            for y in range(1, self.n + 1):
                if y != x:
                    spines.add((min(x, y), max(x, y)))
        for cd in spines:
            apexes = self.linkp.get(cd)
            if not apexes or len(apexes) < t + 1:
                continue
            cset = self.lpairs[cd[0]] & self.lpairs[cd[1]]
            for ab in cset:
                if cd[0] in ab or cd[1] in ab:
                    continue
                spare = len(apexes) - len(apexes & set(ab))
                if spare >= t + 1:
                    return True
        return False

    def try_add(self, e: Triple) -> bool:
        """Add e if the host stays free; report whether it was added."""
        self._apply(e, +1)
        if self.violates(e):
            self._apply(e, -1)
            return False
        return True

    def remove(self, e: Triple) -> None:
        self._apply(e, -1)

    def upper_increment(self) -> int:
        """Capacity-style bound on how many more triples could ever fit."""
        caps = []
        if self.book_t is not None:
            caps.append(self.slack // 3)
        if self.k4:
            caps.append(self.quad_capacity // (self.n - 3))
        return min(caps) if caps else -1


def _embedding_through(host: Hypergraph3, pattern: Hypergraph3,
                       e: Triple) -> bool:
    """Does some embedding of pattern into host map an edge onto e?"""
    import itertools
    for pe in pattern.edges_sorted():
        for perm in itertools.permutations(e):
            forced = dict(zip(pe, perm))
            if len(set(forced.values())) != 3:
                continue
            if find_embedding(host, pattern, forced=forced) is not None:
                return True
    return False


def turan_exact(n: int, patterns, budget: float | None = None,
                node_cap: int | None = None) -> SearchOutcome:
    """Maximum edges of a pattern-free 3-graph on {1..n}, with witness.

    Complete branch and bound as described in the module docstring; with a
    budget the search may stop early, returning the incumbent as a lower
    bound and the root capacity bound as the upper bound.  ``budget`` is
    wall-clock seconds; ``node_cap`` stops after a fixed number of search
    nodes instead, which keeps truncated outcomes reproducible.
    """
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("need at least one forbidden pattern")
    if any(p.m == 0 for p in patterns):
        raise ValueError("an edgeless pattern forbids nothing")
    triples = all_triples(n)
    total = len(triples)
    state = _FamilyChecks(n, patterns)
    clock = Budget(budget)
    boundaries = {math.comb(v, 3): v for v in range(4, n)
                  if math.comb(v, 3) <= total}
    root_cap = state.upper_increment()
    root_upper = total if root_cap < 0 else min(total, root_cap)

    best = {"value": -1, "edges": ()}
    seen: set[tuple[int, bytes]] = set()
    stats = {"nodes": 0}

    class _Stop(Exception):
        pass

    def rec(i: int, included: int):
        stats["nodes"] += 1
        if node_cap is not None and stats["nodes"] > node_cap:
            raise _Stop
        if stats["nodes"] % 1024 == 0 and clock.expired():
            raise _Stop
        if included > best["value"]:
            best["value"] = included
            best["edges"] = tuple(sorted(state.edge_set, key=colex_key))
        if i == total:
            return
        bound = included + (total - i)
        cap = state.upper_increment()
        if cap >= 0:
            bound = min(bound, included + cap)
        if bound <= best["value"]:
            return
        if i in boundaries:
            v = boundaries[i]
            key = (i, canonical_form(Hypergraph3(v, frozenset(state.edge_set))))
            if key in seen:
                return
            seen.add(key)
        e = triples[i]
        if state.try_add(e):
            rec(i + 1, included + 1)
            state.remove(e)
        rec(i + 1, included)

    optimal = True
    try:
        rec(0, 0)
    except _Stop:
        optimal = False
    witness = Hypergraph3.of(n, best["edges"])
    upper = best["value"] if optimal else root_upper
    return SearchOutcome(n, best["value"], upper, witness,
                         stats["nodes"], optimal)


# ---------------------------------------------------------------------------
# Weighted MaxSAT export.

def enumerate_copies(n: int, pattern: Hypergraph3,
                     budget: float | None = None):
    """All distinct copies (edge-image sets) of pattern inside the complete
    3-graph on {1..n}, sorted for stable output."""
    from .detection import _EmbedState
    host = Hypergraph3.complete(n)
    state = _EmbedState(host, pattern, Budget(budget), None)
    if state.infeasible:
        return []
    found = state.search(first_only=False)
    copies = {frozenset(tuple(sorted((emb[a], emb[b], emb[c])))
                        for a, b, c in pattern.edges)
              for emb in found}
    return sorted(
        (tuple(sorted(c, key=colex_key)) for c in copies),
        key=lambda es: tuple(colex_key(e) for e in es))


def export_maxsat(n: int, patterns, budget: float | None = None) -> str:
    """WCNF encoding whose optimum equals the Turan number.

    Variable i+1 is the i-th triple in colex order; each triple is a weight-1
    soft unit clause, and every copy of a forbidden pattern in the complete
    host contributes a hard clause negating its edges.
    """
    triples = all_triples(n)
    var = {e: i + 1 for i, e in enumerate(triples)}
    hard: set[tuple[int, ...]] = set()
    for p in tuple(patterns):
        for copy in enumerate_copies(n, p, budget):
            hard.add(tuple(sorted(var[e] for e in copy)))
    top = len(triples) + 1
    lines = [f"p wcnf {len(triples)} {len(triples) + len(hard)} {top}"]
    for i in range(1, len(triples) + 1):
        lines.append(f"1 {i} 0")
    for clause in sorted(hard):
        lines.append(f"{top} " + " ".join(str(-v) for v in clause) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Best 3-partition of a host.

PARTITION_EXACT_CAP = 15


def best_partition(h: Hypergraph3, cap: int = PARTITION_EXACT_CAP):
    """A 3-partition maximising the number of crossing edges, with the count.

    Exhaustive branch and bound over part assignments in vertex order, with
    part-symmetry broken by never opening part k before part k-1.  Exact but
    exponential, hence the size cap.
    """
    n = h.n
    if n > cap:
        raise ValueError(f"exact partition search capped at {cap} vertices")
    by_max: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, n + 1)}
    for a, b, c in h.edges:
        by_max[c].append((a, b))
    future = [0] * (n + 2)
    for v in range(n, 0, -1):
        future[v] = future[v + 1] + len(by_max[v])
    label = [0] * (n + 1)
    best = {"value": -1, "labels": None}

    def rec(v: int, crossing: int, used: int):
        if crossing + future[v] <= best["value"]:
            return
        if v > n:
            if crossing > best["value"]:
                best["value"] = crossing
                best["labels"] = label[1:].copy()
            return
        for part in range(min(used + 1, 3)):
            label[v] = part
            gained = sum(1 for a, b in by_max[v]
                         if label[a] != label[b] and label[a] != part
                         and label[b] != part)
            rec(v + 1, crossing + gained, max(used, part + 1))
        label[v] = 0

    rec(1, 0, 0)
    labels = best["labels"]
    parts = [[], [], []]
    for v in range(1, n + 1):
        parts[labels[v - 1]].append(v)
    return Partition3.of(n, parts), best["value"]


# ---------------------------------------------------------------------------
# Seeded sampling of pattern-free hosts.

def random_free_sample(n: int, t: int, density: float, seed: int) -> Hypergraph3:
    """Greedy seeded sample of a host omitting the expanding fan with t
    extra apexes.

    Triples are shuffled by the seed, then inserted while freeness survives,
    stopping once round(density * C(n,3)) edges are in or the deck runs out.
    Deterministic in (n, t, density, seed).
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    from .constructions import fan_pattern
    rng = random.Random(seed)
    deck = all_triples(n)
    rng.shuffle(deck)
    target = round(density * len(deck))
    state = _FamilyChecks(n, (fan_pattern(t),))
    got = 0
    for e in deck:
        if got >= target:
            break
        if state.try_add(e):
            got += 1
    return Hypergraph3.of(n, sorted(state.edge_set, key=colex_key))
