"""Triple systems: existence tests, constructions, and exact-cover search.

The central object is a (n, 3, 2, t) packing/design question: choose distinct
triples on {1..n} so that every pair from a required pair set is covered
exactly t times and every other pair not at all.  ``decompose_exact`` answers
it by depth-first exact cover with multiplicities; ``build_steiner_triple_system``
short-cuts the t = 1 complete case with the classical quasigroup
constructions, which are linear-time and make the larger recursive recipes
(``pair_cover_blocks``, ``appendix_lower_bound``) fast.

``ex_f2t`` ties it together: the maximum size of a 3-graph on m vertices with
every codegree at most t, computed exactly when a design or a small exhaustive
search settles it and as an interval otherwise.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import (TIMEOUT, Budget, Hypergraph3, Pair, Triple, colex_key,
                   normalize_triple)


@dataclass(frozen=True)
class ValueBound:
    """An integer quantity known either exactly or within [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty bound interval [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(v: int) -> "ValueBound":
        return ValueBound(v, v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"bound [{self.lo}, {self.hi}] is not exact")
        return self.lo

    def __add__(self, other: "ValueBound") -> "ValueBound":
        return ValueBound(self.lo + other.lo, self.hi + other.hi)

    def add_const(self, c: int) -> "ValueBound":
        return ValueBound(self.lo + c, self.hi + c)


@dataclass(frozen=True)
class MultiplicityTarget:
    """The pairs a decomposition must cover (each exactly t times).

    Pairs outside ``required`` must be covered zero times, so triples touching
    them are simply never candidates.
    """

    n: int
    required: frozenset[Pair]

    @staticmethod
    def of(n: int, pairs) -> "MultiplicityTarget":
        req = set()
        for p in pairs:
            a, b = sorted(p)
            if a == b or a < 1 or b > n:
                raise ValueError(f"bad pair {p!r} for n={n}")
            req.add((a, b))
        return MultiplicityTarget(n, frozenset(req))

    @staticmethod
    def complete(n: int) -> "MultiplicityTarget":
        return MultiplicityTarget(
            n, frozenset((a, b) for a in range(1, n + 1)
                         for b in range(a + 1, n + 1)))

    def without(self, pairs) -> "MultiplicityTarget":
        drop = {tuple(sorted(p)) for p in pairs}
        missing = drop - self.required
        if missing:
            raise ValueError(f"pairs {sorted(missing)} not in target")
        return MultiplicityTarget(self.n, self.required - drop)


@dataclass(frozen=True)
class Design:
    """A certified set of distinct triples, stored in colex order."""

    n: int
    blocks: tuple[Triple, ...]

    @staticmethod
    def of(n: int, blocks) -> "Design":
        bl = sorted((normalize_triple(b) for b in blocks), key=colex_key)
        return Design(n, tuple(bl))

    def as_hypergraph(self) -> Hypergraph3:
        return Hypergraph3.of(self.n, self.blocks)


@dataclass(frozen=True)
class Infeasible:
    """Definite negative answer from decompose_exact, with the reason."""

    reason: str


def verify_design(design: Design, target: MultiplicityTarget, t: int) -> list[str]:
    """All the ways a purported design fails its target; empty means valid.

    Checks distinctness, label ranges, and exact pair coverage (t on required
    pairs, 0 elsewhere).  Returned messages are sorted for stable output.
    """
    problems = []
    if design.n != target.n:
        problems.append(f"design has n={design.n}, target has n={target.n}")
    seen = set()
    for b in design.blocks:
        if not (1 <= b[0] < b[1] < b[2] <= design.n):
            problems.append(f"block {b} outside vertex range 1..{design.n}")
        if b in seen:
            problems.append(f"repeated block {b}")
        seen.add(b)
    coverage: dict[Pair, int] = {}
    for a, b, c in design.blocks:
        for p in ((a, b), (a, c), (b, c)):
            coverage[p] = coverage.get(p, 0) + 1
    for p in sorted(target.required):
        got = coverage.pop(p, 0)
        if got != t:
            problems.append(f"pair {p} covered {got} times, expected {t}")
    for p in sorted(coverage):
        problems.append(f"pair {p} covered {coverage[p]} times, expected 0")
    return sorted(problems)


def dehon_admissible(n: int, t: int) -> bool:
    """Divisibility test for a t-fold triple system on n points with distinct
    blocks: 0 <= t <= n - 2, 6 | t*n*(n-1) and 2 | t*(n-1)."""
    if n < 3 or not 0 <= t <= n - 2:
        return False
    return t * n * (n - 1) % 6 == 0 and t * (n - 1) % 2 == 0


def design_block_count(n: int, t: int) -> int:
    """Block count t*C(n,2)/3 of a t-fold triple system on n points."""
    num = t * math.comb(n, 2)
    if num % 3:
        raise ValueError(f"(n={n}, t={t}) fails block-count divisibility")
    return num // 3


# ---------------------------------------------------------------------------
# Steiner triple systems by direct construction.

def _sts_bose(k: int) -> list[Triple]:
    """STS(6k+3) on Z_{2k+1} x {0,1,2} via the idempotent commutative
    quasigroup i*j = (i+j)(k+1) mod 2k+1 (halving).  Point (i, j) gets label
    j*(2k+1) + i + 1."""
    q = 2 * k + 1
    half = k + 1  # inverse of 2 mod q

    def lab(i, j):
        return j * q + i + 1

    blocks = [(lab(i, 0), lab(i, 1), lab(i, 2)) for i in range(q)]
    for j in range(3):
        for i, l in itertools.combinations(range(q), 2):
            blocks.append(tuple(sorted(
                (lab(i, j), lab(l, j), lab((i + l) * half % q, (j + 1) % 3)))))
    return blocks


def _sts_skolem(k: int) -> list[Triple]:
    """STS(6k+1) on {inf} u Z_{2k} x {0,1,2} via a half-idempotent commutative
    quasigroup.  The infinity point gets label 6k+1; (i, j) gets j*2k + i + 1."""
    q = 2 * k
    n = 6 * k + 1

    def alpha(x):
        return x // 2 if x % 2 == 0 else k + x // 2

    def lab(i, j):
        return j * q + i + 1

    blocks = [(lab(i, 0), lab(i, 1), lab(i, 2)) for i in range(k)]
    for j in range(3):
        for i in range(k, q):
            blocks.append(tuple(sorted((n, lab(i, j), lab(i - k, (j + 1) % 3)))))
        for i, l in itertools.combinations(range(q), 2):
            blocks.append(tuple(sorted(
                (lab(i, j), lab(l, j), lab(alpha((i + l) % q), (j + 1) % 3)))))
    return blocks


def build_steiner_triple_system(n: int) -> Design:
    """Steiner triple system on {1..n}; requires n congruent to 1 or 3 mod 6."""
    if n % 6 not in (1, 3) or n < 3:
        raise ValueError(f"no Steiner triple system on {n} points")
    if n % 6 == 3:
        blocks = _sts_bose((n - 3) // 6)
    else:
        blocks = _sts_skolem((n - 1) // 6)
    return Design.of(n, blocks)


# ---------------------------------------------------------------------------
# Exact cover with multiplicities.

def decompose_exact(target: MultiplicityTarget, t: int,
                    budget: float | None = None, node_cap: int | None = None):
    """Distinct triples covering every required pair exactly t times.

    A seeded hill climb usually builds the cover outright; when it stalls,
    depth-first exact cover decides the question: repeatedly pick the
    tightest pair (fewest spare candidates, colex tie-break), then branch
    over its candidate triples in colex order.  Candidates for one pair are
    committed in increasing colex order, which removes permutation symmetry
    among a pair's t covering blocks without losing completeness.  Forced
    assignments (zero slack) cascade before any branching.

    ``budget`` is wall-clock seconds; ``node_cap`` limits search nodes
    instead, which keeps truncated outcomes reproducible.  Returns a
    Design, an Infeasible with a reason, or TIMEOUT.
    """
    if t < 0:
        raise ValueError("multiplicity must be non-negative")
    return _cover_exact(target.n, {p: t for p in target.required},
                        budget, node_cap)


def _hill_climb_cover(n: int, mult: dict[Pair, int], rng: random.Random,
                      max_steps: int) -> list[Triple] | None:
    """Randomised block swaps toward an exact cover; None when out of luck.

    Stinson-style hill climbing: pick an under-covered pair, complete it
    with a random third point, and when that would overfill a side pair,
    first evict one block holding it.  The growing partial never repeats a
    block or overfills a pair, so reaching full coverage yields a valid
    cover with no further checking.
    """
    rem = {p: v for p, v in mult.items() if v > 0}
    allowed: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in rem:
        allowed[a].add(b)
        allowed[b].add(a)
    open_pairs = sorted(rem)
    used: set[Triple] = set()
    holders: dict[Pair, list[Triple]] = {p: [] for p in rem}
    for _ in range(max_steps):
        if not open_pairs:
            return sorted(used, key=colex_key)
        i = rng.randrange(len(open_pairs))
        p = open_pairs[i]
        if rem[p] == 0:
            open_pairs[i] = open_pairs[-1]
            open_pairs.pop()
            continue
        x, y = p
        # Prefer a third point whose side pairs are both still open: each
        # eviction uncovers three slots, so unbiased choice drifts away
        # from completion just when the cover is nearly done.
        best, zs = -1, []
        for z in sorted(allowed[x] & allowed[y]):
            if normalize_triple((x, y, z)) in used:
                continue
            open_sides = ((rem[_ordered(x, z)] > 0)
                          + (rem[_ordered(y, z)] > 0))
            if open_sides > best:
                best, zs = open_sides, [z]
            elif open_sides == best:
                zs.append(z)
        if not zs:
            return None
        z = zs[rng.randrange(len(zs))]
        e = normalize_triple((x, y, z))
        for q in _pairs_of(e):
            if q != p and rem[q] == 0:
                victims = holders[q]
                out = victims[rng.randrange(len(victims))]
                used.discard(out)
                for r in _pairs_of(out):
                    holders[r].remove(out)
                    if rem[r] == 0:
                        open_pairs.append(r)
                    rem[r] += 1
        used.add(e)
        for q in _pairs_of(e):
            rem[q] -= 1
            holders[q].append(e)
    return sorted(used, key=colex_key) if not open_pairs else None


def _cover_exact(n: int, mult: dict[Pair, int], budget: float | None,
                 node_cap: int | None = None):
    """Distinct triples covering pair p exactly mult[p] times (0 elsewhere).

    The engine behind :func:`decompose_exact`; a non-uniform multiplicity
    map also expresses packing targets, where a handful of leave pairs sit
    below the common cap.
    """
    if any(v > n - 2 for v in mult.values()):
        return Infeasible(f"a pair lies in only {n - 2} distinct triples")
    live = {p for p, v in mult.items() if v > 0}
    if not live:
        return Design.of(n, ())
    slots = sum(mult.values())
    if slots % 3:
        return Infeasible("total pair multiplicity is not divisible by 3")
    at_vertex = {v: 0 for v in range(1, n + 1)}
    for (a, b), v in mult.items():
        at_vertex[a] += v
        at_vertex[b] += v
    odd = [v for v, s in at_vertex.items() if s % 2]
    if odd:
        return Infeasible(f"vertex {odd[0]} has an odd pair-slot count")
    climbed = _hill_climb_cover(n, mult, random.Random(17),
                                max_steps=200 * (slots // 3 + n))
    if climbed is not None:
        return Design.of(n, climbed)
    rows = [e for e in Hypergraph3.complete(n).edges_sorted()
            if all(p in live for p in _pairs_of(e))]
    by_pair: dict[Pair, list[Triple]] = {p: [] for p in live}
    for e in rows:
        for p in _pairs_of(e):
            by_pair[p].append(e)
    for p in by_pair:
        by_pair[p].sort(key=colex_key)

    rem = {p: mult[p] for p in sorted(live)}
    used: set[Triple] = set()
    low_water: dict[Pair, tuple] = {p: (0, 0, 0) for p in live}
    clock = Budget(budget)
    ticks = [0]

    def available(p: Pair) -> list[Triple]:
        lw = low_water[p]
        return [e for e in by_pair[p]
                if e not in used and colex_key(e) > lw
                and all(rem[q] > 0 for q in _pairs_of(e))]

    def include(e: Triple) -> None:
        used.add(e)
        for q in _pairs_of(e):
            rem[q] -= 1

    def exclude(e: Triple) -> None:
        used.discard(e)
        for q in _pairs_of(e):
            rem[q] += 1

    def solve() -> bool:
        ticks[0] += 1
        if node_cap is not None and ticks[0] > node_cap:
            raise _BudgetExpired
        if ticks[0] % 2048 == 0 and clock.expired():
            raise _BudgetExpired
        open_pairs = [(p, rem[p]) for p in rem if rem[p] > 0]
        if not open_pairs:
            return True
        best = None
        for p, r in open_pairs:
            cands = available(p)
            if len(cands) < r:
                return False
            slack = len(cands) - r
            key = (slack, p[1], p[0])
            if best is None or key < best[0]:
                best = (key, p, cands)
                if slack == 0:
                    break
        _, p, cands = best
        if best[0][0] == 0:
            # Zero slack: every candidate must be used eventually, so commit
            # the least one and let the recursion force the rest (or detect
            # the clash if committing it starves another pair).
            e = cands[0]
            saved_lw = low_water[p]
            include(e)
            low_water[p] = colex_key(e)
            if solve():
                return True
            exclude(e)
            low_water[p] = saved_lw
            return False
        saved_lw = low_water[p]
        for e in cands:
            include(e)
            low_water[p] = colex_key(e)
            if solve():
                return True
            exclude(e)
        low_water[p] = saved_lw
        return False

    try:
        if solve():
            return Design.of(n, sorted(used, key=colex_key))
        return Infeasible("exhaustive search found no exact decomposition")
    except _BudgetExpired:
        return TIMEOUT


class _BudgetExpired(Exception):
    pass


def _ordered(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def _pairs_of(e: Triple) -> tuple[Pair, Pair, Pair]:
    a, b, c = e
    return ((a, b), (a, c), (b, c))


def decompose_complete(n: int, t: int, budget: float | None = None,
                       node_cap: int | None = None):
    """t-fold triple system on {1..n}: direct construction when one is known,
    exact cover otherwise."""
    if not dehon_admissible(n, t):
        return Infeasible(f"(n={n}, t={t}) fails the divisibility conditions")
    if t == 1:
        return build_steiner_triple_system(n)
    return decompose_exact(MultiplicityTarget.complete(n), t, budget, node_cap)


def packing_leave(m: int, t: int = 1) -> tuple[Pair, ...]:
    """The smallest leave of a t-fold maximum triple packing on m points.

    The leave is the multigraph of pair slots no block uses, returned as a
    pair list with repeats, in a fixed labelling.  Each point sits in
    t*(m - 1) slots and each block through it eats two, so leave degrees
    all share the parity of t*(m - 1); the leave size is t*C(m,2) mod 3.
    Even parity forces the empty graph, a doubled edge, or a 4-cycle,
    whichever hits the right size class.  Odd parity (m even) forces odd
    degree everywhere, so at least a perfect matching, stretched by one or
    two 3-stars when the matching size lands in the wrong class mod 3.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    if not 1 <= t <= m - 3:
        raise ValueError(f"no leave to speak of for t={t} on {m} points")
    r3 = t * math.comb(m, 2) % 3
    if t * (m - 1) % 2 == 0:
        if r3 == 0:
            return ()
        if r3 == 1:
            return ((1, 2), (2, 3), (3, 4), (1, 4))
        return ((1, 2), (1, 2))
    stars = ((r3 - m // 2) % 3)
    leave = []
    for s in range(stars):
        c = 4 * s + 1
        leave += [(c, c + 1), (c, c + 2), (c, c + 3)]
    leave += [(i, i + 1) for i in range(4 * stars + 1, m, 2)]
    return tuple(leave)


def max_triple_packing(m: int, t: int = 1, budget: float | None = None,
                       node_cap: int | None = None):
    """A maximum set of distinct triples on {1..m} with every pair in at
    most t of them.

    The leave-size argument in ``packing_leave`` is an upper bound on the
    block count; building a packing whose uncovered pair slots are exactly
    that leave certifies it is attained.  Returns a Design, Infeasible, or
    TIMEOUT.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if m < 3:
        return Design.of(m, ())
    if t >= m - 2:
        return Design.of(m, Hypergraph3.complete(m).edges_sorted())
    mult = {p: t for p in MultiplicityTarget.complete(m).required}
    for p in packing_leave(m, t):
        mult[p] -= 1
    assert all(v >= 0 for v in mult.values())
    return _cover_exact(m, mult, budget, node_cap)


# ---------------------------------------------------------------------------
# Pair covers and codegree-capped blocks used by the lower-bound recipes.

def pair_cover_blocks(n: int) -> Design:
    """For even n >= 4: at most C(n,2)/3 + n/3 triples on {1..n} covering
    every pair at least once.

    When n-1 admits a Steiner system, extend it by one vertex and a near-
    matching of short triples through it; otherwise n+1 admits one, and
    deleting its last point (rerouting each damaged block through the least
    available vertex) leaves all pairs of {1..n} covered.
    """
    if n < 4 or n % 2:
        raise ValueError("pair cover construction needs even n >= 4")
    if (n - 1) % 6 in (1, 3):
        base = build_steiner_triple_system(n - 1)
        blocks = list(base.blocks)
        for i in range(1, n // 2):
            blocks.append((2 * i - 1, 2 * i, n))
        blocks.append((1, n - 1, n))
    else:
        base = build_steiner_triple_system(n + 1)
        blocks = []
        for b in base.blocks:
            if n + 1 not in b:
                blocks.append(b)
                continue
            u, v = sorted(set(b) - {n + 1})
            z = next(x for x in range(1, n + 1) if x not in (u, v))
            blocks.append(tuple(sorted((u, v, z))))
    return Design.of(n, blocks)


def pair_cover_size_bound(n: int) -> Fraction:
    return Fraction(math.comb(n, 2), 3) + Fraction(n, 3)


def block_gadget(t: int) -> Hypergraph3:
    """For odd t: a 3-graph on t+3 vertices with every codegree at most t and
    at least (t/3)*C(t+3,2) - (t+3)/3 edges, namely the complete 3-graph
    minus a pair cover."""
    if t < 1 or t % 2 == 0:
        raise ValueError("block gadget needs odd t >= 1")
    m = t + 3
    cover = set(pair_cover_blocks(m).blocks)
    edges = [e for e in Hypergraph3.complete(m).edges_sorted() if e not in cover]
    return Hypergraph3.of(m, edges)


def block_gadget_size_bound(t: int) -> Fraction:
    return Fraction(t, 3) * math.comb(t + 3, 2) - Fraction(t + 3, 3)


# ---------------------------------------------------------------------------
# Codegree-capped dense hypergraphs on all of {1..n}: the three-case recipe.

@dataclass(frozen=True)
class AppendixResult:
    """A constructed 3-graph with max codegree <= t plus its guarantee."""

    h: Hypergraph3
    case: str
    variant: str
    achieved: int
    guarantee: Fraction


def _first_c4(pairs: set[Pair], vertices) -> list[Pair] | None:
    """Lexicographically first 4-cycle (as its 4 edges) in a pair set."""
    vs = sorted(vertices)
    for quad in itertools.combinations(vs, 4):
        a, b, c, d = quad
        for cycle in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            es = [tuple(sorted((cycle[i], cycle[(i + 1) % 4]))) for i in range(4)]
            if all(e in pairs for e in es):
                return es
    return None


# The recipe decompositions rest on an asymptotic design theorem, so their
# targets can be unrealisable at small n; attempts get a node allowance and
# then the parity-leave packing stands in.
_RECIPE_NODES = 20_000


def appendix_lower_bound(n: int, t: int, budget: float | None = None):
    """Dense 3-graph on {1..n} with every codegree at most t.

    Case split on parities.  Even t: decompose a t-fold complete pair target
    (minus a short matching when 3 does not divide the slot count).  Odd t,
    odd n: same with 4-cycles removed instead of edges, keeping degrees
    even.  Odd t, even n: split off blocks of t+3 vertices, cover cross
    pairs by a decomposition and refill each block with ``block_gadget``.

    The supporting design theorem is asymptotic, so a case target can be
    unrealisable at small n; the maximum packing then stands in, and it
    always clears the case guarantee.  Returns AppendixResult, Infeasible,
    or TIMEOUT.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if t == 0:
        return AppendixResult(Hypergraph3.empty(n), "zero", "empty", 0, Fraction(0))
    if t >= n - 2:
        # The codegree cap no longer bites, and for t > n - 2 the parity
        # formulas can exceed C(n,3); the complete graph is the whole story.
        h = Hypergraph3.complete(n)
        return AppendixResult(h, "complete", "complete", h.m, Fraction(h.m))
    pairs_n = math.comb(n, 2)
    if t % 2 == 0:
        guarantee = Fraction(t, 3) * pairs_n - Fraction(2 * t, 3)
        k = 0 if t % 3 == 0 else pairs_n % 3
        drop_sets = {0: (), 1: ((1, 2),), 2: ((1, 2), (3, 4))}
        variants = {0: "full", 1: "minus-edge", 2: "minus-matching"}
        tgt = MultiplicityTarget.complete(n).without(drop_sets[k])
        res = decompose_exact(tgt, t, budget, _RECIPE_NODES)
        if isinstance(res, Design):
            h = res.as_hypergraph()
            return AppendixResult(h, "even-t", variants[k], h.m, guarantee)
        return _packing_fallback(n, t, "even-t", guarantee, budget)
    if n % 2 == 1:
        guarantee = Fraction(t, 3) * pairs_n - Fraction(8 * t, 3)
        cycles = 0 if t % 3 == 0 else pairs_n % 3
        variants = {0: "full", 1: "minus-cycle", 2: "minus-two-cycles"}
        pairs = set(MultiplicityTarget.complete(n).required)
        for _ in range(cycles):
            c4 = _first_c4(pairs, range(1, n + 1))
            if c4 is None:
                return Infeasible("no 4-cycle left to remove")
            pairs -= set(c4)
        res = decompose_exact(MultiplicityTarget.of(n, pairs), t,
                              budget, _RECIPE_NODES)
        if isinstance(res, Design):
            h = res.as_hypergraph()
            return AppendixResult(h, "odd-t-odd-n", variants[cycles],
                                  h.m, guarantee)
        return _packing_fallback(n, t, "odd-t-odd-n", guarantee, budget)
    return _appendix_even_n(n, t, budget)


def _appendix_even_n(n: int, t: int, budget: float | None):
    """Odd t, even n: blocks of size t+3 plus a matched leftover set."""
    size = t + 3
    s = n // size
    guarantee = (Fraction(t, 3) * math.comb(n, 2) - Fraction(n, 3)
                 - Fraction(t * t, 6) - 3 * t)
    if s < 1:
        return _packing_fallback(n, t, "odd-t-even-n", guarantee, budget)
    blocks = [list(range(k * size + 1, (k + 1) * size + 1)) for k in range(s)]
    leftover = list(range(s * size + 1, n + 1))
    pairs = set(MultiplicityTarget.complete(n).required)
    for blk in blocks:
        for p in itertools.combinations(blk, 2):
            pairs.discard(p)
    for i in range(0, len(leftover), 2):
        pairs.discard((leftover[i], leftover[i + 1]))
    variants = {0: "full", 1: "minus-cycle", 2: "minus-two-cycles"}
    cycles = 0 if t % 3 == 0 else len(pairs) % 3
    for _ in range(cycles):
        c4 = _first_c4(pairs, range(1, n + 1))
        if c4 is None:
            return Infeasible("no 4-cycle left to remove")
        pairs -= set(c4)
    res = decompose_exact(MultiplicityTarget.of(n, pairs), t,
                          budget, _RECIPE_NODES)
    if isinstance(res, Design):
        edges = list(res.blocks)
        for blk in blocks:
            gadget = block_gadget(t)
            lab = {i + 1: v for i, v in enumerate(blk)}
            for e in gadget.edges_sorted():
                edges.append(tuple(sorted(lab[v] for v in e)))
        h = Hypergraph3.of(n, edges)
        return AppendixResult(h, "odd-t-even-n", variants[cycles],
                              h.m, guarantee)
    return _packing_fallback(n, t, "odd-t-even-n", guarantee, budget)


def _packing_fallback(n: int, t: int, case: str, guarantee: Fraction,
                      budget: float | None):
    """Maximum-packing stand-in for an unrealisable recipe target.

    The parity leave never exceeds n/2 + 2 pairs, so the packing count
    t/3*C(n,2) - leave/3 clears every case formula above.
    """
    res = max_triple_packing(n, t, budget, _TIER_COVER_NODES)
    if not isinstance(res, Design):
        return res
    h = res.as_hypergraph()
    assert h.m >= guarantee
    return AppendixResult(h, case, "packing", h.m, guarantee)


def appendix_guarantee(n: int, t: int) -> Fraction:
    """The case lower bound the recipe promises (before construction)."""
    if t == 0:
        return Fraction(0)
    pairs_n = math.comb(n, 2)
    if t % 2 == 0:
        return Fraction(t, 3) * pairs_n - Fraction(2 * t, 3)
    if n % 2 == 1:
        return Fraction(t, 3) * pairs_n - Fraction(8 * t, 3)
    return (Fraction(t, 3) * pairs_n - Fraction(n, 3)
            - Fraction(t * t, 6) - 3 * t)


# ---------------------------------------------------------------------------
# The extremal F2-type value: largest 3-graph with all codegrees <= t.

@dataclass(frozen=True)
class CodegreeCapResult:
    h: Hypergraph3
    bound: ValueBound
    tier: str


_EX_F2T_CACHE: dict[tuple[int, int], CodegreeCapResult] = {}

EXACT_SEARCH_CAP = 13
DESIGN_SEARCH_CAP = 19
# Tier attempts under a default (None) budget are node-capped so a value
# query always terminates, and truncation points are run-independent.
_TIER_COVER_NODES = 300_000
_TIER_SEARCH_NODES = 500_000


def densest_codegree_capped(m: int, t: int,
                            budget: float | None = None) -> CodegreeCapResult:
    """Densest 3-graph on m vertices with every codegree at most t, with a
    witness.  Tiers: trivial sizes, complete graph when t >= m - 2, a t-fold
    design when the divisibility conditions hold, a maximum t-fold packing
    otherwise, exhaustive search for m <= 13, and a construction/counting
    interval beyond that."""
    key = (m, t)
    if key in _EX_F2T_CACHE:
        return _EX_F2T_CACHE[key]
    res = _densest_codegree_capped(m, t, budget)
    if res.bound.is_exact or budget is None:
        _EX_F2T_CACHE[key] = res
    return res


def _densest_codegree_capped(m: int, t: int,
                             budget: float | None) -> CodegreeCapResult:
    if m < 0 or t < 0:
        raise ValueError("need m >= 0 and t >= 0")
    if t == 0 or m <= 2:
        return CodegreeCapResult(Hypergraph3.empty(m), ValueBound.exact(0),
                                 "trivial")
    if t >= m - 2:
        h = Hypergraph3.complete(m)
        return CodegreeCapResult(h, ValueBound.exact(h.m), "complete")
    counting_cap = t * math.comb(m, 2) // 3
    if dehon_admissible(m, t) and (t == 1 or m <= DESIGN_SEARCH_CAP):
        res = decompose_complete(m, t, budget, _TIER_COVER_NODES)
        if isinstance(res, Design):
            h = res.as_hypergraph()
            assert h.m == counting_cap
            return CodegreeCapResult(h, ValueBound.exact(h.m), "design")
    if m <= DESIGN_SEARCH_CAP:
        # The leave-parity count caps the block number; realising exactly
        # that leave certifies the cap, so the packing is a proven maximum.
        res = max_triple_packing(m, t, budget, _TIER_COVER_NODES)
        if isinstance(res, Design):
            h = res.as_hypergraph()
            assert h.m == (t * math.comb(m, 2) - len(packing_leave(m, t))) // 3
            return CodegreeCapResult(h, ValueBound.exact(h.m), "packing")
    if m <= EXACT_SEARCH_CAP:
        from .constructions import book_pattern
        from .search import turan_exact
        out = turan_exact(m, (book_pattern(t),), budget=budget,
                          node_cap=_TIER_SEARCH_NODES)
        if out.optimal:
            return CodegreeCapResult(out.witness, ValueBound.exact(out.best),
                                     "search")
    app = appendix_lower_bound(m, t, budget)
    if isinstance(app, AppendixResult):
        return CodegreeCapResult(app.h, ValueBound(app.h.m, counting_cap),
                                 "interval")
    # Last resort: no construction available within budget; the empty graph
    # is still a valid witness for the trivial lower bound.
    return CodegreeCapResult(Hypergraph3.empty(m), ValueBound(0, counting_cap),
                             "interval")


def ex_f2t(m: int, t: int, budget: float | None = None) -> ValueBound:
    """Max edges of a 3-graph on m vertices with all codegrees <= t.

    Exact whenever a tier settles it (trivial, complete, design, maximum
    packing, or small exhaustive search).  For larger m the interval comes
    from closed
    formulas: the counting cap t*C(m,2)/3 above, the worst-case parity
    guarantee of the block recipe below, with no construction run.
    """
    if t == 0 or m <= 2:
        return ValueBound.exact(0)
    if t >= m - 2:
        return ValueBound.exact(math.comb(m, 3))
    if m <= DESIGN_SEARCH_CAP or (t == 1 and dehon_admissible(m, t)):
        return densest_codegree_capped(m, t, budget).bound
    lo = max(0, math.ceil(appendix_guarantee(m, t)))
    return ValueBound(lo, t * math.comb(m, 2) // 3)
