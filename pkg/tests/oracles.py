"""Independent reference computations the tests pin expectations against.

Everything here is deliberately naive: exhaustive enumeration, the
classical counting formulas, and frozen values from the design-theory
literature.  None of it calls into the package's own search or
construction code, so agreement is evidence rather than tautology.
"""

import itertools
from fractions import Fraction

# Classical maximum triple-packing sizes D(m) for m = 3..19 (one copy of
# each pair at most).  These match the floor formula below; both are kept
# so a typo in either would show up as a disagreement.
PACKING_NUMBERS = {
    3: 1, 4: 1, 5: 2, 6: 4, 7: 7, 8: 8, 9: 12, 10: 13, 11: 17, 12: 20,
    13: 26, 14: 28, 15: 35, 16: 37, 17: 44, 18: 48, 19: 57,
}

# Classical maximum edge counts of C4-free graphs (Zarankiewicz side).
C4_MAX_KNOWN = {
    1: 0, 2: 1, 3: 3, 4: 4, 5: 6, 6: 7, 7: 9, 8: 11, 9: 13, 10: 16,
}


def schonheim_packing(m: int) -> int:
    """Floor formula for the maximum triple packing on m points."""
    value = (m * ((m - 1) // 2)) // 3
    if m % 6 == 5:
        value -= 1
    return value


def closed_form_reference(n: int, t: int) -> Fraction:
    """The target count n^3/27 + t n^2/18 - t n/6 as an exact rational."""
    n = Fraction(n)
    return n ** 3 / 27 + Fraction(t) * n ** 2 / 18 - Fraction(t) * n / 6


def best_product_split(n: int) -> int:
    """max a*b*c over a + b + c = n: the crossing-triple count oracle."""
    best = 0
    for a in range(1, n - 1):
        for b in range(a, (n - a) // 2 + 1):
            c = n - a - b
            best = max(best, a * b * c)
    return best


def all_triples(n: int):
    return list(itertools.combinations(range(1, n + 1), 3))


def brute_embeddings(host_edges, host_n, pattern_edges, pattern_n):
    """Yield every injective vertex map sending pattern edges into the host.

    Pure permutation search, viable only for tiny patterns and hosts.
    """
    host_set = {tuple(sorted(e)) for e in host_edges}
    pattern = [tuple(sorted(e)) for e in pattern_edges]
    for image in itertools.permutations(range(1, host_n + 1), pattern_n):
        mapping = dict(zip(range(1, pattern_n + 1), image))
        if all(tuple(sorted(mapping[v] for v in e)) in host_set
               for e in pattern):
            yield mapping


def brute_contains(host_edges, host_n, pattern_edges, pattern_n) -> bool:
    return next(brute_embeddings(host_edges, host_n,
                                 pattern_edges, pattern_n), None) is not None


def brute_turan(n, pattern_list):
    """(max edges, one witness) over every 3-graph on n labelled vertices.

    pattern_list holds (edges, nv) pairs.  Enumerates all 2^binom(n,3)
    edge subsets, so keep n <= 5.
    """
    triples = all_triples(n)
    best, witness = -1, ()
    for mask in range(1 << len(triples)):
        edges = [triples[i] for i in range(len(triples)) if mask >> i & 1]
        if len(edges) <= best:
            continue
        if any(brute_contains(edges, n, pe, pn) for pe, pn in pattern_list):
            continue
        best, witness = len(edges), tuple(edges)
    return best, witness


def brute_codegree_capped(m: int, t: int) -> int:
    """Max number of distinct triples on m points with every pair in at
    most t of them, by depth-first search with a running coverage count.
    """
    triples = all_triples(m)
    cover = {}
    best = 0

    def extend(i, chosen):
        nonlocal best
        best = max(best, chosen)
        if chosen + (len(triples) - i) <= best:
            return
        for j in range(i, len(triples)):
            tr = triples[j]
            pairs = [(tr[0], tr[1]), (tr[0], tr[2]), (tr[1], tr[2])]
            if any(cover.get(p, 0) >= t for p in pairs):
                continue
            for p in pairs:
                cover[p] = cover.get(p, 0) + 1
            extend(j + 1, chosen + 1)
            for p in pairs:
                cover[p] -= 1

    extend(0, 0)
    return best


def graph_has_c4(edges) -> bool:
    """Whether a simple graph (iterable of 2-sets) has a 4-cycle."""
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    verts = sorted(adj)
    for u, w in itertools.combinations(verts, 2):
        if len(adj[u] & adj[w]) >= 2:
            return True
    return False


def brute_c4_max(m: int) -> int:
    """Max edges of a C4-free graph on m vertices, by DFS over edge slots.

    A graph is C4-free iff no vertex pair has two common neighbours, so an
    edge ab may join a C4-free graph iff no neighbour of a already shares
    a neighbour with b and vice versa.
    """
    slots = list(itertools.combinations(range(m), 2))
    adj = [set() for _ in range(m)]
    best = 0

    def can_add(a, b):
        for c in adj[a]:
            if adj[b] & adj[c]:
                return False
        for c in adj[b]:
            if adj[a] & adj[c]:
                return False
        return True

    def extend(i, chosen):
        nonlocal best
        best = max(best, chosen)
        if chosen + (len(slots) - i) <= best:
            return
        for j in range(i, len(slots)):
            a, b = slots[j]
            if not can_add(a, b):
                continue
            adj[a].add(b)
            adj[b].add(a)
            extend(j + 1, chosen + 1)
            adj[a].discard(b)
            adj[b].discard(a)

    extend(0, 0)
    return best


def parse_wcnf(text: str):
    """Parse a `p wcnf` file into (nvars, top, hard, soft) clause lists."""
    nvars = top = None
    hard, soft = [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            _, fmt, nv, _, tp = line.split()
            assert fmt == "wcnf"
            nvars, top = int(nv), int(tp)
            continue
        parts = [int(x) for x in line.split()]
        assert parts[-1] == 0, "clause line must end in 0"
        weight, lits = parts[0], parts[1:-1]
        (hard if weight == top else soft).append((weight, lits))
    return nvars, top, hard, soft


def wcnf_optimum(text: str) -> int:
    """Best soft weight over all assignments satisfying every hard clause.

    Brute force over 2^nvars assignments; keep nvars <= 16 or so.
    """
    nvars, _, hard, soft = parse_wcnf(text)

    def satisfied(lits, assign):
        return any((lit > 0) == bool(assign >> (abs(lit) - 1) & 1)
                   for lit in lits)

    best = -1
    for assign in range(1 << nvars):
        if all(satisfied(lits, assign) for _, lits in hard):
            value = sum(w for w, lits in soft if satisfied(lits, assign))
            best = max(best, value)
    return best
