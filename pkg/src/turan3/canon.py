"""Exact canonical forms for small 3-uniform hypergraphs.

The canonical key of a hypergraph is the minimum, over the leaves of an
individualization-refinement tree, of a byte encoding of the relabelled edge
set.  Minimising over leaves of an isomorphism-equivariant tree makes the key
a complete invariant: two hypergraphs get the same key iff they are
isomorphic.

The search refines ordered partitions of the vertex set by edge signatures,
branches on the first non-singleton class, and prunes sibling branches that a
previously discovered automorphism (one fixing the current individualization
path pointwise) maps onto an explored branch.  The pruning keeps highly
symmetric inputs (complete, complete tripartite) tractable; asymmetric inputs
barely branch at all.

Isolated vertices are interchangeable, so they are stripped first and only
their count enters the key.  Exactness is guaranteed for hypergraphs whose
non-isolated part has at most MAX_CORE vertices; larger cores raise
UnsupportedSizeError rather than fall back to anything heuristic.
"""

from __future__ import annotations

import struct

from .core import Hypergraph3, colex_index, colex_key

MAX_CORE = 16


class UnsupportedSizeError(ValueError):
    """Raised when a hypergraph is too large for exact canonicalization."""


def _refine(classes: list[list[int]], incident: dict[int, list[tuple[int, int]]]):
    """Equitable refinement of an ordered partition.

    Each vertex's signature is the multiset of (class, class) colour pairs of
    its edge partners.  Classes split by signature, in sorted signature order,
    until no class splits.  The result depends only on the isomorphism type
    and the positions of previously individualized vertices, which is what
    makes the search tree equivariant.
    """
    while True:
        colour = {}
        for ci, cls in enumerate(classes):
            for v in cls:
                colour[v] = ci
        new_classes: list[list[int]] = []
        changed = False
        for cls in classes:
            if len(cls) == 1:
                new_classes.append(cls)
                continue
            sig = {}
            for v in cls:
                pairs = sorted(
                    (min(colour[x], colour[y]), max(colour[x], colour[y]))
                    for x, y in incident[v])
                sig[v] = tuple(pairs)
            groups: dict[tuple, list[int]] = {}
            for v in cls:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                new_classes.append(cls)
            else:
                changed = True
                for key in sorted(groups):
                    new_classes.append(groups[key])
        classes = new_classes
        if not changed:
            return classes


def _encode_leaf(classes: list[list[int]], edges) -> bytes:
    relabel = {}
    for i, cls in enumerate(classes):
        relabel[cls[0]] = i + 1
    idx = sorted(
        colex_index(tuple(sorted((relabel[a], relabel[b], relabel[c]))))
        for a, b, c in edges)
    return struct.pack(f">{len(idx)}H", *idx)


def _leaf_permutation(classes: list[list[int]]) -> dict[int, int]:
    return {cls[0]: i + 1 for i, cls in enumerate(classes)}


def _canon_core(core: Hypergraph3) -> bytes:
    """Minimum leaf encoding for a hypergraph with no isolated vertices."""
    n = core.n
    edges = sorted(core.edges, key=colex_key)
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, n + 1)}
    for a, b, c in edges:
        incident[a].append((b, c))
        incident[b].append((a, c))
        incident[c].append((a, b))

    best: list[bytes | None] = [None]
    # Automorphisms discovered at equal-key leaves, as dicts old -> old.
    generators: list[dict[int, int]] = []

    def search(classes: list[list[int]], path: tuple[int, ...]):
        classes = _refine(classes, incident)
        target = None
        for ci, cls in enumerate(classes):
            if len(cls) > 1:
                target = ci
                break
        if target is None:
            enc = _encode_leaf(classes, edges)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                leaves_by_key[enc] = _leaf_permutation(classes)
            elif enc == best[0]:
                # Two leaves with equal keys yield an automorphism.
                p_new = _leaf_permutation(classes)
                p_old = leaves_by_key[enc]
                inv_old = {lab: v for v, lab in p_old.items()}
                generators.append({v: inv_old[lab] for v, lab in p_new.items()})
            return
        # Orbit of already-explored siblings under path-stabilizing
        # automorphisms; branches inside it would repeat explored work.
        explored: set[int] = set()
        for v in classes[target]:
            if v in explored:
                continue
            sub = (classes[:target] + [[v]]
                   + [[u for u in classes[target] if u != v]]
                   + classes[target + 1:])
            search(sub, path + (v,))
            explored.add(v)
            stab = [g for g in generators
                    if all(g[p] == p for p in path)]
            frontier = set(explored)
            while frontier:
                nxt = {g[u] for g in stab for u in frontier} - explored
                explored |= nxt
                frontier = nxt

    leaves_by_key: dict[bytes, dict[int, int]] = {}
    search([list(range(1, n + 1))], ())
    assert best[0] is not None
    return best[0]


def canonical_form(h: Hypergraph3) -> bytes:
    """Complete isomorphism invariant as bytes.

    Keys embed the vertex count, the non-isolated core size and the canonical
    edge encoding, so equality of keys is equivalent to isomorphism (including
    padding by isolated vertices).
    """
    isolated = set(h.isolated_vertices())
    core_vertices = [v for v in range(1, h.n + 1) if v not in isolated]
    if len(core_vertices) > MAX_CORE:
        raise UnsupportedSizeError(
            f"exact canonicalization supports at most {MAX_CORE} non-isolated "
            f"vertices, got {len(core_vertices)}")
    core = h.induced(core_vertices)
    body = _canon_core(core) if core.m else b""
    return struct.pack(">IHH", h.n, core.n, core.m) + body


def are_isomorphic(h1: Hypergraph3, h2: Hypergraph3) -> bool:
    if h1.n != h2.n or h1.m != h2.m:
        return False
    return canonical_form(h1) == canonical_form(h2)
