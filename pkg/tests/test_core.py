"""Basic hypergraph container, colex indexing, and canonical labelling."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan3 import (Budget, Hypergraph3, MAX_CORE, Partition3, TIMEOUT,
                    UnsupportedSizeError, all_triples, are_isomorphic,
                    blow_up, canonical_form, colex_index, colex_key,
                    crossing_split, make_complete_tripartite, normalize_triple,
                    triple_at_colex_index)


def test_normalize_triple_sorts_and_rejects_repeats():
    assert normalize_triple((3, 1, 2)) == (1, 2, 3)
    with pytest.raises(ValueError):
        normalize_triple((1, 1, 2))


def test_colex_round_trip_small():
    for n in range(3, 9):
        triples = all_triples(n)
        for i, tr in enumerate(triples):
            assert colex_index(tr) == i
            assert triple_at_colex_index(i) == tr


def test_all_triples_is_colex_sorted():
    triples = all_triples(7)
    assert triples == sorted(triples, key=colex_key)
    assert len(triples) == 35


@given(st.integers(min_value=0, max_value=5000))
def test_colex_index_inverts_triple_at(i):
    assert colex_index(triple_at_colex_index(i)) == i


def test_of_normalizes_vertex_order():
    h = Hypergraph3.of(5, [(3, 2, 1), (4, 5, 1)])
    assert h.m == 2
    assert h.has_edge((1, 2, 3))
    assert h.has_edge((1, 4, 5))
    assert not h.has_edge((2, 3, 4))


def test_of_rejects_duplicate_triples():
    with pytest.raises(ValueError):
        Hypergraph3.of(5, [(3, 2, 1), (1, 2, 3)])


def test_complete_and_empty_counts():
    for n in range(3, 9):
        assert Hypergraph3.complete(n).m == len(all_triples(n))
        assert Hypergraph3.empty(n).m == 0


def test_degrees_and_codegrees_on_complete():
    h = Hypergraph3.complete(6)
    assert all(h.degree(v) == 10 for v in range(1, 7))
    assert all(h.codegree(a, b) == 4
               for a, b in itertools.combinations(range(1, 7), 2))
    assert h.max_codegree() == 4


def test_codegree_map_matches_direct_count():
    rng = random.Random(7)
    triples = all_triples(8)
    edges = rng.sample(triples, 20)
    h = Hypergraph3.of(8, edges)
    cmap = h.codegree_map()
    for a, b in itertools.combinations(range(1, 9), 2):
        direct = sum(1 for e in edges if a in e and b in e)
        assert cmap.get((a, b), 0) == direct


def test_link_of_pair():
    h = Hypergraph3.of(6, [(1, 2, 3), (1, 2, 5), (3, 4, 5)])
    assert h.link_of_pair(1, 2) == {3, 5}
    assert h.link_of_pair(2, 3) == {1}
    assert h.link_of_pair(5, 6) == frozenset()


def test_with_and_without_edge_are_persistent():
    h = Hypergraph3.of(5, [(1, 2, 3)])
    h2 = h.with_edge((2, 3, 4))
    assert (h.m, h2.m) == (1, 2)
    h3 = h2.without_edge((1, 2, 3))
    assert h3.m == 1 and h2.m == 2
    assert h3.has_edge((2, 3, 4))


def test_induced_subhypergraph():
    h = Hypergraph3.complete(6)
    sub = h.induced((1, 2, 3, 4))
    assert sub.n == 4 and sub.m == 4


def test_relabel_permutes_edges():
    h = Hypergraph3.of(5, [(1, 2, 3), (3, 4, 5)])
    perm = {1: 5, 2: 4, 3: 3, 4: 2, 5: 1}
    g = h.relabel(perm)
    assert g.has_edge((3, 4, 5))
    assert g.has_edge((1, 2, 3))
    assert g.m == 2


def test_partition_basics():
    p = Partition3.of(6, ((1, 4), (2, 5), (3, 6)))
    assert p.sizes == (2, 2, 2)
    assert p.part_of(5) == 1
    assert p.is_balanced()
    q = Partition3.of(6, ((1,), (2,), (3, 4, 5, 6)))
    assert not q.is_balanced()
    with pytest.raises(ValueError):
        Partition3.of(6, ((1, 2), (2, 3), (4, 5, 6)))


def test_crossing_split_on_tripartite():
    h, p = make_complete_tripartite(9)
    crossing, inside = crossing_split(h, p)
    assert crossing == 27
    assert inside == 0


def test_blow_up_multiplies_and_preserves_freeness_of_edges():
    base = Hypergraph3.of(4, [(1, 2, 3), (1, 2, 4)])
    b = blow_up(base, 3)
    assert b.n == 12
    assert b.m == 2 * 27
    assert blow_up(base, 1).edges_sorted() == base.edges_sorted()


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(11)
    for trial in range(25):
        n = rng.randrange(4, 9)
        triples = all_triples(n)
        k = rng.randrange(1, min(12, len(triples) + 1))
        h = Hypergraph3.of(n, rng.sample(triples, k))
        perm = dict(zip(range(1, n + 1),
                        rng.sample(range(1, n + 1), n)))
        assert canonical_form(h) == canonical_form(h.relabel(perm))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_are_isomorphic_accepts_relabelled_copies(data):
    n = data.draw(st.integers(min_value=4, max_value=8))
    triples = all_triples(n)
    edges = data.draw(st.sets(st.sampled_from(triples),
                              min_size=1, max_size=10))
    h = Hypergraph3.of(n, edges)
    image = data.draw(st.permutations(list(range(1, n + 1))))
    perm = dict(zip(range(1, n + 1), image))
    assert are_isomorphic(h, h.relabel(perm))


def test_are_isomorphic_rejects_different_sizes():
    h1 = Hypergraph3.of(5, [(1, 2, 3)])
    h2 = Hypergraph3.of(5, [(1, 2, 3), (1, 2, 4)])
    assert not are_isomorphic(h1, h2)


def test_canonical_form_cap_counts_non_isolated_vertices():
    padded = Hypergraph3.of(MAX_CORE + 4, [(1, 2, 3)])
    assert canonical_form(padded)
    with pytest.raises(UnsupportedSizeError):
        canonical_form(Hypergraph3.complete(MAX_CORE + 1))


def test_budget_expiry_and_timeout_sentinel():
    b = Budget(None)
    assert not b.expired()
    tiny = Budget(0.0)
    assert tiny.expired()
    assert TIMEOUT is not None
    assert repr(TIMEOUT)
