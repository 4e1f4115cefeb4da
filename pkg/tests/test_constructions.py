"""Hosts and patterns: shapes, counts, and freeness of the constructions."""

import itertools
import math

import pytest

from oracles import best_product_split, graph_has_c4
from turan3 import (PATTERN_TAGS, balanced_parts, book_pattern, contains_fan,
                    crossing_split, fan_pattern, find_embedding, k4_minus,
                    make_apex_host, make_complete_tripartite, make_extremal,
                    make_satellite, pattern_by_tag, satellite_count, split_fan,
                    tripartite_count, tripartite_fan, verify_embedding)


def test_pattern_shapes_are_frozen():
    assert fan_pattern(0).edges_sorted() == ((1, 2, 3), (1, 2, 4), (3, 4, 5))
    assert fan_pattern(2).edges_sorted() == (
        (1, 2, 3), (1, 2, 4), (3, 4, 5), (3, 4, 6), (3, 4, 7))
    assert book_pattern(0).edges_sorted() == ((1, 2, 3),)
    assert book_pattern(2).edges_sorted() == (
        (1, 2, 3), (1, 2, 4), (1, 2, 5))
    assert k4_minus().edges_sorted() == ((1, 2, 3), (1, 2, 4), (1, 3, 4))
    assert split_fan().edges_sorted() == (
        (1, 2, 3), (1, 2, 4), (3, 4, 5), (5, 6, 7))


def test_fan_pattern_sizes():
    for t in range(0, 6):
        p = fan_pattern(t)
        assert (p.n, p.m) == (5 + t, 3 + t)
        assert p.codegree(3, 4) == t + 1


def test_tripartite_fan_shape():
    p = tripartite_fan()
    assert (p.n, p.m) == (20, 18)
    assert p.max_codegree() <= 2


def test_pattern_by_tag_covers_all_tags():
    for tag in PATTERN_TAGS:
        p = pattern_by_tag(tag, 1)
        assert p.m >= 1
    assert pattern_by_tag("fan", 3).m == 6
    assert pattern_by_tag("book", 3).m == 4
    with pytest.raises(ValueError):
        pattern_by_tag("nosuch", 0)


def test_balanced_parts_partition_n():
    for n in range(3, 40):
        sizes = tuple(len(p) for p in balanced_parts(n))
        assert sum(sizes) == n
        assert max(sizes) - min(sizes) <= 1


def test_tripartite_count_matches_product_oracle():
    for n in range(3, 41):
        assert tripartite_count(n) == best_product_split(n)


def test_make_complete_tripartite_structure():
    for n in (7, 9, 12):
        h, part = make_complete_tripartite(n)
        crossing, inside = crossing_split(h, part)
        assert crossing == h.m == tripartite_count(n)
        assert inside == 0
        a, b, c = (sorted(p) for p in part.parts)
        for x, y, z in itertools.product(a[:2], b[:2], c[:2]):
            assert h.has_edge(tuple(sorted((x, y, z))))


def test_satellite_host_count_formula():
    cases = [(14, 2, (4, 4, 4)), (13, 1, (4, 4, 4)), (16, 3, (5, 4, 4)),
             (12, 0, (4, 4, 4))]
    for n, t, sizes in cases:
        h = make_satellite(n, t, sizes)
        assert h.m == satellite_count(n, t, sizes)
        w1, w2, w3 = sizes
        direct = (w1 * w2 * w3 + t * sum(math.comb(w, 2) for w in sizes)
                  + math.comb(t, 3))
        assert h.m == direct


def test_make_satellite_validates_sizes():
    with pytest.raises(ValueError):
        make_satellite(12, 2, (4, 4, 4))
    with pytest.raises(ValueError):
        make_satellite(10, 2, (4, 4, -2))


def test_extremal_is_fan_free_small_grid():
    for n in range(9, 17):
        for t in range(0, 3):
            res = make_extremal(n, t)
            assert res.h.n == n
            assert contains_fan(res.h, t) is None
            crossing, inside = crossing_split(res.h, res.partition)
            assert crossing == tripartite_count(n)
            assert res.h.m == crossing + inside


def test_extremal_bound_consistency():
    for n in (10, 13, 16):
        res = make_extremal(n, 1)
        assert res.bound.lo <= res.h.m <= res.bound.hi
        assert len(res.tiers) == 3


def test_extremal_embedder_cross_check():
    res = make_extremal(12, 1)
    assert find_embedding(res.h, fan_pattern(1)) is None
    emb = find_embedding(res.h, fan_pattern(0))
    if emb is not None:
        assert verify_embedding(res.h, fan_pattern(0), emb)


def test_apex_host_links_are_c4_free():
    res = make_apex_host(13)
    apex = 13
    assert res.h.n == 13
    assert res.count == res.h.m
    third = sorted(res.partition.parts[2])
    link_pairs = []
    for e in res.h.edges_sorted():
        if apex in e:
            rest = tuple(v for v in e if v != apex)
            if rest[0] in res.partition.parts[2] \
                    and rest[1] in res.partition.parts[2]:
                link_pairs.append(rest)
    assert link_pairs, "apex should carry pairs into the third part"
    assert not graph_has_c4(link_pairs)
    assert len(link_pairs) == res.c4.m
