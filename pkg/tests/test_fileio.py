"""Round trips and error paths for the .h3 / .p3 / JSON formats."""

import json
import random

import pytest

from turan3 import (FormatError, Hypergraph3, Partition3, all_triples,
                    dump_json, format_h3, format_p3, hypergraph_from_obj,
                    hypergraph_to_obj, load_hypergraph, load_partition,
                    parse_h3, parse_p3, save_hypergraph, save_partition)


def random_host(seed, n=9, k=12):
    rng = random.Random(seed)
    return Hypergraph3.of(n, rng.sample(all_triples(n), k))


def test_h3_text_round_trip():
    h = random_host(1)
    assert parse_h3(format_h3(h)).edges_sorted() == h.edges_sorted()


def test_h3_file_round_trip(tmp_path):
    h = random_host(2)
    path = str(tmp_path / "host.h3")
    save_hypergraph(h, path)
    g = load_hypergraph(path)
    assert (g.n, g.edges_sorted()) == (h.n, h.edges_sorted())


def test_json_file_round_trip(tmp_path):
    h = random_host(3)
    path = str(tmp_path / "host.json")
    save_hypergraph(h, path)
    g = load_hypergraph(path)
    assert (g.n, g.edges_sorted()) == (h.n, h.edges_sorted())
    payload = json.loads((tmp_path / "host.json").read_text())
    assert payload["n"] == 9


def test_obj_round_trip():
    h = random_host(4)
    assert hypergraph_from_obj(hypergraph_to_obj(h)).edges_sorted() \
        == h.edges_sorted()


def test_p3_round_trip(tmp_path):
    p = Partition3.of(7, ((1, 4, 7), (2, 5), (3, 6)))
    assert parse_p3(format_p3(p)).sizes == (3, 2, 2)
    path = str(tmp_path / "split.p3")
    save_partition(p, path)
    q = load_partition(path)
    assert q.part_of(7) == 0
    assert q.sizes == p.sizes


def test_parse_h3_rejects_garbage():
    for text in ("", "h3 x\n", "h3 5\n1 2\n", "h3 5\n1 2 9\n"):
        with pytest.raises(FormatError):
            parse_h3(text)


def test_parse_p3_rejects_overlap():
    with pytest.raises(FormatError):
        parse_p3("p3 4\n1 2\n2 3\n4\n")


def test_load_unknown_extension(tmp_path):
    path = tmp_path / "host.weird"
    path.write_text("h3 4\n1 2 3\n")
    with pytest.raises(FormatError):
        load_hypergraph(str(path))


def test_dump_json_is_stable():
    text = dump_json({"b": 1, "a": [2, 1]})
    assert text == '{"a":[2,1],"b":1}\n'
    assert dump_json({"a": 1, "b": [1, 2]}) \
        == dump_json(dict(reversed([("a", 1), ("b", [1, 2])])))
