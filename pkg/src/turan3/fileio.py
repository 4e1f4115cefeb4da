"""Plain-text and JSON I/O for hypergraphs and 3-partitions.

Two line-oriented formats, both 1-based and strict:

  .h3    header "h3 <n> <m>", then m lines "a b c" with a < b < c.
  .p3    header "p3 <n>", then exactly three lines of space-separated
         vertices, one per part (a line may be empty).

'#' starts a comment (whole line or trailing); blank lines are skipped.
Duplicate triples, out-of-range labels and count mismatches are parse errors,
never silently repaired.  Writers emit edges in colex order so output is
byte-stable.  The JSON mirrors carry the same data as objects with sorted
keys.
"""

from __future__ import annotations

import json

from .core import Hypergraph3, Partition3, colex_key


class FormatError(ValueError):
    """Malformed .h3/.p3/JSON input."""


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_h3(text: str) -> Hypergraph3:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty .h3 input")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "h3":
        raise FormatError(f"bad .h3 header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad .h3 header: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} triples, found {len(body)}")
    triples = []
    for line in body:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"bad triple line: {line!r}")
        try:
            a, b, c = (int(x) for x in parts)
        except ValueError:
            raise FormatError(f"bad triple line: {line!r}") from None
        if not (1 <= a < b < c <= n):
            raise FormatError(
                f"triple {line!r} not strictly increasing within 1..{n}")
        triples.append((a, b, c))
    if len(set(triples)) != len(triples):
        raise FormatError("duplicate triple in .h3 input")
    return Hypergraph3.of(n, triples)


def format_h3(h: Hypergraph3) -> str:
    lines = [f"h3 {h.n} {h.m}"]
    for a, b, c in h.edges_sorted():
        lines.append(f"{a} {b} {c}")
    return "\n".join(lines) + "\n"


def parse_p3(text: str) -> Partition3:
    # Blank lines after the header are significant (an empty part is an empty
    # line), so only whole-line comments disappear; trailing comments are cut.
    lines = []
    for raw in text.splitlines():
        if raw.lstrip().startswith("#"):
            continue
        lines.append(raw.split("#", 1)[0].rstrip())
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty .p3 input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "p3":
        raise FormatError(f"bad .p3 header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"bad .p3 header: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) > 3:
        raise FormatError(f"expected 3 part lines, found {len(body)}")
    body += [""] * (3 - len(body))
    parts = []
    for line in body:
        try:
            parts.append([int(x) for x in line.split()])
        except ValueError:
            raise FormatError(f"bad part line: {line!r}") from None
    try:
        return Partition3.of(n, parts)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_p3(p: Partition3) -> str:
    lines = [f"p3 {p.n}"]
    for part in p.parts:
        lines.append(" ".join(str(v) for v in sorted(part)))
    return "\n".join(lines) + "\n"


def hypergraph_to_obj(h: Hypergraph3) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges_sorted()]}


def hypergraph_from_obj(obj: dict) -> Hypergraph3:
    try:
        return Hypergraph3.of(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad hypergraph JSON: {exc}") from None


def partition_to_obj(p: Partition3) -> dict:
    return {"n": p.n, "parts": [sorted(part) for part in p.parts]}


def partition_from_obj(obj: dict) -> Partition3:
    try:
        return Partition3.of(int(obj["n"]), [list(p) for p in obj["parts"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad partition JSON: {exc}") from None


def dump_json(obj) -> str:
    """Deterministic JSON: sorted keys, no whitespace variance."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_hypergraph(path: str) -> Hypergraph3:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return hypergraph_from_obj(json.loads(text))
    return parse_h3(text)


def save_hypergraph(h: Hypergraph3, path: str) -> None:
    text = dump_json(hypergraph_to_obj(h)) if path.endswith(".json") else format_h3(h)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_partition(path: str) -> Partition3:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return partition_from_obj(json.loads(text))
    return parse_p3(text)


def save_partition(p: Partition3, path: str) -> None:
    text = dump_json(partition_to_obj(p)) if path.endswith(".json") else format_p3(p)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
