"""Command-line front end.

Nine subcommands: construct (named hosts and patterns to .h3/.p3 plus a
JSON sidecar), check (pattern containment with a printed vertex map),
codegree (pair statistics or capped extremal values), design and
decompose (triple systems with verified certificates), turan (exact
extremal search with optional WCNF export), partition (best crossing
3-partition), formulas (closed forms and inequality reports), and verify
(the deterministic suites).

Settings resolve in three layers: built-in defaults, then a ``key =
value`` config file, then command-line flags.  The effective
configuration is logged to stderr on every run, so stdout stays clean
for reports and file lists.  Exit codes: 0 success / free / passed, 1 a
witness or violation was found, 2 usage or input errors, 3 the budget
expired before a verdict.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .canon import UnsupportedSizeError, canonical_form
from .constructions import (PATTERN_TAGS, book_pattern, fan_pattern,
                            k4_minus, make_apex_host,
                            make_complete_tripartite, make_extremal,
                            make_satellite, pattern_by_tag, satellite_count,
                            split_fan, tripartite_count)
from .core import TIMEOUT, Hypergraph3
from .designs import (Infeasible, MultiplicityTarget, decompose_complete,
                      decompose_exact, ex_f2t, verify_design)
from .detection import contains_pattern, max_codegree_check
from .fileio import dump_json, load_hypergraph, save_hypergraph, save_partition
from .formulas import (balanced_optimality_scan, closed_form_corollary,
                       interval_check, s_ho, satellite_gap_check)
from .gadgets import (tripartite_plus_inner, tripartite_plus_pendant,
                      tripartite_plus_straddle)
from .search import best_partition, export_maxsat, turan_exact
from .suites import (SUITE_NAMES, build_report, first_failure,
                     formula_report_obj, report_exit_code, rows_to_csv)


@dataclass(frozen=True)
class RunConfig:
    """Effective settings of one invocation.

    ``seed`` feeds every randomized component; ``budget`` is wall-clock
    seconds with None meaning run to completion; ``threads`` is the
    worker-count hint handed to the suites.  The caps bound what the
    commands attempt exactly: canonical keys up to ``canon_cap``
    vertices, the capped-codegree exact-search tier up to ``f2t_cap``
    points, the turan command up to ``turan_cap`` vertices, and the
    partition command up to ``partition_cap`` vertices.
    """

    seed: int = 0
    budget: float | None = None
    threads: int = 1
    canon_cap: int = 16
    f2t_cap: int = 13
    turan_cap: int = 10
    partition_cap: int = 15


_CONFIG_KEYS = ("seed", "budget", "threads", "canon-cap", "f2t-cap",
                "turan-cap", "partition-cap")


def parse_config_file(path: str) -> dict:
    """Read ``key = value`` lines; '#' comments and blank lines ignored."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if not eq or not key or not val:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r} "
                                 f"(known: {', '.join(_CONFIG_KEYS)})")
            values[key] = val
    return values


def _coerce(key: str, value):
    if not isinstance(value, str):
        return value
    if key == "budget":
        return None if value.lower() == "none" else float(value)
    return int(value)


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, overridden by the config file, overridden by flags."""
    values: dict = {}
    if getattr(args, "config", None):
        values.update(parse_config_file(args.config))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key.replace("-", "_"), None)
        if flag is not None:
            values[key] = flag
    kwargs = {key.replace("-", "_"): _coerce(key, val)
              for key, val in values.items()}
    cfg = RunConfig(**kwargs)
    if cfg.threads < 1:
        raise ValueError("threads must be at least 1")
    if cfg.budget is not None and cfg.budget <= 0:
        raise ValueError("budget must be positive seconds")
    for name in ("canon_cap", "f2t_cap", "turan_cap", "partition_cap"):
        if getattr(cfg, name) < 3:
            raise ValueError(f"{name.replace('_', '-')} must be at least 3")
    return cfg


def config_obj(cfg: RunConfig) -> dict:
    """Config as embedded in reports: everything except the worker-count
    hint, which must not influence report bytes."""
    return {"seed": cfg.seed, "budget": cfg.budget,
            "canon-cap": cfg.canon_cap, "f2t-cap": cfg.f2t_cap,
            "turan-cap": cfg.turan_cap, "partition-cap": cfg.partition_cap}


def _log_config(cfg: RunConfig) -> None:
    budget = "none" if cfg.budget is None else f"{cfg.budget:g}"
    print(f"# config: seed={cfg.seed} budget={budget} "
          f"threads={cfg.threads} canon-cap={cfg.canon_cap} "
          f"f2t-cap={cfg.f2t_cap} turan-cap={cfg.turan_cap} "
          f"partition-cap={cfg.partition_cap}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Shared helpers.

def _canonical_hex(h: Hypergraph3, cap: int) -> str | None:
    if h.n > cap:
        return None
    try:
        return canonical_form(h).hex()
    except UnsupportedSizeError:
        return None


def _hypergraph_meta(h: Hypergraph3, cfg: RunConfig) -> dict:
    return {"n": h.n, "edges": h.m,
            "canonical_key": _canonical_hex(h, cfg.canon_cap)}


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_pattern(spec: str, t: int) -> Hypergraph3:
    if spec in PATTERN_TAGS:
        return pattern_by_tag(spec, t)
    if os.path.sep in spec or spec.endswith((".h3", ".json")) \
            or os.path.exists(spec):
        return load_hypergraph(spec)
    raise ValueError(f"pattern {spec!r} is neither a tag "
                     f"({', '.join(PATTERN_TAGS)}) nor a readable file")


def _parse_forbid(spec: str) -> tuple[Hypergraph3, ...]:
    """Comma-separated forbidden patterns.

    Tokens: ``f5t:<t>`` (expanding fan, alias ``fan``), ``f2t:<t>``
    (codegree book, alias ``book``), ``k4minus``, ``f5prime`` (split fan,
    alias ``splitfan``), and ``file:<path>`` for any .h3 or JSON
    hypergraph.
    """
    patterns = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        name, _, arg = token.partition(":")
        if name in ("f5t", "fan"):
            patterns.append(fan_pattern(int(arg or 0)))
        elif name in ("f2t", "book"):
            patterns.append(book_pattern(int(arg or 0)))
        elif name == "k4minus":
            patterns.append(k4_minus())
        elif name in ("f5prime", "splitfan"):
            patterns.append(split_fan())
        elif name == "file":
            patterns.append(load_hypergraph(arg))
        else:
            raise ValueError(f"unknown forbidden-pattern token {token!r}")
    if not patterns:
        raise ValueError("the forbid list is empty")
    return tuple(patterns)


def _parse_sizes(spec: str) -> tuple[int, int, int]:
    parts = [int(x) for x in spec.split(",")]
    if len(parts) != 3:
        raise ValueError("--sizes needs exactly three comma-separated sizes")
    return tuple(parts)


def _parse_pairs(spec: str) -> list[tuple[int, int]]:
    pairs = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        a, dash, b = token.partition("-")
        if not dash:
            raise ValueError(f"pair {token!r} should look like 2-5")
        pairs.append((int(a), int(b)))
    return pairs


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_construct(args, cfg: RunConfig) -> int:
    if args.family != "pattern" and args.n is None:
        raise ValueError(f"construct {args.family} needs --n")
    part = None
    if args.family == "tripartite":
        h, part = make_complete_tripartite(args.n)
        meta = {"parameters": {"n": args.n},
                "predicted": tripartite_count(args.n),
                "certification": "exact"}
    elif args.family == "pattern":
        if not args.tag:
            raise ValueError("construct pattern needs --tag")
        h = pattern_by_tag(args.tag, args.t)
        meta = {"parameters": {"tag": args.tag, "t": args.t},
                "predicted": h.m, "certification": "exact"}
    elif args.family == "extremal":
        res = make_extremal(args.n, args.t, cfg.budget)
        h, part = res.h, res.partition
        meta = {"parameters": {"n": args.n, "t": args.t},
                "predicted": {"lo": res.bound.lo, "hi": res.bound.hi},
                "certification":
                    "exact" if res.bound.is_exact else "interval",
                "inner_tiers": list(res.tiers)}
    elif args.family == "satellite":
        if not args.sizes:
            raise ValueError("construct satellite needs --sizes a,b,c")
        sizes = _parse_sizes(args.sizes)
        h = make_satellite(args.n, args.t, sizes)
        meta = {"parameters": {"n": args.n, "t": args.t,
                               "sizes": list(sizes)},
                "predicted": satellite_count(args.n, args.t, sizes),
                "certification": "exact"}
    elif args.family == "apex":
        res = make_apex_host(args.n, cfg.budget)
        h, part = res.h, res.partition
        meta = {"parameters": {"n": args.n},
                "predicted": res.count,
                "certification": "exact" if res.c4.exact else res.c4.tier,
                "c4_free_edges": res.c4.count}
    else:  # decorated
        if not args.variant:
            raise ValueError("construct decorated needs --variant")
        builders = {"inner-triple": tripartite_plus_inner,
                    "straddle": tripartite_plus_straddle,
                    "pendant": tripartite_plus_pendant}
        h = builders[args.variant](args.n)
        base = args.n - 1 if args.variant == "pendant" else args.n
        meta = {"parameters": {"n": args.n, "variant": args.variant},
                "predicted": tripartite_count(base) + 1,
                "certification": "exact"}
    meta = {"family": args.family, **meta, **_hypergraph_meta(h, cfg)}

    if args.out:
        save_hypergraph(h, args.out + ".h3")
        written = [args.out + ".h3"]
        if part is not None:
            save_partition(part, args.out + ".p3")
            written.append(args.out + ".p3")
        _write(args.out + ".json", dump_json(meta))
        written.append(args.out + ".json")
        _note("wrote " + " ".join(written))
    if args.json:
        sys.stdout.write(dump_json(meta))
    else:
        print(f"{args.family}: n={h.n} edges={h.m} "
              f"predicted={meta['predicted']} "
              f"certification={meta['certification']}")
    return 0


def cmd_check(args, cfg: RunConfig) -> int:
    host = load_hypergraph(args.host)
    pattern = _resolve_pattern(args.pattern, args.t)
    witness = contains_pattern(host, pattern, cfg.budget)
    if witness is TIMEOUT:
        print("timeout: no verdict inside the budget")
        return 3
    if witness is None:
        print("free: the host contains no copy of the pattern")
        return 0
    print("contains: vertex map (pattern -> host)")
    for v in sorted(witness):
        print(f"  {v} -> {witness[v]}")
    return 1


def cmd_codegree(args, cfg: RunConfig) -> int:
    if args.host is None:
        if args.value is None:
            raise ValueError("codegree needs a host file or --value M")
        if args.t is None:
            raise ValueError("--value needs --t, the codegree cap")
        bound = ex_f2t(args.value, args.t, cfg.budget)
        if bound.is_exact:
            print(f"max edges with codegrees <= {args.t} on {args.value} "
                  f"points: {bound.lo}")
        else:
            print(f"max edges with codegrees <= {args.t} on {args.value} "
                  f"points: in [{bound.lo}, {bound.hi}]")
            if args.value > cfg.f2t_cap:
                _note(f"# note: {args.value} points is above the "
                      f"exact-search cap {cfg.f2t_cap}")
        return 0
    h = load_hypergraph(args.host)
    worst = h.max_codegree()
    print(f"max codegree: {worst} (edges={h.m}, n={h.n})")
    if args.t is None:
        return 0
    ok, pair = max_codegree_check(h, args.t)
    if ok:
        print(f"within cap {args.t}")
        return 0
    print(f"cap {args.t} exceeded at pair {pair[0]}-{pair[1]} "
          f"(codegree {h.codegree(*pair)})")
    return 1


def _emit_design(outcome, target: MultiplicityTarget, t: int,
                 description: str, args, cfg: RunConfig) -> int:
    if outcome is TIMEOUT:
        print("timeout: undecided inside the budget")
        return 3
    if isinstance(outcome, Infeasible):
        print(f"infeasible: {outcome.reason}")
        return 1
    problems = verify_design(outcome, target, t)
    if problems:
        print("verification failed:")
        for p in problems[:10]:
            print("  " + p)
        return 1
    h = outcome.as_hypergraph()
    certificate = {"n": outcome.n, "t": t, "target": description,
                   "verified": True, "blocks": len(outcome.blocks),
                   "canonical_key": _canonical_hex(h, cfg.canon_cap)}
    if args.out:
        save_hypergraph(h, args.out + ".h3")
        _write(args.out + ".json", dump_json(certificate))
        _note(f"wrote {args.out}.h3 {args.out}.json")
    if args.json:
        sys.stdout.write(dump_json(certificate))
    else:
        print(f"built and verified: {len(outcome.blocks)} blocks on "
              f"{outcome.n} points ({description})")
    return 0


def cmd_design(args, cfg: RunConfig) -> int:
    outcome = decompose_complete(args.n, args.t, cfg.budget)
    description = f"every pair of 1..{args.n} exactly {args.t} times"
    return _emit_design(outcome, MultiplicityTarget.complete(args.n),
                        args.t, description, args, cfg)


def cmd_decompose(args, cfg: RunConfig) -> int:
    target = MultiplicityTarget.complete(args.n)
    description = f"every pair of 1..{args.n} exactly {args.t} times"
    if args.drop:
        dropped = _parse_pairs(args.drop)
        target = target.without(dropped)
        description += (", except "
                        + ",".join(f"{a}-{b}" for a, b in dropped))
    outcome = decompose_exact(target, args.t, cfg.budget)
    return _emit_design(outcome, target, args.t, description, args, cfg)


def cmd_turan(args, cfg: RunConfig) -> int:
    patterns = _parse_forbid(args.forbid)
    if args.n > cfg.turan_cap:
        raise ValueError(f"--n {args.n} is above the exact-search cap "
                         f"{cfg.turan_cap}; raise --turan-cap to insist")
    if args.export_wcnf:
        _write(args.export_wcnf, export_maxsat(args.n, patterns, cfg.budget))
        _note(f"wrote {args.export_wcnf}")
    out = turan_exact(args.n, patterns, cfg.budget)
    if out.optimal:
        print(f"max edges on {args.n} vertices avoiding [{args.forbid}]: "
              f"{out.best}")
    else:
        print(f"max edges on {args.n} vertices avoiding [{args.forbid}]: "
              f"in [{out.best}, {out.upper}] (budget hit)")
    if args.out:
        save_hypergraph(out.witness, args.out + ".h3")
        meta = {"forbid": args.forbid, "value_lo": out.best,
                "value_hi": out.upper, "optimal": out.optimal,
                "nodes": out.nodes,
                **_hypergraph_meta(out.witness, cfg)}
        _write(args.out + ".json", dump_json(meta))
        _note(f"wrote {args.out}.h3 {args.out}.json")
    return 0 if out.optimal else 3


def cmd_partition(args, cfg: RunConfig) -> int:
    h = load_hypergraph(args.host)
    part, value = best_partition(h, cfg.partition_cap)
    sizes = ",".join(str(s) for s in part.sizes)
    print(f"best 3-partition of {h.n} vertices: sizes {sizes}, "
          f"{value} of {h.m} edges crossing")
    if args.out:
        save_partition(part, args.out + ".p3")
        _note(f"wrote {args.out}.p3")
    return 0


def cmd_formulas(args, cfg: RunConfig) -> int:
    n, t = args.n, args.t
    host = s_ho(n, t, budget=cfg.budget)
    closed = closed_form_corollary(n, t) if n % 18 in (3, 9) else None
    reports = []
    if t >= 1 and n > t:
        reports.append(satellite_gap_check(n, t, budget=cfg.budget))
    reports.append(interval_check(n, t, budget=cfg.budget))
    if n <= 15:
        reports.append(balanced_optimality_scan(n, t, budget=cfg.budget))

    ok = all(r.passed for r in reports)
    if closed is not None:
        ok = ok and host.is_exact and host.lo == closed

    if args.json:
        payload = {"n": n, "t": t,
                   "host": {"lo": host.lo, "hi": host.hi},
                   "closed_form": closed, "passed": ok,
                   "reports": [formula_report_obj(r) for r in reports]}
        sys.stdout.write(dump_json(payload))
    else:
        shown = (str(host.lo) if host.is_exact
                 else f"[{host.lo}, {host.hi}]")
        print(f"host count at n={n}, t={t}: {shown}")
        if closed is not None:
            agree = "agrees" if host.is_exact and host.lo == closed \
                else "DISAGREES"
            print(f"closed form: {closed} ({agree})")
        for rep in reports:
            print(f"{rep.name}: {'pass' if rep.passed else 'FAIL'}")
    if args.csv:
        rows = [(n, t, r.value.lo, r.value.hi, r.name, r.passed)
                for r in reports]
        _write(args.csv, rows_to_csv(rows))
        _note(f"wrote {args.csv}")
    return 0 if ok else 1


def cmd_verify(args, cfg: RunConfig) -> int:
    report, rows = build_report(args.suite, seed=cfg.seed,
                                budget=cfg.budget, config=config_obj(cfg),
                                threads=cfg.threads)
    if args.json:
        sys.stdout.write(dump_json(report))
    else:
        for res in report["results"]:
            print(f"{res['suite']}/{res['check']}: {res['status']}")
        counts = report["counts"]
        print(f"suite {args.suite}: "
              f"{'PASS' if report['passed'] else 'FAIL'} "
              f"({counts['pass']} pass, {counts['fail']} fail, "
              f"{counts['budget']} budget, {counts['info']} info)")
    if args.out:
        _write(args.out + ".json", dump_json(report))
        _write(args.out + ".csv", rows_to_csv(rows))
        _note(f"wrote {args.out}.json {args.out}.csv")
    failure = first_failure(report)
    if failure is not None:
        witness_path = (args.out + ".witness.json" if args.out
                        else "verify-witness.json")
        _write(witness_path, dump_json(failure))
        _note(f"wrote {witness_path}")
    return report_exit_code(report)


# ---------------------------------------------------------------------------
# Parser assembly.

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="settings file with 'key = value' lines")
    common.add_argument("--seed", type=int,
                        help="seed for all randomized behavior (default 0)")
    common.add_argument("--budget", type=float, metavar="SECONDS",
                        help="wall-clock allowance; omit to run unbounded")
    common.add_argument("--threads", type=int,
                        help="worker-count hint (default 1)")
    common.add_argument("--canon-cap", type=int, metavar="N",
                        help="canonical keys only up to this many vertices")
    common.add_argument("--f2t-cap", type=int, metavar="M",
                        help="capped-codegree exact-search cap")
    common.add_argument("--turan-cap", type=int, metavar="N",
                        help="turan command host-size cap")
    common.add_argument("--partition-cap", type=int, metavar="N",
                        help="partition command host-size cap")

    parser = argparse.ArgumentParser(
        prog="turan3",
        description="Exact combinatorics for small 3-uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="build a named host or pattern")
    p.add_argument("family", choices=("tripartite", "extremal", "satellite",
                                      "apex", "pattern", "decorated"))
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--t", type=int, default=0, help="codegree/fan parameter")
    p.add_argument("--sizes", help="satellite part sizes a,b,c")
    p.add_argument("--tag", choices=PATTERN_TAGS, help="pattern tag")
    p.add_argument("--variant",
                   choices=("inner-triple", "straddle", "pendant"),
                   help="decorated-tripartite variant")
    p.add_argument("--out", metavar="PREFIX",
                   help="write PREFIX.h3 (+ .p3, .json)")
    p.add_argument("--json", action="store_true",
                   help="print the metadata sidecar to stdout")
    p.set_defaults(func=cmd_construct, n=None)

    p = sub.add_parser("check", parents=[common],
                       help="test a host for a forbidden pattern")
    p.add_argument("host", help=".h3 or JSON hypergraph file")
    p.add_argument("--pattern", required=True,
                   help="pattern tag or hypergraph file")
    p.add_argument("--t", type=int, default=0,
                   help="parameter for fan/book tags")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("codegree", parents=[common],
                       help="pair statistics or capped extremal values")
    p.add_argument("host", nargs="?", help=".h3 or JSON hypergraph file")
    p.add_argument("--t", type=int, help="codegree cap to test or query")
    p.add_argument("--value", type=int, metavar="M",
                   help="report the extremal capped count on M points")
    p.set_defaults(func=cmd_codegree)

    p = sub.add_parser("design", parents=[common],
                       help="t-fold triple system on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--out", metavar="PREFIX",
                   help="write PREFIX.h3 and PREFIX.json certificate")
    p.add_argument("--json", action="store_true",
                   help="print the certificate to stdout")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("decompose", parents=[common],
                       help="exact cover of a pair target by triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--drop", metavar="PAIRS",
                   help="pairs to leave uncovered, e.g. 1-2,3-4")
    p.add_argument("--out", metavar="PREFIX")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("turan", parents=[common],
                       help="exact extremal search under forbidden patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True,
                   help="comma-separated: f5t:<t>, f2t:<t>, k4minus, "
                        "f5prime, file:<path>")
    p.add_argument("--export-wcnf", metavar="FILE",
                   help="also write the weighted MaxSAT encoding")
    p.add_argument("--out", metavar="PREFIX",
                   help="write the witness host and its metadata")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("partition", parents=[common],
                       help="3-partition maximising crossing edges")
    p.add_argument("host", help=".h3 or JSON hypergraph file")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.p3")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("formulas", parents=[common],
                       help="closed forms and inequality reports at (n, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--json", action="store_true",
                   help="print the full reports as JSON")
    p.add_argument("--csv", metavar="FILE",
                   help="write one scan row per report")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("verify", parents=[common],
                       help="run the deterministic verification suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + SUITE_NAMES)
    p.add_argument("--json", action="store_true",
                   help="print the report JSON to stdout")
    p.add_argument("--out", metavar="PREFIX",
                   help="write PREFIX.json, PREFIX.csv, and on failure "
                        "PREFIX.witness.json")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _log_config(cfg)
    try:
        return args.func(args, cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
