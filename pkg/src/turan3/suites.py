"""Verification suites behind the ``verify`` command.

Each suite is a fixed sequence of named checks over the formulas, the
design constructions, the exact searches, and the finite gadget claims.
A check lands in one of four states:

  pass    the assertion held everywhere it was tested
  fail    a concrete counterexample turned up (kept in the details)
  budget  the wall-clock allowance ran out before a verdict
  info    data recorded for the reader, never part of the verdict

Reports are plain dicts meant for :func:`turan3.fileio.dump_json`, so two
runs with the same seed and budget serialize byte-identically: nothing in
a report depends on wall-clock readings, dict iteration order, or worker
count.  The worker-count hint is accepted and execution stays sequential,
which makes scheduling independence trivial rather than subtle.  Scan
style checks additionally emit rows for one CSV table with the fixed
column layout n, t, value_lo, value_hi, check, pass.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from fractions import Fraction

from .constructions import fan_pattern, k4_minus, make_complete_tripartite
from .constructions import tripartite_count
from .core import TIMEOUT, blow_up
from .designs import (Design, MultiplicityTarget, appendix_guarantee,
                      appendix_lower_bound, block_gadget,
                      block_gadget_size_bound, build_steiner_triple_system,
                      decompose_complete, dehon_admissible,
                      max_triple_packing, packing_leave, pair_cover_blocks,
                      pair_cover_size_bound, verify_design)
from .detection import (contains_fan, find_embedding, max_codegree_check,
                        verify_embedding)
from .formulas import (balanced_optimality_scan, closed_form_corollary,
                       interval_check, lemma31_property_suite, s_ho,
                       satellite_gap_check)
from .gadgets import REFUTED, VERIFIED, verify_gadget_claims
from .search import (best_partition, export_maxsat, random_free_sample,
                     turan_exact)

PASS = "pass"
FAIL = "fail"
BUDGET = "budget"
INFO = "info"

CSV_HEADER = "n,t,value_lo,value_hi,check,pass"

# Node allowance for the suite's exact searches; far above what any cell
# needs, so it only matters if a regression blows the search up.
_SEARCH_NODES = 500_000


class _Deadline:
    """One wall-clock allowance shared by all checks of a run."""

    def __init__(self, seconds: float | None):
        self.at = None if seconds is None else time.monotonic() + seconds

    def remaining(self) -> float | None:
        if self.at is None:
            return None
        return max(0.05, self.at - time.monotonic())

    def spent(self) -> bool:
        return self.at is not None and time.monotonic() >= self.at


def _result(check: str, status: str, details: dict) -> dict:
    return {"check": check, "status": status, "details": details}


def _verdict(bad, clock: _Deadline) -> str:
    """fail beats budget only when the budget survived the whole check."""
    if bad:
        return BUDGET if clock.spent() else FAIL
    return PASS


def formula_report_obj(rep) -> dict:
    """JSON-ready view of a FormulaReport: name, inputs, value, checks."""
    return {
        "name": rep.name,
        "inputs": dict(rep.inputs),
        "value": {"lo": rep.value.lo, "hi": rep.value.hi},
        "passed": rep.passed,
        "checks": [{"assertion": c.assertion, "passed": c.passed,
                    "informational": c.informational, "witness": c.witness}
                   for c in rep.checks],
    }


def _failed_assertions(rep) -> list[str]:
    return [c.assertion for c in rep.checks
            if not c.passed and not c.informational]


# ---------------------------------------------------------------------------
# Formulas.

def _formulas_suite(seed: int, clock: _Deadline):
    results, rows = [], []

    bad = []
    for n in (21, 39, 57):
        for t in (1, 2):
            v = s_ho(n, t, budget=clock.remaining())
            cf = closed_form_corollary(n, t)
            ok = v.is_exact and v.lo == cf
            rows.append((n, t, v.lo, v.hi, "closed-form", ok))
            if not ok:
                bad.append({"n": n, "t": t, "host": [v.lo, v.hi],
                            "closed_form": cf})
    results.append(_result("closed-form-grid", _verdict(bad, clock),
                           {"cells": 6, "mismatches": bad}))

    bad = []
    for t in (0, 1):
        for n in range(9, 16):
            rep = balanced_optimality_scan(n, t, budget=clock.remaining())
            rows.append((n, t, rep.value.lo, rep.value.hi,
                         "balanced-scan", rep.passed))
            if not rep.passed:
                bad.append({"n": n, "t": t,
                            "failed": _failed_assertions(rep)})
    results.append(_result("balanced-profile-scan", _verdict(bad, clock),
                           {"cells": 14, "failures": bad}))

    bad = []
    for n in (24, 33, 45, 57):
        for t in (1, 2, 3):
            rep = interval_check(n, t, budget=clock.remaining())
            rows.append((n, t, rep.value.lo, rep.value.hi,
                         "interval", rep.passed))
            if not rep.passed:
                bad.append({"n": n, "t": t,
                            "failed": _failed_assertions(rep)})
    results.append(_result("interval-brackets", _verdict(bad, clock),
                           {"cells": 12, "failures": bad}))

    bad = []
    for t in (1, 2, 3, 4):
        for n in (200, 300, 400):
            rep = satellite_gap_check(n, t, budget=clock.remaining())
            rows.append((n, t, rep.value.lo, rep.value.hi,
                         "satellite-gap", rep.passed))
            if not rep.passed:
                bad.append({"n": n, "t": t,
                            "failed": _failed_assertions(rep)})
    results.append(_result("satellite-gap-samples", _verdict(bad, clock),
                           {"cells": 12, "failures": bad}))

    bad = []
    sampled = {}
    for t in (0, 1, 2):
        rep = lemma31_property_suite(t, trials=40, seed=seed,
                                     budget=clock.remaining())
        sampled[str(t)] = rep.value.lo
        if not rep.passed:
            bad.append({"t": t, "failed": _failed_assertions(rep)})
    results.append(_result("pair-degree-trials", _verdict(bad, clock),
                           {"trials_per_t": 40, "seed": seed,
                            "samples_used": sampled, "failures": bad}))

    return results, rows


# ---------------------------------------------------------------------------
# Designs.

def _pair_coverage(blocks) -> Counter:
    cov: Counter = Counter()
    for a, b, c in blocks:
        cov[(a, b)] += 1
        cov[(a, c)] += 1
        cov[(b, c)] += 1
    return cov


def _designs_suite(seed: int, clock: _Deadline):
    del seed
    results, rows = [], []

    bad = []
    for n in (7, 9, 13, 15, 19, 21, 25, 27):
        d = build_steiner_triple_system(n)
        problems = verify_design(d, MultiplicityTarget.complete(n), 1)
        ok = not problems
        rows.append((n, 1, len(d.blocks), len(d.blocks), "steiner", ok))
        if not ok:
            bad.append({"n": n, "problems": problems[:5]})
    results.append(_result("steiner-direct", FAIL if bad else PASS,
                           {"orders": 8, "failures": bad}))

    bad = []
    cells = 0
    for n in range(3, 17):
        for t in range(1, 5):
            if not dehon_admissible(n, t):
                continue
            cells += 1
            d = decompose_complete(n, t, budget=clock.remaining())
            ok = isinstance(d, Design) and not verify_design(
                d, MultiplicityTarget.complete(n), t)
            size = len(d.blocks) if isinstance(d, Design) else 0
            rows.append((n, t, size, size, "decompose", ok))
            if not ok:
                bad.append({"n": n, "t": t,
                            "outcome": type(d).__name__})
    results.append(_result("admissible-decompositions",
                           _verdict(bad, clock),
                           {"cells": cells, "failures": bad}))

    bad = []
    cells = 0
    for t in (1, 2):
        for m in range(t + 3, 15):
            cells += 1
            leave = packing_leave(m, t)
            d = max_triple_packing(m, t, budget=clock.remaining())
            expected = (t * math.comb(m, 2) - len(leave)) // 3
            ok = isinstance(d, Design) and len(d.blocks) == expected
            if ok:
                cov = _pair_coverage(d.blocks)
                slack = sum(t - cov[(a, b)]
                            for a in range(1, m + 1)
                            for b in range(a + 1, m + 1))
                ok = max(cov.values()) <= t and slack == len(leave)
            size = len(d.blocks) if isinstance(d, Design) else 0
            rows.append((m, t, size, expected, "packing", ok))
            if not ok:
                bad.append({"m": m, "t": t, "expected": expected,
                            "got": size})
    results.append(_result("leave-tight-packings", _verdict(bad, clock),
                           {"cells": cells, "failures": bad}))

    bad = []
    cases = Counter()
    for n in (8, 11, 14, 17, 20, 23):
        for t in range(1, 6):
            r = appendix_lower_bound(n, t, budget=clock.remaining())
            cases[f"{r.case}/{r.variant}"] += 1
            cap_ok, worst = max_codegree_check(r.h, t)
            ok = cap_ok and Fraction(r.achieved) >= appendix_guarantee(n, t)
            rows.append((n, t, r.achieved, r.achieved, "appendix", ok))
            if not ok:
                bad.append({"n": n, "t": t, "count": r.achieved,
                            "guarantee": str(appendix_guarantee(n, t)),
                            "codegree_over": worst})
    results.append(_result("appendix-case-formulas", _verdict(bad, clock),
                           {"cells": 30,
                            "variants": dict(sorted(cases.items())),
                            "failures": bad}))

    bad = []
    for n in range(8, 21, 2):
        d = pair_cover_blocks(n)
        cov = _pair_coverage(d.blocks)
        missing = math.comb(n, 2) - len(cov)
        bound = pair_cover_size_bound(n)
        ok = missing == 0 and Fraction(len(d.blocks)) <= bound
        rows.append((n, 1, len(d.blocks), str(bound), "pair-cover", ok))
        if not ok:
            bad.append({"n": n, "blocks": len(d.blocks),
                        "bound": str(bound), "uncovered_pairs": missing})
    results.append(_result("pair-cover-bound", FAIL if bad else PASS,
                           {"orders": 7, "failures": bad}))

    bad = []
    for t in (1, 3, 5):
        g = block_gadget(t)
        floor = block_gadget_size_bound(t)
        cap_ok, worst = max_codegree_check(g, t)
        ok = cap_ok and Fraction(g.m) >= floor
        rows.append((t + 3, t, g.m, g.m, "block-gadget", ok))
        if not ok:
            bad.append({"t": t, "edges": g.m, "floor": str(floor),
                        "codegree_over": worst})
    results.append(_result("block-gadget-sizes", FAIL if bad else PASS,
                           {"t_values": [1, 3, 5], "failures": bad}))

    return results, rows


# ---------------------------------------------------------------------------
# Search.

def _search_suite(seed: int, clock: _Deadline):
    results, rows = [], []

    bad = []
    for n in (4, 5, 6, 7):
        out = turan_exact(n, (k4_minus(), fan_pattern(0)),
                          budget=clock.remaining(),
                          node_cap=_SEARCH_NODES)
        ok = out.optimal and out.best == tripartite_count(n)
        rows.append((n, 0, out.best, out.upper, "turan-both", ok))
        if not ok:
            bad.append({"n": n, "best": out.best, "upper": out.upper,
                        "expected": tripartite_count(n),
                        "optimal": out.optimal})
    results.append(_result("turan-small-exact", _verdict(bad, clock),
                           {"n_values": [4, 5, 6, 7], "failures": bad}))

    text = export_maxsat(5, (fan_pattern(0), k4_minus()),
                         budget=clock.remaining())
    lines = text.strip().splitlines()
    head = lines[0].split()
    nvars, nclauses, top = int(head[2]), int(head[3]), int(head[4])
    soft = sum(1 for line in lines[1:] if line.startswith("1 "))
    hard = sum(1 for line in lines[1:] if line.startswith(f"{top} "))
    again = export_maxsat(5, (fan_pattern(0), k4_minus()),
                          budget=clock.remaining())
    ok = (nvars == math.comb(5, 3) and soft == nvars
          and len(lines) - 1 == nclauses == soft + hard
          and top == nvars + 1 and text == again)
    results.append(_result("wcnf-shape", _verdict(not ok, clock),
                           {"n": 5, "vars": nvars, "clauses": nclauses,
                            "hard": hard, "stable": text == again}))

    bad = []
    for n in (9, 11, 12):
        h, _ = make_complete_tripartite(n)
        _, value = best_partition(h)
        ok = value == h.m
        rows.append((n, 0, value, h.m, "partition", ok))
        if not ok:
            bad.append({"n": n, "crossing": value, "edges": h.m})
    results.append(_result("partition-recovery", FAIL if bad else PASS,
                           {"n_values": [9, 11, 12], "failures": bad}))

    bad = []
    for t in (0, 1):
        for k in range(5):
            h = random_free_sample(12, t, 0.5, seed + k)
            witness = contains_fan(h, t)
            ok = witness is None
            rows.append((12, t, h.m, h.m, "free-sample", ok))
            if not ok:
                bad.append({"t": t, "seed": seed + k,
                            "witness": witness if witness is not TIMEOUT
                            else "timeout"})
    results.append(_result("seeded-free-samples", FAIL if bad else PASS,
                           {"n": 12, "samples": 10, "seed": seed,
                            "failures": bad}))

    bad = []
    for t in (0, 1, 2, 3):
        host = blow_up(fan_pattern(0), t + 1)
        pat = fan_pattern(t)
        emb = find_embedding(host, pat, clock.remaining())
        ok = (emb is not None and emb is not TIMEOUT
              and verify_embedding(host, pat, emb))
        rows.append((host.n, t, 1 if ok else 0, 1, "fan-blowup", ok))
        if not ok:
            bad.append({"t": t, "clones": t + 1,
                        "embedding_found": emb is not None})
    results.append(_result("fan-blowup-embeddings", _verdict(bad, clock),
                           {"t_values": [0, 1, 2, 3], "failures": bad}))

    return results, rows


# ---------------------------------------------------------------------------
# Gadgets.

def _gadgets_suite(seed: int, clock: _Deadline):
    del seed
    results, rows = [], []
    for rec in verify_gadget_claims(budget=clock.remaining()):
        if rec.verdict == VERIFIED:
            status = PASS
        elif rec.verdict == REFUTED:
            status = FAIL
        elif rec.claim_id == 8:
            # Finite data about an undecided comparison, by design.
            status = INFO
        else:
            status = BUDGET
        results.append(_result(f"claim-{rec.claim_id}", status,
                               {"statement": rec.statement,
                                "parameters": rec.parameters,
                                "verdict": rec.verdict,
                                "witness": rec.witness}))
        if rec.claim_id == 6:
            for n, apex, tripartite, gap in rec.witness.get("table", ()):
                rows.append((n, 0, apex, tripartite, "apex-surplus",
                             gap >= 0))
    return results, rows


# ---------------------------------------------------------------------------
# Orchestration.

_SUITES = {
    "formulas": _formulas_suite,
    "designs": _designs_suite,
    "search": _search_suite,
    "gadgets": _gadgets_suite,
}

SUITE_NAMES = tuple(_SUITES)


def resolve_suites(which: str) -> tuple[str, ...]:
    if which == "all":
        return SUITE_NAMES
    if which in _SUITES:
        return (which,)
    raise ValueError(f"unknown suite {which!r}; choose from "
                     f"{', '.join(('all',) + SUITE_NAMES)}")


def build_report(which: str = "all", seed: int = 0,
                 budget: float | None = None, config: dict | None = None,
                 threads: int = 1):
    """Run the requested suites and assemble (report, csv_rows).

    ``config`` is embedded verbatim so a report names the settings that
    produced it; the caller leaves the worker count out of it.  ``threads``
    is the worker-count hint: checks run sequentially whatever its value,
    so reports cannot depend on scheduling.
    """
    if threads < 1:
        raise ValueError("worker-count hint must be at least 1")
    names = resolve_suites(which)
    clock = _Deadline(budget)
    results, rows = [], []
    for name in names:
        suite_results, suite_rows = _SUITES[name](seed, clock)
        for res in suite_results:
            res["suite"] = name
            results.append(res)
        rows.extend(suite_rows)
    return _assemble(which, seed, config, results), rows


def _assemble(which, seed, config, results):
    from . import __version__

    counts = {st: 0 for st in (PASS, FAIL, BUDGET, INFO)}
    for res in results:
        counts[res["status"]] += 1
    return {
        "artifact": "verify-report",
        "version": __version__,
        "suite": which,
        "seed": seed,
        "config": dict(config or {}),
        "counts": counts,
        "passed": counts[FAIL] == 0 and counts[BUDGET] == 0,
        "results": results,
    }


def report_exit_code(report: dict) -> int:
    """0 all good, 1 a check failed, 3 the budget cut a required check."""
    if report["counts"][FAIL]:
        return 1
    if report["counts"][BUDGET]:
        return 3
    return 0


def first_failure(report: dict) -> dict | None:
    for res in report["results"]:
        if res["status"] == FAIL:
            return res
    return None


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for n, t, lo, hi, check, ok in rows:
        lines.append(f"{n},{t},{lo},{hi},{check},{1 if ok else 0}")
    return "\n".join(lines) + "\n"
