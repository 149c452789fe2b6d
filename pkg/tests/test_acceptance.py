"""Acceptance suite: nine criteria, one PASS/FAIL line each.

Each ``criterion_N`` returns ``(ok, report)``.  Reports hold only
seed-determined content, so criterion 9 can rerun 1-8 and compare bytes.
Wall-clock budgets are checked separately and shown in the summary line.

Run directly with ``python3 tests/test_acceptance.py`` or via pytest, where
the lines appear in the terminal summary.
"""

import hashlib
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from test_matching import brute_max_matching  # noqa: E402

from cyclefactors import harness  # noqa: E402
from cyclefactors.certify import verify_factor, verify_vdp  # noqa: E402
from cyclefactors.generators import all_digraphs, all_graphs, random_graph, random_regular, rng_for  # noqa: E402
from cyclefactors.graph import ParityConstraint  # noqa: E402
from cyclefactors.matching import max_general_matching  # noqa: E402
from cyclefactors.named import (  # noqa: E402
    k4,
    k5,
    petersen,
    terminal_cover_example,
    terminal_cover_solution,
    two_paths_example,
    two_paths_solution,
)
from cyclefactors.oracles import three_edge_coloring  # noqa: E402
from cyclefactors.reductions import (  # noqa: E402
    lift_directed_to_undirected,
    map_exists_odd_factor_to_paths,
    map_paths_to_exists_odd_factor,
    reduce_2vdp_to_exists_odd,
    reduce_smcf_to_mcf,
)
from cyclefactors.reductions.mixed import map_mcf_factor_to_smcf_factor, map_smcf_factor_to_mcf_factor  # noqa: E402
from cyclefactors.solvers import directed_cycle_factor, signature_set, solve_parity, undirected_two_factor  # noqa: E402

C = ParityConstraint
SEED = 2024

EQUIV_SIZES = {
    "ham-allodd": 5, "col3-alleven": 6, "vdp-existsodd": 5, "evencyc-existseven": 4,
    "lift-undirected": 4, "3dm-prcf": 2, "prcf-smcf": 4, "smcf-mcf": 5, "mcf-existseven": 5,
}
EQUIV_COUNT = 200

BUDGETS = {1: 30, 2: 120, 3: 600, 4: 120, 5: 600, 6: 600, 7: 600, 8: 600}

RESULTS: dict[int, tuple[bool, str, float]] = {}


def _poly_vs_exact(graphs, poly):
    checked = disagree = unverified = yes = 0
    for g in graphs:
        fast = poly(g)
        exact = solve_parity(g).yes
        checked += 1
        disagree += fast.yes != exact
        if fast.yes:
            yes += 1
            unverified += bool(verify_factor(g, fast.factor))
    ok = checked > 0 and disagree == 0 and unverified == 0
    return ok, f"graphs={checked} yes={yes} disagreements={disagree} unverified={unverified}"


def criterion_1():
    return _poly_vs_exact(all_digraphs(4), directed_cycle_factor)


def criterion_2():
    graphs = (g for n in range(7) for g in all_graphs(n))
    return _poly_vs_exact(graphs, undirected_two_factor)


def criterion_3():
    per_size = 2000
    lines, bad = [], 0
    for n in range(1, 11):
        wrong = 0
        for i in range(per_size):
            rnd = rng_for(SEED, "matching", n, i)
            g = random_graph(n, rnd.choice((0.1, 0.2, 0.35, 0.5, 0.7)), (SEED, "m", n, i))
            wrong += max_general_matching(g).size != brute_max_matching(g)
        bad += wrong
        lines.append(f"n={n} samples={per_size} discrepancies={wrong}")
    return bad == 0, "\n".join(lines)


def criterion_4():
    lines, bad = [], 0
    for n in range(5):
        diff = count = 0
        for d in all_digraphs(n):
            count += 1
            diff += signature_set(d) != signature_set(lift_directed_to_undirected(d).graph)
        bad += diff
        lines.append(f"n={n} digraphs={count} differing={diff}")
    return bad == 0, "\n".join(lines)


_EQUIV_CACHE: dict[str, harness.EquivReport] = {}


def _equiv_reports(fresh=False):
    if fresh or not _EQUIV_CACHE:
        _EQUIV_CACHE.clear()
        for rid, size in EQUIV_SIZES.items():
            _EQUIV_CACHE[rid] = harness.equivcheck(rid, EQUIV_COUNT, size, seed=SEED, log=False)
    return _EQUIV_CACHE


def criterion_5(fresh=False):
    reports = _equiv_reports(fresh)
    ok = all(r.mismatches == 0 and r.skipped == 0 for r in reports.values())
    summary = "\n".join(r.text().splitlines()[-1] for r in reports.values())
    digest = hashlib.sha256("".join(r.text() for r in reports.values()).encode()).hexdigest()
    total = sum(len(r.results) for r in reports.values())
    bad = sum(r.mismatches for r in reports.values())
    return ok, summary + f"\nreport-sha256={digest}\ninstances={total} mismatches={bad}"


def criterion_6(fresh=False):
    reports = _equiv_reports(fresh)
    lines, ok = [], True
    for rid, rep in reports.items():
        yes = [r for r in rep.results if r.source_yes or r.target_yes]
        passed = sum(r.roundtrip == "ok" for r in yes)
        ok &= bool(yes) and passed == len(yes)
        lines.append(f"{rid} yes-instances={len(yes)} roundtrip-ok={passed}")
    return ok, "\n".join(lines)


def _named_checks():
    yield "K4 all-even yes", solve_parity(k4(), C.ALL_EVEN).yes
    yield "K4 exists-odd no", not solve_parity(k4(), C.EXISTS_ODD).yes
    yield "K5 all-odd yes", solve_parity(k5(), C.ALL_ODD).yes
    yield "K5 exists-even no", not solve_parity(k5(), C.EXISTS_EVEN).yes
    yield "Petersen 3-edge-colouring no", three_edge_coloring(petersen()) is None

    vdp = two_paths_example()
    out = reduce_2vdp_to_exists_odd(vdp)
    partial = map_paths_to_exists_odd_factor(out, two_paths_solution())
    yield "two-path solution maps to a verified target factor", verify_factor(out.graph, partial, C.EXISTS_ODD) == []
    res = solve_parity(out.graph, C.EXISTS_ODD)
    paths = map_exists_odd_factor_to_paths(out, res.factor) if res.yes else []
    yield "two-path target solved exactly and mapped back", res.yes and verify_vdp(vdp.h, vdp.terminals, paths) == []

    smcf = terminal_cover_example()
    out = reduce_smcf_to_mcf(smcf)
    partial = map_smcf_factor_to_mcf_factor(out, terminal_cover_solution())
    yield "terminal-cover solution maps to a verified target factor", verify_factor(out.graph, partial) == []
    res = solve_parity(out.graph)
    back = map_mcf_factor_to_smcf_factor(out, res.factor) if res.yes else None
    yield "terminal-cover target solved exactly and mapped back", res.yes and verify_factor(
        smcf.h, back, terminals=smcf.terminals) == []


def criterion_7():
    checks = list(_named_checks())
    return all(ok for _, ok in checks), "\n".join(f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in checks)


def criterion_8():
    total = found = unverified = 0
    for i in range(200):
        n = rng_for(SEED, "regular", i).randint(5, 16)
        g = random_regular(n, 4, (SEED, "regular", i))
        res = undirected_two_factor(g)
        total += 1
        found += res.yes
        unverified += res.yes and bool(verify_factor(g, res.factor))
    return found == total and unverified == 0, f"graphs={total} with-2-factor={found} unverified={unverified}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}

TITLES = {
    1: "poly vs oracle, all digraphs on 4 vertices",
    2: "poly vs oracle, all graphs on <= 6 vertices",
    3: "blossom vs brute force, 2000 graphs per size <= 10",
    4: "lift preserves signature sets, digraphs <= 4 vertices",
    5: "reduction equivalence, 200 instances per reduction",
    6: "round-trip mapping on every Yes instance",
    7: "named instances and worked reduction examples",
    8: "200 random 4-regular graphs have 2-factors",
    9: "criteria 1-8 reproduce byte for byte",
}


def _record(k, fn):
    if k not in RESULTS:
        t0 = time.perf_counter()
        ok, report = fn()
        RESULTS[k] = (ok, report, time.perf_counter() - t0)
    return RESULTS[k]


def summary_line(k):
    ok, report, elapsed = RESULTS[k]
    budget = BUDGETS.get(k)
    timing = f"{elapsed:.1f}s" + (f" (budget {budget}s)" if budget else "")
    status = "PASS" if ok and (budget is None or elapsed < budget) else "FAIL"
    detail = report.splitlines()[-1] if report else ""
    return f"criterion {k}: {status}  {TITLES[k]}  [{timing}]  {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, report, elapsed = _record(k, CRITERIA[k])
    print(summary_line(k))
    print(report)
    assert ok, report
    assert elapsed < BUDGETS[k], f"took {elapsed:.1f}s"


def _determinism():
    for k, fn in CRITERIA.items():
        _record(k, fn)
    rerun = {}
    for k, fn in CRITERIA.items():
        rerun[k] = fn(fresh=True)[1] if k == 5 else fn()[1]
    differing = [k for k in CRITERIA if rerun[k].encode() != RESULTS[k][1].encode()]
    return not differing, f"criteria-compared={len(CRITERIA)} differing={differing or 'none'}"


def test_criterion_9_determinism():
    ok, report, _ = _record(9, _determinism)
    print(summary_line(9))
    assert ok, report


def acceptance_lines():
    return [summary_line(k) for k in sorted(RESULTS)]


if __name__ == "__main__":
    for k, fn in CRITERIA.items():
        _record(k, fn)
        print(summary_line(k), flush=True)
    _record(9, _determinism)
    print(summary_line(9))
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
