"""Acceptance criteria 1-8; each test prints one PASS/FAIL line (also echoed in the pytest summary)."""
import time

import pytest

from spinnet_jones import verify

pytestmark = pytest.mark.acceptance


def _record(log, number, title, passed, detail):
    line = f"{'PASS' if passed else 'FAIL'} criterion {number} ({title}): {detail}"
    print(line)
    log.append(line)


def test_criterion_1_trefoil_golden(acceptance_log):
    t0 = time.perf_counter()
    res = verify.trefoil_residuals(range(5, 17))
    dt = time.perf_counter() - t0
    worst = max(res.values())
    ok = worst <= 1e-9 and dt < 1.0
    _record(acceptance_log, 1, "trefoil golden value", ok,
            f"max |delta| = {worst:.2e} over k = 5..16 (tol 1e-9), {dt:.3f}s (limit 1s)")
    assert ok


def test_criterion_2_oracle_equivalence(acceptance_log):
    t0 = time.perf_counter()
    worst, count = verify.oracle_residual(((4, 6), (6, 4)), (5, 7, 8))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-8 and dt < 300
    _record(acceptance_log, 2, "oracle equivalence", ok,
            f"max |engine - oracle| = {worst:.2e} over {count} evaluations (tol 1e-8), {dt:.1f}s (limit 300s)")
    assert ok


def test_criterion_3_representation(acceptance_log):
    r = verify.representation_residuals(sizes=(4, 6), ks=(5, 6, 7), spins=(1, 2))
    ok = r["yang_baxter"] <= 1e-10 and r["far_commutativity"] <= 1e-10 and r["unitarity"] <= 1e-12
    _record(acceptance_log, 3, "Yang-Baxter, far commutativity, unitarity", ok,
            f"YB {r['yang_baxter']:.2e}, far {r['far_commutativity']:.2e} (tol 1e-10), "
            f"unitarity {r['unitarity']:.2e} (tol 1e-12) on {r['configs']} decorated spaces")
    assert ok


def test_criterion_4_q_algebra(acceptance_log):
    six_j, keys = verify.six_j_oracle_residual((5, 6, 8), 3)
    be = verify.biedenharn_elliott_residual(samples=200, k_max=10)
    orth = verify.orthogonality_residual(samples=200, k_max=10)
    ok = max(six_j, be, orth) <= 1e-10
    _record(acceptance_log, 4, "q-algebra identities", ok,
            f"6j vs CG {six_j:.2e} on {keys} keys, Biedenharn-Elliott {be:.2e}, orthogonality {orth:.2e} (tol 1e-10)")
    assert ok


def test_criterion_5_eigenbasis(acceptance_log):
    r = verify.representation_residuals(sizes=(4, 6), ks=(5, 6, 7), spins=(1, 2))
    ok = r["diagonal"] <= 1e-14
    _record(acceptance_log, 5, "parity generators diagonal", ok,
            f"max off-diagonal {r['diagonal']:.2e} (tol 1e-14), 2N in 4,6")
    assert ok


def test_criterion_6_complexity_ledger(acceptance_log):
    worst, violations = verify.ledger_ratios(words=500, max_length=20)
    ok = violations == 0
    _record(acceptance_log, 6, "complexity ledger", ok,
            f"{violations} violations of moves <= c(N) kappa in 500 words, max ratio {worst:.3f}")
    assert ok


def test_criterion_7_graph_anchors(acceptance_log):
    from spinnet_jones.spinnet_graph import build_graph, growth_check

    t0 = time.perf_counter()
    vertices = build_graph(3, include_twists=True).vertex_count
    table = growth_check(8)
    dt = time.perf_counter() - t0
    diams = [r.diameter for r in table.rows]
    ok = vertices == 120 and table.monotone and table.spread < 2 and dt < 120
    _record(acceptance_log, 7, "graph anchors", ok,
            f"{vertices} vertices at n=3, diameters {diams}, c = {table.constant:.3f}, "
            f"spread x{table.spread:.3f} (limit x2), {dt:.1f}s")
    assert ok


def test_criterion_8_automaton_axioms(acceptance_log):
    r = verify.automaton_residuals(words=200)
    ok = (r["empty"] <= 1e-12 and r["free_reduce"] <= 1e-10 and r["braid_relation"] <= 1e-10
          and r["max_abs"] <= 1 + 1e-12)
    _record(acceptance_log, 8, "automaton axioms", ok,
            f"empty {r['empty']:.1e}, free reduction {r['free_reduce']:.2e}, braid relation "
            f"{r['braid_relation']:.2e} (tol 1e-10), max |amplitude| {r['max_abs']:.12f}")
    assert ok
