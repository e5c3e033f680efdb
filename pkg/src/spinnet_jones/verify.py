"""Verification suites shared by ``spinnet-jones verify`` and the acceptance tests.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.  Tolerances are the ones fixed for the acceptance run.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .automaton import (
    bound_constant,
    build_automaton,
    calibrated_jones,
    complexity_ledger,
    run_word,
)
from .braid import BraidWord, PlatSpec, build_diagram, free_reduce, random_word
from .fusion_space import (
    change_matrix,
    enumerate_states,
    even_tree,
    generator_matrix,
    odd_tree,
    word_matrix,
)
from .oracle import MAX_CROSSINGS, bracket_state_sum, eval_at_root, jones_from_bracket
from .qtensor import QContext, admissible, f_matrix, fusion_channels, q_cg, q_dim, q_six_j, racah_w

TOL_IDENTITY = 1e-10
TOL_UNITARY = 1e-12
TOL_DIAGONAL = 1e-14
TOL_GOLDEN = 1e-9
TOL_ORACLE = 1e-8


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: float
    limit: float
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.value:.3e} <= {self.limit:.1e}{extra} [{self.seconds:.2f}s]"


def _timed(name: str, limit: float, fn: Callable[[], tuple[float, str]], cmp=lambda v, lim: v <= lim) -> Check:
    t0 = time.perf_counter()
    value, detail = fn()
    return Check(name, bool(cmp(value, limit)), float(value), limit, detail, time.perf_counter() - t0)


# --- q-algebra ------------------------------------------------------------------------


def recoupling_from_cg(j1: int, j2: int, j3: int, j: int, j12: int, j23: int, ctx: QContext) -> complex:
    """<(j1 j2)j12 j3; j m | j1 (j2 j3)j23; j m> by contracting four q-CG tensors at m = j."""
    m = j
    total = 0j
    for m1 in range(-j1, j1 + 1, 2):
        for m2 in range(-j2, j2 + 1, 2):
            m3 = m - m1 - m2
            if abs(m3) > j3 or abs(m1 + m2) > j12 or abs(m2 + m3) > j23:
                continue
            total += (
                q_cg(j1, m1, j2, m2, j12, m1 + m2, ctx)
                * q_cg(j12, m1 + m2, j3, m3, j, m, ctx)
                * q_cg(j2, m2, j3, m3, j23, m2 + m3, ctx)
                * q_cg(j1, m1, j23, m2 + m3, j, m, ctx)
            )
    return total


def six_j_from_cg(a: int, b: int, e: int, c: int, d: int, f: int, ctx: QContext) -> float:
    """{a b e; c d f}_q through the q-CG contraction; zero when any triad is inadmissible."""
    triads = ((a, b, e), (a, d, f), (c, b, f), (c, d, e))
    if not all(admissible(*t, ctx) for t in triads):
        return 0.0
    rec = recoupling_from_cg(a, b, c, d, e, f, ctx)
    sign = -1 if ((a + b + c + d) // 2) % 2 else 1
    return sign * rec.real / math.sqrt(q_dim(e, ctx) * q_dim(f, ctx))


def _f(j1, j2, j3, j, a, b, ctx) -> float:
    """Unitary recoupling entry built from a single q-6j symbol."""
    return math.sqrt(q_dim(a, ctx) * q_dim(b, ctx)) * racah_w(j1, j2, j, j3, a, b, ctx)


def six_j_oracle_residual(ks=(5, 6, 8), max_twice: int = 3) -> tuple[float, int]:
    worst, count = 0.0, 0
    for k in ks:
        ctx = QContext(k)
        top = min(max_twice, ctx.max_twice_spin)
        for key in itertools.product(range(top + 1), repeat=6):
            a, b, e, c, d, f = key
            if (a + b + e) % 2 or (c + d + e) % 2 or (a + d + f) % 2 or (c + b + f) % 2:
                continue
            worst = max(worst, abs(q_six_j(*key, ctx) - six_j_from_cg(*key, ctx)))
            count += 1
    return worst, count


def _random_boundary(rng, ctx: QContext, n: int):
    """Random admissible spins for n objects plus a total spin, with nonempty channels."""
    top = ctx.max_twice_spin
    while True:
        spins = [int(rng.integers(0, top + 1)) for _ in range(n)]
        reach = {spins[0]}
        for s in spins[1:]:
            reach = {c for r in reach for c in fusion_channels(r, s, ctx)}
        if reach:
            return spins, sorted(reach)[int(rng.integers(0, len(reach)))]


def biedenharn_elliott_residual(samples: int = 200, seed: int = 1, k_max: int = 10) -> float:
    """Pentagon among five q-6j symbols:

    sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l] = F^{fcd}_e[g,l] F^{abl}_e[f,k].
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    done = 0
    while done < samples:
        ctx = QContext(int(rng.integers(3, k_max + 1)))
        (a, b, c, d), e = _random_boundary(rng, ctx, 4)
        for f in fusion_channels(a, b, ctx):
            for g in fusion_channels(f, c, ctx):
                if not admissible(g, d, e, ctx):
                    continue
                for l in fusion_channels(c, d, ctx):
                    for kk in fusion_channels(b, l, ctx):
                        if not admissible(a, kk, e, ctx):
                            continue
                        lhs = sum(
                            _f(a, b, c, g, f, h, ctx) * _f(a, h, d, e, g, kk, ctx) * _f(b, c, d, kk, h, l, ctx)
                            for h in fusion_channels(b, c, ctx)
                            if admissible(a, h, g, ctx) and admissible(h, d, kk, ctx)
                        )
                        rhs = _f(f, c, d, e, g, l, ctx) * _f(a, b, l, e, f, kk, ctx)
                        worst = max(worst, abs(lhs - rhs))
        done += 1
    return worst


def orthogonality_residual(samples: int = 200, seed: int = 2, k_max: int = 10) -> float:
    """sum_{j23} [2j12+1][2j23+1] {..}{..'} (with the W phases) = delta, and F F^T = 1."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        ctx = QContext(int(rng.integers(3, k_max + 1)))
        (j1, j2, j3), j = _random_boundary(rng, ctx, 3)
        rows, cols, mat = f_matrix(j1, j2, j3, j, ctx)
        worst = max(worst, float(np.abs(mat @ mat.T - np.eye(len(rows))).max()))
        worst = max(worst, float(np.abs(mat.T @ mat - np.eye(len(cols))).max()))
        for a in rows:
            for a2 in rows:
                s = sum(
                    q_dim(a, ctx) ** 0.5 * q_dim(a2, ctx) ** 0.5 * q_dim(b, ctx)
                    * racah_w(j1, j2, j, j3, a, b, ctx) * racah_w(j1, j2, j, j3, a2, b, ctx)
                    for b in cols
                )
                worst = max(worst, abs(s - (a == a2)))
    return worst


def identities_suite() -> list[Check]:
    return [
        _timed("q6j-vs-cg-contraction", TOL_IDENTITY,
               lambda: (lambda r: (r[0], f"{r[1]} keys, spins <= 3/2, k in 5,6,8"))(six_j_oracle_residual())),
        _timed("biedenharn-elliott", TOL_IDENTITY,
               lambda: (biedenharn_elliott_residual(), "200 random boundaries, k <= 10")),
        _timed("orthogonality", TOL_IDENTITY,
               lambda: (orthogonality_residual(), "200 random boundaries, k <= 10")),
    ]


# --- representation -----------------------------------------------------------------


def _word_matrix(tree, colors, orients, letters, ctx):
    return word_matrix(tree, colors, orients, letters, ctx)[0]


def _decorations(n: int, ctx: QContext, spins=(1, 2)):
    """Leaf colors (plat-compatible at the bottom or not) with a nonempty singlet sector."""
    for colors in itertools.product(spins, repeat=n):
        if not enumerate_states(odd_tree(n), colors, ctx):
            continue
        for orients in itertools.product((1, -1), repeat=n - 1):
            yield colors, (1,) + orients


def representation_residuals(sizes=(4, 6), ks=(5, 6, 7), spins=(1, 2)) -> dict[str, float]:
    yb = fc = unitary = diag = 0.0
    configs = 0
    for n in sizes:
        for k in ks:
            ctx = QContext(k)
            for colors, orients in _decorations(n, ctx, spins):
                configs += 1
                tree = odd_tree(n)
                for i in range(1, n - 1):
                    for s1, s2 in ((1, 1), (1, -1), (-1, 1)):
                        lhs = _word_matrix(tree, colors, orients, [(i, s1), (i + 1, s2), (i, s2)], ctx)
                        rhs = _word_matrix(tree, colors, orients, [(i + 1, s2), (i, s2), (i + 1, s1)], ctx)
                        yb = max(yb, float(np.abs(lhs - rhs).max()))
                for i in range(1, n):
                    for j in range(i + 2, n):
                        lhs = _word_matrix(tree, colors, orients, [(i, 1), (j, 1)], ctx)
                        rhs = _word_matrix(tree, colors, orients, [(j, 1), (i, 1)], ctx)
                        fc = max(fc, float(np.abs(lhs - rhs).max()))
                for i in range(1, n):
                    t = odd_tree(n) if i % 2 else even_tree(n)
                    for s in (1, -1):
                        m, _, _ = generator_matrix(t, colors, orients, i, s, ctx)
                        unitary = max(unitary, float(np.abs(m.conj().T @ m - np.eye(len(m))).max()))
                        diag = max(diag, float(np.abs(m - np.diag(np.diag(m))).max()))
                e, _ = change_matrix(odd_tree(n), even_tree(n), colors, ctx)
                unitary = max(unitary, float(np.abs(e.conj().T @ e - np.eye(len(e))).max()))
    return {"yang_baxter": yb, "far_commutativity": fc, "unitarity": unitary, "diagonal": diag, "configs": configs}


def yangbaxter_suite() -> list[Check]:
    t0 = time.perf_counter()
    r = representation_residuals()
    dt = time.perf_counter() - t0
    detail = f"{r['configs']} decorated spaces, 2N in 4,6, colors 1/2,1, k in 5,6,7"
    return [
        Check("yang-baxter", r["yang_baxter"] <= TOL_IDENTITY, r["yang_baxter"], TOL_IDENTITY, detail, dt),
        Check("far-commutativity", r["far_commutativity"] <= TOL_IDENTITY, r["far_commutativity"], TOL_IDENTITY, detail),
        Check("unitarity", r["unitarity"] <= TOL_UNITARY, r["unitarity"], TOL_UNITARY, detail),
        Check("parity-diagonal", r["diagonal"] <= TOL_DIAGONAL, r["diagonal"], TOL_DIAGONAL, detail),
    ]


# --- end-to-end values ------------------------------------------------------------------


def trefoil_closed_form(ctx: QContext) -> complex:
    q = ctx.q
    return (-1 + q + q**3) / q**4


def trefoil_residuals(ks=range(5, 17)) -> dict[int, float]:
    """Distance of the calibrated value of "s2 s2 s2" to (-1+q+q^3)/q^4 or its mirror, per k."""
    out = {}
    for k in ks:
        ctx = QContext(k)
        value = calibrated_jones(PlatSpec(4, (1, 1), k, word="s2 s2 s2"))
        target = trefoil_closed_form(ctx)
        mirror = target.conjugate()  # q -> 1/q on the unit circle, real coefficients
        out[k] = min(abs(value - target), abs(value - mirror))
    return out


def trefoil_suite() -> list[Check]:
    t0 = time.perf_counter()
    res = trefoil_residuals()
    dt = time.perf_counter() - t0
    return [
        Check("trefoil-golden", max(res.values()) <= TOL_GOLDEN, max(res.values()), TOL_GOLDEN, "k = 5..16", dt),
        Check("trefoil-runtime", dt < 1.0, dt, 1.0, "seconds for the 12 evaluations"),
    ]


def plat_words(strands: int, max_length: int):
    letters = [(i, s) for i in range(1, strands) for s in (1, -1)]
    for length in range(max_length + 1):
        for letters_ in itertools.product(letters, repeat=length):
            yield BraidWord(strands, letters_)


def oracle_residual(corpus=((4, 6), (6, 4)), ks=(5, 7, 8)) -> tuple[float, int]:
    """Max |engine - oracle| over every plat word in the corpus, color 1/2."""
    worst, count = 0.0, 0
    for strands, max_length in corpus:
        colors = (1,) * (strands // 2)
        for w in plat_words(strands, min(max_length, MAX_CROSSINGS)):
            poly = jones_from_bracket(bracket_state_sum(build_diagram(PlatSpec(strands, colors, ks[0]), w)))
            for k in ks:
                spec = PlatSpec(strands, colors, k)
                value = calibrated_jones(spec, w)
                worst = max(worst, abs(value - eval_at_root(poly, spec.ctx, sqrt_sign=-1)))
                count += 1
    return worst, count


def oracle_suite(max_crossings: int | None = None) -> list[Check]:
    corpus = ((4, 6), (6, 4))
    if max_crossings is not None:
        corpus = tuple((s, min(L, max_crossings)) for s, L in corpus)
    t0 = time.perf_counter()
    worst, count = oracle_residual(corpus)
    dt = time.perf_counter() - t0
    return [Check("oracle-equivalence", worst <= TOL_ORACLE, worst, TOL_ORACLE,
                  f"{count} evaluations, corpus {corpus}", dt)]


# --- automaton and ledger -----------------------------------------------------------------


def automaton_residuals(words: int = 200, seed: int = 3) -> dict[str, float]:
    rng = np.random.default_rng(seed)
    reduce_err = braid_err = max_abs = 0.0
    empty_err = 0.0
    for n in (4, 6):
        for k in (5, 7):
            spec = PlatSpec(n, (1,) * (n // 2), k)
            a = build_automaton(spec)
            empty_err = max(empty_err, abs(run_word(a, BraidWord(n)).amplitude - 1))
    for idx in range(words):
        n = (4, 6)[idx % 2]
        k = (5, 6, 7)[idx % 3]
        colors = tuple(int(c) for c in rng.choice((1, 2), size=n // 2)) if idx % 4 == 0 else (1,) * (n // 2)
        spec = PlatSpec(n, colors, k)
        a = build_automaton(spec)
        w = random_word(rng, n, int(rng.integers(0, 9)))
        # pad with cancelling pairs so reduction has work to do
        pos = int(rng.integers(0, len(w) + 1))
        i = int(rng.integers(1, n))
        s = int(rng.choice((1, -1)))
        padded = BraidWord(n, w.letters[:pos] + ((i, s), (i, -s)) + w.letters[pos:])
        amp = run_word(a, padded).amplitude
        reduce_err = max(reduce_err, abs(amp - run_word(a, free_reduce(padded)).amplitude))
        # braid relation substitution
        i = int(rng.integers(1, n - 1))
        e = int(rng.choice((1, -1)))
        pos = int(rng.integers(0, len(w) + 1))
        lhs = BraidWord(n, w.letters[:pos] + ((i, e), (i + 1, e), (i, e)) + w.letters[pos:])
        rhs = BraidWord(n, w.letters[:pos] + ((i + 1, e), (i, e), (i + 1, e)) + w.letters[pos:])
        a_l, a_r = run_word(a, lhs).amplitude, run_word(a, rhs).amplitude
        braid_err = max(braid_err, abs(a_l - a_r))
        max_abs = max(max_abs, abs(amp), abs(a_l), abs(a_r))
    return {"empty": empty_err, "free_reduce": reduce_err, "braid_relation": braid_err, "max_abs": max_abs}


def automaton_suite() -> list[Check]:
    t0 = time.perf_counter()
    r = automaton_residuals()
    dt = time.perf_counter() - t0
    return [
        Check("empty-word-amplitude", r["empty"] <= TOL_IDENTITY, r["empty"], TOL_IDENTITY, "", dt),
        Check("free-reduction-invariance", r["free_reduce"] <= TOL_IDENTITY, r["free_reduce"], TOL_IDENTITY, "200 words"),
        Check("braid-relation-invariance", r["braid_relation"] <= TOL_IDENTITY, r["braid_relation"], TOL_IDENTITY, "200 words"),
        Check("amplitude-bounded", r["max_abs"] <= 1 + TOL_IDENTITY, r["max_abs"], 1 + TOL_IDENTITY, "max |amplitude|"),
    ]


def ledger_ratios(words: int = 500, seed: int = 4, max_length: int = 20) -> tuple[float, int]:
    """Largest moves / (c(N) kappa) over random words; also the number of violations."""
    rng = np.random.default_rng(seed)
    worst, violations = 0.0, 0
    for idx in range(words):
        n = (4, 6, 8)[idx % 3]
        w = random_word(rng, n, int(rng.integers(1, max_length + 1)))
        moves, bound = complexity_ledger(PlatSpec(n, (1,) * (n // 2), 5), w)
        worst = max(worst, moves / bound)
        violations += moves > bound
    return worst, violations


def ledger_suite() -> list[Check]:
    t0 = time.perf_counter()
    worst, violations = ledger_ratios()
    return [Check("complexity-ledger", violations == 0, worst, 1.0,
                  f"max moves/bound ratio over 500 words, {violations} violations", time.perf_counter() - t0)]


# --- graphs ------------------------------------------------------------------------------


def graph_suite() -> list[Check]:
    from .spinnet_graph import build_graph, growth_check

    t0 = time.perf_counter()
    g3 = build_graph(3, include_twists=True)
    table = growth_check(8)
    dt = time.perf_counter() - t0
    return [
        Check("graph-120-vertices", g3.vertex_count == 120, g3.vertex_count, 120, "n=3 with twists", dt),
        Check("diameter-monotone", table.monotone, float(table.monotone), 1.0,
              "rotation graph n=2..8: " + ",".join(str(r.diameter) for r in table.rows)),
        Check("diameter-constant-spread", table.spread < 2.0, table.spread, 2.0, f"fitted c = {table.constant:.4f}"),
    ]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "identities": identities_suite,
    "yangbaxter": yangbaxter_suite,
    "oracle": oracle_suite,
    "trefoil": trefoil_suite,
    "graph": graph_suite,
    "automaton": automaton_suite,
    "ledger": ledger_suite,
}
