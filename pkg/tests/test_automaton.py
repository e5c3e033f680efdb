import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinnet_jones.automaton import (
    acceptance_probability,
    bound_constant,
    build_automaton,
    calibrated_jones,
    complexity_ledger,
    extended_jones,
    parity_distance,
    run_word,
)
from spinnet_jones.braid import BraidWord, PlatError, PlatSpec, free_reduce, parse_word
from spinnet_jones.fusion_space import braid_eigenvalue, even_tree, f_move, odd_tree
from spinnet_jones.oracle import eval_at_root, jones_polynomial
from spinnet_jones.qtensor import QContext, f_matrix, q_dim, q_int


def spec(word="", strands=4, k=5, colors=None):
    return PlatSpec(strands, colors or (1,) * (strands // 2), k, word=word)


def test_build():
    a = build_automaton(spec(strands=2))
    assert a.dimension == 1
    a = build_automaton(spec())
    assert a.initial.tree == odd_tree(4) and a.initial.basis[0] == (0, 0)
    assert list(a.initial.amps) == [1, 0]
    assert len(a.alphabet) == 6
    with pytest.raises(ValueError):
        build_automaton(spec(k=3, colors=(2, 2)))


def test_empty_and_inverse_pair():
    a = build_automaton(spec())
    r = run_word(a, BraidWord(4))
    assert r.amplitude == 1 and r.probability == 1 and r.moves == 0
    assert abs(run_word(a, parse_word("s2 s2^-1", 4)).amplitude - 1) < 1e-12


def test_trefoil_amplitude_hand_expansion():
    ctx = QContext(5)
    _, _, f = f_matrix(1, 1, 1, 1, ctx)
    # EVEN-tree channel of leaves 2,3 (parallel, both traversed downward)
    expected = sum(f[0, l] ** 2 * braid_eigenvalue(z, 1, 1, 1, ctx) ** 3 for l, z in enumerate((0, 2)))
    r = run_word(build_automaton(spec()), parse_word("s2 s2 s2", 4))
    assert abs(r.amplitude - expected) < 1e-12
    assert r.probability == pytest.approx(abs(expected) ** 2)


def test_extended_jones_unknot():
    for k in (5, 9):
        for c in (1, 2, 3):
            s = PlatSpec(2, (c,), k)
            assert extended_jones(s) == pytest.approx(q_dim(c, s.ctx))


def test_calibrated_trefoil_pair():
    for k in range(5, 17):
        q = QContext(k).q
        target = (-1 + q + q**3) / q**4
        assert abs(calibrated_jones(spec("s2^-3", k=k)) - target) < 1e-9
        assert abs(calibrated_jones(spec("s2 s2 s2", k=k)) - target.conjugate()) < 1e-9


def test_hopf_matches_oracle():
    for k in (5, 7, 8):
        s = spec("s2 s2", k=k)
        assert abs(calibrated_jones(s) - eval_at_root(jones_polynomial(s), s.ctx, sqrt_sign=-1)) < 1e-10


def test_unclosable_colors():
    with pytest.raises(PlatError):
        extended_jones(spec("s2", colors=(1, 2)))


def test_colored_unlink_and_swap():
    s = spec("", colors=(1, 2))
    assert extended_jones(s) == pytest.approx(q_dim(1, s.ctx) * q_dim(2, s.ctx))
    # exchanging the two caps' strands twice returns each color home
    s2 = spec("s2 s1 s3 s2 s2 s1 s3 s2", colors=(1, 2))
    assert abs(run_word(build_automaton(s2), s2.braid()).amplitude) <= 1 + 1e-12


def test_probability_range_and_acceptance():
    a = build_automaton(spec(strands=6))
    for text in ("", "s1 s2 s3", "s2^-1 s4 s5 s3^2"):
        p = acceptance_probability(a, parse_word(text, 6))
        assert 0 <= p <= 1 + 1e-12
    assert acceptance_probability(a, BraidWord(6)) == 1


def test_ledger_examples():
    assert complexity_ledger(spec()) == (0, 0)
    moves, bound = complexity_ledger(spec("s2 s2 s2"))
    assert bound == pytest.approx((3 * math.log(3) + 1) * 3)
    assert moves <= bound
    moves, _ = complexity_ledger(spec("s1 s2 s1 s2"))
    assert moves > 4


def test_parity_distance_fits_bound():
    for n in (4, 6, 8, 10):
        d = parity_distance(n)
        # worst single letter: recouple there and back
        assert 1 + 2 * d <= bound_constant(n // 2)


def test_final_permutation():
    s = spec("s2 s1 s3 s2", colors=(1, 2))  # swaps the two caps
    a = build_automaton(s, final_permutation=(1, 0))
    assert abs(run_word(a, s.braid()).amplitude) > 0
    assert run_word(build_automaton(s, final_permutation=(0, 1)), s.braid()).amplitude == 0
    with pytest.raises(ValueError):
        build_automaton(s, final_permutation=(0, 0))


words = st.lists(st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=10)


@given(words, st.sampled_from([5, 6, 7]))
def test_free_reduction_invariance(ls, k):
    w = BraidWord(6, tuple(ls))
    a = build_automaton(spec(strands=6, k=k))
    assert abs(run_word(a, w).amplitude - run_word(a, free_reduce(w)).amplitude) < 1e-10
    assert abs(run_word(a, w).amplitude) <= 1 + 1e-12
