import pytest
from hypothesis import given, strategies as st

from spinnet_jones.braid import BraidWord, PlatSpec, build_diagram
from spinnet_jones.oracle import (
    LaurentPoly,
    MAX_CROSSINGS,
    bracket_state_sum,
    catalog_jones,
    eval_at_root,
    jones_from_bracket,
    jones_polynomial,
    kauffman_bracket,
    load_catalog,
)
from spinnet_jones.qtensor import QContext

P = LaurentPoly.from_exponents


def spec(word, strands=4):
    return PlatSpec(strands, (1,) * (strands // 2), 5, word=word)


def test_laurent_arithmetic():
    a = P({1: 1, -1: 1})
    assert a * a == P({2: 1, 0: 2, -2: 1})
    assert a - a == LaurentPoly()
    assert P({1: -1}) ** -3 == P({-3: -1})
    assert P({0.5: 2}).terms == {2: 2}
    with pytest.raises(ValueError):
        a ** -1


def test_brackets():
    assert kauffman_bracket(build_diagram(spec("", 2))) == P({0: 1})
    # the Hopf plat: -A^4 - A^-4
    assert kauffman_bracket(build_diagram(spec("s2 s2"))) == P({4: -1, -4: -1})


def test_jones_examples():
    assert jones_polynomial(spec("", 2)) == P({0: 1})
    assert jones_polynomial(spec("")) == P({0.5: -1, -0.5: -1})
    assert jones_polynomial(spec("s2^-3")) == P({-4: -1, -3: 1, -1: 1})
    assert jones_polynomial(spec("s2 s2 s2")) == P({4: -1, 3: 1, 1: 1})


def test_state_count_and_determinism():
    d = build_diagram(spec("s2 s1 s2^-1 s3"))
    r1, r2 = bracket_state_sum(d), bracket_state_sum(d)
    assert r1.states == 2**4
    assert r1.bracket == r2.bracket and r1.bracket.terms == r2.bracket.terms


def test_crossing_cap():
    w = BraidWord(4, ((2, 1),) * (MAX_CROSSINGS + 1))
    with pytest.raises(ValueError):
        bracket_state_sum(build_diagram(spec(""), w))


words = st.lists(st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=7)


def _jones(w):
    return jones_from_bracket(bracket_state_sum(build_diagram(spec(""), w)))


@given(words, st.integers(0, 7), st.integers(1, 3), st.sampled_from((1, -1)))
def test_reidemeister_two(ls, pos, i, s):
    w = BraidWord(4, tuple(ls))
    pos = min(pos, len(ls))
    padded = BraidWord(4, w.letters[:pos] + ((i, s), (i, -s)) + w.letters[pos:])
    assert _jones(padded) == _jones(w)


@given(words)
def test_mirror(ls):
    text = " ".join(f"s{i}^{s}" for i, s in ls)
    mirror = " ".join(f"s{i}^{-s}" for i, s in ls)
    assert jones_polynomial(spec(mirror)) == jones_polynomial(spec(text)).substitute_inverse()


def test_eval_at_root():
    ctx = QContext(5)
    assert eval_at_root(P({0: 1}), ctx) == 1
    assert abs(eval_at_root(P({5: 1}), ctx) - 1) < 1e-12
    q = ctx.q
    tre = jones_polynomial(spec("s2^-3"))
    assert abs(eval_at_root(tre, ctx) - (-1 + q + q**3) / q**4) < 1e-12


def test_catalog():
    cat = load_catalog()
    assert {"unknot", "unlink-2", "hopf", "trefoil-right", "trefoil-left", "figure-eight", "borromean"} <= set(cat)
    for name, entry in cat.items():
        s = PlatSpec.from_dict({**entry, "level": 5})
        d = build_diagram(s)
        assert d.components == entry["components"], name
        assert jones_polynomial(s) == catalog_jones(entry), name
