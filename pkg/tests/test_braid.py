import pytest
from hypothesis import given, strategies as st

from spinnet_jones.braid import (
    BraidSyntaxError,
    BraidWord,
    GeneratorRangeError,
    PlatError,
    PlatSpec,
    build_diagram,
    crossing_count,
    format_word,
    free_reduce,
    parse_word,
    plat_orientations,
    writhe,
)


def test_parse_examples():
    assert parse_word("s2 s2 s2", 4).letters == ((2, 1), (2, 1), (2, 1))
    assert parse_word("s1^-2 s3", 4).letters == ((1, -1), (1, -1), (3, 1))
    assert parse_word("", 4).letters == ()
    assert parse_word("  s1^+2  ", 2).letters == ((1, 1), (1, 1))


@pytest.mark.parametrize("text,pos", [("s2 x", 3), ("s2s1", 0), ("s^2", 0), ("s1^", 0)])
def test_parse_syntax_errors(text, pos):
    with pytest.raises(BraidSyntaxError) as err:
        parse_word(text, 4)
    assert err.value.position == pos


def test_parse_range_and_strands():
    with pytest.raises(GeneratorRangeError):
        parse_word("s0", 4)
    with pytest.raises(GeneratorRangeError):
        parse_word("s4", 4)
    with pytest.raises(ValueError):
        parse_word("s1", 3)


letters = st.lists(st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=14)


@given(letters)
def test_round_trip(ls):
    w = BraidWord(6, tuple(ls))
    assert parse_word(format_word(w), 6) == w


@given(letters)
def test_free_reduce_properties(ls):
    w = BraidWord(6, tuple(ls))
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert crossing_count(r) <= crossing_count(w)
    assert all(r.letters[k] != (r.letters[k + 1][0], -r.letters[k + 1][1]) for k in range(len(r) - 1))


def test_free_reduce_examples():
    assert free_reduce(BraidWord(4, ((2, 1), (2, -1)))).letters == ()
    assert free_reduce(BraidWord(4, ((1, 1), (2, 1), (2, -1), (1, -1)))).letters == ()
    assert free_reduce(BraidWord(4, ((1, 1), (2, 1)))).letters == ((1, 1), (2, 1))


def test_default_orientations():
    assert plat_orientations(PlatSpec(2, (1,), 5)) == (1, -1)
    assert plat_orientations(PlatSpec(4, (1, 1), 5, word="s2 s2 s2")) == (1, -1, -1, 1)
    assert plat_orientations(PlatSpec(4, (1, 1), 5)) == (1, -1, -1, 1)


def test_bad_orientations():
    with pytest.raises(PlatError):
        plat_orientations(PlatSpec(4, (1, 1), 5, orientations=(1, 1, -1, -1)))
    # one component (trefoil): reversing one cap but not the other breaks consistency
    with pytest.raises(PlatError):
        plat_orientations(PlatSpec(4, (1, 1), 5, orientations=(1, -1, 1, -1), word="s2 s2 s2"))


def test_diagrams():
    unknot = build_diagram(PlatSpec(2, (1,), 5))
    assert unknot.crossing_count == 0 and unknot.components == 1 and writhe(unknot) == 0
    tre = build_diagram(PlatSpec(4, (1, 1), 5, word="s2 s2 s2"))
    assert tre.crossing_count == 3 and tre.components == 1
    assert writhe(tre) == 3  # right-handed under the positive-crossing convention
    hopf = build_diagram(PlatSpec(4, (1, 1), 5, word="s2 s2"))
    assert hopf.crossing_count == 2 and hopf.components == 2


def test_crossing_count():
    assert crossing_count(BraidWord(4)) == 0
    assert crossing_count(parse_word("s2 s2 s2", 4)) == 3
    assert crossing_count(parse_word("s1^4", 4)) == 4


@given(letters)
def test_writhe_mirror_cancels(ls):
    w = BraidWord(6, tuple(ls))
    ww = w + w.inverse()
    assert writhe(build_diagram(PlatSpec(6, (1, 1, 1), 5), ww)) == 0


@given(letters, st.integers(0, 14), st.integers(1, 5), st.sampled_from((1, -1)))
def test_writhe_stable_under_inverse_pair(ls, pos, i, s):
    w = BraidWord(6, tuple(ls))
    pos = min(pos, len(ls))
    padded = BraidWord(6, w.letters[:pos] + ((i, s), (i, -s)) + w.letters[pos:])
    spec = PlatSpec(6, (1, 1, 1), 5)
    assert writhe(build_diagram(spec, padded)) == writhe(build_diagram(spec, w))


def test_spec_json_round_trip():
    spec = PlatSpec(4, (1, 1), 5, orientations=(1, -1, -1, 1), word="s2 s2 s2")
    assert PlatSpec.from_json(spec.to_json()) == spec
    doc = PlatSpec.from_json('{"strands": 4, "colors": ["1/2","1/2"], "orientations": "+--+", "level": 5, "word": "s2 s2 s2"}')
    assert doc == spec


def test_spec_validation():
    with pytest.raises(ValueError):
        PlatSpec(3, (1,), 5)
    with pytest.raises(ValueError):
        PlatSpec(4, (1,), 5)
