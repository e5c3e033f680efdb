import math
from collections import Counter

import pytest

from spinnet_jones.spinnet_graph import (
    build_graph,
    catalan,
    decode,
    diameter,
    encode,
    growth_check,
    is_connected,
)


def _leaves(tree):
    return [tree] if isinstance(tree, int) else _leaves(tree[0]) + _leaves(tree[1])


def _shape(tree):
    return None if isinstance(tree, int) else (_shape(tree[0]), _shape(tree[1]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vertex_counts_by_generation(n):
    g = build_graph(n, include_twists=True)
    assert g.vertex_count == math.factorial(n + 1) * catalan(n)
    assert len(set(g.vertices)) == g.vertex_count
    assert build_graph(n, include_twists=False).vertex_count == catalan(n)


def test_anchor_counts():
    assert build_graph(3, include_twists=True).vertex_count == 120
    assert build_graph(2, include_twists=True).vertex_count == 12
    assert build_graph(3, include_twists=False).vertex_count == 5


def test_encoding_round_trip():
    for code in build_graph(3).vertices:
        assert encode(decode(code)) == code
    with pytest.raises(ValueError):
        decode("((1 2) 3")  # unbalanced


def test_edge_semantics():
    g = build_graph(3, include_twists=True)
    for e in g.edges:
        a, b = decode(g.vertices[e.u]), decode(g.vertices[e.v])
        if e.kind == "rotation":
            assert _leaves(a) == _leaves(b) and _shape(a) != _shape(b)
        else:
            assert e.handedness in ("L", "R")
            assert sorted(_leaves(a)) == sorted(_leaves(b)) and _leaves(a) != _leaves(b)
    handed = Counter((e.u, e.v) for e in g.edges if e.kind == "twist")
    assert set(handed.values()) == {2}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_uniform_degrees(n):
    g = build_graph(n, include_twists=True)
    twist = Counter()
    rot = Counter()
    for e in g.edges:
        if e.kind == "twist" and e.handedness == "L":
            twist[e.u] += 1
            twist[e.v] += 1
        elif e.kind == "rotation":
            rot[e.u] += 1
            rot[e.v] += 1
    assert set(twist.values()) == {n}
    assert set(rot.values()) == {n - 1}


def test_connected_and_diameters():
    assert is_connected(build_graph(3))
    assert diameter(build_graph(2, include_twists=False)) == 1
    full = build_graph(3, include_twists=True)
    # symmetry-reduced BFS agrees with all-pairs BFS
    from spinnet_jones.spinnet_graph import _eccentricity

    assert diameter(full) == max(_eccentricity(full.adjacency, s) for s in range(full.vertex_count))


def test_range():
    with pytest.raises(ValueError):
        build_graph(1)
    with pytest.raises(ValueError):
        build_graph(9, include_twists=False)
    with pytest.raises(ValueError):
        build_graph(6, include_twists=True)


def test_growth_table():
    t = growth_check(8)
    assert [r.n for r in t.rows] == list(range(2, 9))
    assert [r.diameter for r in t.rows] == [1, 2, 4, 5, 7, 9, 11]
    assert t.monotone and t.spread < 2
    assert all(r.bound > 0 and r.diameter <= r.bound + 1e-12 for r in t.rows)
    csv_text = t.to_csv()
    assert csv_text.splitlines()[0] == "n,vertices,edges,diameter,ratio,bound"
    assert len(csv_text.splitlines()) == 8
