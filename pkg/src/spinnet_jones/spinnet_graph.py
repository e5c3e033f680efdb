"""Rotation and twist-rotation graphs on binary coupling schemes.

A vertex is a full bracketing of n+1 labeled leaves, encoded as a string
such as ``"((1 2) 3)"``.  Rotation edges re-parenthesize one internal node;
twist edges exchange the two subtrees of one internal node and come in a
left- and a right-handed copy.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

N_MIN, N_MAX = 2, 8
N_MAX_TWISTS = 5  # (n+1)! * Catalan(n) vertices; n = 6 already has 665,280


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    kind: str  # "rotation" | "twist"
    handedness: str = ""  # "L" | "R" for twist edges


@dataclass
class CouplingGraph:
    n: int
    include_twists: bool
    vertices: list[str]
    edges: list[Edge]
    adjacency: list[list[int]] = field(repr=False)
    # BFS sources sufficient for the diameter (one per bracketing when leaf relabeling is a symmetry)
    representatives: list[int] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self, encoding: str) -> int:
        return self._index[encoding]

    def __post_init__(self) -> None:
        self._index = {s: i for i, s in enumerate(self.vertices)}


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def shapes(leaves: int) -> tuple:
    """All bracketings of ``leaves`` placeholder leaves (``None``)."""
    if leaves == 1:
        return (None,)
    out = []
    for left in range(1, leaves):
        for a in shapes(left):
            for b in shapes(leaves - left):
                out.append((a, b))
    return tuple(out)


def _fill(shape, labels):
    it = iter(labels)

    def walk(t):
        if t is None:
            return next(it)
        return (walk(t[0]), walk(t[1]))

    return walk(shape)


def encode(tree) -> str:
    if isinstance(tree, int):
        return str(tree)
    return f"({encode(tree[0])} {encode(tree[1])})"


def decode(text: str):
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok != "(":
            return int(tok)
        left = parse()
        right = parse()
        if tokens[pos] != ")":
            raise ValueError(f"malformed coupling scheme {text!r}")
        pos += 1
        return (left, right)

    try:
        tree = parse()
    except (IndexError, ValueError) as exc:
        raise ValueError(f"malformed coupling scheme {text!r}") from exc
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return tree


def _neighbors(tree):
    """Yield (kind, new tree) for every rotation and twist at every internal node."""
    if isinstance(tree, int):
        return
    left, right = tree
    yield "twist", (right, left)
    if not isinstance(left, int):
        yield "rotation", (left[0], (left[1], right))
    if not isinstance(right, int):
        yield "rotation", ((left, right[0]), right[1])
    for kind, new_left in _neighbors(left):
        yield kind, (new_left, right)
    for kind, new_right in _neighbors(right):
        yield kind, (left, new_right)


def _shape_of(tree):
    if isinstance(tree, int):
        return None
    return (_shape_of(tree[0]), _shape_of(tree[1]))


def build_graph(n: int, include_twists: bool = True) -> CouplingGraph:
    """Coupling graph on n+1 leaves.

    With twists: every leaf order, (n+1)! * Catalan(n) vertices.
    Without twists: the rotation graph for the fixed order 1..n+1, Catalan(n) vertices.
    """
    if not N_MIN <= n <= N_MAX:
        raise ValueError(f"n must lie in {N_MIN}..{N_MAX}, got {n}")
    if include_twists and n > N_MAX_TWISTS:
        raise ValueError(f"the twist-rotation graph is built for n <= {N_MAX_TWISTS}, got {n}")
    leaves = n + 1
    orders = itertools.permutations(range(1, leaves + 1)) if include_twists else [tuple(range(1, leaves + 1))]
    trees = [_fill(s, order) for order in orders for s in shapes(leaves)]
    vertices = sorted(encode(t) for t in trees)
    index = {s: i for i, s in enumerate(vertices)}
    edges: list[Edge] = []
    adjacency: list[list[int]] = [[] for _ in vertices]
    seen: set[tuple[int, int, str]] = set()
    for u, code in enumerate(vertices):
        for kind, nt in _neighbors(decode(code)):
            if kind == "twist" and not include_twists:
                continue
            v = index[encode(nt)]
            key = (min(u, v), max(u, v), kind)
            if key in seen:
                continue
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
            if kind == "twist":
                edges.append(Edge(key[0], key[1], kind, "L"))
                edges.append(Edge(key[0], key[1], kind, "R"))
            else:
                edges.append(Edge(key[0], key[1], kind))
    if include_twists:
        # relabeling leaves is an automorphism, so one source per bracketing suffices
        reps: dict = {}
        for i, code in enumerate(vertices):
            reps.setdefault(_shape_of(decode(code)), i)
        representatives = sorted(reps.values())
    else:
        representatives = list(range(len(vertices)))
    return CouplingGraph(n, include_twists, vertices, edges, adjacency, representatives)


def _eccentricity(adjacency: list[list[int]], source: int) -> int:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    dq = deque([source])
    far = 0
    while dq:
        x = dq.popleft()
        for y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                far = dist[y]
                dq.append(y)
    if min(dist) < 0:
        raise ValueError("graph is not connected")
    return far


def diameter(g: CouplingGraph) -> int:
    if g.vertex_count <= 1:
        return 0
    return max(_eccentricity(g.adjacency, s) for s in g.representatives)


def is_connected(g: CouplingGraph) -> bool:
    try:
        _eccentricity(g.adjacency, 0)
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class GrowthRow:
    n: int
    vertices: int
    edges: int
    diameter: int
    ratio: float  # diameter / (n ln n)
    bound: float  # c * n ln n with the fitted c


@dataclass(frozen=True)
class GrowthTable:
    rows: tuple[GrowthRow, ...]
    constant: float  # smallest c with diameter <= c n ln n on every row
    spread: float  # max ratio / min ratio
    monotone: bool
    include_twists: bool

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "vertices", "edges", "diameter", "ratio", "bound"])
        for r in self.rows:
            writer.writerow([r.n, r.vertices, r.edges, r.diameter, f"{r.ratio:.12g}", f"{r.bound:.12g}"])
        return buf.getvalue()


def growth_check(n_max: int = N_MAX, include_twists: bool = False, n_min: int = N_MIN) -> GrowthTable:
    """Diameter sweep with the smallest constant c making diameter <= c n ln n on every row."""
    if n_max > (N_MAX_TWISTS if include_twists else N_MAX) or n_min < N_MIN or n_min > n_max:
        raise ValueError(f"sweep range {n_min}..{n_max} unsupported")
    raw = []
    for n in range(n_min, n_max + 1):
        g = build_graph(n, include_twists)
        d = diameter(g)
        raw.append((n, g.vertex_count, g.edge_count, d, d / (n * math.log(n))))
    ratios = [r[4] for r in raw]
    c = max(ratios)
    rows = tuple(GrowthRow(n, v, e, d, ratio, c * n * math.log(n)) for n, v, e, d, ratio in raw)
    diameters = [r.diameter for r in rows]
    return GrowthTable(
        rows=rows,
        constant=c,
        spread=max(ratios) / min(ratios),
        monotone=all(a <= b for a, b in zip(diameters, diameters[1:])),
        include_twists=include_twists,
    )
