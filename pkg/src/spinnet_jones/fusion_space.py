"""Singlet-sector fusion trees over 2N ordered leaves, recoupling moves and braiding.

A tree is a nested tuple of leaf positions, e.g. ``((0, 1), (2, 3))``.  Since
leaf order is fixed, every node covers a contiguous range of positions and
is addressed by that range ``(lo, hi)``.  Basis states of a tree are tuples
of twice-spin labels on its non-root internal nodes in post-order; the root
carries total spin 0.
"""
from __future__ import annotations

import cmath
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple

import numpy as np

from .qtensor import QContext, admissible, f_matrix, fusion_channels

Tree = "int | tuple"
Range = tuple[int, int]


# --- tree shapes -------------------------------------------------------------------------


def span(tree) -> Range:
    if isinstance(tree, int):
        return (tree, tree)
    return (span(tree[0])[0], span(tree[1])[1])


def n_leaves(tree) -> int:
    lo, hi = span(tree)
    return hi - lo + 1


@lru_cache(maxsize=None)
def internal_ranges(tree) -> tuple[Range, ...]:
    """Non-root internal nodes in post-order."""
    out: list[Range] = []

    def walk(t) -> None:
        if isinstance(t, int):
            return
        walk(t[0])
        walk(t[1])
        out.append(span(t))

    walk(tree)
    return tuple(out[:-1])


def subtree(tree, rng: Range):
    t = tree
    while span(t) != rng:
        if isinstance(t, int):
            raise KeyError(f"no node covering {rng}")
        t = t[0] if rng[1] <= span(t[0])[1] else t[1]
    return t


def _replace(tree, rng: Range, new):
    if span(tree) == rng:
        return new
    if isinstance(tree, int):
        raise KeyError(f"no node covering {rng}")
    left, right = tree
    if rng[1] <= span(left)[1]:
        return (_replace(left, rng, new), right)
    return (left, _replace(right, rng, new))


def has_cherry(tree, i: int) -> bool:
    """True when leaves i and i+1 (0-based) are coupled directly."""
    try:
        subtree(tree, (i, i + 1))
        return True
    except KeyError:
        return False


def odd_tree(n: int):
    """Pairs (1,2), (3,4), ... coupled first, then combined as a caterpillar."""
    pairs = [(2 * l, 2 * l + 1) for l in range(n // 2)]
    t = pairs[0]
    for p in pairs[1:]:
        t = (t, p)
    return t


def even_tree(n: int):
    """Leaf 1, then pairs (2,3), (4,5), ..., (2N-2, 2N-1), then leaf 2N, as a left comb.

    In the singlet sector this carries the wrap pair (2N, 1) of the even
    coupling scheme: the last internal label is forced to equal leaf 2N.
    """
    if n == 2:
        return (0, 1)
    t = 0
    for l in range(1, n // 2):
        t = (t, (2 * l - 1, 2 * l))
    return (t, n - 1)


def left_comb(n: int):
    t = 0
    for p in range(1, n):
        t = (t, p)
    return t


def rotations(tree) -> Iterable[tuple[Range, str, object]]:
    """(node range, direction, new tree) for every single rotation of ``tree``."""
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, int):
            continue
        left, right = t
        rng = span(t)
        if not isinstance(left, int):
            yield rng, "right", _replace(tree, rng, (left[0], (left[1], right)))
        if not isinstance(right, int):
            yield rng, "left", _replace(tree, rng, ((left, right[0]), right[1]))
        stack.extend((left, right))


# --- recoupling plans ------------------------------------------------------------------


def _move_cost(tree, rng: Range) -> int:
    # rotations at the spin-0 root are pure relabelings (the 1x1 recoupling equals 1)
    return 0 if rng == span(tree) else 1


BFS_MAX_LEAVES = 10


def _plan_bfs(source, is_target: Callable) -> tuple[tuple[Range, str], ...]:
    dist = {source: 0}
    prev: dict = {}
    dq = deque([source])
    while dq:
        t = dq.popleft()
        if is_target(t):
            path = []
            while t != source:
                t0, rng, direction = prev[t]
                path.append((rng, direction))
                t = t0
            return tuple(reversed(path))
        for rng, direction, nt in rotations(t):
            c = _move_cost(t, rng)
            nd = dist[t] + c
            if nt not in dist or nd < dist[nt]:
                dist[nt] = nd
                prev[nt] = (t, rng, direction)
                if c == 0:
                    dq.appendleft(nt)
                else:
                    dq.append(nt)
    raise ValueError("target tree unreachable")


def _to_comb(tree) -> list[tuple[Range, str]]:
    path = []
    t = tree
    while True:
        for rng, direction, nt in rotations(t):
            if direction == "left":
                path.append((rng, direction))
                t = nt
                break
        else:
            return path


def _reverse(path, source) -> list[tuple[Range, str]]:
    # replay forward to learn the node ranges after each move, then invert
    trees = [source]
    for rng, direction in path:
        trees.append(apply_rotation(trees[-1], rng, direction))
    out = []
    for idx in range(len(path) - 1, -1, -1):
        rng, direction = path[idx]
        after = trees[idx + 1]
        node = subtree(after, rng)
        out.append((span(node), "left" if direction == "right" else "right"))
    return out


def apply_rotation(tree, rng: Range, direction: str):
    node = subtree(tree, rng)
    if direction == "right":
        (a, b), c = node
        return _replace(tree, rng, (a, (b, c)))
    a, (b, c) = node
    return _replace(tree, rng, ((a, b), c))


@lru_cache(maxsize=None)
def plan_change(source, target) -> tuple[tuple[Range, str], ...]:
    """Rotation sequence taking ``source`` to ``target`` (shortest for up to 10 leaves)."""
    if source == target:
        return ()
    if n_leaves(source) <= BFS_MAX_LEAVES:
        return _plan_bfs(source, lambda t: t == target)
    return tuple(_to_comb(source) + _reverse(_to_comb(target), target))


@lru_cache(maxsize=None)
def plan_cherry(source, i: int) -> tuple[tuple[Range, str], ...]:
    """Shortest rotation sequence to a tree in which leaves i, i+1 are coupled."""
    if has_cherry(source, i):
        return ()
    if n_leaves(source) <= BFS_MAX_LEAVES:
        return _plan_bfs(source, lambda t: has_cherry(t, i))
    return plan_change(source, left_comb(n_leaves(source))) if i == 0 else _plan_bfs(
        source, lambda t: has_cherry(t, i)
    )


@lru_cache(maxsize=None)
def cherry_tree(source, i: int):
    """The tree reached by ``plan_cherry``: nearest shape coupling leaves i, i+1."""
    t = source
    for rng, direction in plan_cherry(source, i):
        t = apply_rotation(t, rng, direction)
    return t


def plan_cost(source, path) -> int:
    cost = 0
    t = source
    for rng, direction in path:
        cost += _move_cost(t, rng)
        t = apply_rotation(t, rng, direction)
    return cost


# --- states ------------------------------------------------------------------------------


class FusionState(NamedTuple):
    tree: object
    labels: tuple[int, ...]  # twice-spins on internal_ranges(tree)

    def label_map(self) -> dict[Range, int]:
        return dict(zip(internal_ranges(self.tree), self.labels))


@lru_cache(maxsize=None)
def _basis(tree, colors: tuple[int, ...], ctx: QContext) -> tuple[tuple[int, ...], ...]:
    order = internal_ranges(tree)

    def options(t) -> list[tuple[int, dict]]:
        if isinstance(t, int):
            return [(colors[t], {})]
        out = []
        lopts, ropts = options(t[0]), options(t[1])
        rng = span(t)
        for lc, ld in lopts:
            for rc, rd in ropts:
                for c in fusion_channels(lc, rc, ctx):
                    out.append((c, {**ld, **rd, rng: c}))
        return out

    if isinstance(tree, int):
        raise ValueError("a fusion tree needs at least two leaves")
    states = []
    for lc, ld in options(tree[0]):
        for rc, rd in options(tree[1]):
            if lc == rc and admissible(lc, rc, 0, ctx):
                merged = {**ld, **rd}
                states.append(tuple(merged[r] for r in order))
    return tuple(sorted(states))


def enumerate_states(tree, colors: tuple[int, ...], ctx: QContext) -> list[FusionState]:
    for c in colors:
        ctx.check_spin(c)
    return [FusionState(tree, labels) for labels in _basis(tree, tuple(colors), ctx)]


@dataclass(frozen=True, eq=False)
class StateVector:
    tree: object
    colors: tuple[int, ...]
    orients: tuple[int, ...]
    amps: np.ndarray
    ctx: QContext

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return _basis(self.tree, self.colors, self.ctx)

    def index(self, labels: tuple[int, ...]) -> int:
        return _index(self.tree, self.colors, self.ctx)[labels]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __len__(self) -> int:
        return len(self.amps)


@lru_cache(maxsize=None)
def _index(tree, colors, ctx) -> dict[tuple[int, ...], int]:
    return {labels: i for i, labels in enumerate(_basis(tree, colors, ctx))}


def basis_vector(tree, colors, orients, labels, ctx: QContext) -> StateVector:
    basis = _basis(tree, tuple(colors), ctx)
    amps = np.zeros(len(basis), dtype=complex)
    amps[_index(tree, tuple(colors), ctx)[tuple(labels)]] = 1.0
    return StateVector(tree, tuple(colors), tuple(orients), amps, ctx)


def _label(rng: Range, labels: dict[Range, int], colors, root: Range) -> int:
    if rng[0] == rng[1]:
        return colors[rng[0]]
    if rng == root:
        return 0
    return labels[rng]


def f_move(v: StateVector, node: Range, ctx: QContext | None = None, direction: str = "right") -> StateVector:
    """One recoupling at ``node``: ((A B)_d C)_f -> (A (B C)_e)_f for ``right``, inverse for ``left``."""
    ctx = ctx or v.ctx
    t = subtree(v.tree, node)
    if isinstance(t, int):
        raise ValueError(f"node {node} is a leaf")
    if direction == "right":
        if isinstance(t[0], int):
            raise ValueError(f"node {node} has no ((A B) C) shape")
        (a_t, b_t), c_t = t
        old_inner, new_t = span(t[0]), (a_t, (b_t, c_t))
        new_inner = (span(b_t)[0], span(c_t)[1])
    elif direction == "left":
        if isinstance(t[1], int):
            raise ValueError(f"node {node} has no (A (B C)) shape")
        a_t, (b_t, c_t) = t
        old_inner, new_t = span(t[1]), ((a_t, b_t), c_t)
        new_inner = (span(a_t)[0], span(b_t)[1])
    else:
        raise ValueError(f"unknown direction {direction!r}")
    new_tree = _replace(v.tree, node, new_t)
    root = span(v.tree)
    old_order = internal_ranges(v.tree)
    new_order = internal_ranges(new_tree)
    new_index = _index(new_tree, v.colors, ctx)
    out = np.zeros(len(new_index), dtype=complex)
    ra, rb, rc = span(a_t), span(b_t), span(c_t)
    for labels, amp in zip(v.basis, v.amps):
        if amp == 0:
            continue
        lm = dict(zip(old_order, labels))
        a, b, c = (_label(r, lm, v.colors, root) for r in (ra, rb, rc))
        f = _label(node, lm, v.colors, root)
        d = lm[old_inner]
        rows, cols, mat = f_matrix(a, b, c, f, ctx)
        del lm[old_inner]
        if direction == "right":
            coeffs = zip(cols, mat[rows.index(d), :])
        else:
            coeffs = zip(rows, mat[:, cols.index(d)])
        for e, coeff in coeffs:
            lm[new_inner] = e
            out[new_index[tuple(lm[r] for r in new_order)]] += coeff * amp
    return StateVector(new_tree, v.colors, v.orients, out, ctx)


def run_plan(v: StateVector, path) -> tuple[StateVector, int]:
    moves = 0
    for rng, direction in path:
        moves += _move_cost(v.tree, rng)
        v = f_move(v, rng, v.ctx, direction)
    return v, moves


@lru_cache(maxsize=4096)
def change_matrix(source, target, colors: tuple[int, ...], ctx: QContext) -> tuple[np.ndarray, int]:
    """Matrix of the planned recoupling from ``source`` to ``target`` and its move count."""
    path = plan_change(source, target)
    basis = _basis(source, colors, ctx)
    orients = (1,) * len(colors)
    cols = []
    for labels in basis:
        w, _ = run_plan(basis_vector(source, colors, orients, labels, ctx), path)
        cols.append(w.amps)
    mat = np.array(cols).T if cols else np.zeros((0, 0), dtype=complex)
    mat.setflags(write=False)
    return mat, plan_cost(source, path)


def change_basis(v: StateVector, target, ctx: QContext | None = None) -> tuple[StateVector, int]:
    """Express ``v`` in ``target``; returns the new vector and the number of elementary moves."""
    if n_leaves(target) != len(v.colors):
        raise ValueError("target tree has a different number of leaves")
    if target == v.tree:
        return v, 0
    mat, moves = change_matrix(v.tree, target, v.colors, v.ctx)
    return StateVector(target, v.colors, v.orients, mat @ v.amps, v.ctx), moves


# --- braiding ----------------------------------------------------------------------------


def casimir(tj: int) -> float:
    return tj * (tj + 2) / 4


def braid_eigenvalue(z: int, j: int, jp: int, orientation_product: int, ctx: QContext) -> complex:
    """Eigenvalue of the half-twist of two adjacent strands in fusion channel z.

    Parallel strands (orientation product +1):
        (-1)^(j+j'-z) q^((c_j + c_j')/2 + c_min(j,j') - c_z/2)
    Antiparallel strands (-1): the inverse of (-1)^(|j-j'|-z) q^(|c_j - c_j'|/2 - c_z/2).
    """
    if not admissible(j, jp, z, ctx):
        raise ValueError("inadmissible fusion channel")
    cz, cj, cjp = casimir(z), casimir(j), casimir(jp)
    if orientation_product == 1:
        sign = -1 if ((j + jp - z) // 2) % 2 else 1
        return sign * ctx.q_power((cj + cjp) / 2 + casimir(min(j, jp)) - cz / 2)
    if orientation_product == -1:
        sign = -1 if ((abs(j - jp) - z) // 2) % 2 else 1
        return 1 / (sign * ctx.q_power(abs(cj - cjp) / 2 - cz / 2))
    raise ValueError("orientation product must be +1 or -1")


def braid_diagonal(v: StateVector, i: int, sign: int) -> StateVector:
    """Act with letter (i, sign) on a vector whose tree couples leaves i, i+1 directly."""
    p = i - 1
    eps = v.orients[p] * v.orients[p + 1]
    out = v.amps * _phases(v.tree, v.colors, p, eps, sign, v.ctx)
    colors = list(v.colors)
    orients = list(v.orients)
    colors[p], colors[p + 1] = colors[p + 1], colors[p]
    orients[p], orients[p + 1] = orients[p + 1], orients[p]
    # basis labels are unchanged by swapping the two leaves of a cherry
    colors_t = tuple(colors)
    if colors_t != v.colors:
        src, dst = v.basis, _basis(v.tree, colors_t, v.ctx)
        if src != dst:
            idx = _index(v.tree, colors_t, v.ctx)
            moved = np.zeros(len(dst), dtype=complex)
            for labels, amp in zip(src, out):
                moved[idx[labels]] = amp
            out = moved
    return StateVector(v.tree, colors_t, tuple(orients), out, v.ctx)


@lru_cache(maxsize=4096)
def _phases(tree, colors: tuple[int, ...], p: int, eps: int, sign: int, ctx: QContext) -> np.ndarray:
    cherry = (p, p + 1)
    root = span(tree)
    order = internal_ranges(tree)
    j, jp = colors[p], colors[p + 1]
    # exponent is the oriented crossing sign; see braid.py for the convention
    power = sign * eps
    out = np.array(
        [
            braid_eigenvalue(0 if cherry == root else labels[order.index(cherry)], j, jp, eps, ctx) ** power
            for labels in _basis(tree, colors, ctx)
        ],
        dtype=complex,
    )
    out.setflags(write=False)
    return out


def apply_generator(v: StateVector, i: int, sign: int, ctx: QContext | None = None) -> tuple[StateVector, int]:
    """Apply sigma_i^sign; recouple first (fewest moves) if leaves i, i+1 are not a cherry.

    Returns the new vector and the number of elementary recoupling moves used.
    """
    if not 1 <= i <= len(v.colors) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(v.colors) - 1}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    v, moves = change_basis(v, cherry_tree(v.tree, i - 1))
    return braid_diagonal(v, i, sign), moves


def operator_matrix(tree, colors, orients, ctx: QContext, op: Callable[[StateVector], StateVector]):
    """Matrix of ``op`` on the singlet space of ``tree``; output re-expressed in ``tree``.

    Returns (matrix, output colors, output orientations).
    """
    basis = _basis(tree, tuple(colors), ctx)
    cols = []
    out_colors = out_orients = None
    for labels in basis:
        w = op(basis_vector(tree, colors, orients, labels, ctx))
        w, _ = change_basis(w, tree)
        out_colors, out_orients = w.colors, w.orients
        cols.append(w.amps)
    return np.array(cols).T, out_colors, out_orients


@lru_cache(maxsize=8192)
def _generator_matrix(tree, colors: tuple[int, ...], eps: int, i: int, sign: int, ctx: QContext) -> np.ndarray:
    p = i - 1
    target = cherry_tree(tree, p)
    into, _ = change_matrix(tree, target, colors, ctx)
    swapped = list(colors)
    swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
    swapped_t = tuple(swapped)
    back, _ = change_matrix(target, tree, swapped_t, ctx)
    src, idx = _basis(target, colors, ctx), _index(target, swapped_t, ctx)
    phases = _phases(target, colors, p, eps, sign, ctx)
    act = np.zeros((len(idx), len(src)), dtype=complex)
    for n, labels in enumerate(src):
        act[idx[labels], n] = phases[n]
    out = back @ act @ into
    out.setflags(write=False)
    return out


def generator_matrix(tree, colors, orients, i: int, sign: int, ctx: QContext):
    """Matrix of sigma_i^sign on the singlet space of ``tree``.

    Returns (matrix, output colors, output orientations); the output space is
    the same tree with the decorations at i, i+1 exchanged.
    """
    if not 1 <= i <= len(colors) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(colors) - 1}")
    p = i - 1
    mat = _generator_matrix(tree, tuple(colors), orients[p] * orients[p + 1], i, sign, ctx)
    colors, orients = list(colors), list(orients)
    colors[p], colors[p + 1] = colors[p + 1], colors[p]
    orients[p], orients[p + 1] = orients[p + 1], orients[p]
    return mat, tuple(colors), tuple(orients)


def word_matrix(tree, colors, orients, letters, ctx: QContext):
    """Product of generator matrices for ``letters`` (read bottom to top)."""
    dim = len(_basis(tree, tuple(colors), ctx))
    out = np.eye(dim, dtype=complex)
    for i, s in letters:
        m, colors, orients = generator_matrix(tree, colors, orients, i, s, ctx)
        out = m @ out
    return out, colors, orients
