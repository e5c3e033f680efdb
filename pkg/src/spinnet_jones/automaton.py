"""Measure-once quantum automaton over the singlet recoupling space of a plat.

The configuration space is spanned by fusion-tree labelings of the 2N
strand endpoints.  The automaton starts in the multi-singlet state (every
cap pair fused to spin 0 on the ODD tree), reads braid letters bottom to
top, and is measured against a multi-singlet acceptor at the top.

Odd generators act diagonally on the ODD tree and even generators on the
EVEN tree; a parity mismatch triggers a change of basis first.  Every
letter and every elementary recoupling move costs one unit of time.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .braid import BraidWord, PlatSpec, build_diagram, check_closure_colors, plat_orientations, writhe
from .fusion_space import (
    StateVector,
    basis_vector,
    braid_diagonal,
    change_basis,
    even_tree,
    has_cherry,
    internal_ranges,
    odd_tree,
    plan_change,
    plan_cost,
)
from .qtensor import QContext, format_spin, q_dim

# extendedJones / CALIBRATION is the Jones polynomial at t = q with t^(1/2) = -q^(1/2)
# for color-1/2 links; see README "Conventions".
CALIBRATION_SPIN = 1  # twice-spin whose quantum dimension is divided out


def bound_constant(n_caps: int) -> float:
    """c(N) = (2N - 1) ln(2N - 1) + 1."""
    m = 2 * n_caps - 1
    return m * math.log(m) + 1 if m > 1 else 1.0


@dataclass(frozen=True)
class RunReport:
    amplitude: complex
    probability: float
    moves: int
    word_length: int
    bound_constant: float
    writhe: int = 0
    recoupling_moves: int = 0

    @property
    def bound(self) -> float:
        return self.bound_constant * self.word_length

    def to_dict(self) -> dict:
        return {
            "re": self.amplitude.real,
            "im": self.amplitude.imag,
            "probability": self.probability,
            "moves": self.moves,
            "bound": self.bound,
            "wordLength": self.word_length,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class Automaton:
    spec: PlatSpec
    ctx: QContext
    orientations: tuple[int, ...]
    initial: StateVector = field(repr=False)
    # optional cap permutation selecting a member of the N! acceptor family
    final_permutation: tuple[int, ...] | None = None

    @property
    def n_caps(self) -> int:
        return self.spec.n_caps

    @property
    def alphabet(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, s) for i in range(1, self.spec.strands) for s in (1, -1))

    @property
    def dimension(self) -> int:
        return len(self.initial)

    def acceptor_colors(self, leaf_colors: tuple[int, ...]) -> tuple[int, ...]:
        """Leaf colors of the accepted multi-singlet, given the evolved decorations.

        Without a permutation any multi-singlet on the evolved colors is accepted;
        this is the initial state whenever the word returns every color to its cap.
        With a permutation p the acceptor carries cap colors spec.colors[p[0]], ...
        """
        if self.final_permutation is None:
            return leaf_colors
        permuted = [self.spec.colors[p] for p in self.final_permutation]
        return tuple(c for c in permuted for _ in range(2))


def multi_singlet_labels(tree, colors: tuple[int, ...]) -> tuple[int, ...]:
    """All-zero labeling of an ODD tree: pair nodes and caterpillar nodes carry spin 0."""
    return tuple(0 for _ in internal_ranges(tree))


def build_automaton(spec: PlatSpec, final_permutation: tuple[int, ...] | None = None) -> Automaton:
    ctx = spec.ctx
    for c in spec.colors:
        ctx.check_spin(c)
    if final_permutation is not None and sorted(final_permutation) != list(range(spec.n_caps)):
        raise ValueError(f"final permutation must permute 0..{spec.n_caps - 1}")
    leaves = spec.leaf_colors()
    eps = plat_orientations(spec)
    tree = odd_tree(spec.strands)
    v0 = basis_vector(tree, leaves, eps, multi_singlet_labels(tree, leaves), ctx)
    return Automaton(spec, ctx, eps, v0, final_permutation)


def _parity_tree(i: int, strands: int):
    return odd_tree(strands) if i % 2 == 1 else even_tree(strands)


def evolve(a: Automaton, w: BraidWord) -> tuple[StateVector, int, int]:
    """Apply the word; returns (vector on the ODD tree, total moves, recoupling moves)."""
    if w.strands != a.spec.strands:
        raise ValueError("word and automaton disagree on the strand count")
    v = a.initial
    if v.orients != plat_orientations(a.spec, w):
        v = StateVector(v.tree, v.colors, plat_orientations(a.spec, w), v.amps, v.ctx)
    recoupling = 0
    for i, s in w.letters:
        if not has_cherry(v.tree, i - 1):
            v, m = change_basis(v, _parity_tree(i, w.strands))
            recoupling += m
        v = braid_diagonal(v, i, s)
    v, m = change_basis(v, odd_tree(w.strands))
    recoupling += m
    return v, len(w) + recoupling, recoupling


def _project(a: Automaton, v: StateVector) -> complex:
    colors = a.acceptor_colors(v.colors)
    if colors != v.colors:
        return 0j
    labels = multi_singlet_labels(v.tree, colors)
    try:
        return complex(v.amps[v.index(labels)])
    except KeyError:
        # top caps join unequal colors: no singlet labeling to accept
        return 0j


def run_word(a: Automaton, w: BraidWord) -> RunReport:
    v, moves, recoupling = evolve(a, w)
    amp = _project(a, v)
    return RunReport(
        amplitude=amp,
        probability=abs(amp) ** 2,
        moves=moves,
        word_length=len(w),
        bound_constant=bound_constant(a.n_caps),
        writhe=writhe(build_diagram(a.spec, w)),
        recoupling_moves=recoupling,
    )


def acceptance_probability(a: Automaton, w: BraidWord) -> float:
    return run_word(a, w).probability


def extended_jones(spec: PlatSpec, w: BraidWord | None = None) -> complex:
    """prod_i [2 j_i + 1]_q times the acceptance amplitude (unknot -> [2j+1]_q)."""
    if w is None:
        w = spec.braid()
    check_closure_colors(spec, w)
    a = build_automaton(spec)
    amp = run_word(a, w).amplitude
    prefactor = 1.0
    for c in spec.colors:
        prefactor *= q_dim(c, a.ctx)
    return prefactor * amp


def calibrated_jones(spec: PlatSpec, w: BraidWord | None = None) -> complex:
    """extendedJones divided by the spin-1/2 quantum dimension.

    For color 1/2 this is the Jones polynomial V(t) at t = q, on the branch
    t^(1/2) = -q^(1/2); the unknot gives 1.
    """
    ctx = spec.ctx
    return extended_jones(spec, w) / q_dim(CALIBRATION_SPIN, ctx)


def complexity_ledger(spec: PlatSpec, w: BraidWord | None = None) -> tuple[int, float]:
    """(elementary moves used, c(N) * crossing count)."""
    if w is None:
        w = spec.braid()
    report = run_word(build_automaton(spec), w)
    return report.moves, report.bound


def parity_distance(strands: int) -> int:
    """Elementary moves between the ODD and EVEN trees."""
    return plan_cost(odd_tree(strands), plan_change(odd_tree(strands), even_tree(strands)))


def describe(a: Automaton) -> str:
    colors = ",".join(format_spin(c) for c in a.spec.colors)
    return f"Automaton(strands={a.spec.strands}, colors={colors}, k={a.ctx.k}, dim={a.dimension})"
