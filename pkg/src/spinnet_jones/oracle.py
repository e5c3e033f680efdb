"""Brute-force Kauffman bracket over the plat diagram, and the Jones polynomial from it.

Kept deliberately independent of the recoupling engine: only integer
Laurent arithmetic and loop counting on the smoothed diagram.
"""
from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass
from importlib import resources

from .braid import LinkDiagram, PlatSpec, build_diagram, writhe
from .qtensor import QContext

MAX_CROSSINGS = 16


class LaurentPoly:
    """Integer Laurent polynomial; exponents are stored multiplied by 4."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exp4: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp4: coeff})

    @classmethod
    def from_exponents(cls, pairs: dict) -> "LaurentPoly":
        """Build from {exponent (int, float or Fraction): coefficient}."""
        out = {}
        for e, c in pairs.items():
            e4 = 4 * e
            if e4 != int(e4):
                raise ValueError(f"exponent {e} is not a multiple of 1/4")
            out[int(e4)] = out.get(int(e4), 0) + c
        return cls(out)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * n: c**n if n % 2 == 0 else c})
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def substitute_inverse(self) -> "LaurentPoly":
        """x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def evaluate(self, x_quarter: complex, sqrt_sign: int = 1) -> complex:
        """Value at x with x**(1/4) = x_quarter.  ``sqrt_sign=-1`` flips the branch of x**(1/2)."""
        total = 0j
        for e, c in self.terms.items():
            term = c * x_quarter**e
            if sqrt_sign == -1 and e % 4 == 2:
                term = -term
            total += term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            exp = str(e // 4) if e % 4 == 0 else f"{e}/4"
            parts.append(f"{c:+d}*x^{exp}")
        return " ".join(parts)


@dataclass(frozen=True)
class BracketResult:
    bracket: LaurentPoly  # in A
    writhe: int
    components: int
    states: int  # number of smoothing states visited


A = LaurentPoly.monomial(4)
A_INV = LaurentPoly.monomial(-4)
LOOP = LaurentPoly({8: -1, -8: -1})  # -A^2 - A^-2


def _segments(d: LinkDiagram) -> tuple[int, list[tuple[int, int, int, int]], list[tuple[int, int]]]:
    """Cut every strand position at the crossings touching it.

    Returns (segment count, per-crossing (bl, br, tl, tr) segment ids, cap joins).
    A segment runs along one position between consecutive crossings there.
    """
    n = d.strands
    current = list(range(n))  # segment currently running up position p
    count = n
    crossings = []
    for cr in d.crossings:
        i = cr.position - 1
        bl, br = current[i], current[i + 1]
        tl, tr = count, count + 1
        count += 2
        current[i], current[i + 1] = tl, tr
        crossings.append((bl, br, tl, tr))
    caps = [(2 * c, 2 * c + 1) for c in range(n // 2)]
    caps += [(current[2 * c], current[2 * c + 1]) for c in range(n // 2)]
    return count, crossings, caps


def _loops(d: LinkDiagram, smoothing: tuple[int, ...]) -> int:
    """Count circles after smoothing.  smoothing[c] = 0 keeps strands vertical, 1 is cup-cap."""
    count, crossings, caps = _segments(d)
    return _count_loops(count, crossings, caps, smoothing)


def _count_loops(count, crossings, caps, smoothing) -> int:
    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = count

    def union(a: int, b: int) -> None:
        nonlocal components
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1

    for a, b in caps:
        union(a, b)
    for (bl, br, tl, tr), sm in zip(crossings, smoothing):
        if sm == 0:
            union(bl, tl)
            union(br, tr)
        else:
            union(bl, br)
            union(tl, tr)
    return components


def bracket_state_sum(d: LinkDiagram) -> BracketResult:
    kappa = len(d.crossings)
    if kappa > MAX_CROSSINGS:
        raise ValueError(f"state sum capped at {MAX_CROSSINGS} crossings, diagram has {kappa}")
    count, crossings, caps = _segments(d)
    # over-strand lower-left -> upper-right (letter sign +1): A-smoothing is the vertical one
    a_smoothing = [0 if cr.sign == 1 else 1 for cr in d.crossings]
    tally: dict[tuple[int, int], int] = {}
    states = 0
    for smoothing in itertools.product((0, 1), repeat=kappa):
        states += 1
        a_count = sum(1 for s, a in zip(smoothing, a_smoothing) if s == a)
        key = (2 * a_count - kappa, _count_loops(count, crossings, caps, smoothing))
        tally[key] = tally.get(key, 0) + 1
    total = LaurentPoly()
    for (a_minus_b, loops), mult in sorted(tally.items()):
        total = total + LaurentPoly.monomial(4 * a_minus_b, mult) * LOOP ** (loops - 1)
    return BracketResult(total, writhe(d), d.components, states)


def kauffman_bracket(d: LinkDiagram) -> LaurentPoly:
    """Unknot-normalised Kauffman bracket <L> in the variable A."""
    return bracket_state_sum(d).bracket


def jones_from_bracket(b: BracketResult) -> LaurentPoly:
    """V(t) = (-A^3)^(-w) <L> with t = A^(-4); exponents of t stored times 4."""
    w = b.writhe
    factor = LaurentPoly.monomial(-12 * w, -1 if w % 2 else 1)
    in_a = b.bracket * factor
    # A^e = t^(-e/4): the stored t-exponent (times 4) is -e
    return LaurentPoly({-e4 // 4: c for e4, c in in_a.terms.items()})


def jones_polynomial(spec: PlatSpec) -> LaurentPoly:
    return jones_from_bracket(bracket_state_sum(build_diagram(spec)))


def eval_at_root(p: LaurentPoly, ctx: QContext, *, mirror: bool = False, sqrt_sign: int = 1) -> complex:
    """Evaluate at t = q (or 1/q when ``mirror``) with the principal fourth root of q.

    ``sqrt_sign=-1`` selects t**(1/2) = -q**(1/2) for half-integer powers.
    """
    angle = -2 * math.pi / ctx.k
    quarter = cmath.exp(1j * angle / 4)
    if mirror:
        quarter = 1 / quarter
    return p.evaluate(quarter, sqrt_sign)


def load_catalog(path: str | None = None) -> dict[str, dict]:
    """Named plat presentations shipped with the package (or from ``path``)."""
    if path is None:
        text = resources.files("spinnet_jones.data").joinpath("links.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)["links"]


def catalog_jones(entry: dict) -> LaurentPoly:
    """The Jones polynomial recorded for a catalog entry ({"exponent": coefficient})."""
    from fractions import Fraction

    return LaurentPoly.from_exponents({Fraction(e): c for e, c in entry["jones"].items()})
