"""q-deformed SU(2) recoupling at the root of unity q = exp(-2*pi*i/k).

All spins are handled as *twice* their value (``tj = 2*j``) so that
half-integers stay exact.  Every function is pure; expensive tables are
memoised per ``QContext``, which is hashable and immutable.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class QContext:
    """Root-of-unity regime: integer k >= 3, level = k - 2."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 3:
            raise ValueError(f"deformation index k must be an integer >= 3, got {self.k!r}")

    @property
    def level(self) -> int:
        return self.k - 2

    @property
    def max_twice_spin(self) -> int:
        # maxSpin = level / 2
        return self.k - 2

    @property
    def q(self) -> complex:
        return cmath.exp(-2j * math.pi / self.k)

    def q_power(self, x: float) -> complex:
        """q**x on the branch continuous in x (q**x = exp(-2 pi i x / k))."""
        return cmath.exp(-2j * math.pi * x / self.k)

    def check_spin(self, tj: int) -> None:
        if tj < 0 or tj > self.max_twice_spin:
            raise ValueError(
                f"spin {format_spin(tj)} outside the admissible range 0..{format_spin(self.max_twice_spin)} at k={self.k}"
            )


def parse_spin(text: str | int | Fraction) -> int:
    """Return twice the spin for '1/2', '3/2', '1', 2, Fraction(1, 2), ..."""
    if isinstance(text, int):
        value = Fraction(text)
    elif isinstance(text, Fraction):
        value = text
    else:
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse spin {text!r}") from exc
    twice = 2 * value
    if twice.denominator != 1 or twice < 0:
        raise ValueError(f"spin must be a non-negative multiple of 1/2, got {text!r}")
    return int(twice)


def format_spin(tj: int) -> str:
    return str(tj // 2) if tj % 2 == 0 else f"{tj}/2"


def _sign(twice_exponent: int) -> int:
    """(-1)**(x) for x = twice_exponent / 2, which must be an integer."""
    if twice_exponent % 2:
        raise ValueError("phase exponent is not an integer")
    return -1 if (twice_exponent // 2) % 2 else 1


@lru_cache(maxsize=None)
def q_int(n: int, ctx: QContext) -> float:
    """[n]_q = sin(pi n / k) / sin(pi / k)."""
    if n % ctx.k == 0:
        return 0.0
    return math.sin(math.pi * n / ctx.k) / math.sin(math.pi / ctx.k)


@lru_cache(maxsize=None)
def q_factorial(n: int, ctx: QContext) -> float:
    if n < 0:
        raise ValueError("negative q-factorial")
    out = 1.0
    for i in range(1, n + 1):
        out *= q_int(i, ctx)
    return out


def q_dim(tj: int, ctx: QContext) -> float:
    """Quantum dimension [2j + 1]_q."""
    ctx.check_spin(tj)
    return q_int(tj + 1, ctx)


def admissible(a: int, b: int, c: int, ctx: QContext) -> bool:
    """Truncated fusion rule: triangle, integrality and a + b + c <= level (twice units: <= 2 level)."""
    if min(a, b, c) < 0 or max(a, b, c) > ctx.max_twice_spin:
        return False
    if (a + b + c) % 2:
        return False
    if c < abs(a - b) or c > a + b:
        return False
    return a + b + c <= 2 * ctx.level


def fusion_channels(a: int, b: int, ctx: QContext) -> list[int]:
    return [c for c in range(abs(a - b), a + b + 1, 2) if admissible(a, b, c, ctx)]


def _delta(a: int, b: int, c: int, ctx: QContext) -> float:
    return math.sqrt(
        q_factorial((a + b - c) // 2, ctx)
        * q_factorial((a - b + c) // 2, ctx)
        * q_factorial((-a + b + c) // 2, ctx)
        / q_factorial((a + b + c) // 2 + 1, ctx)
    )


class SixJKey(NamedTuple):
    """Array {j1 j2 j3; j4 j5 j6} (twice-spins), triads (123) (156) (426) (453)."""

    j1: int
    j2: int
    j3: int
    j4: int
    j5: int
    j6: int

    def triads(self) -> tuple[tuple[int, int, int], ...]:
        j1, j2, j3, j4, j5, j6 = self
        return ((j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3))


@lru_cache(maxsize=None)
def _six_j_cached(key: SixJKey, ctx: QContext) -> float:
    if not all(admissible(*t, ctx) for t in key.triads()):
        return 0.0
    j1, j2, j3, j4, j5, j6 = key
    prefactor = 1.0
    for t in key.triads():
        prefactor *= _delta(*t, ctx)
    alphas = [sum(t) // 2 for t in key.triads()]
    betas = [(j1 + j2 + j4 + j5) // 2, (j2 + j3 + j5 + j6) // 2, (j3 + j1 + j6 + j4) // 2]
    total = 0.0
    for z in range(max(alphas), min(betas) + 1):
        num = q_factorial(z + 1, ctx)
        if num == 0.0:
            continue
        den = 1.0
        for a in alphas:
            den *= q_factorial(z - a, ctx)
        for b in betas:
            den *= q_factorial(b - z, ctx)
        total += (-1) ** z * num / den
    return prefactor * total


def q_six_j(j1: int, j2: int, j3: int, j4: int, j5: int, j6: int, ctx: QContext) -> float:
    """q-6j symbol {j1 j2 j3; j4 j5 j6}_q by the single-sum Racah formula over q-factorials."""
    return _six_j_cached(SixJKey(j1, j2, j3, j4, j5, j6), ctx)


def racah_w(j1: int, j2: int, j: int, j3: int, j12: int, j23: int, ctx: QContext) -> float:
    """W_q(j1 j2 j j3; j12 j23) = (-1)^(j1+j2+j3+j) {j1 j2 j12; j3 j j23}_q."""
    return _sign(j1 + j2 + j3 + j) * q_six_j(j1, j2, j12, j3, j, j23, ctx)


def norm_racah(j1: int, j2: int, j3: int, j: int, j12: int, j23: int, ctx: QContext) -> float:
    """W_q divided by sqrt([2 j12 + 1][2 j23 + 1]); zero for inadmissible channels."""
    if not (admissible(j1, j2, j12, ctx) and admissible(j2, j3, j23, ctx)):
        return 0.0
    w = racah_w(j1, j2, j, j3, j12, j23, ctx)
    return w / math.sqrt(q_dim(j12, ctx) * q_dim(j23, ctx))


@lru_cache(maxsize=None)
def f_matrix(j1: int, j2: int, j3: int, j: int, ctx: QContext) -> tuple[tuple[int, ...], tuple[int, ...], np.ndarray]:
    """Unitary change of basis |(j1 j2)_a j3; j> = sum_b F[a, b] |j1 (j2 j3)_b; j>.

    Returns (rows, cols, F) with rows/cols the admissible intermediate
    channels in ascending order.
    """
    rows = tuple(a for a in fusion_channels(j1, j2, ctx) if admissible(a, j3, j, ctx))
    cols = tuple(b for b in fusion_channels(j2, j3, ctx) if admissible(j1, b, j, ctx))
    if not rows or not cols:
        raise ValueError(
            f"no admissible channels for boundary data ({format_spin(j1)}, {format_spin(j2)}, "
            f"{format_spin(j3)}; {format_spin(j)}) at k={ctx.k}"
        )
    mat = np.empty((len(rows), len(cols)))
    for r, a in enumerate(rows):
        for c, b in enumerate(cols):
            mat[r, c] = math.sqrt(q_dim(a, ctx) * q_dim(b, ctx)) * racah_w(j1, j2, j, j3, a, b, ctx)
    mat.setflags(write=False)
    return rows, cols, mat


# --- q-Clebsch-Gordan coefficients ------------------------------------------------


def _cg_generic(j1: int, m1: int, j2: int, m2: int, j: int, m: int, qh: complex) -> complex:
    """q-CG coefficient for an arbitrary q^(1/2) = qh (all arguments twice-valued).

    Kirillov-Reshetikhin normalisation; reduces to Condon-Shortley at qh = 1.
    """
    if m1 + m2 != m:
        return 0.0
    if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
        raise ValueError("projection exceeds spin")
    if (j1 + m1) % 2 or (j2 + m2) % 2 or (j + m) % 2:
        raise ValueError("projection parity does not match spin")
    if (j1 + j2 + j) % 2 or j < abs(j1 - j2) or j > j1 + j2:
        return 0.0

    def qn(n: int) -> complex:
        if qh == 1:
            return complex(n)
        return (qh**n - qh ** (-n)) / (qh - 1 / qh)

    def qf(n: int) -> complex:
        out = 1 + 0j
        for i in range(1, n + 1):
            out *= qn(i)
        return out

    def qpow(x: float) -> complex:
        # q**x = qh**(2x) on the principal branch of qh
        return cmath.exp(2 * x * cmath.log(qh))

    a, b, c = (j1 + j2 - j) // 2, (j1 - j2 + j) // 2, (-j1 + j2 + j) // 2
    delta = cmath.sqrt(qf(a) * qf(b) * qf(c) / qf((j1 + j2 + j) // 2 + 1))
    root = cmath.sqrt(
        qn(j + 1)
        * qf((j1 + m1) // 2) * qf((j1 - m1) // 2)
        * qf((j2 + m2) // 2) * qf((j2 - m2) // 2)
        * qf((j + m) // 2) * qf((j - m) // 2)
    )
    phase = qpow((j1 + j2 - j) * (j1 + j2 + j + 2) / 16 + (j1 * m2 - j2 * m1) / 8)
    total = 0j
    zmin = max(0, (j2 - j - m1) // 2, (j1 - j + m2) // 2)
    zmax = min(a, (j1 - m1) // 2, (j2 + m2) // 2)
    for z in range(zmin, zmax + 1):
        den = (
            qf(z) * qf(a - z) * qf((j1 - m1) // 2 - z) * qf((j2 + m2) // 2 - z)
            * qf((j - j2 + m1) // 2 + z) * qf((j - j1 - m2) // 2 + z)
        )
        total += (-1) ** z * qpow(-z * (j1 + j2 + j + 2) / 4) / den
    return phase * delta * root * total


def q_cg(j1: int, m1: int, j2: int, m2: int, j: int, m: int, ctx: QContext) -> complex:
    """q-Clebsch-Gordan coefficient (j1 m1 j2 m2 | j m)_q at the context's root of unity.

    Zero when m != m1 + m2 or when (j1, j2, j) is not admissible.
    """
    for tj in (j1, j2, j):
        ctx.check_spin(tj)
    if m1 + m2 != m:
        if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
            raise ValueError("projection exceeds spin")
        return 0j
    if not admissible(j1, j2, j, ctx):
        if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
            raise ValueError("projection exceeds spin")
        return 0j
    return complex(_cg_generic(j1, m1, j2, m2, j, m, cmath.exp(-1j * math.pi / ctx.k)))
