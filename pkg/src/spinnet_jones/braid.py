"""Braid words, plat-closure data, orientations and writhe.

Conventions
-----------
* Letters are read left to right, which is bottom to top of the braid.
* Letter ``(i, +1)`` is the strand at position ``i`` (1-based) passing
  over the strand at ``i + 1``.
* A crossing is positive when, with both strands oriented upward, the
  over-strand runs from lower-left to upper-right.  Hence the oriented
  sign of letter ``(i, s)`` is ``s * eps_i * eps_{i+1}`` with the current
  orientations at the two positions.
* Orientation ``+1`` means the strand is traversed upward.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .qtensor import QContext, format_spin, parse_spin

Letter = tuple[int, int]


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GeneratorRangeError(ValueError):
    pass


class PlatError(ValueError):
    """Plat data that cannot be closed up consistently (orientations or colors)."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2 or self.strands % 2:
            raise ValueError(f"plat braids need an even number of strands >= 2, got {self.strands}")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise GeneratorRangeError(f"generator index {i} out of range 1..{self.strands - 1}")
            if s not in (1, -1):
                raise ValueError(f"exponent sign must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


_TOKEN = re.compile(r"s(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse ``"s1^-2 s3 s2"``: whitespace-separated tokens ``s INT ('^' SIGNEDINT)?``."""
    if strands < 2 or strands % 2:
        raise ValueError(f"plat braids need an even number of strands >= 2, got {strands}")
    letters: list[Letter] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        end = m.end() if m else pos
        if m is None or (end < n and not text[end].isspace()):
            raise BraidSyntaxError(f"unexpected input {text[pos:pos + 8]!r}", pos)
        index = int(m.group(1))
        if not 1 <= index <= strands - 1:
            raise GeneratorRangeError(
                f"generator index {index} out of range 1..{strands - 1} at position {pos}"
            )
        power = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if power > 0 else -1
        letters.extend([(index, sign)] * abs(power))
        pos = end
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    """Inverse of ``parse_word``; runs of equal letters are written as powers."""
    out = []
    letters = list(w.letters)
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        index, sign = letters[i]
        power = sign * (j - i)
        out.append(f"s{index}" if power == 1 else f"s{index}^{power}")
        i = j
    return " ".join(out)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for index, sign in w.letters:
        if stack and stack[-1] == (index, -sign):
            stack.pop()
        else:
            stack.append((index, sign))
    return BraidWord(w.strands, tuple(stack))


def crossing_count(w: BraidWord) -> int:
    return len(w.letters)


def strand_permutation(w: BraidWord) -> list[int]:
    """perm[p] = top position (0-based) reached by the strand starting at bottom position p."""
    at = list(range(w.strands))  # at[pos] = bottom origin of the strand now at pos
    for i, _ in w.letters:
        at[i - 1], at[i] = at[i], at[i - 1]
    perm = [0] * w.strands
    for top, origin in enumerate(at):
        perm[origin] = top
    return perm


# --- plat data -------------------------------------------------------------------------


@dataclass(frozen=True)
class PlatSpec:
    """Plat closure data: one color per cap pair, level k, optional orientation pattern and word."""

    strands: int
    colors: tuple[int, ...]  # twice-spins, one per bottom cap
    level: int  # the deformation index k (q = exp(-2 pi i / k))
    orientations: tuple[int, ...] | None = None
    word: str = ""

    def __post_init__(self) -> None:
        if self.strands < 2 or self.strands % 2:
            raise ValueError(f"plat braids need an even number of strands >= 2, got {self.strands}")
        if len(self.colors) != self.strands // 2:
            raise ValueError(f"expected {self.strands // 2} cap colors, got {len(self.colors)}")
        if self.orientations is not None and len(self.orientations) != self.strands:
            raise ValueError(f"expected {self.strands} orientations, got {len(self.orientations)}")

    @property
    def n_caps(self) -> int:
        return self.strands // 2

    @property
    def ctx(self) -> QContext:
        return QContext(self.level)

    def braid(self) -> BraidWord:
        return parse_word(self.word, self.strands)

    def leaf_colors(self) -> tuple[int, ...]:
        return tuple(c for c in self.colors for _ in range(2))

    def to_json(self) -> str:
        doc = {
            "strands": self.strands,
            "colors": [format_spin(c) for c in self.colors],
            "level": self.level,
            "word": self.word,
        }
        if self.orientations is not None:
            doc["orientations"] = format_orientations(self.orientations)
        return json.dumps(doc)

    @classmethod
    def from_dict(cls, doc: dict) -> "PlatSpec":
        orient = doc.get("orientations")
        return cls(
            strands=int(doc["strands"]),
            colors=tuple(parse_spin(c) for c in doc["colors"]),
            level=int(doc["level"]),
            orientations=parse_orientations(orient) if orient else None,
            word=doc.get("word", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "PlatSpec":
        return cls.from_dict(json.loads(text))


def parse_orientations(text: str) -> tuple[int, ...]:
    table = {"+": 1, "-": -1}
    try:
        return tuple(table[ch] for ch in text.strip())
    except KeyError as exc:
        raise ValueError(f"orientations must be a string over '+-', got {text!r}") from exc


def format_orientations(eps: Iterable[int]) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


def _default_cap(cap: int) -> tuple[int, int]:
    # (+,-), (-,+), (+,-), ... as in the four-strand trefoil presentation
    return (1, -1) if cap % 2 == 0 else (-1, 1)


def _components(w: BraidWord) -> list[list[tuple[int, int]]]:
    """Trace the plat closure.  Each component is a list of (bottom position, eps)."""
    perm = strand_permutation(w)
    inv = [0] * w.strands
    for p, t in enumerate(perm):
        inv[t] = p
    seen: set[int] = set()
    comps = []
    for cap in range(w.strands // 2):
        left = 2 * cap
        if left in seen:
            continue
        up, down = (left, left + 1) if _default_cap(cap)[0] == 1 else (left + 1, left)
        comp = []
        start = up
        p = start
        while True:
            # strand from bottom p goes up to top perm[p]; top cap leads down another strand
            comp.append((p, 1))
            seen.add(p)
            top = perm[p] ^ 1
            d = inv[top]
            comp.append((d, -1))
            seen.add(d)
            p = d ^ 1
            if p == start:
                break
        comps.append(comp)
    return comps


def plat_orientations(spec: PlatSpec, w: BraidWord | None = None) -> tuple[int, ...]:
    """Per-strand bottom orientations consistent with the closure of ``w``.

    Without an override, the first cap of every component follows the
    pattern (+,-), (-,+), (+,-), ... and the rest of the component is
    forced.  A user-supplied pattern is validated against the closure.
    """
    if w is None:
        w = spec.braid()
    if spec.orientations is not None:
        eps = tuple(spec.orientations)
        for cap in range(spec.n_caps):
            if eps[2 * cap] == eps[2 * cap + 1]:
                raise PlatError(f"cap {cap + 1} joins two strands with equal orientation")
        for comp in _components(w):
            flips = {eps[p] * e for p, e in comp}
            if len(flips) != 1:
                raise PlatError("orientation pattern is inconsistent along a link component")
        return eps
    eps = [0] * w.strands
    for comp in _components(w):
        for p, e in comp:
            eps[p] = e
    return tuple(eps)


@dataclass(frozen=True)
class Crossing:
    level: int  # 0-based letter index (height in the braid)
    position: int  # generator index i (1-based)
    sign: int  # geometric exponent of the letter
    oriented_sign: int  # +1 / -1 under the right-hand convention
    parallel: bool  # both strands traversed in the same direction


@dataclass(frozen=True)
class LinkDiagram:
    strands: int
    word: BraidWord
    orientations: tuple[int, ...]  # at the bottom
    crossings: tuple[Crossing, ...]
    components: int
    component_of: tuple[int, ...]  # component id per bottom position
    top_orientations: tuple[int, ...] = field(default=())

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def build_diagram(spec: PlatSpec, w: BraidWord | None = None) -> LinkDiagram:
    if w is None:
        w = spec.braid()
    if w.strands != spec.strands:
        raise ValueError("word and plat spec disagree on the strand count")
    eps = plat_orientations(spec, w)
    comp_of = [0] * w.strands
    comps = _components(w)
    for cid, comp in enumerate(comps):
        for p, _ in comp:
            comp_of[p] = cid
    cur = list(eps)
    crossings = []
    for t, (i, s) in enumerate(w.letters):
        a, b = cur[i - 1], cur[i]
        crossings.append(Crossing(t, i, s, s * a * b, a == b))
        cur[i - 1], cur[i] = b, a
    return LinkDiagram(
        strands=w.strands,
        word=w,
        orientations=eps,
        crossings=tuple(crossings),
        components=len(comps),
        component_of=tuple(comp_of),
        top_orientations=tuple(cur),
    )


def writhe(d: LinkDiagram) -> int:
    return sum(c.oriented_sign for c in d.crossings)


def top_colors(spec: PlatSpec, w: BraidWord) -> tuple[int, ...]:
    colors = list(spec.leaf_colors())
    for i, _ in w.letters:
        colors[i - 1], colors[i] = colors[i], colors[i - 1]
    return tuple(colors)


def check_closure_colors(spec: PlatSpec, w: BraidWord) -> None:
    """Every top cap must join two strands of one color (one color per link component)."""
    top = top_colors(spec, w)
    for cap in range(spec.n_caps):
        a, b = top[2 * cap], top[2 * cap + 1]
        if a != b:
            raise PlatError(
                f"top cap {cap + 1} joins colors {format_spin(a)} and {format_spin(b)}"
            )


def random_word(rng, strands: int, length: int) -> BraidWord:
    letters: Sequence[Letter] = [
        (int(rng.integers(1, strands)), int(rng.choice((-1, 1)))) for _ in range(length)
    ]
    return BraidWord(strands, tuple(letters))
