"""Alternation, representant verification and the u(S)/d(S) word builders.

Words are plain tuples of positive integer labels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from .errors import CoverageError, EmptySet, LabelAbsent, NotUniform
from .graphs import LabeledGraph

Word = Tuple[int, ...]


def alternate(w: Sequence[int], x: int, y: int) -> bool:
    """True iff the restriction of ``w`` to ``{x, y}`` is xyxy... or yxyx..."""
    if x == y:
        raise ValueError("alternation needs two distinct letters")
    last = None
    seen_x = seen_y = False
    ok = True
    for a in w:
        if a == x or a == y:
            if a == last:
                ok = False
            last = a
            if a == x:
                seen_x = True
            else:
                seen_y = True
    if not seen_x:
        raise LabelAbsent(f"letter {x} does not occur in the word")
    if not seen_y:
        raise LabelAbsent(f"letter {y} does not occur in the word")
    return ok


def _positions(w: Sequence[int]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, a in enumerate(w):
        pos.setdefault(a, []).append(i)
    return pos


def _alternate_positions(px: list[int], py: list[int]) -> bool:
    # Merge two sorted occurrence lists; alternation means strict interleaving.
    if abs(len(px) - len(py)) > 1:
        return False
    if len(px) < len(py) or (len(px) == len(py) and px[0] > py[0]):
        px, py = py, px
    for i, p in enumerate(py):
        if not px[i] < p:
            return False
        if i + 1 < len(px) and not p < px[i + 1]:
            return False
    return True


def alternation_graph(w: Sequence[int]) -> LabeledGraph:
    """The graph on ``1..max(w)`` whose edges are the alternating pairs of ``w``."""
    n = max(w) if w else 0
    pos = _positions(w)
    edges = []
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if x in pos and y in pos and _alternate_positions(pos[x], pos[y]):
                edges.append((x, y))
    return LabeledGraph.from_edges(n, edges)


@dataclass(frozen=True)
class Violation:
    x: int
    y: int
    expected: bool  # adjacent in the graph
    actual: bool  # alternate in the word


@dataclass
class Verdict:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = [
            f"{v.x}-{v.y}: {'edge' if v.expected else 'non-edge'} but letters "
            f"{'alternate' if v.actual else 'do not alternate'}"
            for v in self.violations
        ]
        return "violations: " + "; ".join(parts)


def verify_representant(w: Sequence[int], g: LabeledGraph) -> Verdict:
    pos = _positions(w)
    stray = sorted(a for a in pos if not 1 <= a <= g.n)
    if stray:
        raise CoverageError(f"letters {stray} are not vertices of a graph on {g.n} vertices")
    missing = [v for v in range(1, g.n + 1) if v not in pos]
    if missing:
        raise CoverageError(f"vertices {missing} do not occur in the word")
    verdict = Verdict()
    for x in range(1, g.n + 1):
        for y in range(x + 1, g.n + 1):
            expected = g.adjacent(x, y)
            actual = _alternate_positions(pos[x], pos[y])
            if expected != actual:
                verdict.violations.append(Violation(x, y, expected, actual))
    return verdict


def u_word(s: Iterable[int]) -> Word:
    s = sorted(set(s))
    if not s:
        raise EmptySet("u(S) needs a non-empty set")
    return tuple(s)


def d_word(s: Iterable[int]) -> Word:
    s = sorted(set(s), reverse=True)
    if not s:
        raise EmptySet("d(S) needs a non-empty set")
    return tuple(s)


def is_uniform(w: Sequence[int]) -> int | None:
    """Return k if every letter of ``w`` occurs exactly k times, else None."""
    counts = set(Counter(w).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def cyclic_shift_to_front(w: Sequence[int], x: int) -> Word:
    if is_uniform(w) is None:
        raise NotUniform("cyclic shifts preserve representation only for uniform words")
    w = tuple(w)
    try:
        i = w.index(x)
    except ValueError:
        raise LabelAbsent(f"letter {x} does not occur in the word") from None
    return w[i:] + w[:i]


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w))


def parse_word(text: str) -> Word:
    """Parse space/comma separated labels; a single digit run is read per digit."""
    text = text.strip()
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        # compact form, only meaningful for labels 1..9
        word = tuple(int(ch) for ch in tokens[0])
    else:
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
    if any(a < 1 for a in word):
        raise ValueError("labels must be positive")
    return word


def read_word_file(lines: Iterable[str]) -> list[Word]:
    """One word per line; blank lines and '#' comments are skipped."""
    words = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(parse_word(line))
    return words
