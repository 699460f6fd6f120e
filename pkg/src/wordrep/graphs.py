"""Labelled Riordan and Toeplitz graphs.

Vertices are labelled ``1..n``. Adjacency is stored as one bitmask per
vertex: bit ``j-1`` of ``rows[i-1]`` is set iff ``i ~ j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import NotADivisor, PatternError, VertexOutOfRange
from .series import (
    CatalanF,
    CatalanG,
    Gf2Series,
    Polynomial,
    Rational,
    SeriesSpec,
    column_series,
    expand,
    format_series,
    parse_series,
)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        for i, row in enumerate(self.rows):
            if row >> i & 1:
                raise ValueError(f"vertex {i + 1} has a loop")
            if row >> self.n:
                raise ValueError(f"row {i + 1} has bits beyond n")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i + 1}, {j + 1})")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "LabeledGraph":
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"edge {u}-{v} outside [1, {n}]")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "LabeledGraph":
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise ValueError(f"matrix row {i + 1} has length {len(line)}, expected {n}")
            rows.append(sum(1 << j for j, bit in enumerate(line) if int(bit)))
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix_text(cls, text: str) -> "LabeledGraph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        for ln in lines:
            if any(ch not in "01" for ch in ln):
                raise ValueError(f"matrix line {ln!r} is not a 0/1 string")
        return cls.from_matrix([[int(ch) for ch in ln] for ln in lines])

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n, (0,) * n)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[v - 1]
        return [j + 1 for j in range(self.n) if row >> j & 1]

    def degree(self, v: int) -> int:
        return bin(self.rows[v - 1]).count("1")

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, in lexicographic order."""
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (i + 1, j + 1)
                row >>= 1
                j += 1

    @property
    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def to_matrix_text(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.matrix()) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def is_forest(self) -> bool:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges():
            ru, rv = find(u - 1), find(v - 1)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


# --- patterns and Riordan specs -------------------------------------------


@dataclass(frozen=True)
class ToeplitzPattern:
    bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 1:
            raise PatternError("pattern must be non-empty")
        if any(b not in (0, 1) for b in self.bits):
            raise PatternError("pattern bits must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "ToeplitzPattern":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise PatternError(f"pattern must be a non-empty 0/1 string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def text(self) -> str:
        return "".join(map(str, self.bits))

    def __str__(self) -> str:
        return self.text

    def bit_at_distance(self, dist: int) -> int:
        return self.bits[(dist - 1) % self.m]

    def riordan_spec(self) -> "RiordanSpec":
        den = (1,) + (0,) * (self.m - 1) + (1,)
        return RiordanSpec(Rational(self.bits, den), Polynomial((0, 1)))


@dataclass(frozen=True)
class RiordanSpec:
    g: SeriesSpec
    f: SeriesSpec
    name: str | None = None

    @classmethod
    def parse(cls, text: str) -> "RiordanSpec":
        """Parse ``"pascal"``, ``"catalan"``, ``"fibonacci"`` or ``"<g>;<f>"``."""
        text = text.strip()
        if text in BUILTIN_RIORDAN:
            return BUILTIN_RIORDAN[text]
        g, sep, f = text.partition(";")
        if not sep:
            raise PatternError(f"riordan spec must be a builtin name or 'g;f', got {text!r}")
        return cls(parse_series(g), parse_series(f))

    @property
    def text(self) -> str:
        if self.name:
            return self.name
        return f"{format_series(self.g)};{format_series(self.f)}"

    def __str__(self) -> str:
        return self.text


BUILTIN_RIORDAN = {
    "pascal": RiordanSpec(Rational((1,), (1, 1)), Rational((0, 1), (1, 1)), "pascal"),
    "catalan": RiordanSpec(CatalanG(), CatalanF(), "catalan"),
    "fibonacci": RiordanSpec(Rational((1,), (1, 1, 1)), Polynomial((0, 1)), "fibonacci"),
}


def build_riordan_graph(spec: RiordanSpec, n: int) -> LabeledGraph:
    """G_n(g, f): for j < i, i ~ j iff [z^(i-2)] g f^(j-1) is odd."""
    if n < 1:
        raise ValueError("n must be at least 1")
    order = max(n - 1, 1)
    g = expand(spec.g, order)
    f = expand(spec.f, order)
    rows = [0] * n
    for j in range(1, n):
        col = column_series(g, f, j - 1)
        for i in range(j + 1, n + 1):
            if col[i - 2]:
                rows[i - 1] |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
    return LabeledGraph(n, tuple(rows))


def build_toeplitz(pattern: ToeplitzPattern | str, n: int) -> LabeledGraph:
    if isinstance(pattern, str):
        pattern = ToeplitzPattern.parse(pattern)
    if n < 1:
        raise ValueError("n must be at least 1")
    # Row masks depend only on the distance set, built once per distance.
    dist_mask = 0
    for d in range(1, n):
        if pattern.bit_at_distance(d):
            dist_mask |= 1 << d
    return _from_distance_mask(dist_mask, n)


def _from_distance_mask(dist_mask: int, n: int) -> LabeledGraph:
    # bit d of dist_mask set iff distance d is an edge distance
    full = (1 << n) - 1
    rows = []
    for i in range(n):
        up = (dist_mask << i) & full
        down = 0
        for d in range(1, i + 1):
            if dist_mask >> d & 1:
                down |= 1 << (i - d)
        rows.append(up | down)
    return LabeledGraph(n, tuple(rows))


def build_fixed_distance_graph(distances: Iterable[int], n: int) -> LabeledGraph:
    """i ~ j iff |i - j| is one of ``distances``; an empty set gives no edges."""
    if n < 1:
        raise ValueError("n must be at least 1")
    mask = 0
    for d in distances:
        if d < 1:
            raise ValueError(f"distances must be positive, got {d}")
        if d < n:
            mask |= 1 << d
    return _from_distance_mask(mask, n)


def induced_subgraph(g: LabeledGraph, vertices: Sequence[int]) -> LabeledGraph:
    vertices = list(vertices)
    if not vertices:
        raise ValueError("vertex list must be non-empty")
    for a, b in zip(vertices, vertices[1:]):
        if a >= b:
            raise ValueError("vertices must be strictly increasing")
    for v in vertices:
        if not 1 <= v <= g.n:
            raise VertexOutOfRange(f"vertex {v} outside [1, {g.n}]")
    k = len(vertices)
    rows = []
    for v in vertices:
        row = g.rows[v - 1]
        rows.append(sum(1 << b for b, u in enumerate(vertices) if row >> (u - 1) & 1))
    return LabeledGraph(k, tuple(rows))


def subsample_pattern(pattern: ToeplitzPattern | str, d: int) -> ToeplitzPattern:
    """The pattern ``a_d a_2d ... a_m`` read at multiples of ``d``."""
    if isinstance(pattern, str):
        pattern = ToeplitzPattern.parse(pattern)
    if d < 1 or pattern.m % d:
        raise NotADivisor(f"{d} does not divide pattern length {pattern.m}")
    return ToeplitzPattern(pattern.bits[d - 1 :: d])
