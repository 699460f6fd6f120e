"""Explicit word-representants for Toeplitz and Riordan graph families.

Blocks are residue classes ``B_i = {a in [n] : a = i mod N}`` for
``i = 1..N``. Block indices in the formulas below wrap around mod N, and
empty blocks (``n < N``) contribute empty factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Tuple

from .errors import AllZeroLength, ConditionNotMet, NotAForest
from .graphs import LabeledGraph
from .words import Word, cyclic_shift_to_front


@dataclass(frozen=True)
class BlockPartition:
    modulus: int
    blocks: Tuple[frozenset, ...]

    def __getitem__(self, i: int) -> frozenset:
        """Block ``B_i`` for any integer i, taken mod the modulus (1-based)."""
        return self.blocks[(i - 1) % self.modulus]

    def union(self, indices: Iterable[int]) -> frozenset:
        out: set[int] = set()
        for i in indices:
            out |= self[i]
        return frozenset(out)


def blocks(n: int, modulus: int) -> BlockPartition:
    if modulus < 1:
        raise ValueError("modulus must be positive")
    parts = [set() for _ in range(modulus)]
    for a in range(1, n + 1):
        parts[(a - 1) % modulus].add(a)
    return BlockPartition(modulus, tuple(frozenset(p) for p in parts))


def _d(s) -> Word:
    return tuple(sorted(s, reverse=True))


def _u(s) -> Word:
    return tuple(sorted(s))


def _cat(factors: Iterable[Sequence[int]]) -> Word:
    out: list[int] = []
    for f in factors:
        out.extend(f)
    return tuple(out)


# --- G_n(0^k 1^l 0^m) -------------------------------------------------------------


def _base_word(B: BlockPartition) -> Word:
    return _cat(_d(B[i]) for i in range(1, B.modulus + 1))


def w1_factor(B: BlockPartition, k: int, l: int, m: int, t: int) -> Word:
    N = k + l + m
    if t <= l + m:
        return _cat(
            [_d(B[i]) for i in range(1, t)]
            + [_d(B.union(range(t, t + k + 1)))]
            + [_d(B[i]) for i in range(t + k + 1, N + 1)]
        )
    return _cat(
        [_d(B[i]) for i in range(1, t)]
        + [_d(B.union(list(range(t, N + 1)) + list(range(1, t - l - m + 1))))]
        + [_d(B[i]) for i in range(t - l - m + 1, N + 1)]
    )


def w2_factor(B: BlockPartition, k: int, l: int, m: int, t: int) -> Word:
    N = k + l + m
    if m == 0:
        return ()
    if t <= m - 1:
        return _cat(
            [_d(B[i]) for i in range(1, k + l + t + 1)]
            + [_u(B.union(list(range(k + l + t + 1, N + 1)) + list(range(1, t + 1))))]
            + [_d(B[i]) for i in range(t + 1, N + 1)]
        )
    return _cat(
        [_d(B[i]) for i in range(1, t - m + 1)]
        + [_u(B.union(range(t - m + 1, t + 1)))]
        + [_d(B[i]) for i in range(t + 1, N + 1)]
    )


def factors_0k1l0m(k: int, l: int, m: int, n: int) -> list[Word]:
    """The factors d(B_1)...d(B_N), w1(1..N), w2(1..N) of the 0^k 1^l 0^m word.

    Empty factors (w2 when m = 0) are dropped.
    """
    N = k + l + m
    B = blocks(n, N)
    out = [_base_word(B)]
    out += [w1_factor(B, k, l, m, t) for t in range(1, N + 1)]
    out += [w for w in (w2_factor(B, k, l, m, t) for t in range(1, N + 1)) if w]
    return out


def represent_0k1l0m(k: int, l: int, m: int, n: int) -> Word:
    """A representant of G_n(0^k 1^l 0^m)."""
    if min(k, l, m) < 0:
        raise ValueError("k, l, m must be nonnegative")
    if k + l + m == 0:
        raise AllZeroLength("pattern 0^k 1^l 0^m must be non-empty")
    if n < 1:
        raise ValueError("n must be positive")
    if l == 0:
        return tuple(a for v in range(1, n + 1) for a in (v, v))
    if k == 0 and m == 0:
        return tuple(range(1, n + 1))
    return _cat(factors_0k1l0m(k, l, m, n))


def represent_0k1l(k: int, l: int, n: int) -> Word:
    """Shortened word d(B_1)...d(B_{k+l}) w1(1)...w1(k+l) for G_n(0^k 1^l)."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    B = blocks(n, k + l)
    return _cat([_base_word(B)] + [w1_factor(B, k, l, 0, t) for t in range(1, k + l + 1)])


def represent_1l0m(l: int, m: int, n: int) -> Word:
    """Shortened word d(B_1)...d(B_{l+m}) w2(1)...w2(l+m) for G_n(1^l 0^m)."""
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    B = blocks(n, l + m)
    return _cat([_base_word(B)] + [w2_factor(B, 0, l, m, t) for t in range(1, l + m + 1)])


# --- G_n(1^{k-1} 0 1^{m-k}) -------------------------------------------------------


def represent_1k01mk(k: int, m: int, n: int) -> Word:
    """A representant of G_n(1^(k-1) 0 1^(m-k)) when gcd(k, m) = 1 or k = m/2.

    When both conditions hold (k = 1, m = 2) the 2-uniform half-period word
    is used.
    """
    if not 1 <= k < m:
        raise ValueError("need 1 <= k < m")
    B = blocks(n, m)
    if 2 * k == m:
        first = _cat(_d(B[i]) + _d(B[i + k]) for i in range(1, k + 1))
        second = _cat(_d(B[i + k]) + _d(B[i]) for i in range(1, k + 1))
        return first + second
    if gcd(k, m) != 1:
        raise ConditionNotMet(f"gcd({k}, {m}) = {gcd(k, m)} and {k} != {m}/2")
    # C[t] = B_{(t-1)k+1}, t = 1..m, all distinct since gcd(k, m) = 1
    C = [None] + [B[(t - 1) * k + 1] for t in range(1, m + 1)]
    words = []
    for t in range(1, m):
        words.append(_cat(
            [_d(C[s]) for s in range(1, t)]
            + [_d(C[t] | C[t + 1])]
            + [_d(C[s]) for s in range(t + 2, m + 1)]
        ))
    words.append(_cat(
        [_d(C[s]) for s in range(1, m)]
        + [_d(C[m] | C[1])]
        + [_d(C[s]) for s in range(2, m + 1)]
    ))
    return _cat(words)


# --- comparability and forests ------------------------------------------------------


def represent_residue_cliques(k: int, n: int) -> Word:
    """u(B_1)...u(B_k) u(B_k)...u(B_1): two permutations representing G_n(0^(k-1) 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    B = blocks(n, k)
    first = _cat(_u(B[i]) for i in range(1, k + 1))
    second = _cat(_u(B[i]) for i in range(k, 0, -1))
    return first + second


def represent_forest(g: LabeledGraph) -> Word:
    """A 2-uniform representant of a forest, grown one leaf at a time."""
    if not g.is_forest():
        raise NotAForest("graph contains a cycle")
    seen = [False] * (g.n + 1)
    out: list[int] = []
    for root in range(1, g.n + 1):
        if seen[root]:
            continue
        seen[root] = True
        w: Word = (root, root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if seen[v]:
                    continue
                seen[v] = True
                queue.append(v)
                rotated = cyclic_shift_to_front(w, u)
                second = rotated.index(u, 1)
                w = (v, u, v) + rotated[1:second] + rotated[second:]
        out.extend(w)
    return tuple(out)


def label_order_transitive(g: LabeledGraph) -> bool:
    """True iff orienting every edge from smaller to larger label is transitive."""
    for j in range(1, g.n + 1):
        lower = g.rows[j - 1] & ((1 << (j - 1)) - 1)
        upper = g.rows[j - 1] >> j << j
        i_bits = lower
        while i_bits:
            low = i_bits & -i_bits
            i_bits ^= low
            i = low.bit_length() - 1
            if upper & ~g.rows[i]:
                return False
    return True


def three_color_fixed_distance(s: int, t: int, n: int) -> dict[int, int]:
    """Greedy proper 3-colouring of the graph with edge distances s+1 and t+1."""
    if not 0 <= s < t:
        raise ValueError("need 0 <= s < t")
    colors: dict[int, int] = {}
    for v in range(1, n + 1):
        taken = {colors[v - d] for d in (s + 1, t + 1) if v - d >= 1}
        colors[v] = min(c for c in (1, 2, 3) if c not in taken)
    return colors


# --- dispatch ---------------------------------------------------------------------


def _runs(text: str) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for ch in text:
        if out and out[-1][0] == ch:
            out[-1] = (ch, out[-1][1] + 1)
        else:
            out.append((ch, 1))
    return out


def construct_for_pattern(pattern, n: int) -> tuple[str, Word] | None:
    """Pick an explicit construction by the shape of a Toeplitz pattern.

    Returns ``(name, word)`` or None when no construction applies. The
    caller is expected to verify the word.
    """
    text = pattern if isinstance(pattern, str) else pattern.text
    m = len(text)
    ones = text.count("1")
    if ones == 0:
        return "0k1l0m", represent_0k1l0m(m, 0, 0, n)
    if ones == m:
        return "0k1l0m", represent_0k1l0m(0, m, 0, n)
    if ones == 1 and text.endswith("1"):
        return "residue_cliques", represent_residue_cliques(m, n)
    runs = _runs(text)
    shape = "".join(ch for ch, _ in runs)
    if shape in ("01", "10", "010"):
        k = runs[0][1] if runs[0][0] == "0" else 0
        m0 = runs[-1][1] if runs[-1][0] == "0" else 0
        l = ones
        if m0 == 0:
            return "0k1l", represent_0k1l(k, l, n)
        if k == 0:
            return "1l0m", represent_1l0m(l, m0, n)
        return "0k1l0m", represent_0k1l0m(k, l, m0, n)
    if ones == m - 1:
        k = text.index("0") + 1
        if gcd(k, m) == 1 or 2 * k == m:
            return "1k01mk", represent_1k01mk(k, m, n)
    return None


def construct_for_graph(g: LabeledGraph) -> tuple[str, Word] | None:
    """Constructions that only look at the graph itself."""
    if g.is_forest():
        return "forest", represent_forest(g)
    return None
