"""Slow, obviously-correct reference implementations used only by tests.

Nothing here imports the search engine or the reachability shortcut test.
"""

from __future__ import annotations

import itertools
from math import comb


def catalan_numbers(count: int) -> list[int]:
    c = [1]
    while len(c) < count:
        k = len(c)
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c[:count]


def binomial_parity(i: int, j: int) -> int:
    return comb(i, j) % 2 if 0 <= j <= i else 0


def integer_series_div(num: list[int], den: list[int], order: int) -> list[int]:
    """Exact integer power-series quotient (den[0] == 1)."""
    num = num + [0] * order
    c = []
    for i in range(order):
        c.append(num[i] - sum(den[j] * c[i - j] for j in range(1, min(i, len(den) - 1) + 1)))
    return c


def toeplitz_edges(pattern: str, n: int) -> set[tuple[int, int]]:
    m = len(pattern)
    return {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            if pattern[(j - i - 1) % m] == "1"}


def directed_paths(succ: dict[int, set[int]]):
    """Every directed path (as a vertex tuple, length >= 2) in an acyclic digraph."""
    def extend(path):
        yield path
        for w in sorted(succ[path[-1]]):
            yield from extend(path + (w,))

    for v in sorted(succ):
        for w in sorted(succ[v]):
            yield from extend((v, w))


def naive_has_shortcut(n: int, arcs) -> bool:
    """For every path v1 -> ... -> vk with arc v1 -> vk, require arcs vi -> vj for all i < j."""
    arcset = set(map(tuple, arcs))
    succ = {v: set() for v in range(1, n + 1)}
    for u, v in arcset:
        succ[u].add(v)
    for path in directed_paths(succ):
        if len(path) < 3 or (path[0], path[-1]) not in arcset:
            continue
        for i, j in itertools.combinations(range(len(path)), 2):
            if (path[i], path[j]) not in arcset:
                return True
    return False


def naive_is_acyclic(n: int, arcs) -> bool:
    succ = {v: [] for v in range(1, n + 1)}
    for u, v in arcs:
        succ[u].append(v)
    state = {}

    def visit(v):
        state[v] = 1
        for w in succ[v]:
            if state.get(w) == 1:
                return False
            if w not in state and not visit(w):
                return False
        state[v] = 2
        return True

    return all(visit(v) for v in succ if v not in state)


def brute_force_semi_transitive(n: int, edges) -> bool:
    """Try all 2^|E| orientations against the literal definition."""
    edges = list(edges)
    for flips in itertools.product((False, True), repeat=len(edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        if naive_is_acyclic(n, arcs) and not naive_has_shortcut(n, arcs):
            return True
    return False


def alternates_by_restriction(word, x, y) -> bool:
    r = [a for a in word if a in (x, y)]
    return all(a != b for a, b in zip(r, r[1:]))


def wheel(k: int) -> tuple[int, list[tuple[int, int]]]:
    """W_k: a k-cycle on 1..k plus a hub k+1."""
    edges = [(i, i % k + 1) for i in range(1, k + 1)]
    edges = [(min(e), max(e)) for e in edges] + [(i, k + 1) for i in range(1, k + 1)]
    return k + 1, edges
