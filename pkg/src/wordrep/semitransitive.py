"""Semi-transitive orientations and the exhaustive decision procedure.

A graph is word-representable iff it has an acyclic orientation without
shortcuts. A shortcut is a directed path ``v1 -> ... -> vk`` together with
the arc ``v1 -> vk`` whose vertex set contains a non-adjacent pair.

Shortcut test
-------------
In an acyclic digraph a complete induced subgraph on the vertices of a
directed path is automatically transitive, so only non-adjacent pairs
matter. Two vertices lie on a common ``u``-``v`` path exactly when they are
comparable under reachability and both sit in the interval
``[u, v] = {x : u =>* x =>* v}``. Hence an orientation has a shortcut iff
some arc ``u -> v`` has an interval containing a comparable non-adjacent
pair. ``tests/test_semitransitive.py`` checks this against a literal
enumeration of directed paths.

Search
------
The search state is the reachability order generated by the arcs chosen so
far. An edge whose endpoints are already comparable has a forced direction
(the other one closes a cycle) and adds nothing to the order, so only edges
with incomparable endpoints are branched on, in lexicographic order. A
state is dead as soon as some edge ``{a, b}`` of the graph with ``a =>+ b``
has a comparable non-adjacent pair in ``[a, b]``: orienting it ``a -> b``
makes a shortcut and ``b -> a`` makes a cycle, and reachability only grows
deeper in the tree. The first branching edge is fixed to point from its
smaller label, since reversing every arc maps semi-transitive orientations
to semi-transitive orientations.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from .errors import NotAcyclic, TooLarge
from .graphs import LabeledGraph
from .words import Word, verify_representant

log = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    base: LabeledGraph
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.arcs:
            if not self.base.adjacent(u, v):
                raise ValueError(f"arc {u}->{v} is not an edge of the base graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key[0]}-{key[1]} is directed twice")
            seen.add(key)
        if len(seen) != self.base.edge_count:
            missing = [e for e in self.base.edges() if e not in seen]
            raise ValueError(f"edges {missing} are not directed")

    @classmethod
    def from_arcs(cls, base: LabeledGraph, arcs: Iterable[Arc]) -> "Orientation":
        return cls(base, tuple(sorted(tuple(a) for a in arcs)))

    @classmethod
    def by_key(cls, base: LabeledGraph, key) -> "Orientation":
        """Orient every edge from the endpoint with the smaller ``key(v)``; ties by label."""
        arcs = []
        for u, v in base.edges():
            arcs.append((u, v) if (key(u), u) <= (key(v), v) else (v, u))
        return cls.from_arcs(base, arcs)

    def reversed(self) -> "Orientation":
        return Orientation.from_arcs(self.base, ((v, u) for u, v in self.arcs))

    def successors(self) -> list[int]:
        """Out-neighbourhood bitmasks, 0-based."""
        out = [0] * self.base.n
        for u, v in self.arcs:
            out[u - 1] |= 1 << (v - 1)
        return out

    def reachability(self) -> list[int]:
        """Strict reachability bitmasks (0-based); raises NotAcyclic on a cycle."""
        n = self.base.n
        out = self.successors()
        indeg = [0] * n
        for u, v in self.arcs:
            indeg[v - 1] += 1
        order = []
        stack = [v for v in range(n) if indeg[v] == 0]
        while stack:
            v = stack.pop()
            order.append(v)
            s = out[v]
            while s:
                low = s & -s
                w = low.bit_length() - 1
                s ^= low
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        if len(order) != n:
            raise NotAcyclic("orientation contains a directed cycle")
        reach = [0] * n
        for v in reversed(order):
            r = out[v]
            s = out[v]
            while s:
                low = s & -s
                s ^= low
                r |= reach[low.bit_length() - 1]
            reach[v] = r
        return reach

    def is_acyclic(self) -> bool:
        try:
            self.reachability()
        except NotAcyclic:
            return False
        return True


@dataclass(frozen=True)
class ShortcutWitness:
    edge: Arc  # the arc u -> v closing the semi-cycle
    pair: Tuple[int, int]  # x =>+ y, both in [u, v], x and y non-adjacent


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_shortcut(o: Orientation) -> Optional[ShortcutWitness]:
    """Return a shortcut witness, or None if ``o`` is semi-transitive."""
    reach = o.reachability()
    n = o.base.n
    full = (1 << n) - 1
    reached_by = [0] * n
    for x in range(n):
        for y in _iter_bits(reach[x]):
            reached_by[y] |= 1 << x
    nonadj = [full & ~o.base.rows[v] & ~(1 << v) for v in range(n)]
    for u, v in sorted(o.arcs):
        a, b = u - 1, v - 1
        interval = (reach[a] | 1 << a) & (reached_by[b] | 1 << b)
        for x in _iter_bits(interval):
            bad = reach[x] & interval & nonadj[x]
            if bad:
                y = (bad & -bad).bit_length() - 1
                return ShortcutWitness((u, v), (x + 1, y + 1))
    return None


def is_shortcut_free(o: Orientation) -> bool:
    return find_shortcut(o) is None


# --- search ------------------------------------------------------------------


@dataclass
class SearchStats:
    nodes_explored: int = 0
    prunes: int = 0
    elapsed: float = 0.0
    parallel_workers: int = 1

    def as_dict(self) -> dict:
        return {
            "nodes_explored": self.nodes_explored,
            "prunes": self.prunes,
            "elapsed": round(self.elapsed, 6),
            "parallel_workers": self.parallel_workers,
        }


@dataclass
class SearchResult:
    status: str  # "found" | "none" | "budget_exhausted"
    orientation: Optional[Orientation] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetExhausted(Exception):
    pass


class _Engine:
    """Backtracking over reachability orders; vertices are 0-based bits."""

    def __init__(self, rows: Sequence[int], budget: Optional[int] = None):
        n = len(rows)
        full = (1 << n) - 1
        self.n = n
        self.adj = list(rows)
        self.nonadj = [full & ~rows[v] & ~(1 << v) for v in range(n)]
        self.edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1]
        self.budget = budget
        self.nodes = 0
        self.prunes = 0

    def add_arc(self, R: list[int], P: list[int], u: int, v: int) -> bool:
        """Add ``u -> v`` to the order in place; return False if the state is dead."""
        if R[v] >> u & 1:
            return False
        A = P[u] | 1 << u
        D = R[v] | 1 << v
        for a in _iter_bits(A):
            R[a] |= D
        for b in _iter_bits(D):
            P[b] |= A
        # Every interval that grew has its lower end in A and upper end in D.
        adj, nonadj = self.adj, self.nonadj
        for a in _iter_bits(A):
            up = R[a] | 1 << a
            for b in _iter_bits(adj[a] & D):
                interval = up & (P[b] | 1 << b)
                s = interval
                while s:
                    low = s & -s
                    s ^= low
                    if R[low.bit_length() - 1] & interval & nonadj[low.bit_length() - 1]:
                        return False
        return True

    def next_branch(self, idx: int, R: list[int]) -> int:
        edges = self.edges
        while idx < len(edges):
            u, v = edges[idx]
            if not (R[u] >> v & 1 or R[v] >> u & 1):
                return idx
            idx += 1
        return idx

    def children(self, idx: int, R: list[int], P: list[int]):
        """Live child states of a branching state, in search order."""
        u, v = self.edges[idx]
        choices = ((u, v),) if idx == 0 else ((u, v), (v, u))
        for a, b in choices:
            R2, P2 = R[:], P[:]
            if self.add_arc(R2, P2, a, b):
                yield idx + 1, R2, P2
            else:
                self.prunes += 1

    def dfs(self, idx: int, R: list[int], P: list[int]) -> Optional[list[int]]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        idx = self.next_branch(idx, R)
        if idx == len(self.edges):
            return R
        for child in self.children(idx, R, P):
            found = self.dfs(*child)
            if found is not None:
                return found
        return None

    def frontier(self, target: int):
        """Split the tree into ordered subproblems, preserving DFS order."""
        level = [(0, [0] * self.n, [0] * self.n)]
        while 0 < len(level) < target:
            nxt = []
            expanded = False
            for idx, R, P in level:
                idx = self.next_branch(idx, R)
                if idx == len(self.edges):
                    nxt.append((idx, R, P))
                    continue
                self.nodes += 1
                expanded = True
                nxt.extend(self.children(idx, R, P))
            level = nxt
            if not expanded:
                break
        return level

    def arcs_from(self, R: list[int]) -> list[Arc]:
        return [(u + 1, v + 1) if R[u] >> v & 1 else (v + 1, u + 1) for u, v in self.edges]


def _solve_subtree(rows: Tuple[int, ...], idx: int, R: list[int], P: list[int], budget):
    engine = _Engine(rows, budget)
    try:
        found = engine.dfs(idx, R, P)
    except _BudgetExhausted:
        return "budget_exhausted", None, engine.nodes, engine.prunes
    if found is None:
        return "none", None, engine.nodes, engine.prunes
    return "found", engine.arcs_from(found), engine.nodes, engine.prunes


def find_semi_transitive_orientation(
    g: LabeledGraph, budget: Optional[int] = None, workers: int = 1
) -> SearchResult:
    """Exhaustively search for a semi-transitive orientation of ``g``.

    ``budget`` caps explored nodes (per subproblem when ``workers > 1``).
    With several workers the top of the tree is split into subproblems that
    are solved in parallel but combined in DFS order, so the returned
    orientation is the same as the sequential one.
    """
    start = time.perf_counter()
    stats = SearchStats(parallel_workers=max(1, workers))
    rows = tuple(g.rows)
    if workers <= 1:
        status, arcs, nodes, prunes = _solve_subtree(rows, 0, [0] * g.n, [0] * g.n, budget)
        stats.nodes_explored, stats.prunes = nodes, prunes
    else:
        engine = _Engine(rows)
        parts = engine.frontier(8 * workers)
        stats.nodes_explored, stats.prunes = engine.nodes, engine.prunes
        status, arcs = "none", None
        exhausted = False
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_solve_subtree, rows, idx, R, P, budget) for idx, R, P in parts]
            for fut in futures:
                st, a, nodes, prunes = fut.result()
                stats.nodes_explored += nodes
                stats.prunes += prunes
                if st == "found":
                    status, arcs = st, a
                    break
                exhausted |= st == "budget_exhausted"
            for fut in futures:
                fut.cancel()
        if status != "found" and exhausted:
            status = "budget_exhausted"
        stats.nodes_explored = max(stats.nodes_explored, 1)
    stats.elapsed = time.perf_counter() - start
    orientation = Orientation.from_arcs(g, arcs) if arcs is not None else None
    log.debug("search n=%d edges=%d -> %s %s", g.n, g.edge_count, status, stats.as_dict())
    return SearchResult(status, orientation, stats)


@dataclass
class Decision:
    status: str  # "representable" | "non_representable" | "unknown"
    method: str
    word: Optional[Word] = None
    orientation: Optional[Orientation] = None
    stats: Optional[SearchStats] = None

    @property
    def representable(self) -> Optional[bool]:
        if self.status == "unknown":
            return None
        return self.status == "representable"


def decide(g: LabeledGraph, budget: Optional[int] = None, workers: int = 1) -> Decision:
    """Word-representability of ``g`` via the orientation search.

    ``status`` is ``"unknown"`` only when a node budget ran out.
    """
    result = find_semi_transitive_orientation(g, budget=budget, workers=workers)
    if result.found:
        assert is_shortcut_free(result.orientation), "search returned a non-certificate"
        return Decision("representable", "semi_transitive_search",
                        orientation=result.orientation, stats=result.stats)
    if result.status == "none":
        return Decision("non_representable", "semi_transitive_search", stats=result.stats)
    return Decision("unknown", "semi_transitive_search", stats=result.stats)


# --- bounded word search -------------------------------------------------------


def brute_force_word_search(g: LabeledGraph, max_uniformity: int = 3, max_n: int = 6) -> Optional[Word]:
    """Look for a k-uniform representant, k = 1..max_uniformity.

    Words are generated letter by letter; an adjacent pair is abandoned as
    soon as its restriction repeats a letter. Only words starting with 1 are
    tried: any rotation of a uniform representant is again a representant.
    Returns None when nothing is found within the bound, which proves nothing.
    """
    n = g.n
    if n > max_n:
        raise TooLarge(f"bounded word search is limited to {max_n} vertices, got {n}")
    if n == 0:
        return ()
    nbrs = [g.neighbors(v) for v in range(1, n + 1)]
    for k in range(1, max_uniformity + 1):
        word = _uniform_search(g, nbrs, k)
        if word is not None:
            return word
    return None


def _uniform_search(g: LabeledGraph, nbrs, k: int) -> Optional[Word]:
    n = g.n
    length = n * k
    remaining = [k] * (n + 1)
    last = [-1] * (n + 1)
    word: list[int] = []

    def placeable(a: int) -> bool:
        if last[a] < 0:
            return True
        la = last[a]
        return all(last[b] > la for b in nbrs[a - 1])

    def rec() -> Optional[Word]:
        if len(word) == length:
            w = tuple(word)
            return w if verify_representant(w, g).ok else None
        for a in range(1, n + 1) if word else (1,):
            if remaining[a] and placeable(a):
                prev = last[a]
                word.append(a)
                remaining[a] -= 1
                last[a] = len(word) - 1
                found = rec()
                if found is not None:
                    return found
                word.pop()
                remaining[a] += 1
                last[a] = prev
        return None

    return rec()


def all_acyclic_orientations(g: LabeledGraph):
    """Every acyclic orientation of ``g`` (2^|E| candidates; small graphs only)."""
    edges = list(g.edges())
    for flips in itertools.product((False, True), repeat=len(edges)):
        o = Orientation.from_arcs(g, ((v, u) if f else (u, v) for (u, v), f in zip(edges, flips)))
        if o.is_acyclic():
            yield o


def parse_orientation(lines: Iterable[str]) -> list[Arc]:
    """Lines ``"u v"`` meaning ``u -> v``; blanks and '#' comments ignored."""
    arcs = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace("->", " ").split()
        if len(parts) != 2:
            raise ValueError(f"bad orientation line {line!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return arcs
