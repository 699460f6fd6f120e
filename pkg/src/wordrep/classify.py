"""Index of word-representability, the divisor sieve and family scans.

Every classification goes through :func:`classify_instance`, which tries,
in order: the cache, the divisor sieve (Toeplitz patterns only), an
explicit construction, and finally the exhaustive orientation search.
Heredity of word-representability under induced subgraphs justifies both
the sieve and stopping an index scan at the first refutation.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from .cache import CacheRecord, ResultCache
from .constructions import construct_for_graph, construct_for_pattern
from .graphs import LabeledGraph, RiordanSpec, ToeplitzPattern, build_riordan_graph, build_toeplitz, subsample_pattern
from .semitransitive import Decision, decide
from .words import format_word, verify_representant

log = logging.getLogger(__name__)

Source = Union[ToeplitzPattern, RiordanSpec]


def parse_source(text: str) -> Source:
    text = text.strip()
    if text and set(text) <= {"0", "1"}:
        return ToeplitzPattern.parse(text)
    return RiordanSpec.parse(text)


def source_graph(source: Source, n: int) -> LabeledGraph:
    if isinstance(source, ToeplitzPattern):
        return build_toeplitz(source, n)
    return build_riordan_graph(source, n)


def orientation_artifact(decision: Decision) -> Optional[dict]:
    if decision.orientation is None:
        return None
    return {"orientation": [list(a) for a in decision.orientation.arcs]}


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def record_from_decision(source_text: str, n: int, decision: Decision, start: float) -> Optional[CacheRecord]:
    if decision.representable is None:
        return None
    return CacheRecord(source_text, n, decision.status, decision.method,
                       _elapsed_ms(start), orientation_artifact(decision))


def try_construction(source: Source, n: int, graph: LabeledGraph | None = None) -> Optional[CacheRecord]:
    """A verified explicit word for the instance, when a construction applies."""
    start = time.perf_counter()
    graph = graph or source_graph(source, n)
    if isinstance(source, ToeplitzPattern):
        found = construct_for_pattern(source, n)
    else:
        found = construct_for_graph(graph)
    if found is None:
        return None
    name, word = found
    if not verify_representant(word, graph).ok:
        log.error("construction %s failed to verify for %s at n=%d", name, source, n)
        return None
    return CacheRecord(source.text, n, "representable", f"construction:{name}",
                       _elapsed_ms(start), {"word": format_word(word)})


@dataclass
class SieveRefutation:
    d: int
    sub_record: CacheRecord


def divisor_order(m: int, n: int) -> list[int]:
    """Divisors d > 1 of m, cheapest sub-instance (smallest n // d) first."""
    ds = [d for d in range(2, m + 1) if m % d == 0]
    return sorted(ds, key=lambda d: (n // d, d))


def sieve(
    pattern: ToeplitzPattern | str,
    n: int,
    cache: ResultCache | None = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> Optional[SieveRefutation]:
    """Refute G_n(pattern) through a non-representable subsampled pattern.

    Returns None when no divisor gives a refutation; that is inconclusive.
    """
    if isinstance(pattern, str):
        pattern = ToeplitzPattern.parse(pattern)
    cache = cache if cache is not None else ResultCache()
    for d in divisor_order(pattern.m, n):
        sub_n = n // d
        if sub_n < 1:
            continue
        sub = subsample_pattern(pattern, d)
        rec = classify_instance(sub, sub_n, cache, budget=budget, workers=workers)
        if rec is not None and rec.status == "non_representable":
            return SieveRefutation(d, rec)
    return None


def classify_instance(
    source: Source | str,
    n: int,
    cache: ResultCache | None = None,
    budget: Optional[int] = None,
    workers: int = 1,
    use_sieve: bool = True,
) -> Optional[CacheRecord]:
    """Classify one instance; None means the search budget ran out."""
    if isinstance(source, str):
        source = parse_source(source)
    cache = cache if cache is not None else ResultCache()
    hit = cache.get(source.text, n)
    if hit is not None:
        return hit
    start = time.perf_counter()
    record = None
    if use_sieve and isinstance(source, ToeplitzPattern):
        ref = sieve(source, n, cache, budget=budget, workers=workers)
        if ref is not None:
            record = CacheRecord(
                source.text, n, "non_representable", f"sieve:d={ref.d}", _elapsed_ms(start),
                {"sub_source": ref.sub_record.source, "sub_n": ref.sub_record.n},
            )
    graph = None
    if record is None:
        graph = source_graph(source, n)
        record = try_construction(source, n, graph)
    if record is None:
        decision = decide(graph, budget=budget, workers=workers)
        record = record_from_decision(source.text, n, decision, start)
        if record is None:
            log.info("budget exhausted for %s at n=%d", source.text, n)
            return None
    cache.put(record)
    return record


@dataclass
class IwrResult:
    kind: str  # "exact" | "at_least"
    value: int
    inconclusive: bool = False  # at_least because a budget ran out
    records: list[CacheRecord] = field(default_factory=list)

    def __str__(self) -> str:
        s = f"{self.kind}({self.value})"
        return s + " [inconclusive: search budget exhausted]" if self.inconclusive else s


def iwr(
    source: Source | str,
    cap: int,
    cache: ResultCache | None = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> IwrResult:
    """Largest n <= cap with G_n representable, scanning n = 5, 6, ..."""
    if cap < 5:
        raise ValueError("cap must be at least 5: every graph on five vertices is representable")
    if isinstance(source, str):
        source = parse_source(source)
    cache = cache if cache is not None else ResultCache()
    records = []
    for n in range(5, cap + 1):
        rec = classify_instance(source, n, cache, budget=budget, workers=workers)
        if rec is None:
            return IwrResult("at_least", n - 1, inconclusive=True, records=records)
        records.append(rec)
        if rec.status == "non_representable":
            return IwrResult("exact", n - 1, records=records)
    return IwrResult("at_least", cap, records=records)


# --- family scans ----------------------------------------------------------------


def _decide_worker(args):
    text, n, budget = args
    start = time.perf_counter()
    source = parse_source(text)
    decision = decide(source_graph(source, n), budget=budget)
    rec = record_from_decision(text, n, decision, start)
    return rec.to_dict() if rec is not None else None


@dataclass
class ScanSummary:
    m: int
    n: int
    counts: dict[str, int]
    non_representable: list[str]
    methods: dict[str, int]
    records: list[CacheRecord]


def all_patterns(m: int) -> list[str]:
    return [format(i, f"0{m}b") for i in range(2 ** m)]


def scan_family(
    m: int,
    n: int,
    cache: ResultCache | None = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> ScanSummary:
    """Classify all 2^m patterns of length m at size n, sieve first."""
    if m < 1:
        raise ValueError("pattern length must be positive")
    cache = cache if cache is not None else ResultCache()
    results: dict[str, Optional[CacheRecord]] = {}
    pending = []
    for p in all_patterns(m):
        hit = cache.get(p, n)
        if hit is not None:
            results[p] = hit
            continue
        pattern = ToeplitzPattern.parse(p)
        start = time.perf_counter()
        ref = sieve(pattern, n, cache, budget=budget)
        if ref is not None:
            rec = CacheRecord(p, n, "non_representable", f"sieve:d={ref.d}", _elapsed_ms(start),
                              {"sub_source": ref.sub_record.source, "sub_n": ref.sub_record.n})
        else:
            rec = try_construction(pattern, n)
        if rec is None:
            pending.append(p)
        else:
            cache.put(rec)
            results[p] = rec
    if pending:
        jobs = [(p, n, budget) for p in pending]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                outs = list(pool.map(_decide_worker, jobs, chunksize=4))
        else:
            outs = [_decide_worker(j) for j in jobs]
        for p, out in zip(pending, outs):
            rec = CacheRecord.from_dict(out) if out is not None else None
            if rec is not None:
                cache.put(rec)
            results[p] = rec
    counts = {"representable": 0, "non_representable": 0, "unknown": 0}
    methods: dict[str, int] = {}
    nonrep = []
    records = []
    for p in all_patterns(m):
        rec = results[p]
        if rec is None:
            counts["unknown"] += 1
            continue
        records.append(rec)
        counts[rec.status] += 1
        family = rec.method.split(":")[0] if rec.method.startswith("sieve") else rec.method
        methods[family] = methods.get(family, 0) + 1
        if rec.status == "non_representable":
            nonrep.append(p)
    return ScanSummary(m, n, counts, nonrep, methods, records)
