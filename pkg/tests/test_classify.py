import json
import logging

import pytest

from wordrep.cache import CacheRecord, ResultCache
from wordrep.classify import (
    all_patterns,
    classify_instance,
    divisor_order,
    iwr,
    parse_source,
    scan_family,
    sieve,
    source_graph,
)
from wordrep.errors import CorruptRecord
from wordrep.graphs import RiordanSpec, ToeplitzPattern, build_toeplitz, subsample_pattern
from wordrep.semitransitive import decide, is_shortcut_free, Orientation
from wordrep.words import parse_word, verify_representant


def test_record_round_trip():
    rec = CacheRecord("101111", 9, "non_representable", "semi_transitive_search", 12.5)
    assert CacheRecord.from_json(rec.to_json()) == rec
    rec2 = CacheRecord("110", 7, "representable", "construction:1l0m", 0.1, {"word": "1 2 3"})
    assert CacheRecord.from_dict(json.loads(rec2.to_json())) == rec2
    assert set(json.loads(rec.to_json())) == {"source", "n", "status", "method", "elapsed_ms"}


def test_record_invariants():
    with pytest.raises(CorruptRecord):
        CacheRecord("1", 3, "maybe", "x", 0.0)
    with pytest.raises(CorruptRecord):
        CacheRecord("1", 3, "non_representable", "construction:forest", 0.0)
    with pytest.raises(CorruptRecord):
        CacheRecord("01", 6, "non_representable", "sieve:d=2", 0.0)
    with pytest.raises(CorruptRecord):
        CacheRecord.from_dict({"source": "1", "n": 3, "status": "representable", "method": "m",
                               "elapsed_ms": 1, "extra": 0})


def test_cache_persistence_and_corruption(tmp_path, caplog):
    path = tmp_path / "c.jsonl"
    c = ResultCache(path)
    c.put(CacheRecord("110", 5, "representable", "construction:1l0m", 1.0))
    c.put(CacheRecord("101111", 9, "non_representable", "semi_transitive_search", 2.0))
    with path.open("a") as fh:
        fh.write("{not json\n")
        fh.write(json.dumps({"source": "1", "n": 2}) + "\n")
    c.put(CacheRecord("110", 5, "representable", "construction:1l0m", 3.0))
    with caplog.at_level(logging.WARNING):
        d = ResultCache(path)
    assert d.skipped == 2
    assert len(d) == 2
    assert d.get("110", 5).elapsed_ms == 3.0
    assert ("101111", 9) in d and ("101111", 8) not in d
    assert "corrupt" in caplog.text


def test_cache_sees_other_writers(tmp_path):
    path = tmp_path / "shared.jsonl"
    a, b = ResultCache(path), ResultCache(path)
    a.put(CacheRecord("1", 4, "representable", "construction:0k1l0m", 0.0))
    assert b.get("1", 4) is not None


def test_classification_is_cached(tmp_path):
    path = tmp_path / "c.jsonl"
    rec = classify_instance("101111", 9, ResultCache(path))
    assert rec.status == "non_representable" and rec.method == "semi_transitive_search"
    again = classify_instance("101111", 9, ResultCache(path))
    assert again == rec


def test_parse_source():
    assert isinstance(parse_source("0110"), ToeplitzPattern)
    assert isinstance(parse_source("pascal"), RiordanSpec)
    assert isinstance(parse_source("1/11;01/11"), RiordanSpec)


def test_divisor_order():
    assert divisor_order(12, 18) == [12, 6, 4, 3, 2]
    assert divisor_order(7, 20) == [7]
    assert divisor_order(1, 5) == []


def test_sieve_example():
    cache = ResultCache()
    ref = sieve("010001010101", 18, cache)
    assert ref is not None and ref.d == 2
    assert (ref.sub_record.source, ref.sub_record.n) == ("101111", 9)
    assert ref.sub_record.status == "non_representable"


def test_sieve_inconclusive():
    assert sieve("0110", 10) is None  # sub-patterns 10 and 0 are representable
    assert sieve("1101", 12) is None  # a 4-periodic pattern with representable halves


def test_sieve_soundness():
    cache = ResultCache()
    for p in all_patterns(6):
        for n in (10, 12, 14):
            ref = sieve(p, n, cache)
            if ref is None:
                continue
            g = build_toeplitz(p, n)
            sub = subsample_pattern(p, ref.d)
            assert decide(build_toeplitz(sub, n // ref.d)).status == "non_representable"
            assert decide(g).status == "non_representable", (p, n)


def test_divisor_chain_property():
    # a refutation of a subsampled pattern refutes every multiple that extends it
    cache = ResultCache()
    for sub in ("101111", "10011111"):
        for d in (2, 3):
            lifted = "".join(("0" * (d - 1)) + c for c in sub)
            assert subsample_pattern(lifted, d).text == sub
            ref = sieve(lifted, 9 * d, cache)
            assert ref is not None and ref.d == d


def test_iwr_values():
    cache = ResultCache()
    assert (iwr("101111", 15, cache).kind, iwr("101111", 15, cache).value) == ("exact", 8)
    assert str(iwr("10011111", 15, cache)) == "exact(8)"
    r = iwr("110", 12, cache)
    assert (r.kind, r.value) == ("at_least", 12) and str(r) == "at_least(12)"
    with pytest.raises(ValueError):
        iwr("110", 4)


def test_iwr_budget_inconclusive():
    r = iwr("1110011", 14, ResultCache(), budget=3)
    assert r.inconclusive and r.kind == "at_least"


def test_riordan_source_records_carry_certificates():
    cache = ResultCache()
    r = iwr("pascal", 14, cache)
    assert str(r) == "exact(11)"
    for rec in r.records:
        g = source_graph(parse_source("pascal"), rec.n)
        if rec.status == "representable" and rec.method.startswith("construction"):
            assert verify_representant(parse_word(rec.artifact["word"]), g).ok
        elif rec.status == "representable":
            o = Orientation.from_arcs(g, [tuple(a) for a in rec.artifact["orientation"]])
            assert is_shortcut_free(o)
    assert r.records[-1].status == "non_representable"


def test_scan_small_families():
    s = scan_family(1, 8)
    assert s.counts == {"representable": 2, "non_representable": 0, "unknown": 0}
    s = scan_family(5, 8)
    assert s.counts["representable"] == 32 and not s.non_representable


def test_scan_m9_n9(tmp_path):
    s = scan_family(9, 9, ResultCache(tmp_path / "scan.jsonl"))
    assert sum(s.counts.values()) == 2 ** 9
    assert s.counts["unknown"] == 0
    assert "101111101" in s.non_representable
    assert "100111111" in s.non_representable
    for p in s.non_representable:
        assert decide(build_toeplitz(p, 9)).status == "non_representable"


def test_scan_parallel_matches_sequential():
    a = scan_family(6, 10, workers=1)
    b = scan_family(6, 10, workers=3)
    assert a.counts == b.counts and a.non_representable == b.non_representable
