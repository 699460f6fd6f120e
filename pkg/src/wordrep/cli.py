"""Command-line front end: ``wordrep <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
Representability found by ``check`` is reported in the payload, not the
exit status.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .cache import CacheRecord, ResultCache
from .classify import (
    iwr,
    orientation_artifact,
    parse_source,
    scan_family,
    source_graph,
    try_construction,
)
from .errors import WordRepError
from .graphs import LabeledGraph, RiordanSpec, ToeplitzPattern
from .semitransitive import (
    Orientation,
    brute_force_word_search,
    decide,
    find_shortcut,
    parse_orientation,
)
from .series import parse_series
from .words import format_word, parse_word, read_word_file, verify_representant

log = logging.getLogger("wordrep")


class DomainFailure(Exception):
    """Raised by subcommands for a clean exit 1 with a message."""


# --- graph selection ----------------------------------------------------------------


def _add_source_args(p: argparse.ArgumentParser, edges: bool = True) -> None:
    g = p.add_argument_group("graph")
    g.add_argument("--pattern", help="Toeplitz pattern a_1...a_m, e.g. 10011111")
    g.add_argument("--riordan", help="builtin Riordan pair: pascal, catalan, fibonacci")
    g.add_argument("--g", dest="g_spec", help="series spec for g, e.g. 1/11 or catalan")
    g.add_argument("--f", dest="f_spec", help="series spec for f, e.g. 01/11 or catalan_f")
    g.add_argument("--n", type=int, help="number of vertices")
    if edges:
        g.add_argument("--edges", help='edge list "1-2,2-3,..." (vertices 1..n)')
        g.add_argument("--matrix-file", help="file of n lines of n '0'/'1' characters")


def _source_text(args, parser) -> Optional[str]:
    picked = [x for x in ("pattern", "riordan") if getattr(args, x, None)]
    if args.g_spec or args.f_spec:
        if not (args.g_spec and args.f_spec):
            parser.error("--g and --f must be given together")
        picked.append("g/f")
    if len(picked) > 1:
        parser.error("choose one of --pattern, --riordan, --g/--f")
    if not picked:
        return None
    if args.pattern:
        ToeplitzPattern.parse(args.pattern)
        return args.pattern
    if args.riordan:
        try:
            return RiordanSpec.parse(args.riordan).text
        except WordRepError:
            parser.error(f"--riordan: unknown builtin {args.riordan!r}")
    return RiordanSpec(parse_series(args.g_spec), parse_series(args.f_spec)).text


def _resolve_graph(args, parser) -> tuple[str, LabeledGraph]:
    """Return ``(source_text, graph)`` from the graph option group."""
    text = _source_text(args, parser)
    edges = getattr(args, "edges", None)
    matrix = getattr(args, "matrix_file", None)
    if sum(x is not None for x in (text, edges, matrix)) != 1:
        parser.error("give exactly one graph: --pattern, --riordan, --g/--f, --edges or --matrix-file")
    if matrix:
        g = LabeledGraph.from_matrix_text(Path(matrix).read_text())
        return f"matrix:{matrix}", g
    if edges is not None:
        pairs = []
        for tok in edges.split(","):
            tok = tok.strip()
            if not tok:
                continue
            a, sep, b = tok.partition("-")
            if not sep:
                parser.error(f"--edges: bad pair {tok!r}")
            try:
                pairs.append((int(a), int(b)))
            except ValueError:
                parser.error(f"--edges: bad pair {tok!r}")
        n = args.n if args.n is not None else max((max(p) for p in pairs), default=0)
        return f"edges:{edges}", LabeledGraph.from_edges(n, pairs)
    if args.n is None:
        parser.error("--n is required with --pattern/--riordan/--g")
    if args.n < 1:
        parser.error("--n must be positive")
    return text, source_graph(parse_source(text), args.n)


def _workers(args, parser) -> int:
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    return args.workers


# --- subcommands ---------------------------------------------------------------------


def cmd_build(args, parser, out) -> int:
    source, g = _resolve_graph(args, parser)
    if args.format == "matrix":
        out.write(g.to_matrix_text())
    elif args.format == "dot":
        out.write(g.to_dot())
    elif args.format == "json":
        out.write(json.dumps({"source": source, "n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n")
    else:
        out.write(f"{source} on {g.n} vertices, {g.edge_count} edges\n")
        out.write(" ".join(f"{u}-{v}" for u, v in g.edges()) + "\n")
    if args.plot:
        from .plotting import plot_adjacency

        plot_adjacency(g, args.plot, title=f"{source}, n = {g.n}")
    return 0


def cmd_represent(args, parser, out) -> int:
    workers = _workers(args, parser)
    source, g = _resolve_graph(args, parser)
    start = time.perf_counter()
    record = None
    if not source.startswith(("edges:", "matrix:")):
        record = try_construction(parse_source(source), g.n, g)
    if record is not None:
        word = record.artifact["word"]
        method = record.method
        orientation = None
    else:
        decision = decide(g, budget=args.budget, workers=workers)
        if decision.status == "non_representable":
            raise DomainFailure(f"{source} on {g.n} vertices is not word-representable (exhaustive search)")
        if decision.status == "unknown":
            raise DomainFailure("search budget exhausted before a decision was reached")
        orientation = decision.orientation
        method = "semi_transitive_search"
        found = brute_force_word_search(g, max_uniformity=3) if g.n <= 6 else None
        word = format_word(found) if found is not None else None
        if word is not None:
            method = "semi_transitive_search+word_search"
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    if args.format == "json":
        artifact = {}
        if word is not None:
            artifact["word"] = word
        if orientation is not None:
            artifact["orientation"] = [list(a) for a in orientation.arcs]
        rec = CacheRecord(source, g.n, "representable", method, elapsed, artifact or None)
        out.write(rec.to_json() + "\n")
        return 0
    out.write(f"# method: {method}\n")
    if orientation is not None:
        out.write("# orientation: " + " ".join(f"{u}->{v}" for u, v in orientation.arcs) + "\n")
    if word is None:
        out.write("# no explicit word; the orientation above is a semi-transitive certificate\n")
    else:
        out.write(word + "\n")
    return 0


def cmd_verify(args, parser, out) -> int:
    _, g = _resolve_graph(args, parser)
    if (args.word is None) == (args.word_file is None):
        parser.error("give exactly one of --word or --word-file")
    if args.word is not None:
        words = [parse_word(args.word)]
    else:
        fh = sys.stdin if args.word_file == "-" else open(args.word_file, encoding="utf-8")
        with fh:
            words = read_word_file(fh)
        if not words:
            raise DomainFailure("no words found in input")
    all_ok = True
    for w in words:
        verdict = verify_representant(w, g)
        all_ok &= verdict.ok
        out.write(verdict.describe() + "\n")
    return 0 if all_ok else 1


def _check_payload(source: str, g: LabeledGraph, decision, elapsed_ms: float) -> dict:
    artifact = orientation_artifact(decision) or {}
    artifact["stats"] = decision.stats.as_dict()
    if decision.status == "unknown":
        return {"source": source, "n": g.n, "status": "unknown", "method": decision.method,
                "elapsed_ms": elapsed_ms, "artifact": artifact}
    return CacheRecord(source, g.n, decision.status, decision.method, elapsed_ms, artifact).to_dict()


def cmd_check(args, parser, out) -> int:
    workers = _workers(args, parser)
    source, g = _resolve_graph(args, parser)
    start = time.perf_counter()
    decision = decide(g, budget=args.budget, workers=workers)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    payload = _check_payload(source, g, decision, elapsed)
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
        return 0
    out.write(f"status: {decision.status}\n")
    if decision.orientation is not None:
        out.write("certificate: orientation " + " ".join(f"{u}->{v}" for u, v in decision.orientation.arcs) + "\n")
    else:
        out.write("certificate: none\n")
    out.write("stats: " + json.dumps(decision.stats.as_dict()) + "\n")
    return 0


def cmd_orient(args, parser, out) -> int:
    _, g = _resolve_graph(args, parser)
    if args.verify:
        fh = sys.stdin if args.verify == "-" else open(args.verify, encoding="utf-8")
        with fh:
            arcs = parse_orientation(fh)
        try:
            o = Orientation.from_arcs(g, arcs)
        except ValueError as exc:
            raise DomainFailure(f"invalid orientation: {exc}") from None
        witness = find_shortcut(o)
        if witness is None:
            out.write("ok: semi-transitive\n")
            return 0
        (u, v), (x, y) = witness.edge, witness.pair
        out.write(f"shortcut: arc {u}->{v} with non-adjacent {x}, {y} on a common path\n")
        return 1
    decision = decide(g, budget=args.budget, workers=_workers(args, parser))
    if decision.orientation is None:
        raise DomainFailure(f"no semi-transitive orientation ({decision.status})")
    for u, v in decision.orientation.arcs:
        out.write(f"{u} {v}\n")
    return 0


def _cache_from(args) -> ResultCache:
    return ResultCache(args.cache) if args.cache else ResultCache()


def cmd_iwr(args, parser, out) -> int:
    text = _source_text(args, parser)
    if text is None:
        parser.error("iwr needs --pattern, --riordan or --g/--f")
    if args.cap < 5:
        parser.error("--cap must be at least 5")
    result = iwr(text, args.cap, _cache_from(args), budget=args.budget, workers=_workers(args, parser))
    if args.format == "json":
        out.write(json.dumps({
            "source": text,
            "cap": args.cap,
            "iwr": {"kind": result.kind, "value": result.value, "inconclusive": result.inconclusive},
            "records": [r.to_dict() for r in result.records],
        }) + "\n")
    else:
        out.write(f"IWR({text}) = {result}\n")
        for r in result.records:
            out.write(f"  n={r.n:<3d} {r.status:<18s} {r.method}\n")
    if args.plot:
        from .plotting import plot_iwr

        plot_iwr(text, result, args.plot)
    return 0


def cmd_scan(args, parser, out) -> int:
    if args.m < 1 or args.n < 1:
        parser.error("--m and --n must be positive")
    summary = scan_family(args.m, args.n, _cache_from(args), budget=args.budget,
                          workers=_workers(args, parser))
    if args.format == "json":
        out.write(json.dumps({
            "m": summary.m, "n": summary.n, "counts": summary.counts,
            "methods": summary.methods, "non_representable": summary.non_representable,
        }) + "\n")
    else:
        out.write(f"m={summary.m} n={summary.n} " +
                  " ".join(f"{k}={v}" for k, v in summary.counts.items()) + "\n")
        for p in summary.non_representable:
            out.write(f"non_representable {p}\n")
    if args.report:
        from .plotting import plot_scan

        report = Path(args.report)
        report.mkdir(parents=True, exist_ok=True)
        stem = f"scan_m{summary.m}_n{summary.n}"
        with (report / f"{stem}.tsv").open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, delimiter="\t")
            writer.writerow(["pattern", "n", "status", "method", "elapsed_ms"])
            for r in summary.records:
                writer.writerow([r.source, r.n, r.status, r.method, r.elapsed_ms])
        plot_scan(summary, report / f"{stem}.png")
    return 0


# --- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordrep", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph")
    _add_source_args(p)
    p.add_argument("--format", choices=("text", "json", "matrix", "dot"), default="matrix")
    p.add_argument("--plot", help="also render the adjacency matrix to this image file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("represent", help="produce a word-representant")
    _add_source_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, help="node budget for the fallback search")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="check that words represent a graph")
    _add_source_args(p)
    p.add_argument("--word", help='word as space-separated labels, e.g. "1 4 2 1 3 2 4 3"')
    p.add_argument("--word-file", help="file with one word per line ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="decide word-representability by exhaustive search")
    _add_source_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, help="node budget (per subproblem with --workers > 1)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orient", help="print or verify a semi-transitive orientation")
    _add_source_args(p)
    p.add_argument("--verify", metavar="FILE", help='orientation file, lines "u v" for u->v')
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("iwr", help="index of word-representability")
    _add_source_args(p, edges=False)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--cache", help="JSONL results cache")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--plot", help="render the per-n statuses to this image file")
    p.set_defaults(func=cmd_iwr)

    p = sub.add_parser("scan", help="classify every pattern of length m at size n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", help="JSONL results cache")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--report", metavar="DIR", help="write a TSV table and a PNG figure here")
    p.set_defaults(func=cmd_scan)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, parser, out)
    except (ValueError, DomainFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
