"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 conformance
errors in the OCEDD document, 4 validation errors under ``--strict``.
Turtle, reports and TSV go to standard output (or ``--out``); summaries and
diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import gzip
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .mapper import DescriptorError, convert, output_prefixes, parse_descriptor
from .rdf import Graph, PrefixMap, TurtleError, parse_turtle, serialize_turtle
from .tools import bgp_query, parse_patterns, pattern_variables, render_tsv, stats, validate
from .vocab import ExtensionModel, builtin_ocedo, check_conformance, load_ocedd, ocedo_text, rdfs_closure
from .xes import XesError, parse_xes

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CONFORMANCE, EXIT_INVALID = 0, 1, 2, 3, 4

_COLORS = {"error": "\033[31m", "warning": "\033[33m", "note": "\033[36m"}


class InputError(Exception):
    """An input file could not be read or parsed (exit code 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _use_color() -> bool:
    flag = os.environ.get("OCED_FORGE_COLOR")
    if flag is not None:
        return flag.strip() == "1"
    return sys.stderr.isatty()


def diag(level: str, message: str) -> None:
    label = level
    if _use_color():
        label = f"{_COLORS.get(level, '')}{level}\033[0m"
    print(f"oced-forge: {label}: {message}", file=sys.stderr)


def _read_text(path: str) -> str:
    try:
        if path.endswith(".gz"):
            with gzip.open(path, "rt", encoding="utf-8") as fh:
                return fh.read()
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_turtle(path: str) -> tuple[Graph, PrefixMap]:
    text = _read_text(path)
    try:
        return parse_turtle(text)
    except TurtleError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None


def _load_ocedd(path: str) -> ExtensionModel:
    text = _read_text(path)
    try:
        return load_ocedd(text)
    except TurtleError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None


def _source_name(path: str) -> str:
    name = Path(path).name
    for suffix in (".gz", ".xes"):
        if name.endswith(suffix):
            name = name[: -len(suffix)]
    return name


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _check_extension(ext: ExtensionModel, ocedo: Graph, path: str) -> bool:
    report = check_conformance(ext, ocedo)
    for f in report.findings:
        subj = (ext.prefixes.compress(f.subject) or f.subject.nt) if f.subject is not None else ""
        diag(f.severity, f"{path}: {f.code} {subj}: {f.message}")
    return not report.errors


def cmd_convert(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    ocedo, ocedo_pm = builtin_ocedo()
    ext = _load_ocedd(args.ocedd)
    if not _check_extension(ext, ocedo, args.ocedd):
        diag("error", f"{args.ocedd}: extension does not conform to OCEDO; nothing converted")
        return EXIT_CONFORMANCE
    try:
        descriptor = parse_descriptor(_read_text(args.descriptor), ocedo_pm.merged(ext.prefixes))
    except DescriptorError as exc:
        raise InputError(f"{args.descriptor}: {exc}") from None
    try:
        if args.xes.endswith(".gz"):
            with gzip.open(args.xes, "rb") as fh:
                log = parse_xes(fh, args.source_name or _source_name(args.xes))
        else:
            with open(args.xes, "rb") as fh:
                log = parse_xes(fh, args.source_name or _source_name(args.xes))
    except OSError as exc:
        raise InputError(f"{args.xes}: {exc}") from None
    except XesError as exc:
        raise InputError(f"{args.xes}:{exc.line or '?'}:{exc.column or '?'}: {exc.message}") from None
    for w in log.warnings:
        diag("warning", f"{args.xes}:{w}")

    graph, conv = convert(log, descriptor, ext, strict=args.strict)
    pm = output_prefixes(ext, descriptor)
    if args.reason:
        graph = rdfs_closure(graph | ocedo | ext.graph)
    _emit(serialize_turtle(graph, pm), args.out)

    for f in conv.findings:
        subj = (pm.compress(f.subject) or f.subject.nt) if f.subject is not None else ""
        diag(f.severity, f"{f.code} {subj}: {f.message}")
    for (severity, code), n in sorted(conv.finding_counts.items()):
        if n > 25:
            diag("note", f"{n} {severity} findings with code {code} (first 25 shown)")
    print(conv.summary(), file=sys.stderr)
    print(f"elapsed:          {time.perf_counter() - started:.3f}s", file=sys.stderr)

    if args.strict:
        report = validate(graph, ocedo, ext)
        for f in report.errors:
            diag("error", f.render(pm))
        if conv.error_count or report.errors:
            return EXIT_INVALID
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    ocedo, _ = builtin_ocedo()
    ext = _load_ocedd(args.ocedd)
    if not _check_extension(ext, ocedo, args.ocedd):
        return EXIT_CONFORMANCE
    graph, graph_pm = _load_turtle(args.graph)
    report = validate(graph, ocedo, ext)
    _emit(report.render(graph_pm.merged(ext.prefixes)), args.out)
    if args.strict and report.errors:
        return EXIT_INVALID
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    graph, _ = _load_turtle(args.graph)
    ext = _load_ocedd(args.ocedd) if args.ocedd else None
    _emit(stats(graph, ext).render(), args.out)
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    graph, graph_pm = _load_turtle(args.graph)
    pm = graph_pm.merged(builtin_ocedo()[1])
    if args.ocedd:
        pm = pm.merged(_load_ocedd(args.ocedd).prefixes)
    source = args.pattern
    text = _read_text(source) if os.path.isfile(source) else source.replace("\\n", "\n")
    try:
        patterns = parse_patterns(text, pm)
    except TurtleError as exc:
        raise InputError(f"pattern line {exc.line}:{exc.column}: {exc.message}") from None
    except ValueError as exc:
        raise InputError(f"pattern: {exc}") from None
    solutions = bgp_query(graph, patterns)
    _emit(render_tsv(solutions, pattern_variables(patterns), pm), args.out)
    return EXIT_OK


def cmd_ontology(args: argparse.Namespace) -> int:
    if not args.emit:
        diag("error", "ontology: nothing to do (use --emit)")
        return EXIT_USAGE
    _emit(ocedo_text(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oced-forge", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="XES + OCEDD + descriptor -> OCEDR Turtle")
    p.add_argument("--xes", required=True, help="XES event log (.xes or .xes.gz)")
    p.add_argument("--ocedd", required=True, help="OCEDD extension (Turtle)")
    p.add_argument("--descriptor", required=True, help="mapping descriptor (CSV)")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--reason", action="store_true", help="materialise the RDFS-lite closure")
    p.add_argument("--strict", action="store_true",
                   help="skip events with bad timestamps as errors; exit 4 on errors")
    p.add_argument("--format", choices=["ttl"], default="ttl")
    p.add_argument("--source-name", help="log name hashed into event IRIs (default: file stem)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("validate", help="validate an OCEDR graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--ocedd", required=True)
    p.add_argument("--out")
    p.add_argument("--strict", action="store_true", help="exit 4 when errors are found")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="count events, objects and relations")
    p.add_argument("--graph", required=True)
    p.add_argument("--ocedd", help="extension used to classify relation properties")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("query", help="evaluate a basic graph pattern, print TSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True, help="pattern file, or the patterns themselves")
    p.add_argument("--ocedd", help="extension whose prefixes the pattern may use")
    p.add_argument("--out")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("ontology", help="print the embedded OCEDO ontology")
    p.add_argument("--emit", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ontology)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        diag("error", str(exc))
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
