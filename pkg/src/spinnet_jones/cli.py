"""Command-line front end: ``spinnet-jones {eval,sweep,verify,graph}``.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 semantic error (inadmissible colors, unclosable plat).  Set
``SPINNET_JONES_LOG`` to a logging level name for diagnostics on stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys

from .automaton import build_automaton, calibrated_jones, extended_jones, run_word
from .braid import (
    BraidSyntaxError,
    GeneratorRangeError,
    PlatError,
    PlatSpec,
    build_diagram,
    format_orientations,
    parse_orientations,
    parse_word,
    writhe,
)
from .oracle import load_catalog
from .qtensor import format_spin, parse_spin

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3
LOG_ENV = "SPINNET_JONES_LOG"

log = logging.getLogger("spinnet_jones")


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


def sig(x: float) -> float:
    """Round to 12 significant digits; normalises -0.0."""
    if x == 0 or not math.isfinite(x):
        return 0.0 if x == 0 else x
    return float(f"{x:.12g}") + 0.0


def _complex(z: complex) -> dict:
    return {"re": sig(z.real), "im": sig(z.imag)}


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=False)


# --- spec assembly ----------------------------------------------------------------------


def _spec_from_args(args, level: int | None = None) -> PlatSpec:
    level = args.level if level is None else level
    base: dict = {}
    if args.spec:
        text = args.spec
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        try:
            base = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--spec is not valid JSON: {exc}") from exc
    if args.link:
        try:
            catalog = load_catalog(args.catalog)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read link catalog: {exc}") from exc
        if args.link not in catalog:
            raise UsageError(f"unknown link {args.link!r}; known: {', '.join(sorted(catalog))}")
        base = {**catalog[args.link], **base}
    strands = args.strands if args.strands is not None else base.get("strands")
    colors = args.colors if args.colors is not None else base.get("colors")
    word = args.word if args.word is not None else base.get("word", "")
    orient = args.orientations if args.orientations is not None else base.get("orientations")
    if level is None:
        level = base.get("level")
    if strands is None or colors is None or level is None:
        raise UsageError("need --strands, --colors and --level (or --link / --spec)")
    if isinstance(colors, str):
        colors = [c for c in colors.split(",") if c.strip()]
    try:
        tcolors = tuple(parse_spin(c) for c in colors)
        eps = parse_orientations(orient) if orient else None
        spec = PlatSpec(int(strands), tcolors, int(level), eps, word)
        parse_word(word, spec.strands)
    except (BraidSyntaxError, GeneratorRangeError) as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.level < 3:
        raise UsageError(f"level k must be >= 3, got {spec.level}")
    try:
        for c in spec.colors:
            spec.ctx.check_spin(c)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    return spec


def evaluate(spec: PlatSpec) -> dict:
    """All reported quantities for one plat at one level."""
    w = spec.braid()
    try:
        value = extended_jones(spec, w)
        report = run_word(build_automaton(spec), w)
        diagram = build_diagram(spec, w)
    except PlatError as exc:
        raise SemanticError(str(exc)) from exc
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    return {
        "schema": SCHEMA,
        "strands": spec.strands,
        "colors": [format_spin(c) for c in spec.colors],
        "level": spec.level,
        "word": spec.word,
        "orientations": format_orientations(diagram.orientations),
        "re": sig(value.real),
        "im": sig(value.imag),
        "calibrated": _complex(calibrated_jones(spec, w)),
        "amplitude": _complex(report.amplitude),
        "probability": sig(report.probability),
        "moves": report.moves,
        "bound": sig(report.bound),
        "writhe": writhe(diagram),
        "wordLength": report.word_length,
        "components": diagram.components,
    }


# --- commands ---------------------------------------------------------------------------


def cmd_eval(args) -> int:
    doc = evaluate(_spec_from_args(args))
    if args.format == "text":
        print(f"V_ext = {doc['re']:+.12g} {doc['im']:+.12g}i  (calibrated "
              f"{doc['calibrated']['re']:+.12g} {doc['calibrated']['im']:+.12g}i)")
        print(f"probability {doc['probability']:.12g}, moves {doc['moves']}, bound {doc['bound']:.12g}, "
              f"writhe {doc['writhe']}")
    else:
        print(_dump(doc))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.k_min < 3:
        raise UsageError(f"--k-min must be >= 3, got {args.k_min}")
    if args.k_max < args.k_min:
        raise UsageError("--k-max must be >= --k-min")
    rows = []
    for k in range(args.k_min, args.k_max + 1):
        spec = _spec_from_args(args, level=k)
        doc = evaluate(spec)
        rows.append((k, doc["re"], doc["im"], doc["calibrated"]["re"], doc["calibrated"]["im"]))
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "rows": [dict(zip(("k", "re", "im", "calibrated_re", "calibrated_im"), r))
                                                 for r in rows]}))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k", "re", "im", "calibrated_re", "calibrated_im"])
        for r in rows:
            writer.writerow([r[0]] + [repr(x) for x in r[1:]])
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES

    suite = SUITES[args.suite]
    checks = suite(max_crossings=args.max_crossings) if args.suite == "oracle" else suite()
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        print(_dump({
            "schema": SCHEMA,
            "suite": args.suite,
            "passed": not failed,
            "checks": [{"name": c.name, "passed": c.passed, "value": sig(c.value), "limit": c.limit,
                        "detail": c.detail} for c in checks],
        }))
    else:
        for c in checks:
            print(c.line())
        print(f"suite {args.suite}: {'PASS' if not failed else 'FAIL'} ({len(checks) - len(failed)}/{len(checks)})")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_graph(args) -> int:
    from .spinnet_graph import N_MAX, N_MAX_TWISTS, N_MIN, build_graph, diameter, growth_check

    cap = N_MAX_TWISTS if args.twists else N_MAX
    if args.sweep:
        if not N_MIN <= args.n <= cap:
            raise UsageError(f"--n must lie in {N_MIN}..{cap}{' with twists' if args.twists else ''}")
        table = growth_check(args.n, include_twists=args.twists)
        if args.format == "json":
            print(_dump({"schema": SCHEMA, "constant": sig(table.constant), "spread": sig(table.spread),
                         "monotone": table.monotone,
                         "rows": [{"n": r.n, "vertices": r.vertices, "edges": r.edges, "diameter": r.diameter,
                                   "ratio": sig(r.ratio), "bound": sig(r.bound)} for r in table.rows]}))
        else:
            sys.stdout.write(table.to_csv())
        return EXIT_OK
    if not N_MIN <= args.n <= cap:
        raise UsageError(f"--n must lie in {N_MIN}..{cap}{' with twists' if args.twists else ''}")
    g = build_graph(args.n, include_twists=args.twists)
    d = diameter(g)
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "n": args.n, "twists": args.twists, "vertices": g.vertex_count,
                     "edges": g.edge_count, "diameter": d}))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "twists", "vertices", "edges", "diameter"])
        writer.writerow([args.n, int(args.twists), g.vertex_count, g.edge_count, d])
    return EXIT_OK


# --- parser -----------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 2 without argparse's SystemExit noise
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _plat_flags(p: argparse.ArgumentParser, with_level: bool = True) -> None:
    p.add_argument("--strands", type=int, help="number of strands 2N")
    p.add_argument("--colors", help="comma-separated cap colors, e.g. 1/2,1")
    if with_level:
        p.add_argument("--level", type=int, help="deformation index k (q = exp(-2 pi i / k))")
    p.add_argument("--word", help='braid word, e.g. "s2 s2^-1 s1"')
    p.add_argument("--orientations", help="per-strand orientation string over +-, e.g. +--+")
    p.add_argument("--link", help="named link from the catalog")
    p.add_argument("--spec", help="PlatSpec JSON (inline or @file)")
    p.add_argument("--catalog", help="path to an alternative link catalog JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinnet-jones", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate the extended Jones polynomial of a plat")
    _plat_flags(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="evaluate over a range of k")
    _plat_flags(p, with_level=False)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep, level=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("identities", "yangbaxter", "oracle", "trefoil", "graph", "automaton", "ledger"))
    p.add_argument("--max-crossings", type=int, default=None, help="cap word length in the oracle suite")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="coupling-graph statistics")
    p.add_argument("--n", type=int, required=True, help="number of internal nodes (n+1 leaves)")
    p.add_argument("--twists", dest="twists", action="store_true", default=True)
    p.add_argument("--no-twists", dest="twists", action="store_false", help="fixed-order rotation graph")
    p.add_argument("--sweep", action="store_true", help="diameter table for 2..n")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        log.debug("command %s", args.command)
        return args.func(args)
    except UsageError as exc:
        print(f"spinnet-jones: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SemanticError as exc:
        print(f"spinnet-jones: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
