"""Command-line interface.

One subcommand per task, all reading the ideal (or graph) file format.
JSON output is deterministic: top-level ``"schema": 1``, sorted keys,
and no content that depends on hashing or scheduling.  Exit codes:
0 success, 1 bad input, 2 a size threshold refused the computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .betti import BettiTable
from .complexes import classification_census, lyubeznik_complex
from .covers import cover_clutter, covers_of, e_minimal_covers_of
from .generators import radical_generators
from .graphs import check_graph_propositions, edge_ideal, read_graph
from .invariants import analyze, is_minimal_resolution, search_scan
from .monomials import BoundExceededError, MonomialIdeal, ParseError, read_ideal
from .oracle import (taylor_betti, verify_chain_complex,
                     verify_resolution_report)
from .orders import (DEFAULT_MAX_EXHAUSTIVE, OrderedIdeal, identity_order,
                     parse_order)


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2; here that means a refused bound,
    so usage errors are remapped to the generic input-error code."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_field(text: str) -> int | None:
    if text == "q":
        return None
    if text.startswith("p:"):
        try:
            prime = int(text[2:])
        except ValueError:
            raise ValueError(f"bad field spec {text!r}") from None
        return prime
    raise ValueError(f"bad field spec {text!r}; expected 'q' or 'p:<prime>'")


def _ordered(args, ideal: MonomialIdeal) -> OrderedIdeal:
    if getattr(args, "order", None):
        return parse_order(args.order, ideal)
    return identity_order(ideal)


def _ideal_payload(ideal: MonomialIdeal) -> dict:
    return {"variables": list(ideal.context.names),
            "generators": [str(m) for m in ideal.gens]}


def _betti_payload(table: BettiTable) -> dict:
    return {"subject": table.subject,
            "graded": [list(row) for row in table.graded_rows()],
            "multigraded": [list(row) for row in table.multigraded_rows()]}


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (payload, text lines)


def _cmd_covers(args):
    ideal = read_ideal(args.path)
    ordered = _ordered(args, ideal)
    per_gen = []
    for u in ideal.indices():
        eminimal = {c.members for c in e_minimal_covers_of(u, ideal)}
        entries = [{"members": sorted(c.members),
                    "covered": sorted(c.covered),
                    "eminimal": c.members in eminimal}
                   for c in covers_of(u, ideal)]
        per_gen.append({"generator": u, "covers": entries})
    clutter = [list(edge) for edge in cover_clutter(ordered).canonical_edges()]
    payload = {"ideal": _ideal_payload(ideal), "order": list(ordered.order),
               "covers": per_gen, "clutter": clutter}

    lines = [f"ideal: {ideal}", f"order: {ordered}"]
    for block in per_gen:
        u = block["generator"]
        lines.append(f"covers of generator {u} ({len(block['covers'])}):")
        for entry in block["covers"]:
            tag = "  E-minimal" if entry["eminimal"] else ""
            lines.append("  {" + ",".join(map(str, entry["members"])) + "}" + tag)
    lines.append("clutter edges: " +
                 (", ".join("{" + ",".join(map(str, e)) + "}" for e in clutter)
                  or "(none)"))
    return payload, lines


def _cmd_complex(args):
    ideal = read_ideal(args.path)
    ordered = _ordered(args, ideal)
    complex_ = lyubeznik_complex(ordered)
    faces = sorted(sorted(f) for f in complex_.faces)
    facets = sorted(sorted(f) for f in complex_.facets)
    census = {str(size): {cls.value: count for cls, count in row.items()}
              for size, row in classification_census(ordered).items()}
    payload = {"ideal": _ideal_payload(ideal), "order": list(ordered.order),
               "dim": complex_.dim, "f_vector": list(complex_.f_vector),
               "faces": faces, "facets": facets, "census": census}

    lines = [f"ideal: {ideal}", f"order: {ordered}",
             f"dim: {complex_.dim}",
             "f-vector: (" + ", ".join(map(str, complex_.f_vector)) + ")",
             "facets: " + ", ".join("{" + ",".join(map(str, f)) + "}"
                                    for f in facets)]
    for size in sorted(census, key=int):
        row = census[size]
        cells = ", ".join(f"{name}={count}" for name, count in
                          sorted(row.items()) if count)
        lines.append(f"size {size}: {cells or '(empty)'}")
    return payload, lines


def _cmd_analyze(args):
    ideal = read_ideal(args.path)
    ordered = _ordered(args, ideal)
    report = analyze(ordered, search_mode=args.search,
                     max_exhaustive=args.max_exhaustive, jobs=args.jobs,
                     prime=_parse_field(args.field))
    payload = {"ideal": _ideal_payload(ideal), "order": list(report.order),
               "minimal": report.minimal, "obsL": report.obstruction,
               "l_length": report.l_length, "ps": report.ps,
               "betti": _betti_payload(report.betti) if report.betti else None,
               "height": report.height,
               "ara": {"lower": report.ara.lower, "upper": report.ara.upper,
                       "equality": report.ara.equality}}
    if args.search is not None:
        payload["lyubeznik"] = report.lyubeznik
        payload["almost_lyubeznik"] = report.almost_lyubeznik
        payload["totally_lyubeznik"] = report.totally_lyubeznik

    lines = [f"ideal: {ideal}", f"order: {ordered}",
             f"minimal resolution: {'yes' if report.minimal else 'no'}",
             f"obstruction: {report.obstruction}",
             f"resolution length: {report.l_length}",
             f"preserved size: {report.ps}",
             f"height: {report.height}",
             f"ara bounds: [{report.ara.lower}, {report.ara.upper}]"
             + (" (exact)" if report.ara.equality else "")]
    if report.betti is not None:
        rows = ", ".join(f"b[{i},{j}]={c}" for i, j, c
                         in report.betti.graded_rows())
        lines.append(f"betti (graded, quotient): {rows}")
    else:
        lines.append("betti: not available from preserved sets "
                     "(resolution not minimal); see oracle-betti")
    if args.search is not None:
        lines.append(f"lyubeznik: {_verdict_text(report.lyubeznik)}")
        lines.append(f"almost lyubeznik: {_verdict_text(report.almost_lyubeznik)}")
        lines.append(f"totally lyubeznik: {_verdict_text(report.totally_lyubeznik)}")
    return payload, lines


def _verdict_text(value: bool | None) -> str:
    if value is None:
        return "undetermined"
    return "yes" if value else "no"


def _cmd_search(args):
    ideal = read_ideal(args.path)
    scan = search_scan(ideal, args.search, max_exhaustive=args.max_exhaustive,
                       jobs=args.jobs)
    lyubeznik = True if scan.tobsl == 0 else (False if scan.exact else None)
    payload = {"ideal": _ideal_payload(ideal), "mode": scan.mode,
               "exact": scan.exact, "scanned": scan.scanned,
               "tobsL": scan.tobsl, "L": scan.min_l, "ps_min": scan.min_ps,
               "lyubeznik": lyubeznik, "witness": list(scan.tobsl_witness),
               "minimal_orders": scan.minimal_count}
    lines = [f"ideal: {ideal}",
             f"mode: {scan.mode} ({'exact' if scan.exact else 'heuristic'}, "
             f"{scan.scanned} orders)",
             f"total obstruction: {scan.tobsl}",
             f"min resolution length: {scan.min_l}",
             f"min preserved size: {scan.min_ps}",
             f"lyubeznik: {_verdict_text(lyubeznik)}",
             "witness order: (" + ",".join(map(str, scan.tobsl_witness)) + ")",
             f"minimal orders: {scan.minimal_count}/{scan.scanned}"]
    return payload, lines


def _cmd_oracle_betti(args):
    ideal = read_ideal(args.path)
    table = taylor_betti(ideal, prime=_parse_field(args.field))
    payload = {"ideal": _ideal_payload(ideal), **_betti_payload(table),
               "projdim": table.projective_dimension}
    lines = [f"ideal: {ideal}", f"subject: {table.subject}"]
    lines += [f"b[{i},{j}] = {c}" for i, j, c in table.graded_rows()]
    lines += [f"b[{i}, {mono}] = {c}" for i, mono, c in table.multigraded_rows()]
    lines.append(f"projective dimension: {table.projective_dimension}")
    return payload, lines


def _cmd_verify(args):
    ideal = read_ideal(args.path)
    ordered = _ordered(args, ideal)
    chain_ok = verify_chain_complex(ordered)
    report = verify_resolution_report(ordered, prime=_parse_field(args.field))
    resolves = chain_ok and all(ok for _, ok in report)
    payload = {"ideal": _ideal_payload(ideal), "order": list(ordered.order),
               "chain_complex": chain_ok,
               "multidegrees": [[str(m), ok] for m, ok in report],
               "resolves": resolves}
    lines = [f"ideal: {ideal}", f"order: {ordered}",
             f"differential composes to zero: {'yes' if chain_ok else 'no'}"]
    bad = [str(m) for m, ok in report if not ok]
    lines.append(f"multidegrees checked: {len(report)}, failing: {len(bad)}")
    if bad:
        lines.append("homology persists at: " + ", ".join(bad))
    lines.append(f"resolves the quotient: {'yes' if resolves else 'no'}")
    return payload, lines


def _cmd_radical_gens(args):
    ideal = read_ideal(args.path)
    ordered = _ordered(args, ideal)
    gens = radical_generators(ordered)
    payload = {"ideal": _ideal_payload(ideal), "order": list(ordered.order),
               "minimal": is_minimal_resolution(ordered),
               "generators": [str(g) for g in gens]}
    lines = [f"ideal: {ideal}", f"order: {ordered}"]
    lines += [f"g{k} = {g}" for k, g in enumerate(gens, 1)]
    return payload, lines


def _cmd_graph(args):
    graph = read_graph(args.path)
    if not (args.edge_ideal or args.check_props):
        raise ValueError("nothing to do: pass --edge-ideal and/or --check-props")
    payload: dict = {"vertices": list(graph.vertices),
                     "edges": [list(e) for e in graph.edges]}
    lines: list[str] = []
    if args.edge_ideal:
        ideal = edge_ideal(graph)
        payload["edge_ideal"] = _ideal_payload(ideal)
        lines.append("vars " + " ".join(ideal.context.names))
        lines += [f"gen {m}" for m in ideal.gens]
    if args.check_props:
        checks = check_graph_propositions(graph,
                                          max_exhaustive=args.max_exhaustive,
                                          jobs=args.jobs)
        payload["propositions"] = [
            {"name": c.name, "hypothesis": c.hypothesis,
             "conclusion": c.conclusion, "finding": c.finding}
            for c in checks]
        for c in checks:
            mark = "  << FINDING: hypothesis holds, conclusion fails" \
                if c.finding else ""
            lines.append(f"{c.name}: hypothesis={'yes' if c.hypothesis else 'no'}"
                         f" conclusion={'yes' if c.conclusion else 'no'}{mark}")
    return payload, lines


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lyubeznik",
                     description="Covers, preserved sets, and minimality of "
                                 "Lyubeznik resolutions of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str, *, order=False, search=False,
            field=False, graph=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("path", help="graph file" if graph else "ideal file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if order:
            p.add_argument("--order", metavar="i1,i2,...",
                           help="generator order override (1-based indices)")
        if search:
            p.add_argument("--search", choices=("exhaustive", "courts-first"),
                           default=None if name == "analyze" else "exhaustive",
                           help="order search mode")
            p.add_argument("--max-exhaustive", type=int,
                           default=DEFAULT_MAX_EXHAUSTIVE, metavar="MU",
                           help="largest generator count searched exhaustively")
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel worker processes")
        if field:
            p.add_argument("--field", default="q", metavar="q|p:<prime>",
                           help="coefficient field for homology ranks")
        p.set_defaults(handler=handler)
        return p

    add("covers", _cmd_covers, "covers and the E-minimal cover clutter",
        order=True)
    add("complex", _cmd_complex, "faces, facets, and the subset census",
        order=True)
    add("analyze", _cmd_analyze, "per-order invariant report",
        order=True, search=True, field=True)
    add("search", _cmd_search, "scan orders for obstruction and length minima",
        search=True)
    add("oracle-betti", _cmd_oracle_betti,
        "Betti numbers from Taylor-strand homology", field=True)
    add("verify", _cmd_verify, "check the resolution homologically",
        order=True, field=True)
    add("radical-gens", _cmd_radical_gens,
        "polynomials generating the ideal up to radical", order=True)
    graph_p = add("graph", _cmd_graph, "edge-ideal tools for simple graphs",
                  graph=True)
    graph_p.add_argument("--edge-ideal", action="store_true",
                         help="emit the edge ideal in ideal-file syntax")
    graph_p.add_argument("--check-props", action="store_true",
                         help="evaluate the graph-family statements")
    graph_p.add_argument("--max-exhaustive", type=int,
                         default=DEFAULT_MAX_EXHAUSTIVE, metavar="MU")
    graph_p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and --help; report the code
        # instead so callers of main() always get a plain int back
        return exc.code if isinstance(exc.code, int) else 1
    try:
        payload, lines = args.handler(args)
    except BoundExceededError as exc:
        print(f"lyubeznik: refused: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"lyubeznik: parse error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"lyubeznik: error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {"schema": 1, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
