"""Command-line front end.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 computed/passed, 1 verification failure, 2 usage or size error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .betti import METHODS, betti
from .cache import ResultCache, resolve_cache_path
from .errors import SizeError
from .graph import Graph, classify, find_cm_vwc_labeling, find_vwc_labeling
from .graphio import generate_corpus, named_graph, parse_graph, to_graph6
from .ideal import cover_ideal, edge_ideal, ideal_to_json, max_gen_degree, symbolic_power
from .linalg import Field
from .report import FAIL
from .sweep import sweep
from .verify import (
    THEOREMS,
    cover_symbolic_power,
    run_check,
    verify_colon_identity,
    verify_deletion_identity,
    verify_gk_identity,
)

log = logging.getLogger("covertool")


class UsageError(Exception):
    pass


def _stamp(payload: dict, field: Field | None = None) -> dict:
    out = {"tool": "covertool", "version": __version__}
    if field is not None:
        out["field"] = str(field)
    out.update(payload)
    return out


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_graph(args) -> Graph:
    if args.named:
        return named_graph(args.named)
    if args.graph6:
        return parse_graph(args.graph6, "graph6")
    if args.graph in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(args.graph).read_text()
    return parse_graph(text, args.format)


def _graph_json(G: Graph) -> dict:
    return {"vertices": list(G.vertices), "edges": [list(e) for e in G.edge_list()], "canonical": G.canonical_string()}


def _ideal_for(G: Graph, kind: str, k: int | None):
    if kind == "edge":
        I = edge_ideal(G)
        return I if k is None else symbolic_power(I, k)
    return cover_ideal(G) if k is None else cover_symbolic_power(G, k)


# -- commands ----------------------------------------------------------------


def cmd_classify(args) -> int:
    G = _load_graph(args)
    vwc = find_vwc_labeling(G) if G.n <= 24 else None
    cm = find_cm_vwc_labeling(G) if G.n <= 24 else None
    _emit(_stamp({
        "graph": _graph_json(G),
        "classification": classify(G).as_dict(),
        "vwc_labeling": [list(p) for p in vwc.pairs] if vwc else None,
        "cm_vwc_labeling": [list(p) for p in cm.pairs] if cm else None,
    }))
    return 0


def cmd_ideal(args) -> int:
    G = _load_graph(args)
    I = _ideal_for(G, args.kind, None)
    _emit(_stamp({"graph": _graph_json(G), "kind": args.kind, "ideal": ideal_to_json(I), "text": str(I)}))
    return 0


def cmd_symbolic(args) -> int:
    G = _load_graph(args)
    I = _ideal_for(G, args.of, args.k)
    payload = {"graph": _graph_json(G), "kind": args.of, "k": args.k, "ideal": ideal_to_json(I), "text": str(I)}
    if not I.is_zero():
        deg, single = max_gen_degree(I)
        payload.update({"max_degree": deg, "single_degree": single})
    _emit(_stamp(payload))
    return 0


def cmd_betti(args) -> int:
    field = Field.parse(args.field)
    G = _load_graph(args)
    k = args.k if args.symbolic else None
    if args.symbolic and k is None:
        raise UsageError("--symbolic needs -k")
    I = _ideal_for(G, args.ideal, k)

    def compute():
        return betti(I, field, method=args.method).to_json()

    path = resolve_cache_path(args.cache)
    if path:
        key = (G.canonical_string(), f"{args.ideal}-ideal", k or 1, str(field))
        table = ResultCache(path).get_or_compute(key, compute)
    else:
        table = compute()
    _emit(_stamp({"graph": _graph_json(G), "ideal": args.ideal, "k": k or 1, "table": table}, field))
    return 0


def cmd_verify(args) -> int:
    field = Field.parse(args.field)
    G = _load_graph(args)
    if args.theorem == "deletion" and args.vertex:
        report = verify_deletion_identity(G, args.vertex, args.k, field)
    elif args.theorem == "colon" and args.k_given:
        report = verify_colon_identity(G, args.k, field)
    elif args.theorem == "gk" and args.k_given:
        report = verify_gk_identity(G, args.k, field)
    else:
        report = run_check(args.theorem, G, k=args.k, kmax=args.kmax, field=field)
    _emit(_stamp({"report": report.to_json()}, field))
    return 1 if report.verdict == FAIL else 0


def cmd_sweep(args) -> int:
    field = Field.parse(args.field)
    graphs = generate_corpus(args.max_n, no_isolated=not args.allow_isolated, dedup=args.dedup)
    path = resolve_cache_path(args.cache)
    cache = ResultCache(path) if path else None
    result = sweep(args.theorem, graphs, k=args.k, kmax=args.kmax, field=field, jobs=args.jobs, cache=cache)
    payload = result.summary(include_reports=args.reports)
    payload["corpus"] = {"max_n": args.max_n, "dedup": args.dedup, "no_isolated": not args.allow_isolated}
    if cache is not None:
        payload["cache_path"] = str(cache.path)
    _emit(_stamp(payload, field))
    log.info("%s: %d pass, %d fail, %d skipped", args.theorem, result.count("pass"), result.count("fail"), result.count("skipped"))
    return 0 if result.ok else 1


def cmd_corpus(args) -> int:
    graphs = list(generate_corpus(args.max_n, no_isolated=not args.allow_isolated, dedup=args.dedup))
    _emit(_stamp({
        "max_n": args.max_n,
        "dedup": args.dedup,
        "no_isolated": not args.allow_isolated,
        "count": len(graphs),
        "graph6": [to_graph6(G) for G in graphs],
    }))
    return 0


# -- parser ------------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", default="-", help="edge-list or graph6 file ('-' = stdin)")
    p.add_argument("--graph6", help="graph6 string instead of a file")
    p.add_argument("--named", help="named graph: C5, P4, K3, K3,3, E2")
    p.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto")


def _add_field_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default="q", help="homology field: q or f<p> (default q)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="covertool", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"covertool {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="graph flags and very well-covered labelings")
    _add_graph_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ideal", help="cover or edge ideal")
    p.add_argument("kind", choices=("cover", "edge"))
    _add_graph_args(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("symbolic", help="symbolic power of the cover (or edge) ideal")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--of", choices=("cover", "edge"), default="cover")
    _add_graph_args(p)
    p.set_defaults(func=cmd_symbolic)

    p = sub.add_parser("betti", help="graded Betti table")
    p.add_argument("--symbolic", action="store_true", help="use the k-th symbolic power")
    p.add_argument("-k", type=int)
    p.add_argument("--ideal", choices=("cover", "edge"), default="cover")
    p.add_argument("--method", choices=METHODS, default="koszul")
    p.add_argument("--cache")
    _add_field_arg(p)
    _add_graph_args(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="check one theorem on one graph")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--vertex", help="vertex for the deletion identity")
    _add_field_arg(p)
    _add_graph_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check one theorem over a graph corpus")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--allow-isolated", action="store_true")
    p.add_argument("--cache")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--reports", action="store_true", help="include every report in the output")
    _add_field_arg(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("corpus", help="list a graph corpus as graph6")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--allow-isolated", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="%(levelname)s: %(message)s")
    if args.command == "verify":
        args.k_given = args.k is not None
        if args.k is None:
            args.k = 2 if args.theorem != "deletion" else 1
    try:
        return args.func(args)
    except (SizeError, UsageError, ValueError, OSError) as exc:
        print(f"covertool: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
