"""Command-line entry point ``graph-ideal``.

Exit codes: 0 success, 1 a verdict failed, 2 unreadable or invalid input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .combinatorics import min_even_ears, search_nested_decomposition
from .corpus import directory_corpus, random_corpus
from .errors import GraphIdealError, ParseError, PreconditionError, ResourceLimit, ValidationError
from .graph import edge, load_graph
from .report import FAIL, Analysis, RunConfig, dumps

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("graph_ideal")


def _setup_logging():
    level = os.environ.get("GRAPH_IDEAL_LOG", "off").lower()
    if level not in ("off", "info", "debug"):
        level = "off"
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    log.setLevel({"off": logging.CRITICAL + 1, "info": logging.INFO,
                  "debug": logging.DEBUG}[level])


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _parse_t_order(text: str):
    out = []
    for part in text.split(">"):
        bits = part.replace("t", "").replace("_", " ").replace("-", " ").replace(",", " ").split()
        if len(bits) == 1 and len(bits[0]) == 2:
            bits = list(bits[0])
        if len(bits) != 2:
            raise ParseError(f"cannot read edge {part!r} in --t-order")
        out.append(edge(int(bits[0]), int(bits[1])))
    return tuple(out)


def _config(args) -> RunConfig:
    from .algebra import is_prime
    for p in (args.field, *args.primes):
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
    if args.cap_pairs < 1 or args.cap_cycles < 1:
        raise ValidationError("caps must be positive")
    t_order = _parse_t_order(args.t_order) if args.t_order else None
    return RunConfig(p=args.field, primes=args.primes, t_order=t_order,
                     pair_cap=args.cap_pairs, cycle_cap=args.cap_cycles)


def _emit(doc, args):
    text = dumps(doc)
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    a = Analysis(load_graph(args.file), _config(args))
    _emit(a.report(), args)
    return EXIT_OK


def cmd_ideal(args) -> int:
    a = Analysis(load_graph(args.file), _config(args))
    _emit(a.basis().to_json(), args)
    return EXIT_OK


def cmd_mu(args) -> int:
    a = Analysis(load_graph(args.file), _config(args))
    mu, cert = a.join
    _emit({"mu": mu, **cert.to_json()}, args)
    return EXIT_OK


def cmd_ears(args) -> int:
    g = load_graph(args.file)
    want_phi = args.phi or not args.nested
    doc: dict = {}
    if want_phi:
        phi, d = min_even_ears(g)
        doc["phi"] = phi
        doc["decomposition"] = d.to_json()
    if args.nested:
        found = search_nested_decomposition(g)
        doc["nested"] = found[0].to_json() if found else None
        doc["epsilon"] = found[1] if found else None
    _emit(doc, args)
    return EXIT_OK


def cmd_check(args) -> int:
    verdicts = Analysis(load_graph(args.file), _config(args)).verdicts()
    _emit([v.to_json() for v in verdicts], args)
    return EXIT_FAIL if any(v.status == FAIL for v in verdicts) else EXIT_OK


def cmd_corpus(args) -> int:
    config = _config(args)
    if args.dir:
        entries = directory_corpus(args.dir)
    else:
        entries = random_corpus(args.random, args.max_edges, args.seed)
    graphs = []
    failed = limited = 0
    for entry in sorted(entries, key=lambda e: e.id):
        record = {"id": entry.id, "edges": [list(e) for e in entry.graph.edges],
                  "connected": entry.connected}
        try:
            a = Analysis(entry.graph, config)
            verdicts = a.verdicts()
            bad = [v.to_json() for v in verdicts if v.status == FAIL]
            record["status"] = FAIL if bad else "pass"
            record["failures"] = bad
            if args.dir:
                record["report"] = a.report()
            failed += bool(bad)
        except ResourceLimit as exc:
            record["status"] = "resourceLimit"
            record["error"] = str(exc)
            limited += 1
        graphs.append(record)
    doc = {"total": len(graphs), "passed": len(graphs) - failed - limited,
           "failed": failed, "resourceLimited": limited, "graphs": graphs}
    if failed:
        # smallest failing graph first, for debugging
        worst = min((r for r in graphs if r["status"] == FAIL), key=lambda r: len(r["edges"]))
        doc["minimalCounterexample"] = worst["id"]
    _emit(doc, args)
    if limited:
        return EXIT_LIMIT
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=3, metavar="P",
                        help="characteristic of the coefficient field (default 3)")
    common.add_argument("--primes", type=_parse_primes, default=(5, 7), metavar="P1,P2",
                        help="extra primes for the field-independence check")
    common.add_argument("--t-order", default=None, metavar="e1>e2>...",
                        help='edge variable order, largest first, e.g. "12>23>13"')
    common.add_argument("--json", default=None, metavar="OUT", help="write JSON to a file")
    common.add_argument("--cap-pairs", type=int, default=10**6, metavar="N")
    common.add_argument("--cap-cycles", type=int, default=10**6, metavar="N")

    parser = argparse.ArgumentParser(prog="graph-ideal",
                                     description="Regularity and joins of graph binomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, text in (("invariants", cmd_invariants, "invariant report"),
                           ("ideal", cmd_ideal, "reduced Gröbner basis"),
                           ("mu", cmd_mu, "maximum join"),
                           ("check", cmd_check, "theorem verdicts")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(func=fn)
    p = sub.add_parser("ears", parents=[common], help="ear decompositions")
    p.add_argument("file")
    p.add_argument("--nested", action="store_true", help="search for a nested decomposition")
    p.add_argument("--phi", action="store_true", help="minimum number of even ears")
    p.set_defaults(func=cmd_ears)
    p = sub.add_parser("corpus", parents=[common], help="batch verification")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--random", type=int, metavar="N")
    src.add_argument("--dir", metavar="D")
    p.add_argument("--max-edges", type=int, default=8, metavar="M")
    p.add_argument("--seed", type=int, default=1, metavar="S")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, ValidationError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphIdealError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
