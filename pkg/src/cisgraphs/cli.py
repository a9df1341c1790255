"""Command-line entry point: ``cisgraphs <command> ...``.

Exit codes: 0 success, 1 counterexample or negative answer, 2 input
error, 3 budget or enumeration limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Optional, Sequence

from . import enumeration as en
from .errors import BudgetError, CisGraphError, InputError, OrderTooLarge
from .families import build_expression, closure_members
from .graph import Graph, graph6_decode, graph6_encode, to_edge_list
from .predicates import parse_predicate
from .report import graph_record, render
from .smallgraphs import MAX_DEFAULT_ORDER, MAX_LONG_ORDER, iter_graph_classes
from .suites import SUITES, SuiteResult, explore_q1, explore_q2, explore_q3
from .symmetry import DEFAULT_BUDGET, are_isomorphic, canonical_form, vt_cis_check

log = logging.getLogger("cisgraphs")

EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def parse_graph(text: str) -> Graph:
    """A family expression (anything containing ``:``) or a graph6 string."""
    text = text.strip()
    if ":" in text:
        return build_expression(text)
    return graph6_decode(text)


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "edges":
        return to_edge_list(g).rstrip("\n") + "\n"
    if fmt == "jsonl":
        return json.dumps({"graph6": graph6_encode(g).decode(), "order": g.order}) + "\n"
    return graph6_encode(g).decode() + "\n"


def _emit_suite(res: SuiteResult, fmt: str, out) -> int:
    if fmt == "jsonl":
        out.write(json.dumps({
            "suite": res.name, "run": res.cases_run, "passed": res.cases_passed,
            "counterexamples": [vars(c) for c in res.counterexamples],
            "notes": res.notes}) + "\n")
    else:
        out.write(res.render())
    return EXIT_OK if res.passed else EXIT_FOUND


# ------------------------------------------------------------ commands

def cmd_construct(args, out) -> int:
    out.write(format_graph(build_expression(args.spec), args.format))
    return EXIT_OK


def cmd_props(args, out) -> int:
    inputs = list(args.graphs)
    if args.input:
        inputs += _read_lines(args.input)
    fmt = "jsonl" if args.format == "jsonl" else "text"
    for text in inputs:
        g = parse_graph(text)
        rec = graph_record(g, text, limit=args.limit_cliques, budget=args.budget,
                           want_vt=args.vt, want_chi=args.chi, timing=args.timing)
        out.write(render(rec, fmt))
    return EXIT_OK


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def _filter_chunk(expr: str, codes: list[bytes]) -> list[bytes]:
    pred = parse_predicate(expr)
    out = []
    for code in codes:
        g = graph6_decode(code)
        if pred(g):
            out.append(canonical_form(g))
    return out


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    buf = []
    for it in items:
        buf.append(it)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def enumerate_classes(n: int, expr: str = "true", long: bool = False, jobs: int = 1) -> list[bytes]:
    """Canonical graph6 forms of the classes of order ``n`` satisfying ``expr``, sorted."""
    cap = MAX_LONG_ORDER if long else MAX_DEFAULT_ORDER
    if n < 1 or n > cap:
        hint = "" if long else " (order 8 needs --long)"
        raise OrderTooLarge(f"enumeration supports 1 <= n <= {cap}{hint}")
    parse_predicate(expr)  # fail early on a bad expression
    codes = (graph6_encode(g) for g in iter_graph_classes(n, allow_long=long))
    found: set[bytes] = set()
    if jobs <= 1:
        for chunk in _chunks(codes, 2048):
            found.update(_filter_chunk(expr, chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_filter_chunk, expr, c) for c in _chunks(codes, 2048)]
            for f in futures:
                found.update(f.result())
    return sorted(found)


def cmd_enumerate(args, out) -> int:
    for code in enumerate_classes(args.n, args.predicate, args.long, args.jobs):
        out.write(format_graph(graph6_decode(code), args.format))
    return EXIT_OK


def scan_catalog(lines: Iterable[str], expr: Optional[str] = None, closure_check: bool = False,
                 limit: int = en.DEFAULT_LIMIT, budget: int = DEFAULT_BUDGET
                 ) -> tuple[list[dict], SuiteResult]:
    """Check each catalog graph for vertex-transitivity and CIS.

    Unparseable lines are logged and skipped.  Non-CIS graphs (and graphs
    rejected by ``expr``) are filtered out of the records.  With
    ``closure_check`` every CIS graph must be isomorphic to a member of the
    closure family of its order; failures become counterexamples.
    """
    pred = parse_predicate(expr) if expr else None
    res = SuiteResult("scan")
    records = []
    closure_keys: dict[int, set[bytes]] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = graph6_decode(line)
        except InputError as e:
            log.warning("line %d skipped: %s", lineno, e)
            res.notes.append(f"line {lineno} skipped: {type(e).__name__}")
            continue
        if pred is not None and not pred(g):
            continue
        try:
            cert = en.is_cis(g, limit)
        except BudgetError as e:
            log.warning("line %d not decided: %s", lineno, e)
            res.notes.append(f"line {lineno} not decided: {type(e).__name__}")
            continue
        if not cert.is_cis:
            continue
        rec = graph_record(g, f"line{lineno}", limit=limit, budget=budget, want_vt=True)
        if closure_check:
            if g.order not in closure_keys:
                try:
                    closure_keys[g.order] = {canonical_form(h) for h in closure_members(g.order)}
                except OrderTooLarge:
                    closure_keys[g.order] = set()
                    res.notes.append(f"closure family not generated for order {g.order}")
            member = canonical_form(g, budget) in closure_keys[g.order]
            rec["in_closure"] = member
            res.check(member, f"line{lineno} CIS graph outside the closure family", g)
        if rec.get("vertex_transitive") is True:
            res.check(vt_cis_check(g, limit, budget).is_cis,
                      f"line{lineno} size criterion disagrees with CIS", g)
        else:
            res.notes.append(f"line {lineno} is not vertex-transitive")
        records.append(rec)
    return records, res


def cmd_scan(args, out) -> int:
    with open(args.path, encoding="ascii", errors="replace") as fh:
        records, res = scan_catalog(fh, args.filter, args.closure_check,
                                    args.limit_cliques, args.budget)
    fmt = "jsonl" if args.format == "jsonl" else "text"
    for rec in records:
        out.write(render(rec, fmt))
    return _emit_suite(res, args.format, out)


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    code = EXIT_OK
    for name in names:
        res = SUITES[name](seed=args.seed, long=args.long)
        code = max(code, _emit_suite(res, args.format, out))
    return code


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def cmd_explore(args, out) -> int:
    cap = MAX_LONG_ORDER if args.long else MAX_DEFAULT_ORDER
    if args.question in ("q1", "q3") and args.max_order > cap:
        raise OrderTooLarge(f"scan order is capped at {cap}")
    if args.question == "q1":
        res = explore_q1(args.max_order, args.long)
    elif args.question == "q2":
        res = explore_q2(args.q_range)
    else:
        res = explore_q3(args.max_order, args.long)
    return _emit_suite(res, args.format, out)


def cmd_iso(args, out) -> int:
    same = are_isomorphic(parse_graph(args.first), parse_graph(args.second), args.budget)
    out.write(f"isomorphic={'true' if same else 'false'}\n")
    return EXIT_OK if same else EXIT_FOUND


def cmd_canon(args, out) -> int:
    for text in args.graphs:
        out.write(canonical_form(parse_graph(text), args.budget).decode() + "\n")
    return EXIT_OK


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit-cliques", type=int, default=en.DEFAULT_LIMIT,
                        help="cap on each maximal clique / stable set family")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="node budget for the automorphism search")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("g6", "edges", "jsonl"), default="g6")
    common.add_argument("--long", action="store_true", help="allow order-8 enumeration")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="cisgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="print a family member")
    c.add_argument("spec", help="e.g. Q:5, Kmn:2,3, C:4*K:2, ~S:2")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("props", parents=[common], help="property record per graph")
    c.add_argument("graphs", nargs="*", help="graph6 strings or family expressions")
    c.add_argument("--input", help="file with one graph per line")
    c.add_argument("--vt", action="store_true", help="also test vertex-transitivity")
    c.add_argument("--chi", action="store_true", help="also compute the chromatic number")
    c.add_argument("--timing", action="store_true", help="add wall-clock seconds")
    c.set_defaults(func=cmd_props)

    c = sub.add_parser("enumerate", parents=[common], help="isomorphism classes of order n")
    c.add_argument("n", type=int)
    c.add_argument("predicate", nargs="?", default="true",
                   help="terms joined by & and negated by !, e.g. 'connected & omega<=2 & cis'")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("scan", parents=[common], help="check a graph6 catalog")
    c.add_argument("path")
    c.add_argument("--filter", help="predicate expression applied before the CIS test")
    c.add_argument("--closure-check", action="store_true")
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("verify", parents=[common], help="run a verification suite")
    c.add_argument("suite", choices=[*SUITES, "all"])
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("explore", parents=[common], help="scan for open-question examples")
    c.add_argument("question", choices=("q1", "q2", "q3"))
    c.add_argument("--max-order", type=int, default=MAX_DEFAULT_ORDER)
    c.add_argument("--q-range", type=_int_range, default=range(4, 9),
                   help="Q_n range for q2, e.g. 4..8")
    c.set_defaults(func=cmd_explore)

    c = sub.add_parser("iso", parents=[common], help="test isomorphism of two graphs")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("canon", parents=[common], help="canonical graph6 form")
    c.add_argument("graphs", nargs="+")
    c.set_defaults(func=cmd_canon)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except BudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CisGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
