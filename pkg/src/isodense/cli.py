"""Command-line front end.

Exit codes: 0 when a statement holds (or its hypothesis is not met) and when a
search finds nothing, 1 when a statement is violated or a search finds a
counterexample, 2 for usage, document and cap errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import caps, order, props, topo
from .analysis import analyze_document, render_report
from .documents import SpaceDocument, load
from .errors import CapExceeded, DocumentError, IsodenseError, NotAGeneralizedTopology, UnknownStatement
from .ground import GroundSet, SetFamily
from .theorems import VIOLATED, check, get_statement, search
from .theorems.instances import FamilyInstance, QuasiorderInstance, SpaceInstance
from .theorems.streams import is_union_closed_code

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class UsageError(IsodenseError):
    pass


# Filter expressions ------------------------------------------------------

SPACE_FLAGS = {
    "T0": props.is_T0,
    "T1": props.is_T1,
    "indiscrete": props.is_indiscrete,
    "discrete": props.is_discrete,
    "iso-dense": props.is_iso_dense,
    "dense-in-itself": props.is_dense_in_itself,
    "resolvable": props.is_resolvable,
    "f_d": props.f_d,
    "f_d_T": props.f_d_T,
    "strong": lambda t: topo.is_strong(t.opens, t.carrier),
    "topology": lambda t: topo.is_topology(t.opens, t.carrier),
    "DO-topology": lambda t: topo.is_topology(topo.dense_open_family(t) | [0], t.carrier),
}

FAMILY_FLAGS = {
    "admissible": lambda c: c.admissible,
    "union-closed": lambda c: topo.is_generalized_topology(c.family),
    "mu-topology": lambda c: topo.is_topology(c.mu.opens, c.ground),
    "I-defined": lambda c: c.I is not None,
    "I-empty": lambda c: c.I == 0,
    "tau-is-mu": lambda c: c.tau_A == c.mu.opens,
    "tau-is-mu_tilde": lambda c: c.tau_mu_tilde == c.mu_tilde.opens,
}

QUASIORDER_FLAGS = {
    "partial-order": lambda c: c.q.is_partial_order(),
    "maximal-above-all": lambda c: all(row & c.M for row in c.q.rows),
    "iso-dense": lambda c: props.is_iso_dense(c.space),
    "resolvable": lambda c: props.is_resolvable(c.space),
}

_TOKEN = re.compile(r"\s*(\(|\)|[A-Za-z0-9_\-]+)")


def compile_filter(expr: str, flags: dict):
    """Parse ``expr`` built from flag names, ``and``, ``or``, ``not`` and parentheses."""
    tokens = []
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise UsageError(f"filter: unexpected character at position {pos}: {expr[pos]!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(expr) and expr[pos].isspace():
            pos += 1
    if not tokens:
        raise UsageError("filter: empty expression")
    stack = list(reversed(tokens))

    def peek():
        return stack[-1] if stack else None

    def parse_or():
        left = parse_and()
        while peek() == "or":
            stack.pop()
            right = parse_and()
            left = (lambda a, b: lambda x: a(x) or b(x))(left, right)
        return left

    def parse_and():
        left = parse_not()
        while peek() == "and":
            stack.pop()
            right = parse_not()
            left = (lambda a, b: lambda x: a(x) and b(x))(left, right)
        return left

    def parse_not():
        if peek() == "not":
            stack.pop()
            inner = parse_not()
            return lambda x: not inner(x)
        return parse_atom()

    def parse_atom():
        if not stack:
            raise UsageError("filter: expression ends early")
        tok = stack.pop()
        if tok == "(":
            inner = parse_or()
            if not stack or stack.pop() != ")":
                raise UsageError("filter: missing ')'")
            return inner
        if tok not in flags:
            raise UsageError(f"filter: unknown flag {tok!r}; known: {', '.join(flags)}")
        return flags[tok]

    pred = parse_or()
    if stack:
        raise UsageError(f"filter: unexpected {stack[-1]!r}")
    return pred


# Commands ----------------------------------------------------------------

def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _load(path) -> SpaceDocument:
    doc = load(path)
    for note in doc.notes:
        print(f"note: {note}", file=sys.stderr)
    return doc


def cmd_analyze(args) -> int:
    doc = _load(args.file)
    report = analyze_document(doc)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_report(report))
    return EXIT_OK


def _instance_for(stmt, doc: SpaceDocument):
    if stmt.kind == "family":
        if doc.source == "quasiorder":
            raise UsageError(f"{stmt.id} needs a family or open_sets document")
        return FamilyInstance(doc.ground, doc.family)
    if stmt.kind == "space":
        if doc.source == "family":
            print("note: checking the generalized topology mu[A] generated by the family", file=sys.stderr)
        return SpaceInstance(doc.space())
    if stmt.kind == "quasiorder":
        if doc.source != "quasiorder":
            raise UsageError(f"{stmt.id} needs a quasiorder document")
        return QuasiorderInstance(doc.quasiorder, doc.ground)
    raise UsageError(f"{stmt.id} is about pairs of quasiorders; run it with 'search' instead")


def cmd_check(args) -> int:
    stmt = get_statement(args.statement)
    doc = _load(args.file)
    report = check(stmt, _instance_for(stmt, doc))
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())
    return EXIT_VIOLATED if report.verdict == VIOLATED else EXIT_OK


def cmd_search(args) -> int:
    stmt = get_statement(args.statement)
    n_min = args.n if args.n_min is None else args.n_min
    if n_min > args.n:
        raise UsageError("--n-min must not exceed --n")
    outcome = search(stmt, args.n, budget=args.budget, n_min=n_min, seed=args.seed)
    if args.json:
        print(json.dumps({
            "statement": stmt.id,
            "n": args.n,
            "instances": outcome.instances,
            "found": outcome.found,
            "counterexample": outcome.report.to_json() if outcome.found else None,
        }, indent=2))
    elif outcome.found:
        print(f"counterexample found after {outcome.instances} instances")
        print(outcome.report.render())
    else:
        print(f"none found, {outcome.instances} instances")
    return EXIT_VIOLATED if outcome.found else EXIT_OK


def _enumerate_items(kind: str, n: int):
    """``(document, predicate subject)`` pairs in canonical order."""
    ground = GroundSet.of_size(n)
    if kind == "quasiorders":
        for q in order.enumerate_quasiorders(n):
            yield SpaceDocument(ground, "quasiorder", quasiorder=q), QuasiorderInstance(q, ground)
        return
    for code in range(1 << (1 << n)):
        if kind == "gentopos" and not is_union_closed_code(code):
            continue
        fam = SetFamily.from_code(code, n)
        if kind == "gentopos":
            yield SpaceDocument(ground, "open_sets", family=fam), topo.GenTopology(ground, fam, validate=False)
        else:
            yield SpaceDocument(ground, "family", family=fam), FamilyInstance(ground, fam)


def cmd_enumerate(args) -> int:
    limit = caps.LIMITS["exhaustive"]
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.n > limit:
        raise CapExceeded(f"enumerate {args.kind}", args.n, limit, "use --max-n to raise it")
    flags = {"families": FAMILY_FLAGS, "gentopos": SPACE_FLAGS, "quasiorders": QUASIORDER_FLAGS}[args.kind]
    pred = compile_filter(args.filter, flags) if args.filter else None
    total = matched = admissible = 0
    for doc, subject in _enumerate_items(args.kind, args.n):
        total += 1
        if args.kind == "families" and subject.admissible:
            admissible += 1
        if pred is not None and not pred(subject):
            continue
        matched += 1
        if not args.count_only:
            print(json.dumps(doc.to_json(), separators=(",", ":")))
    if args.count_only:
        if pred is not None:
            print(f"{matched} of {total} match {args.filter!r}")
        elif args.kind == "families":
            print(f"{total} ({admissible} admissible)")
        else:
            print(total)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isodense",
        description="Finite generalized topologies, specialization orders and mechanical checks of their theorems.",
    )
    parser.add_argument("--max-n", type=int, metavar="N",
                        help="raise every enumeration cap to N (may be slow)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report every derived structure of a document")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="check one statement on a document")
    p.add_argument("file")
    p.add_argument("statement")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="look for a counterexample to a statement")
    p.add_argument("statement")
    p.add_argument("--n", type=int, required=True, help="largest carrier size searched")
    p.add_argument("--n-min", type=int, help="smallest carrier size searched (default: --n)")
    p.add_argument("--budget", type=int, help="maximum number of instances visited")
    p.add_argument("--seed", type=int, help="seed for sizes beyond the exhaustive caps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", help="list or count families, generalized topologies or quasiorders")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("families", "gentopos", "quasiorders"), required=True)
    p.add_argument("--filter", metavar="EXPR", help="flags combined with and/or/not, e.g. 'resolvable and not T1'")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is not None:
        _warn(f"enumeration caps raised to {args.max_n}; this may be slow")
        caps.raise_caps(args.max_n)
    try:
        return args.func(args)
    except (DocumentError, NotAGeneralizedTopology, CapExceeded, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownStatement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.max_n is not None:
            caps.reset_caps()


if __name__ == "__main__":
    sys.exit(main())
