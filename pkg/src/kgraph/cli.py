"""Command-line front end.

Every command reads one or two interchange files and prints a JSON report.
Exit status: 0 success, 1 invalid input, 2 a search or enumeration limit was
hit, 3 usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import corpus
from .coloured import check_complete, deduce_squares, square_isomorphism
from .cohomology import cohomology, parse_coefficients
from .document import (
    Document,
    coloured_document,
    document_data,
    dumps,
    load_document,
    textile_document,
)
from .errors import (
    BudgetExceeded,
    CoefficientParseError,
    DocumentSyntaxError,
    EnumerationLimitExceeded,
    KGraphError,
    SchemaError,
    SearchLimitExceeded,
    TooLarge,
    ValidationError,
)
from .graphs import spanning_tree
from .homology import chain_complex_2graph, chain_complex_graph, chain_complex_textile, homology
from .presentation import DEFAULT_BUDGET, pi1, pi1_graph, recognize
from .textile import (
    admits_2graph,
    coloured_view,
    from_2graph,
    lifting,
    properties,
    textile_isomorphism,
)

EXIT_OK, EXIT_INVALID, EXIT_LIMIT, EXIT_USAGE = 0, 1, 2, 3
LIMIT_ERRORS = (BudgetExceeded, SearchLimitExceeded, EnumerationLimitExceeded, TooLarge)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- document adapters -------------------------------------------------------

def coloured_of(doc: Document):
    if doc.kind == "coloured_graph":
        cg, C = doc.value
        return cg, (deduce_squares(cg) if doc.deduce else C)
    if doc.kind == "textile":
        v = coloured_view(doc.value)
        return v.graph, v.squares
    raise UsageError("this command needs a coloured graph or a textile system")


def textile_of(doc: Document):
    if doc.kind == "textile":
        return doc.value
    if doc.kind == "coloured_graph":
        return from_2graph(*coloured_of(doc))
    raise UsageError("this command needs a coloured graph or a textile system")


def complex_of(doc: Document):
    if doc.kind == "directed_graph":
        return chain_complex_graph(doc.value)
    if doc.kind == "coloured_graph":
        return chain_complex_2graph(*coloured_of(doc))
    return chain_complex_textile(doc.value)


def _tree(graph, args):
    order = None
    if args.tree == "random":
        order = list(graph.edge_names)
        random.Random(args.seed).shuffle(order)
    return spanning_tree(graph, args.base, order)


# -- commands ----------------------------------------------------------------

def cmd_validate(doc: Document, args) -> dict:
    out = {"command": "validate", "kind": doc.kind, "valid": True}
    if doc.kind == "coloured_graph":
        cg, C = coloured_of(doc)
        out["squares"] = len(C)
        out["complete"] = check_complete(cg, C).complete
    elif doc.kind == "textile":
        out["admits_2graph"] = admits_2graph(doc.value).admits
    return out


def cmd_lift(doc: Document, args) -> dict:
    rep = lifting(textile_of(doc))
    cases = {}
    for (m, side), case in rep.cases.items():
        cases[f"{m}:{side}"] = {
            "has_lifting": case.has_lifting, "unique": case.unique,
            "counterexamples": [{"edge": e, "vertex": w, "lifts": n}
                                for e, w, n in case.counterexamples]}
    return {"command": "lift", "cases": cases}


def cmd_convert(doc: Document, args) -> dict:
    if doc.kind == "textile":
        v = coloured_view(doc.value)
        return document_data(coloured_document(v.graph, v.squares))
    if doc.kind == "coloured_graph":
        return document_data(textile_document(textile_of(doc)))
    raise UsageError("convert needs a coloured graph or a textile system")


def cmd_properties(doc: Document, args) -> dict:
    rep = properties(textile_of(doc))
    out = {
        "command": "properties",
        "sources": {"blue": list(rep.sources[1]), "red": list(rep.sources[2])},
        "sinks": {"blue": list(rep.sinks[1]), "red": list(rep.sinks[2])},
        "essential": rep.essential,
        "row_finite": rep.row_finite,
        "admits_2graph": rep.admits_2graph,
        "locally_convex": rep.locally_convex,
        "finitely_aligned": rep.finitely_aligned,
    }
    if rep.mce_table is not None:
        out["mce_table"] = [{"edge": e, "red": w, "count": n} for (e, w), n in rep.mce_table.items()]
    return out


def cmd_pi1(doc: Document, args) -> tuple[dict, int]:
    if doc.kind == "directed_graph":
        pres = pi1_graph(doc.value, _tree(doc.value, args))
    else:
        cg, C = coloured_of(doc)
        pres = pi1(cg, C, args.base, _tree(cg.graph, args))
    rec = recognize(pres, args.budget)
    out = {"command": "pi1", **rec.as_dict(),
           "presentation": {"generators": len(pres.generators), "relators": len(pres.relators)}}
    return out, EXIT_LIMIT if rec.budget_exceeded else EXIT_OK


def cmd_homology(doc: Document, args) -> dict:
    return {"command": "homology", **homology(complex_of(doc)).as_dict()}


def cmd_cohomology(doc: Document, args) -> dict:
    A = parse_coefficients(args.coefficients)
    res = cohomology(complex_of(doc), A, representatives=args.representatives)
    if args.degree is None:
        return {"command": "cohomology", "coefficients": str(A), **res.as_dict()}
    out = res.degree(args.degree).as_dict()
    if args.representatives and args.degree == 2:
        out["representatives"] = res.as_dict()["representatives"]
    return out


def cmd_iso(docs: Sequence[Document], args) -> dict:
    a, b = docs
    if a.kind == "textile" and b.kind == "textile":
        phi = textile_isomorphism(a.value, b.value)
        if phi is None:
            return {"command": "iso", "isomorphic": False}
        return {"command": "iso", "isomorphic": True,
                "E": {"vertices": dict(phi.phiE.vmap), "edges": dict(phi.phiE.emap)},
                "F": {"vertices": dict(phi.phiF.vmap), "edges": dict(phi.phiF.emap)}}
    psi = square_isomorphism(coloured_of(a), coloured_of(b))
    if psi is None:
        return {"command": "iso", "isomorphic": False}
    return {"command": "iso", "isomorphic": True,
            "vertices": dict(psi.vmap), "edges": dict(psi.emap)}


COMMANDS = {
    "validate": cmd_validate,
    "lift": cmd_lift,
    "convert": cmd_convert,
    "properties": cmd_properties,
    "pi1": cmd_pi1,
    "homology": cmd_homology,
    "cohomology": cmd_cohomology,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kgraph", description="2-graphs and textile systems: validation, "
                                           "fundamental groups, homology and cohomology.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)
    for name in list(COMMANDS) + ["iso"]:
        sp = sub.add_parser(name)
        sp.add_argument("files", nargs=2 if name == "iso" else 1, metavar="FILE")
        if name == "pi1":
            sp.add_argument("--base", default=None, help="basepoint (default: first vertex)")
            sp.add_argument("--tree", choices=("bfs", "random"), default="bfs")
            sp.add_argument("--seed", type=int, default=0, help="seed for --tree random")
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                            help="maximum number of Tietze moves")
        if name == "cohomology":
            sp.add_argument("--coefficients", default="Z")
            sp.add_argument("--degree", type=int, choices=(0, 1, 2), default=None)
            sp.add_argument("--representatives", action="store_true",
                            help="include H^2 representative cocycles (cyclic coefficients)")
    return p


def _resolve(name: str):
    # bare names of shipped example files are accepted as well as paths
    try:
        return load_document(name)
    except FileNotFoundError:
        if name in corpus.FILES:
            return corpus.load(name)
        raise


def run(argv: Sequence[str] | None = None) -> tuple[dict, int]:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return {"error": "usage", "message": str(exc)}, EXIT_USAGE
    command = args.command
    try:
        docs = [_resolve(f) for f in args.files]
        if command == "iso":
            return cmd_iso(docs, args), EXIT_OK
        result = COMMANDS[command](docs[0], args)
        return result if isinstance(result, tuple) else (result, EXIT_OK)
    except (UsageError, FileNotFoundError, CoefficientParseError) as exc:
        return {"command": command, "error": "usage", "message": str(exc)}, EXIT_USAGE
    except LIMIT_ERRORS as exc:
        return {"command": command, "error": type(exc).__name__, "message": str(exc)}, EXIT_LIMIT
    except DocumentSyntaxError as exc:
        return {"command": command, "error": "DocumentSyntaxError", "message": str(exc),
                "line": exc.line, "column": exc.column}, EXIT_INVALID
    except SchemaError as exc:
        return {"command": command, "error": "SchemaError", "pointer": exc.pointer,
                "message": str(exc)}, EXIT_INVALID
    except ValidationError as exc:
        return {"command": command, "error": type(exc).__name__, "message": str(exc),
                "violations": exc.violations}, EXIT_INVALID
    except KGraphError as exc:
        return {"command": command, "error": type(exc).__name__, "message": str(exc)}, EXIT_INVALID


def main(argv: Sequence[str] | None = None) -> int:
    report, code = run(argv)
    sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
