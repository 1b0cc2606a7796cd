"""Command-line entry point.

Subcommands: analyze, order, certify-minimal, decompose, an-arcs,
an-order.  JSON goes to stdout or --out; DOT diagrams to --dot.  Exit
status: 0 success, 1 when proof gaps (Open pairs) remain, 2 on input or
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .arcs import (
    POLY_X,
    POLY_Y,
    POLY_Z,
    contact_order,
    defining_residual,
    sample_arc,
    separation_check,
)
from .classify import (
    certify_minimal,
    decompose_minimal,
    is_an,
    is_minimal,
    serialize_certificate,
    serialize_decomposition,
    supergraph_dot,
)
from .cycles import fundamental_cycle, is_rational, ray_basis, serialize_ray_basis
from .errors import NashArcsError
from .generators import an_graph
from .graph import (
    WeightedDualGraph,
    graph_is_negative_definite,
    parse_graph,
    serialize_graph,
)
from .order import hasse_export, relation_matrix, serialize_relation_matrix


def _load_graph(path: str) -> WeightedDualGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(document: dict[str, Any], out: str | None) -> None:
    text = json.dumps(document, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _write_dot(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _header(**extra: Any) -> dict[str, Any]:
    head = {"tool": "nasharcs", "version": __version__}
    head.update(extra)
    return head


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report: dict[str, Any] = {
        "header": _header(),
        "graph": serialize_graph(g),
        "vertices": g.n,
        "negative_definite": graph_is_negative_definite(g),
    }
    if report["negative_definite"]:
        report["rational"] = is_rational(g)
        report["minimal"] = is_minimal(g)
        report["an"] = is_an(g)
        report["fundamental_cycle"] = list(fundamental_cycle(g))
        report["ray_basis"] = serialize_ray_basis(ray_basis(g))
        rm = relation_matrix(g)
        report["relation"] = serialize_relation_matrix(rm)
        if report["minimal"]:
            cert = certify_minimal(g)
            report["certificate"] = serialize_certificate(cert)
    _emit(report, args.out)
    return 0


def cmd_order(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rm = relation_matrix(g)
    doc = {"header": _header(), "graph": serialize_graph(g)}
    doc.update(serialize_relation_matrix(rm))
    _write_dot(hasse_export(rm), args.dot)
    _emit(doc, args.out)
    return 1 if rm.open_pairs() else 0


def cmd_certify_minimal(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cert = certify_minimal(g)
    doc = {"header": _header()}
    doc.update(serialize_certificate(cert))
    _emit(doc, args.out)
    return 1 if cert.open_pairs() else 0


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cert = decompose_minimal(g, args.x, args.y)
    doc = {"header": _header()}
    doc.update(serialize_decomposition(cert))
    _write_dot(supergraph_dot(cert), args.dot)
    _emit(doc, args.out)
    return 0


def cmd_an_arcs(args: argparse.Namespace) -> int:
    n, i = args.n, args.family
    doc: dict[str, Any] = {
        "header": _header(seed=args.seed, trunc=args.trunc, samples=args.samples),
        "n": n,
        "family": i,
    }
    records = []
    ok = True
    for s in range(args.samples):
        arc = sample_arc(n, i, args.trunc, (args.seed, s))
        orders = {
            "x": contact_order(arc, POLY_X),
            "y": contact_order(arc, POLY_Y),
            "z": contact_order(arc, POLY_Z),
        }
        residual_zero = all(c == 0 for c in defining_residual(arc))
        expected = orders == {"x": i, "y": n + 1 - i, "z": 1}
        ok = ok and residual_zero and expected
        records.append(
            {"sample": s, "orders": orders, "residual_zero": residual_zero}
        )
    doc["arcs"] = records
    doc["orders_match"] = ok
    if args.against is not None:
        lo, hi = sorted((i, args.against))
        rep = separation_check(n, lo, hi, args.samples, args.trunc, args.seed)
        doc["separation"] = rep.to_json()
        ok = ok and rep.passed
    _emit(doc, args.out)
    return 0 if ok else 1


def cmd_an_order(args: argparse.Namespace) -> int:
    g = an_graph(args.n)
    rm = relation_matrix(g)
    doc = {"header": _header(), "graph": serialize_graph(g)}
    doc.update(serialize_relation_matrix(rm))
    _write_dot(hasse_export(rm), args.dot)
    _emit(doc, args.out)
    return 1 if rm.open_pairs() else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nasharcs",
        description="Non-inclusion certificates for Nash arc families "
        "on resolution graphs of surface singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the JSON report to this file")

    p = sub.add_parser("analyze", help="full report for one graph")
    p.add_argument("graph", help="graph JSON file")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("order", help="divisorial order relation table")
    p.add_argument("graph")
    p.add_argument("--dot", help="write the Hasse diagram as DOT")
    common(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("certify-minimal", help="certify all pairs of a minimal graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_certify_minimal)

    p = sub.add_parser("decompose", help="bamboo decomposition through two vertices")
    p.add_argument("graph")
    p.add_argument("--x", required=True, help="first vertex id")
    p.add_argument("--y", required=True, help="second vertex id")
    p.add_argument("--dot", help="write the supergraph as DOT")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("an-arcs", help="sample arcs on z^(n+1) = x y")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", type=int, required=True)
    p.add_argument("--against", type=int, help="run the separation check vs this family")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_an_arcs)

    p = sub.add_parser("an-order", help="order relation on the built-in A_n graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot")
    common(p)
    p.set_defaults(func=cmd_an_order)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "trunc", None) is None and args.command == "an-arcs":
        args.trunc = 4 * (args.n + 1)
    try:
        return args.func(args)
    except NashArcsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
