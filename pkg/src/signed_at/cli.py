"""Command line front end.

Exit codes: 0 success or verified, 1 property refuted (not colourable,
certificate invalid, not antibalanced, no refutation found), 2 usage or
invalid input, 3 resource limit hit, 4 internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certificate, coloring, density, fileio, polynomial
from .core import is_antibalanced, switch
from .limits import InternalError, InvalidArgumentError, ResourceLimitError
from .orientation import at_number_orient, eulerian_imbalance
from .triangulation import NearTriangulation, at5_certificate, nice_orientation, triangulate_embedding

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3, 4

CAP_FLAGS = {
    "expansion_cap": ("SIGNED_AT_EXPANSION_CAP", 24, "max edges for polynomial expansion"),
    "enum_cap": ("SIGNED_AT_ENUM_CAP", 20, "max edges for orientation/Eulerian enumeration"),
    "search_cap": ("SIGNED_AT_SEARCH_CAP", 10**7, "max steps for colouring searches"),
    "mad_cap": ("SIGNED_AT_MAD_CAP", 20, "max vertices for exhaustive mad"),
}


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _split(value: str) -> list:
    return [x.strip() for x in value.split(",") if x.strip()]


def _embedding(doc: fileio.GraphDoc) -> NearTriangulation:
    if doc.outer_cycle is None or doc.faces is None:
        raise InvalidArgumentError("graph file needs 'outer_cycle' and 'faces' for this command")
    return NearTriangulation.checked(doc.graph, doc.outer_cycle, doc.faces)


def cmd_poly(args) -> int:
    g = fileio.read_graph(args.graph).graph
    p = polynomial.expand(g)
    res = polynomial.at_number_poly(g)
    _emit(polynomial.dumps(p), args.output)
    w = ",".join(map(str, res.witness))
    print(f"AT = {res.k} (monomial {w}, coefficient {res.coefficient}; {res.implies})")
    return EXIT_OK


def cmd_at(args) -> int:
    g = fileio.read_graph(args.graph).graph
    res = at_number_orient(g)
    o = res.witness
    doc = certificate.certificate_doc(o, "at", eulerian_imbalance(o), res.k)
    print(f"AT = {res.k} (max outdegree {o.max_outdegree()}, imbalance {res.coefficient})")
    _emit(certificate.dumps(doc), args.output)
    return EXIT_OK


def _report_cert(cert, output) -> None:
    doc = certificate.from_nice(cert)
    branches = ", ".join(f"{k}={v}" for k, v in sorted(cert.branches.items()))
    print(f"{cert.kind} certificate: even={cert.report.even} odd={cert.report.odd} "
          f"diff={cert.report.diff} max outdegree={cert.max_outdegree} [{branches}]")
    _emit(certificate.dumps(doc), output)


def cmd_nice(args) -> int:
    t = _embedding(fileio.read_graph(args.graph))
    edge = _split(args.edge)
    if len(edge) != 2:
        raise InvalidArgumentError("--edge takes 'u,v'")
    _report_cert(nice_orientation(t, edge), args.output)
    return EXIT_OK


def cmd_certify_at5(args) -> int:
    doc = fileio.read_graph(args.graph)
    if doc.outer_cycle is None or doc.faces is None:
        raise InvalidArgumentError("graph file needs 'outer_cycle' and 'faces' for this command")
    t = triangulate_embedding(doc.graph, doc.outer_cycle, doc.faces)
    added = t.graph.m - doc.graph.m
    if added:
        print(f"added {added} positive diagonal(s); certificate is for the triangulated supergraph")
    cert = at5_certificate(t)
    _report_cert(cert, args.output)
    print("AT <= 5 certified")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"certificate is not valid JSON: {exc}") from None
    graph = fileio.read_graph(args.graph).graph if args.graph else None
    res = certificate.verify(doc, graph)
    if res.ok:
        print(f"verified: kind={doc.get('kind')} even={res.report.even} odd={res.report.odd} "
              f"diff={res.report.diff}")
        return EXIT_OK
    for p in res.problems:
        print(f"invalid: {p}")
    return EXIT_REFUTED


def cmd_mad(args) -> int:
    g = fileio.read_graph(args.graph).graph
    rep = density.mad(g)
    print(f"mad = {rep.mad.numerator}/{rep.mad.denominator}")
    print("witness: " + ",".join(v for v in g.vertices if v in rep.witness))
    return EXIT_OK


def cmd_at_negative(args) -> int:
    g = fileio.read_graph(args.graph).graph
    if args.as_negative:
        g = g.all_negative()
    res = density.at_all_negative(g)
    print(f"AT = {res.k} (mad = {res.density}, max outdegree {res.orientation.max_outdegree()})")
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = fileio.read_graph(args.graph).graph
    res = coloring.chromatic_number(g)
    print(f"chromatic number = {res.k}")
    for v in g.vertices:
        print(f"{v}: {res.coloring[v]}")
    return EXIT_OK


def cmd_list_color(args) -> int:
    g = fileio.read_graph(args.graph).graph
    lists = coloring.read_lists(Path(args.lists).read_text(encoding="utf-8"))
    res = coloring.list_color(g, lists)
    if res.coloring is None:
        print(f"no proper L-coloring ({res.exhausted} assignments exhausted)")
        return EXIT_REFUTED
    print("proper L-coloring found")
    for v in g.vertices:
        print(f"{v}: {res.coloring[v]}")
    return EXIT_OK


def cmd_refute(args) -> int:
    g = fileio.read_graph(args.graph).graph
    res = coloring.refute_choosability(g, args.k, args.m)
    if res.lists is None:
        print(f"no refuting {args.k}-list assignment from [-{args.m}, {args.m}] ({res.steps} steps)")
        return EXIT_REFUTED
    print(f"not {args.k}-choosable: refuting list assignment found ({res.steps} steps)")
    _emit(coloring.write_lists(res.lists, g.vertices), args.output)
    return EXIT_OK


def cmd_switch(args) -> int:
    doc = fileio.read_graph(args.graph)
    g = switch(doc.graph, _split(args.set))
    _emit(fileio.dumps_graph(g, doc.outer_cycle, doc.faces), args.output)
    return EXIT_OK


def cmd_antibalanced(args) -> int:
    g = fileio.read_graph(args.graph).graph
    x = is_antibalanced(g)
    if x is None:
        print("not antibalanced")
        return EXIT_REFUTED
    print("antibalanced; switch at: " + ",".join(v for v in g.vertices if v in x))
    return EXIT_OK


def cmd_figure2(args) -> int:
    g, lists = coloring.figure2_instance()
    outer, faces = coloring.figure2_embedding()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    gp, lp = out / "figure2.json", out / "figure2.lists"
    gp.write_text(fileio.dumps_graph(g, outer, faces), encoding="utf-8")
    lp.write_text(coloring.write_lists(lists, g.vertices), encoding="utf-8")
    print(gp)
    print(lp)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="signed-at", description="Alon-Tarsi numbers of signed graphs")
    for name, (env, default, helptext) in CAP_FLAGS.items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=None,
                        help=f"{helptext} (default {default}, env {env})")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, graph=True, output=False):
        p = sub.add_parser(name, help=helptext, description=helptext)
        if graph:
            p.add_argument("graph", help="graph document (JSON)")
        if output:
            p.add_argument("-o", "--output", help="write the main artifact here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("poly", cmd_poly, "expand the graph polynomial and read off the AT number", output=True)
    add("at", cmd_at, "AT number by orientation search, with a certificate", output=True)
    p = add("nice", cmd_nice, "nice orientation of G - uv for an outer edge uv", output=True)
    p.add_argument("--edge", required=True, help="designated outer edge 'u,v'")
    add("certify-at5", cmd_certify_at5, "certificate that AT <= 5 for a plane graph", output=True)
    p = add("verify", cmd_verify, "re-check a certificate file", graph=False)
    p.add_argument("certificate")
    p.add_argument("--graph", help="graph document the certificate must match")
    add("mad", cmd_mad, "exact maximum average degree")
    p = add("at-negative", cmd_at_negative, "AT number of an all-negative graph from its density")
    p.add_argument("--as-negative", action="store_true", help="treat every edge as negative")
    add("chromatic", cmd_chromatic, "signed chromatic number")
    p = add("list-color", cmd_list_color, "find a proper colouring from given lists")
    p.add_argument("--lists", required=True, help="list file, one 'name: c1,c2,...' per line")
    p = add("refute", cmd_refute, "search for a non-colourable k-list assignment", output=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True, help="colours drawn from -m..m")
    p = add("switch", cmd_switch, "switch signs at a vertex set", output=True)
    p.add_argument("--set", required=True, help="comma separated vertices")
    add("antibalanced", cmd_antibalanced, "test switching equivalence to all-negative")
    p = add("figure2", cmd_figure2, "write the 2-colourable non-3-choosable example", graph=False)
    p.add_argument("--out-dir", default=".")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = {}
    for name, (env, _, _) in CAP_FLAGS.items():
        value = getattr(args, name)
        if value is not None:
            if value <= 0:
                parser.error(f"--{name.replace('_', '-')} must be positive")
            saved[env] = os.environ.get(env)
            os.environ[env] = str(value)
    try:
        return args.func(args)
    except (InvalidArgumentError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        # caps only apply to this invocation
        for env, value in saved.items():
            if value is None:
                os.environ.pop(env, None)
            else:
                os.environ[env] = value


if __name__ == "__main__":
    sys.exit(main())
