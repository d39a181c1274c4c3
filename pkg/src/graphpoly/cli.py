"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .enumeration import enumerate_unlabeled
from .errors import GraphPolyError, InputError, SizeCapError
from .experiments import almost_unimodal_experiment, dumps, mate_census, sdp_equivalent
from .graph import Multigraph, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .hom import classify_dichotomy, read_template
from .invariants import get_invariant
from .poly import MultiPoly
from .properties import parse_property
from .treedecomp import chromatic_fpt, tree_decompose


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _graph(args) -> Multigraph:
    if getattr(args, "graph", None):
        return parse_graph6(args.graph)
    if getattr(args, "edges", None):
        try:
            return parse_edge_list(Path(args.edges).read_text())
        except OSError as exc:
            raise InputError(f"cannot read edge list: {exc}") from None
    raise InputError("give --graph G6 or --edges FILE")


def _value_json(v):
    if isinstance(v, MultiPoly):
        return {"text": str(v), "poly": v.to_json()}
    return {"text": str(v)}


def cmd_compute(args, out):
    G = _graph(args)
    handle = get_invariant(args.invariant)
    val = handle(G)
    if args.json:
        out.write(dumps({"invariant": handle.name, "n": G.n, "m": G.m, "value": _value_json(val)}) + "\n")
    else:
        out.write(f"{val}\n")


def cmd_census(args, out):
    rep = mate_census(get_invariant(args.invariant), args.n)
    if args.json:
        out.write(dumps(rep.to_json()) + "\n")
        return
    out.write(f"invariant {rep.invariant}, n = {rep.n}\n")
    out.write(f"graphs {rep.total}, unique {rep.unique}, mated {rep.mated}\n")
    out.write(f"unique fraction {rep.unique_fraction:.6f} (labeled-weighted {rep.labeled_unique_fraction:.6f})\n")
    out.write(f"mate classes {len(rep.mate_classes)}\n")
    for c in rep.mate_classes:
        out.write("  " + " ".join(c) + "\n")
    if rep.invariant in ("tutte", "potts"):
        out.write("note: experimental trend only\n")


def cmd_sdp(args, out):
    res = sdp_equivalent(get_invariant(args.a), get_invariant(args.b), args.n)
    if args.json:
        out.write(dumps({"equivalent": res.equivalent, "n": res.n, "classes": res.classes_checked,
                         "witness": res.witness, "detail": res.detail}) + "\n")
    elif res.equivalent:
        out.write(f"equivalent ({res.classes_checked} similarity classes)\n")
    else:
        out.write(f"not equivalent: {res.witness[0]} {res.witness[1]} ({res.detail})\n")


def cmd_unimodal(args, out):
    rep = almost_unimodal_experiment(parse_property(args.property), args.n, args.samples, args.seed)
    if args.json:
        out.write(dumps(rep.to_json()) + "\n")
    elif rep.fraction is None:
        out.write("no samples: fraction undefined\n")
    else:
        out.write(f"unimodal {rep.unimodal_count}/{rep.samples} = {rep.fraction:.6f}\n")


def cmd_dichotomy(args, out):
    res = classify_dichotomy(read_template(args.template))
    out.write(str(res) + "\n")


def cmd_fpt(args, out):
    G = _graph(args)
    td = tree_decompose(G)
    P = chromatic_fpt(G)
    if args.json:
        out.write(dumps({"width": td.width, "value": _value_json(P)}) + "\n")
    else:
        out.write(f"{P}\n")
        out.write(f"width {td.width}\n")


def cmd_enumerate(args, out):
    graphs = list(enumerate_unlabeled(args.n))
    if args.graph6:
        for G in graphs:
            out.write(encode_graph6(G) + "\n")
    else:
        out.write(f"{len(graphs)}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphpoly", description="Graph polynomials on small graphs.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="evaluate an invariant on one graph")
    c.add_argument("--invariant", required=True)
    c.add_argument("--graph", help="graph6 string")
    c.add_argument("--edges", help="edge-list file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_compute)

    c = sub.add_parser("census", help="mate census over all order-n graphs")
    c.add_argument("--invariant", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_census)

    c = sub.add_parser("sdp", help="s.d.p.-equivalence of two invariants")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_sdp)

    c = sub.add_parser("unimodal", help="sample G(n,1/2) and test unimodality")
    c.add_argument("--property", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--samples", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_unimodal)

    c = sub.add_parser("dichotomy", help="classify a weighted template")
    c.add_argument("--template", required=True)
    c.set_defaults(fn=cmd_dichotomy)

    c = sub.add_parser("fpt-chromatic", help="chromatic polynomial by tree-decomposition DP")
    c.add_argument("--graph", help="graph6 string")
    c.add_argument("--edges", help="edge-list file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_fpt)

    c = sub.add_parser("enumerate", help="list unlabeled graphs of order n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--graph6", action="store_true")
    c.set_defaults(fn=cmd_enumerate)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.fn(args, out)
    except SizeCapError as exc:
        err.write(f"size cap: {exc}\n")
        return 2
    except (InputError, GraphPolyError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
