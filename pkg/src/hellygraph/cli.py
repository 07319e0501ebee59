"""Command-line front end with exact-rational JSON output.

Subcommands: check | cliques | subdivide | dimension | hull | classify |
fixed-distance | translation-length | axis | solve-pm1.  Results are a
JSON envelope {"status", "payload", "diagnostics"} with all rationals as
reduced "p/q" strings and all sets canonically sorted; identical inputs
produce byte-identical output.  Exit codes: 0 ok, 1 domain error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import automorphisms as am
from . import cliques as cq
from . import graph as gr
from . import hull as hl
from . import periodic as pd
from .errors import HellyLibError, NotHellyError


def _frac(x) -> str:
    return str(Fraction(x))


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError("malformed JSON in %r: %s" % (path, exc)) from exc


def _ball_json(b: gr.Ball, g: gr.Graph) -> dict:
    return {
        "center": str(b.center),
        "radius": b.radius,
        "members": sorted((str(v) for v in b.members), key=lambda s: g.index(s)),
    }


def _clique_json(g: gr.Graph, c) -> list:
    return [str(v) for v in sorted(c, key=g.index)]


def _function_json(f: hl.MetricFunction) -> dict:
    return {str(v): _frac(x) for v, x in zip(f.domain, f.values)}


def _emit(payload: dict, diagnostics: list) -> None:
    doc = {"status": "ok", "payload": payload, "diagnostics": diagnostics}
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _dot_graph(names: list, edges: list, labels: list) -> str:
    lines = ["graph helly {"]
    for name, label in zip(names, labels):
        lines.append('  "%s" [label="%s"];' % (name, label))
    for a, b in edges:
        lines.append('  "%s" -- "%s";' % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph_arg(args, diagnostics) -> gr.Graph:
    g = gr.graph_from_json(_load_json(args.graph))
    if getattr(args, "skip_helly_check", False):
        diagnostics.append("helly:unverified")
    return g


def _cmd_check(args, diagnostics):
    g = gr.graph_from_json(_load_json(args.graph))
    res = gr.is_helly(g)
    payload = {"helly": res.helly}
    if res.witness is not None:
        payload["witness"] = [_ball_json(b, g) for b in res.witness]
    return payload


def _cmd_cliques(args, diagnostics):
    g = _graph_arg(args, diagnostics)
    poset = cq.round_cliques(g, check_helly=not args.skip_helly_check)
    return {
        "elements": [_clique_json(g, c) for c in poset.elements],
        "cover_relations": [list(pair) for pair in poset.cover_relations()],
    }


def _subdivision_payload(sub: hl.SubdivisionGraph, names, labels):
    index = {v: i for i, v in enumerate(sub.vertices)}
    return {
        "vertices": names,
        "edges": [[names[index[a]], names[index[b]]] for a, b in sub.edges()],
        "edge_length": _frac(sub.edge_length),
    }


def _cmd_subdivide(args, diagnostics):
    g = _graph_arg(args, diagnostics)
    sub = cq.first_subdivision(g, check_helly=not args.skip_helly_check)
    names = [",".join(str(x) for x in v) for v in sub.vertices]
    labels = ["{%s}" % ",".join(str(x) for x in v) for v in sub.vertices]
    if args.format == "dot":
        index = {v: i for i, v in enumerate(sub.vertices)}
        edges = [(names[index[a]], names[index[b]]) for a, b in sub.edges()]
        sys.stdout.write(_dot_graph(names, edges, labels))
        return None
    return _subdivision_payload(sub, names, labels)


def _cmd_dimension(args, diagnostics):
    g = _graph_arg(args, diagnostics)
    return {
        "dimension": cq.combinatorial_dimension(
            g, check_helly=not args.skip_helly_check
        )
    }


def _cmd_hull(args, diagnostics):
    g = _graph_arg(args, diagnostics)
    sub = hl.grid_graph(g, args.level, check_helly=not args.skip_helly_check)
    functions = list(sub.vertices)
    index = {f: i for i, f in enumerate(functions)}
    if args.format == "dot":
        names = ["f%d" % i for i in range(len(functions))]
        labels = [
            "(%s)" % ", ".join(_frac(x) for x in f.values) for f in functions
        ]
        edges = [(names[index[a]], names[index[b]]) for a, b in sub.edges()]
        sys.stdout.write(_dot_graph(names, edges, labels))
        return None
    return {
        "level": args.level,
        "edge_length": _frac(sub.edge_length),
        "vertices": [_function_json(f) for f in functions],
        "edges": [[index[a], index[b]] for a, b in sub.edges()],
    }


def _parse_perm(path: str) -> dict:
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise ValueError("permutation JSON must be an object {vertex: image}")
    return obj


def _parse_gens(path: str) -> list:
    obj = _load_json(path)
    if not isinstance(obj, list) or not obj:
        raise ValueError("generators JSON must be a nonempty list of permutation maps")
    return obj


def _affine_from_args(args) -> pd.AffineAutomorphism:
    perm = [int(x) for x in args.perm.split(",")] if args.perm else list(
        range(1, args.lattice + 1)
    )
    signs = [int(x) for x in args.signs.split(",")] if args.signs else None
    shift = [int(x) for x in args.shift.split(",")] if args.shift else None
    a = pd.AffineAutomorphism.from_one_indexed(perm, signs=signs, shift=shift)
    if a.dim != args.lattice:
        raise ValueError("permutation has %d coordinates, lattice has %d" % (a.dim, args.lattice))
    return a


def _cmd_classify(args, diagnostics):
    if args.lattice is not None:
        a = _affine_from_args(args)
        tau = pd.affine_translation_length(a)
        cls = "elliptic" if tau == 0 else "hyperbolic"
        return {"class": cls, "length": _frac(tau)}
    g = _graph_arg(args, diagnostics)
    perm = am.check_automorphism(g, _parse_perm(args.perm_file))
    witness = am.elliptic_witness(g, [perm], check_helly=not args.skip_helly_check)
    return {"class": "elliptic", "witness": _clique_json(g, witness)}


def _cmd_fixed_distance(args, diagnostics):
    g = _graph_arg(args, diagnostics)
    gens_g = [am.check_automorphism(g, p) for p in _parse_gens(args.gens)]
    gens_h = [am.check_automorphism(g, p) for p in _parse_gens(args.gens2)]
    res = am.fixed_set_distance(
        g, gens_g, gens_h, args.resolution, check_helly=not args.skip_helly_check
    )
    return {
        "dist": _frac(res.dist),
        "witness_G": _function_json(res.witness_g),
        "witness_H": _function_json(res.witness_h),
        "resolution": res.resolution,
    }


def _cmd_translation_length(args, diagnostics):
    if args.lattice is not None:
        a = _affine_from_args(args)
        tau = pd.affine_translation_length(a)
    else:
        p = pd.periodic_from_json(_load_json(args.periodic))
        tau = pd.deck_translation_length(p, args.dim_bound)
    cls = "elliptic" if tau == 0 else "hyperbolic"
    return {"length": _frac(tau), "class": cls}


def _cmd_axis(args, diagnostics):
    if args.lattice is not None:
        a = _affine_from_args(args)
        res = pd.axis_vertex(
            pd.LatticeGraph(args.lattice), a, level=args.level, window=args.window
        )
        if res is None:
            return {"found": False}
        return {
            "found": True,
            "point": [_frac(x) for x in res.point],
            "a": res.exponent,
            "L": res.length,
        }
    p = pd.periodic_from_json(_load_json(args.periodic))
    res = pd.axis_vertex(p, level=args.dim_bound, window=args.window)
    if res is None:
        return {"found": False}
    u, layer = res.point
    return {
        "found": True,
        "vertex": "%s@%d" % (u, layer),
        "a": res.exponent,
        "L": res.length,
    }


def _cmd_solve_pm1(args, diagnostics):
    obj = _load_json(args.system)
    try:
        A = obj["A"]
        y = obj["y"]
    except (TypeError, KeyError):
        raise ValueError("system JSON needs 'A' and 'y'") from None
    x = am.solve_pm1_system(A, y)
    return {"x": [_frac(v) for v in x]}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hellygraph",
        description="Exact computations on Helly graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("graph", help="graph JSON file, or - for stdin")
        p.add_argument("--skip-helly-check", action="store_true")
        p.set_defaults(fn=fn)
        return p

    p = sub.add_parser("check", help="decide the Helly property")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_check)

    add_graph_cmd("cliques", _cmd_cliques, help="round clique poset")
    p = add_graph_cmd("subdivide", _cmd_subdivide, help="first subdivision")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    add_graph_cmd("dimension", _cmd_dimension, help="combinatorial dimension")
    p = add_graph_cmd("hull", _cmd_hull, help="injective hull grid graph")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("classify", help="classify an automorphism")
    p.add_argument("--graph")
    p.add_argument("--perm-file")
    p.add_argument("--lattice", type=int)
    p.add_argument("--perm")
    p.add_argument("--signs")
    p.add_argument("--shift")
    p.add_argument("--skip-helly-check", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("fixed-distance", help="distance between fixed sets")
    p.add_argument("graph")
    p.add_argument("--gens", required=True)
    p.add_argument("--gens2", required=True)
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--skip-helly-check", action="store_true")
    p.set_defaults(fn=_cmd_fixed_distance)

    p = sub.add_parser("translation-length", help="exact translation length")
    p.add_argument("--lattice", type=int)
    p.add_argument("--perm")
    p.add_argument("--signs")
    p.add_argument("--shift")
    p.add_argument("--periodic")
    p.add_argument("--dim-bound", type=int, default=1)
    p.set_defaults(fn=_cmd_translation_length)

    p = sub.add_parser("axis", help="combinatorial axis vertex")
    p.add_argument("--lattice", type=int)
    p.add_argument("--perm")
    p.add_argument("--signs")
    p.add_argument("--shift")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--periodic")
    p.add_argument("--dim-bound", type=int, default=1)
    p.add_argument("--window", type=int, default=2)
    p.set_defaults(fn=_cmd_axis)

    p = sub.add_parser("solve-pm1", help="solve a {-1,0,1} linear system")
    p.add_argument("system", help="JSON file with fields A and y")
    p.set_defaults(fn=_cmd_solve_pm1)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    diagnostics: list = []
    try:
        if args.command in ("classify", "translation-length", "axis"):
            if getattr(args, "lattice", None) is None and not (
                getattr(args, "periodic", None) or getattr(args, "graph", None)
            ):
                raise ValueError("specify --lattice or a graph input")
        payload = args.fn(args, diagnostics)
    except (HellyLibError, ValueError, KeyError, OSError) as exc:
        doc = {"status": "error", "error": str(exc), "diagnostics": diagnostics}
        if isinstance(exc, NotHellyError):
            doc["witness"] = [
                {
                    "center": str(b.center),
                    "radius": b.radius,
                    "members": sorted(str(v) for v in b.members),
                }
                for b in exc.witness
            ]
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
        return 1
    if payload is not None:
        _emit(payload, diagnostics)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
