"""Command-line interface: JSON in, JSON (or SVG/DOT) out.

Exit codes: 0 success, 2 domain rejection (invalid graph, impossible
blow-up, classification failure), 1 I/O or usage problems.  Identical
inputs produce byte-identical outputs.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import blowup_calculus, classify, dh_measure, homology, render
from .chain_arith import ChainError
from .graph_core import (GraphError, canonical_form, graph_from_json,
                         graph_to_json, is_isomorphic, require_valid,
                         validate_graph)
from .rational import fmt_rat, parse_rat
from .toric_geometry import (graph_to_polygon, polygon_from_json,
                             polygon_to_graph, validate_delzant)


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_json(path):
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError("cannot read %s: %s" % (path or "stdin", exc), 1)


def _write(text, path):
    try:
        if path is None or path == "-":
            sys.stdout.write(text)
        else:
            with open(path, "w") as fh:
                fh.write(text)
    except OSError as exc:
        raise CliError("cannot write %s: %s" % (path, exc), 1)


def _emit_json(data, path):
    _write(json.dumps(data, indent=2, sort_keys=True) + "\n", path)


def _load_graph(path):
    return graph_from_json(_read_json(path))


def _load_object(path):
    """Graph, polygon, or density, recognized by JSON shape."""
    data = _read_json(path)
    if "breakpoints" in data:
        return dh_measure.PiecewiseLinearDensity(
            [parse_rat(b) for b in data["breakpoints"]],
            [parse_rat(v) for v in data["values"]])
    verts = data.get("vertices", [])
    if verts and isinstance(verts[0], dict):
        return graph_from_json(data)
    return polygon_from_json(data)


def _parse_seed(text):
    if ":" in text:
        family, raw = text.split(":", 1)
        args = []
        for part in raw.split(","):
            part = part.strip()
            try:
                args.append(parse_rat(part))
            except (ValueError, ZeroDivisionError):
                args.append(part)
        args = [int(a) if isinstance(a, Fraction) and a.denominator == 1
                else a for a in args]
    else:
        family, args = text, []
    return family, classify.minimal_graph(family, *args)


def _cmd_validate(ns):
    obj = _load_object(getattr(ns, "in"))
    if hasattr(obj, "vertices") and isinstance(obj.vertices, dict):
        problems = validate_graph(obj)
    else:
        problems = validate_delzant(obj)
    if problems:
        _emit_json({"valid": False, "problems": problems}, ns.out)
        return 2
    _emit_json({"valid": True}, ns.out)
    return 0


def _cmd_iso(ns):
    g1, g2 = _load_graph(ns.paths[0]), _load_graph(ns.paths[1])
    same = is_isomorphic(g1, g2, ns.mode)
    _emit_json({"isomorphic": same, "mode": ns.mode}, ns.out)
    return 0


def _cmd_dh(ns):
    g = require_valid(_load_graph(getattr(ns, "in")))
    rho = dh_measure.density(g)
    ext = dh_measure.extremal_self_intersections(g)
    _emit_json({"density": rho.to_json(),
                "e_min": fmt_rat(ext.e_min), "e_max": fmt_rat(ext.e_max),
                "total_mass": fmt_rat(dh_measure.total_mass(rho))}, ns.out)
    if ns.svg:
        _write(render.density_svg(rho), ns.svg)
    return 0


def _cmd_polygon2graph(ns):
    P = polygon_from_json(_read_json(getattr(ns, "in")))
    _emit_json(graph_to_json(polygon_to_graph(P)), ns.out)
    return 0


def _cmd_graph2polygon(ns):
    g = _load_graph(getattr(ns, "in"))
    _emit_json(graph_to_polygon(g).to_json(), ns.out)
    return 0


def _cmd_blowup(ns):
    g = _load_graph(getattr(ns, "in"))
    if ns.vertex is None:
        sites = blowup_calculus.blowup_sites(g)
        rows = []
        for s in sites:
            sup, attain = blowup_calculus.max_size(g, s)
            rows.append({"vertex": s.vertex, "tag": s.tag,
                         "max_size": None if sup is None else fmt_rat(sup),
                         "attainable": attain})
        _emit_json({"sites": rows}, ns.out)
        return 0
    if getattr(ns, "lambda") is None:
        raise CliError("--lambda is required with --vertex", 1)
    lam = parse_rat(getattr(ns, "lambda"))
    _emit_json(graph_to_json(blowup_calculus.blowup(g, ns.vertex, lam)),
               ns.out)
    return 0


def _cmd_blowdown(ns):
    g = _load_graph(getattr(ns, "in"))
    sites = blowup_calculus.blowdown_sites(g)
    rows = [{"pattern": s.pattern, "vertices": list(s.vertices),
             "lambda": fmt_rat(s.lam), "side": s.side} for s in sites]
    if ns.site is None:
        _emit_json({"sites": rows}, ns.out)
        return 0
    if not 0 <= ns.site < len(sites):
        raise CliError("site index out of range", 1)
    _emit_json(graph_to_json(blowup_calculus.blowdown(g, sites[ns.site])),
               ns.out)
    return 0


def _cmd_minimal(ns):
    g = _load_graph(getattr(ns, "in"))
    minimal, steps = blowup_calculus.reduce_to_minimal(g)
    _emit_json({"family": classify.match_minimal_family(minimal),
                "steps": [{"pattern": s.pattern,
                           "vertices": list(s.vertices),
                           "lambda": fmt_rat(s.lam), "side": s.side}
                          for s in steps],
                "minimal": graph_to_json(minimal)}, ns.out)
    return 0


def _cmd_enumerate(ns):
    if not ns.seed:
        raise CliError("at least one --seed is required", 1)
    seeds = [_parse_seed(s) for s in ns.seed]
    seeds = [("%s#%d" % (fam, i), g)
             for i, (fam, g) in enumerate(seeds)]
    recs = classify.enumerate_graphs(seeds, ns.max_blowups)
    index = []
    outdir = ns.out if ns.out not in (None, "-") else None
    if outdir:
        os.makedirs(outdir, exist_ok=True)
    for i, rec in enumerate(recs):
        digest = canonical_form(rec.graph, "exact").digest
        name = "class_%04d_%s.json" % (i, digest)
        index.append({"file": name, "seed": rec.seed_key,
                      "blowups": rec.depth, "digest": digest})
        if outdir:
            with open(os.path.join(outdir, name), "w") as fh:
                json.dump(graph_to_json(rec.graph), fh, indent=2,
                          sort_keys=True)
                fh.write("\n")
    if outdir:
        with open(os.path.join(outdir, "index.json"), "w") as fh:
            json.dump(index, fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        _emit_json(index, ns.out)
    return 0


def _cmd_classify(ns):
    g = _load_graph(getattr(ns, "in"))
    P = classify.classify_isolated(g)
    _emit_json(P.to_json(), ns.out)
    return 0


def _cmd_homology(ns):
    g = _load_graph(getattr(ns, "in"))
    data = homology.intersection_matrix(g)
    values = homology.class_values(g)
    lines = []
    width = max(len(lab) for lab in data.labels)
    for lab, row in zip(data.labels, data.matrix):
        lines.append("%-*s %s" % (width, lab,
                                  " ".join("%3d" % x for x in row)))
    _emit_json({"labels": list(data.labels),
                "matrix": [list(r) for r in data.matrix],
                "basis": list(data.basis),
                "values": {lab: fmt_rat(values[lab])
                           for lab in data.labels},
                "pretty": lines}, ns.out)
    return 0


def _cmd_render(ns):
    obj = _load_object(getattr(ns, "in"))
    doc = render.render(obj, ns.format)
    _write(doc, ns.svg or ns.out)
    return 0


_COMMANDS = {
    "validate": _cmd_validate, "iso": _cmd_iso, "dh": _cmd_dh,
    "polygon2graph": _cmd_polygon2graph, "graph2polygon": _cmd_graph2polygon,
    "blowup": _cmd_blowup, "blowdown": _cmd_blowdown,
    "minimal": _cmd_minimal, "enumerate": _cmd_enumerate,
    "classify": _cmd_classify, "homology": _cmd_homology,
    "render": _cmd_render,
}


def _parser():
    p = argparse.ArgumentParser(
        prog="hamgraphs",
        description="Decorated graphs of 4-dimensional Hamiltonian "
                    "circle spaces: validation, Duistermaat-Heckman "
                    "measures, polygons, blow-ups, classification.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        if name == "iso":
            sp.add_argument("paths", nargs=2)
        else:
            sp.add_argument("--in", default=None,
                            help="input JSON path (default stdin)")
        sp.add_argument("--out", default=None,
                        help="output path (default stdout)")
        if name == "iso":
            sp.add_argument("--mode", choices=["exact", "shift"],
                            default="exact")
        if name in ("dh",):
            sp.add_argument("--svg", default=None)
        if name == "blowup":
            sp.add_argument("--vertex", default=None)
            sp.add_argument("--lambda", default=None, metavar="P/Q")
        if name == "blowdown":
            sp.add_argument("--site", type=int, default=None)
        if name == "enumerate":
            sp.add_argument("--seed", action="append", default=[],
                            metavar="FAMILY:params")
            sp.add_argument("--max-blowups", type=int, default=0)
        if name == "render":
            sp.add_argument("--format", choices=["svg", "dot"],
                            default="svg")
            sp.add_argument("--svg", default=None)
    return p


def run(argv=None):
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[ns.command](ns)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except (GraphError, ChainError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
