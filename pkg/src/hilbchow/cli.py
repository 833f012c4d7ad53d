"""Command-line front end.  Every subcommand prints one JSON document on stdout."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib import resources
from typing import List, Optional, Sequence

from .assembly import component_decomposition, equivariant_chow
from .fixed_points import betti_bb, enumerate_fixed_points, tangent_representation
from .graded import chern_generator, graded_hilbert_model, module_M
from .polynomial import Character
from .relations import LabelMap, load_relations, verify_relations
from .staircase import (Staircase, WeightedHilbertFunction, complement, complement_in_box, incidence_necessary,
                        linkage)
from .toric import Subtorus, build_surface


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]


def _vector_json(v, points) -> dict:
    return {"degree": v.degree, "entries": {str(p): str(v[p]) for p in points}}


def _info(msg: str):
    print(msg, file=sys.stderr)


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _data_path(name: Optional[str], default: str) -> Optional[str]:
    """A user path, or a file shipped in the package data directory of that name."""
    if name is None:
        return None
    if os.path.exists(name):
        return name
    shipped = resources.files("hilbchow").joinpath("data").joinpath(os.path.basename(name))
    if shipped.is_file():
        return str(shipped)
    raise FileNotFoundError(name)


def cmd_fixed_points(args) -> int:
    S = build_surface(args.surface)
    pts = enumerate_fixed_points(S, args.points)
    _emit({"surface": S.name, "points": args.points, "count": len(pts),
           "fixed_points": [{"label": P.label, "parts": {n: str(E) for n, E in P.parts}} for P in pts]})
    return 0


def cmd_tangent(args) -> int:
    S = build_surface(args.surface)
    out = []
    for P in enumerate_fixed_points(S, args.points):
        if args.label and P.label != args.label:
            continue
        out.append({"label": P.label, "parts": {n: str(E) for n, E in P.parts},
                    "weights": [list(w) for w in tangent_representation(S, P).weights]})
    if args.label and not out:
        _info(f"no fixed point labelled {args.label!r}")
        return 2
    _emit({"surface": S.name, "points": args.points, "tangent": out})
    return 0


def cmd_graded_hilbert(args) -> int:
    a, b = _ints(args.weights)
    H = WeightedHilbertFunction.make((a, b), _ints(args.hilbert))
    model = graded_hilbert_model(H)
    c = _ints(args.chart)
    chart = (Character(c[0], c[1]), Character(c[2], c[3]))
    doc = {"weights": [a, b], "hilbert": list(H.values), "fixed_points": [str(E) for E in model.fixed_points],
           "embedding_degrees": list(model.embedding_degrees)}
    if model.fixed_points:
        gens = []
        for d in model.embedding_degrees:
            for j in range(1, H[d] + 1):
                g = chern_generator(model, d, j, chart)
                gens.append({"degree_of_bundle": d, "chern_class": j, **_vector_json(g, model.fixed_points)})
        M = module_M(model, chart, args.max_degree)
        doc.update({"generators": gens, "piece_dims": M.dims(), "betti": M.quotient_betti()})
    _emit(doc)
    return 0


def cmd_components(args) -> int:
    S = build_surface(args.surface)
    T = Subtorus(Character(*_ints(args.subtorus)))
    bound = args.max_degree if args.max_degree is not None else 2 * args.points
    comps = []
    for comp in component_decomposition(S, args.points, T):
        comps.append({"dimension": comp.dimension(bound), "shape": comp.factor_shapes(bound) or ["point"],
                      "factors": [f.describe() for f in comp.factors], "fixed_points": sorted(comp.points)})
    _emit({"surface": S.name, "points": args.points, "subtorus": str(T), "components": comps})
    return 0


def _chow(args):
    S = build_surface(args.surface)
    bound = args.max_degree if args.max_degree is not None else 2 * args.points
    start = time.time()
    M = equivariant_chow(S, args.points, bound, jobs=args.jobs)
    _info(f"equivariant module of {S.name}^[{args.points}] up to degree {bound}: {time.time() - start:.1f}s")
    return S, M


def _verify(args, S, M):
    if S.name != "P2":
        raise ValueError("relation checks need the P2 label map")
    rels = load_relations(_data_path(args.relations, "thm53.json"))
    labels = LabelMap.load(_data_path(args.labels, "p2_labels.json"))
    report = verify_relations(M, rels, labels)
    for r in report.results:
        status = "pass" if r.passed else "FAIL"
        _info(f"[{status}] {r.relation.name}{' (' + r.relation.reading + ')' if r.relation.reading else ''}: "
              f"{r.relation}")
    _info(f"relation-cut module equals computed module: {report.complete}")
    return report


def cmd_chow(args) -> int:
    S, M = _chow(args)
    if args.emit == "betti":
        _emit(M.quotient_betti())
        return 0
    if args.emit == "relations-check":
        report = _verify(args, S, M)
        _emit(report.to_json())
        return 0 if report.passed else 1
    _emit({"surface": S.name, "points": args.points, **M.to_json()})
    return 0


def cmd_betti(args) -> int:
    S = build_surface(args.surface)
    if args.method == "chow":
        _, M = _chow(args)
        _emit(M.quotient_betti())
    else:
        _emit(betti_bb(S, args.points))
    return 0


def cmd_verify(args) -> int:
    S, M = _chow(args)
    report = _verify(args, S, M)
    _emit(report.to_json())
    return 0 if report.passed else 1


def cmd_incidence(args) -> int:
    I, J = Staircase.parse(args.ideal), Staircase.parse(args.other)
    ok = incidence_necessary(I, J)
    link = linkage(I, J)
    clink = linkage(complement(I), complement(J))
    _emit({"ideal": str(I), "other": str(J), "necessary_condition": ok,
           "linkage": None if link is None else str(link),
           "complement_linkage": None if clink is None else str(clink)})
    return 0


def cmd_complement(args) -> int:
    I = Staircase.parse(args.ideal)
    C = complement_in_box(I, args.box) if args.box is not None else complement(I)
    _emit({"ideal": str(I), "box": args.box if args.box is not None else len(I), "complement": str(C)})
    return 0


def cmd_linkage(args) -> int:
    I, J = Staircase.parse(args.ideal), Staircase.parse(args.other)
    rpp = linkage(I, J)
    _emit({"ideal": str(I), "support": str(J), "linked": rpp is not None,
           "rpp": None if rpp is None else [[rpp.entries[(a, b)] for a in range(r)]
                                            for b, r in enumerate(J.row_lengths())]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hilbchow", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def surface_args(sp, chow=False):
        sp.add_argument("--surface", default="p2", help="P2, P1xP1, F<a>, Hirzebruch(<a>) or a JSON list of rays")
        sp.add_argument("--points", type=int, required=True, help="number of points d")
        if chow:
            sp.add_argument("--max-degree", type=int, default=None, help="degree bound (default 2d)")
            sp.add_argument("--jobs", type=int, default=1, help="parallel subtorus computations")

    sp = sub.add_parser("fixed-points", help="torus-fixed points of S^[d]")
    surface_args(sp)
    sp.set_defaults(func=cmd_fixed_points)

    sp = sub.add_parser("tangent", help="tangent weights at the fixed points")
    surface_args(sp)
    sp.add_argument("--label", default=None)
    sp.set_defaults(func=cmd_tangent)

    sp = sub.add_parser("graded-hilbert", help="a quasi-homogeneous Hilbert scheme and its Chow module")
    sp.add_argument("--weights", default="1,1")
    sp.add_argument("--hilbert", required=True, help="h0,h1,...")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--chart", default="1,0,0,1", help="characters of x and y: ax,bx,ay,by")
    sp.set_defaults(func=cmd_graded_hilbert)

    sp = sub.add_parser("components", help="components of the fixed locus of a subtorus")
    surface_args(sp)
    sp.add_argument("--subtorus", required=True, help="character a,b with T' = ker(a,b)")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.set_defaults(func=cmd_components)

    for name, func, helptext in (("chow", cmd_chow, "equivariant Chow module"),
                                 ("verify", cmd_verify, "check a relation file on the computed module")):
        sp = sub.add_parser(name, help=helptext)
        surface_args(sp, chow=True)
        sp.add_argument("--relations", default="thm53.json" if name == "verify" else None)
        sp.add_argument("--labels", default="p2_labels.json")
        if name == "chow":
            sp.add_argument("--emit", choices=["module", "betti", "relations-check"], default="module")
            sp.set_defaults(relations="thm53.json")
        sp.set_defaults(func=func)

    sp = sub.add_parser("betti", help="Betti numbers of S^[d]")
    surface_args(sp, chow=True)
    sp.add_argument("--method", choices=["bb", "chow"], default="bb",
                    help="Bialynicki-Birula count or the quotient of the equivariant module")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("incidence", help="necessary condition for a Schubert cell to meet another's closure")
    sp.add_argument("ideal")
    sp.add_argument("other")
    sp.set_defaults(func=cmd_incidence)

    sp = sub.add_parser("complement", help="complement ideal")
    sp.add_argument("ideal")
    sp.add_argument("--box", type=int, default=None)
    sp.set_defaults(func=cmd_complement)

    sp = sub.add_parser("linkage", help="reverse plane partition linking two staircases")
    sp.add_argument("ideal")
    sp.add_argument("other", help="support of the plane partition")
    sp.set_defaults(func=cmd_linkage)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, NotImplementedError, FileNotFoundError) as exc:
        _info(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
