"""Command line interface: inspection, decompositions, oracle checks."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Dict, List, Optional

from . import errors, gf2, oracle
from .belts import Belt, enumerate_belts, is_trivial
from .coloring import (
    VectorColoring,
    enumerate_colorings,
    is_maximal,
    is_orientable,
    orientation_double_cover,
    validate_coloring,
)
from .decomposition import canonical_4belt_decomposition, classify_polytope, prime_decompose
from .invariants import (
    base_case_manifold,
    global_geometry,
    jsj_report,
    prime_expression,
    seifert_data,
)
from .io import (
    CATALOG_NAMES,
    SCHEMA,
    coloring_to_json,
    count_str,
    load_coloring,
    load_polytope,
    polytope_to_json,
)
from .polytope import SimplePolytope


def _emit(data: Dict[str, Any]) -> None:
    data.setdefault("schema", SCHEMA)
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _fail(message: str) -> int:
    _emit({"ok": False, "error": message})
    return 1


def cmd_validate(args) -> int:
    try:
        p = load_polytope(args.polytope)
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    _emit({"ok": True, "m": p.m, "vertices": len(p.vertices), "edges": len(p.edges)})
    return 0


def cmd_info(args) -> int:
    p = load_polytope(args.polytope)
    cls = classify_polytope(p)
    out: Dict[str, Any] = {
        "ok": True,
        "m": p.m,
        "vertices": len(p.vertices),
        "edges": len(p.edges),
        "facet_sizes": {str(f): p.facet_size(f) for f in range(1, p.m + 1)},
        "class": cls.kind,
    }
    if cls.witness is not None:
        out["witness_belt"] = list(cls.witness.facets)
    if cls.prism is not None:
        out["prism"] = {"k": cls.prism.k, "bases": list(cls.prism.bases)}
    _emit(out)
    return 0


def cmd_belts(args) -> int:
    p = load_polytope(args.polytope)
    found = enumerate_belts(p, args.k)
    _emit({
        "ok": True,
        "k": args.k,
        "count": len(found),
        "belts": [
            {"facets": list(b.facets), "trivial": is_trivial(p, b)} for b in found
        ],
    })
    return 0


def _leaf_json(leaf) -> Dict[str, Any]:
    return {
        "label": leaf.label,
        "m": leaf.polytope.m,
        "vertices": [list(v) for v in leaf.polytope.vertices],
        "facet_map": {str(f): root for f, root in sorted(leaf.facet_map.items())},
    }


def cmd_decompose_prime(args) -> int:
    p = load_polytope(args.polytope)
    dec = prime_decompose(p)
    if args.dot:
        sys.stdout.write(_prime_dot(dec))
        return 0
    _emit({
        "ok": True,
        "belts": [list(b.facets) for b in dec.belts],
        "leaves": [_leaf_json(l) for l in dec.leaves],
    })
    return 0


def _prime_dot(dec) -> str:
    lines = ["graph prime {", '  root [label="P"];']
    for i, b in enumerate(dec.belts):
        lines.append(f'  belt{i} [shape=box,label="belt {"-".join(map(str, b.facets))}"];')
        lines.append(f"  root -- belt{i};")
    for i, leaf in enumerate(dec.leaves):
        lines.append(f'  leaf{i} [label="{leaf.label} (m={leaf.polytope.m})"];')
        lines.append(f"  root -- leaf{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_decompose_jsj(args) -> int:
    p = load_polytope(args.polytope)
    try:
        lam = load_coloring(args.coloring, p)
        validate_coloring(p, lam)
        rep = jsj_report(p, lam)
    except errors.NotOrientable:
        return _fail("manifold is not orientable; analyze its orientation double cover instead")
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    if args.dot:
        sys.stdout.write(_jsj_dot(rep))
        return 0
    _emit(_jsj_json(p, lam, rep))
    return 0


def _jsj_json(p: SimplePolytope, lam: VectorColoring, rep) -> Dict[str, Any]:
    tori = []
    for t in rep.tori:
        rec: Dict[str, Any] = {"type": t.type, "count": count_str(t.count)}
        if t.belt is not None:
            rec["belt"] = list(t.belt)
        if t.quadrangle is not None:
            rec["quadrangle"] = t.quadrangle
        if t.boundary_tori is not None:
            rec["boundary_tori"] = count_str(t.boundary_tori)
        tori.append(rec)
    pieces = []
    for pc in rep.pieces:
        rec = {
            "kind": pc.kind,
            "geometry": pc.geometry,
            "m": pc.piece.polytope.m,
            "r_i": pc.r_i,
            "multiplicity": count_str(pc.multiplicity),
            "boundary_per_copy": count_str(pc.boundary_per_copy),
        }
        if pc.kind == "prism":
            sd = seifert_data(p, lam, pc)
            rec["seifert"] = {
                "k_prime": sd.k_prime,
                "singular_vertices": [list(z) for z in sd.singular_vertices],
                "boundary_per_copy": count_str(sd.boundary_per_copy),
            }
        pieces.append(rec)
    return {
        "ok": True,
        "r": rep.r,
        "canonical_belts": [list(b.facets) for b in rep.decomposition.belts],
        "tori": tori,
        "pieces": pieces,
    }


def _jsj_dot(rep) -> str:
    lines = ["graph jsj {"]
    for i, pc in enumerate(rep.pieces):
        lines.append(f'  piece{i} [label="{pc.kind} x{pc.multiplicity}"];')
    for i, b in enumerate(rep.decomposition.belts):
        key = b.facets
        lines.append(f'  belt{i} [shape=box,label="belt {"-".join(map(str, key))}"];')
        for j, pc in enumerate(rep.pieces):
            news = [f for f, pr in pc.piece.cut.tracking.items() if pr.kind == "new" and pr.belt == key]
            if news:
                lines.append(f"  belt{i} -- piece{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    p = load_polytope(args.polytope)
    try:
        lam = load_coloring(args.coloring, p)
        validate_coloring(p, lam)
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    out: Dict[str, Any] = {"ok": True, "m": p.m, "r": lam.r, "rank": lam.rank()}
    orientable = is_orientable(p, lam)
    out["orientable"] = orientable
    if not orientable:
        _emit({
            "ok": False,
            "orientable": False,
            "error": "manifold is not orientable",
            "hint": "analyze its orientation double cover (rank + 1) instead",
        })
        return 1
    cls = classify_polytope(p)
    out["class"] = cls.kind
    try:
        expr = prime_expression(p, lam)
        out["prime"] = {
            "RP3": count_str(expr.rp3),
            "S2xS1": count_str(expr.s2xs1),
            "aspherical": [
                {"m": a.polytope.m, "count": count_str(a.count)} for a in expr.aspherical
            ],
            "is_sphere": expr.is_sphere(),
        }
    except errors.BeltdecError as exc:
        out["prime"] = {"error": str(exc)}
    try:
        out["geometry"] = global_geometry(p, lam)
    except errors.NotGlobalCase:
        pass
    if cls.kind in ("prism", "pogorelov", "almost_pogorelov", "generic"):
        try:
            rep = jsj_report(p, lam)
            out["jsj"] = _jsj_json(p, lam, rep)
        except errors.BeltdecError as exc:
            out["jsj"] = {"error": str(exc)}
    try:
        out["base_case"] = list(base_case_manifold(p, lam))
    except errors.BeltdecError:
        pass
    _emit(out)
    return 0


def cmd_catalog(args) -> int:
    if args.name is None:
        _emit({"ok": True, "names": CATALOG_NAMES})
        return 0
    try:
        p = load_polytope("@" + args.name)
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    _emit(polytope_to_json(p))
    return 0


def cmd_enumerate_colorings(args) -> int:
    p = load_polytope(args.polytope)
    found = enumerate_colorings(p, args.rank, limit=args.limit)
    out = []
    for lam in found:
        rec = coloring_to_json(lam)
        rec.pop("schema", None)
        rec["orientable"] = is_orientable(p, lam)
        if args.check_maximal:
            rec["maximal"] = is_maximal(p, lam)
        out.append(rec)
    _emit({"ok": True, "rank": args.rank, "count": len(found), "colorings": out})
    return 0


def cmd_oracle(args) -> int:
    p = load_polytope(args.polytope)
    try:
        lam = load_coloring(args.coloring, p)
        validate_coloring(p, lam)
        gc = oracle.build_complex(p, lam)
    except errors.TooLarge as exc:
        return _fail(str(exc))
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    out = {
        "ok": True,
        "cells": [count_str(c) for c in gc.cells],
        "euler": gc.euler,
        "connected": gc.connected,
        "closed": gc.closed,
        "orientable": gc.orientable,
    }
    if args.check:
        out["checks"] = {
            "euler_zero": gc.euler == 0,
            "closed": gc.closed,
            "orientability_agrees": gc.orientable == is_orientable(p, lam),
        }
        if not all(out["checks"].values()):
            _emit(out)
            return 1
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="beltdec",
        description="Decompositions of 3-manifolds glued from colored simple 3-polytopes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="validate a polytope description")
    sp.add_argument("polytope")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("info", help="classify a polytope")
    sp.add_argument("polytope")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("belts", help="enumerate k-belts")
    sp.add_argument("polytope")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_belts)

    sp = sub.add_parser("decompose-prime", help="prime decomposition along 3-belts")
    sp.add_argument("polytope")
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_decompose_prime)

    sp = sub.add_parser("decompose-jsj", help="canonical 4-belt / JSJ decomposition")
    sp.add_argument("polytope")
    sp.add_argument("coloring")
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_decompose_jsj)

    sp = sub.add_parser("analyze", help="full report for a colored polytope")
    sp.add_argument("polytope")
    sp.add_argument("coloring")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("catalog", help="list or emit catalog polytopes")
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("enumerate-colorings", help="colourings of a given rank up to GL")
    sp.add_argument("polytope")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--check-maximal", action="store_true")
    sp.set_defaults(func=cmd_enumerate_colorings)

    sp = sub.add_parser("oracle", help="brute-force glued-complex checks")
    sp.add_argument("polytope")
    sp.add_argument("coloring")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except errors.BeltdecError as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
