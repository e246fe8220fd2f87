"""JSON serialization and @-references for polytopes, colourings and belts."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from . import errors
from .belts import Belt
from .coloring import VectorColoring, enumerate_colorings, identity_coloring
from .polytope import SimplePolytope, catalog

SCHEMA = 1

CATALOG_NAMES = ["simplex", "cube", "prism:<k>", "associahedron3", "dodecahedron"]


def load_polytope(ref: str) -> SimplePolytope:
    """Load a polytope from a JSON file or a @catalog reference."""
    if ref.startswith("@"):
        return catalog(ref[1:])
    with open(ref) as fh:
        data = json.load(fh)
    return polytope_from_json(data)


def polytope_from_json(data: Dict[str, Any]) -> SimplePolytope:
    try:
        m = int(data["m"])
        verts = [tuple(int(x) for x in v) for v in data["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.BadParam(f"malformed polytope JSON: {exc}") from exc
    return SimplePolytope(m, tuple(verts))


def polytope_to_json(p: SimplePolytope) -> Dict[str, Any]:
    return {"schema": SCHEMA, "m": p.m, "vertices": [list(v) for v in p.vertices]}


def load_coloring(ref: str, p: SimplePolytope) -> VectorColoring:
    """Load a colouring from JSON, or @identity / @search-small-cover."""
    if ref == "@identity":
        return identity_coloring(p)
    if ref == "@search-small-cover":
        found = enumerate_colorings(p, 3, limit=1)
        if not found:
            raise errors.ColoringError("no rank-3 colouring exists")
        return found[0]
    if ref.startswith("@"):
        raise errors.UnknownName(f"unknown colouring reference {ref!r}")
    with open(ref) as fh:
        data = json.load(fh)
    return coloring_from_json(data)


def coloring_from_json(data: Dict[str, Any]) -> VectorColoring:
    try:
        r = int(data["r"])
        if "cols" in data:
            cols = [int(c) for c in data["cols"]]
        else:
            cols = [int("".join(str(int(b)) for b in bits), 2) for bits in data["columns"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.BadParam(f"malformed colouring JSON: {exc}") from exc
    return VectorColoring.from_columns(r, cols)


def coloring_to_json(lam: VectorColoring) -> Dict[str, Any]:
    cols = []
    for c in lam.columns[1:]:
        cols.append(None if c is None else [int(b) for b in format(c, f"0{lam.r}b")])
    return {"schema": SCHEMA, "r": lam.r, "columns": cols}


def load_belt(ref: str) -> Belt:
    with open(ref) as fh:
        data = json.load(fh)
    try:
        return Belt(tuple(int(f) for f in data["facets"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.BadParam(f"malformed belt JSON: {exc}") from exc


def count_str(n: int) -> str:
    """Counts that can exceed 2^53 are emitted as decimal strings."""
    return str(n)


__all__ = [
    "SCHEMA",
    "CATALOG_NAMES",
    "load_polytope",
    "polytope_from_json",
    "polytope_to_json",
    "load_coloring",
    "coloring_from_json",
    "coloring_to_json",
    "load_belt",
    "count_str",
]
