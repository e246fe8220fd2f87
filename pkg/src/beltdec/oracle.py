"""Brute-force cell-complex checks used to verify the combinatorial formulas."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import errors, gf2
from .belts import Belt, check_belt
from .coloring import VectorColoring
from .polytope import SimplePolytope

MAX_RANK_3COMPLEX = 16
MAX_RANK_SURFACE = 8


@dataclass
class GluedComplex:
    """Cell counts and adjacency of the manifold glued from 2^r polytope copies."""

    cells: Tuple[int, int, int, int]  # number of 0-,1-,2-,3-cells
    euler: int
    connected: bool
    closed: bool
    orientable: bool


def _coset_rep(a: int, basis: List[int]) -> int:
    return gf2.reduce(a, basis)


def build_complex(p: SimplePolytope, lam: VectorColoring) -> GluedComplex:
    """Count cells of the glued complex and check it is a closed manifold."""
    r = lam.r
    if r > MAX_RANK_3COMPLEX:
        raise errors.TooLarge(f"rank {r} exceeds oracle limit {MAX_RANK_3COMPLEX}")
    cols = {f: lam.column(f) for f in range(1, p.m + 1)}
    if any(c is None for c in cols.values()):
        raise errors.BadParam("oracle needs a total colouring")
    n3 = 1 << r
    spans = {f: gf2.echelon([cols[f]]) for f in cols}
    two_cells: Set[Tuple[int, int]] = set()
    for f in cols:
        for a in range(n3):
            two_cells.add((f, _coset_rep(a, spans[f])))
    edge_spans = {e: gf2.echelon([cols[e[0]], cols[e[1]]]) for e in p.edges}
    one_cells: Set[Tuple[Tuple[int, int], int]] = set()
    for e in p.edges:
        for a in range(n3):
            one_cells.add((e, _coset_rep(a, edge_spans[e])))
    vert_spans = {v: gf2.echelon([cols[f] for f in v]) for v in p.vertices}
    zero_cells: Set[Tuple[Tuple[int, int, int], int]] = set()
    for v in p.vertices:
        for a in range(n3):
            zero_cells.add((v, _coset_rep(a, vert_spans[v])))
    euler = len(zero_cells) - len(one_cells) + len(two_cells) - n3
    # closed: each 2-cell lies on exactly two 3-cells
    closed = True
    bound: Dict[Tuple[int, int], int] = {c: 0 for c in two_cells}
    for a in range(n3):
        for f in cols:
            bound[(f, _coset_rep(a, spans[f]))] += 1
    closed = all(c == 2 for c in bound.values())
    # connectivity and orientability via sign propagation across 2-cells
    colour: Dict[int, int] = {}
    orientable = True
    components = 0
    for start in range(n3):
        if start in colour:
            continue
        components += 1
        colour[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for f in cols:
                b = a ^ cols[f]
                want = colour[a] ^ 1  # crossing a facet reverses orientation sign
                if b in colour:
                    if colour[b] != want:
                        orientable = False
                else:
                    colour[b] = want
                    stack.append(b)
    return GluedComplex(
        cells=(len(zero_cells), len(one_cells), len(two_cells), n3),
        euler=euler,
        connected=(components == 1),
        closed=closed,
        orientable=orientable,
    )


def orientability_by_propagation(p: SimplePolytope, lam: VectorColoring) -> bool:
    return build_complex(p, lam).orientable


@dataclass
class SurfaceComplex:
    """A closed surface glued from 2^rb copies of a k-gon."""

    euler: int
    orientable: bool
    connected: bool

    @property
    def genus(self) -> int:
        assert self.orientable and self.euler % 2 == 0
        return (2 - self.euler) // 2

    @property
    def crosscaps(self) -> int:
        assert not self.orientable
        return 2 - self.euler


def surface_complex(belt_columns: Sequence[int], rb: Optional[int] = None) -> SurfaceComplex:
    """Glue 2^rb copies of a k-gon whose edges carry the given columns."""
    cols = list(belt_columns)
    k = len(cols)
    if rb is None:
        rb = max(c.bit_length() for c in cols)
    if rb > MAX_RANK_SURFACE:
        raise errors.TooLarge(f"rank {rb} exceeds oracle limit {MAX_RANK_SURFACE}")
    for i in range(k):
        a, b = cols[i], cols[(i + 1) % k]
        if not (a and b) or a == b:
            raise errors.StarViolation("consecutive belt columns must be independent")
    n2 = 1 << rb
    one_cells = set()
    zero_cells = set()
    for i in range(k):
        span_e = gf2.echelon([cols[i]])
        span_v = gf2.echelon([cols[i], cols[(i + 1) % k]])
        for a in range(n2):
            one_cells.add((i, _coset_rep(a, span_e)))
            zero_cells.add((i, _coset_rep(a, span_v)))
    euler = len(zero_cells) - len(one_cells) + n2
    colour: Dict[int, int] = {}
    orientable = True
    components = 0
    for start in range(n2):
        if start in colour:
            continue
        components += 1
        colour[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for c in cols:
                b = a ^ c
                want = colour[a] ^ 1
                if b in colour:
                    if colour[b] != want:
                        orientable = False
                else:
                    colour[b] = want
                    stack.append(b)
    return SurfaceComplex(euler=euler, orientable=orientable, connected=(components == 1))


def count_belt_surface_components(p: SimplePolytope, lam: VectorColoring, belt: Belt) -> int:
    """Components of the glued belt surface, by union-find over polygon copies."""
    r = lam.r
    if r > MAX_RANK_3COMPLEX:
        raise errors.TooLarge(f"rank {r} exceeds oracle limit {MAX_RANK_3COMPLEX}")
    gens = [lam.column(f) for f in belt.facets]
    return _orbit_count(r, gens)


def count_facet_submanifold_components(
    p: SimplePolytope, lam: VectorColoring, f: int
) -> int:
    """Components of the glued facet submanifold over facet f."""
    r = lam.r
    if r > MAX_RANK_3COMPLEX:
        raise errors.TooLarge(f"rank {r} exceeds oracle limit {MAX_RANK_3COMPLEX}")
    gens = [lam.column(g) for g in p.neighbors[f]] + [lam.column(f)]
    return _orbit_count(r, gens)


def _orbit_count(r: int, gens: Sequence[int]) -> int:
    parent = list(range(1 << r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(1 << r):
        for g in gens:
            ra, rb = find(a), find(a ^ g)
            if ra != rb:
                parent[ra] = rb
    return len({find(a) for a in range(1 << r)})


def brute_force_belts(p: SimplePolytope, k: int) -> List[Belt]:
    """Naive k-belt enumeration over all cyclic facet sequences."""
    out = set()
    for combo in itertools.combinations(range(1, p.m + 1), k):
        first = combo[0]
        for perm in itertools.permutations(combo[1:]):
            if perm[0] > perm[-1]:
                continue  # kill reflections
            seq = (first,) + perm
            try:
                b = check_belt(p, seq)
            except errors.NotABelt:
                continue
            out.add(b)
    return sorted(out)


__all__ = [
    "GluedComplex",
    "build_complex",
    "orientability_by_propagation",
    "SurfaceComplex",
    "surface_complex",
    "count_belt_surface_components",
    "count_facet_submanifold_components",
    "brute_force_belts",
]
