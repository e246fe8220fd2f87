"""Manifold invariants: prime expression, JSJ report, Seifert data, geometry."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import errors, gf2
from .belts import Belt, CutPiece, cut_along_family
from .coloring import (
    VectorColoring,
    is_orientable,
    normalize,
    restrict,
    restrict_to_map,
    subspace,
    subspace_dim,
    validate_coloring,
)
from .decomposition import (
    CanonicalDecomposition,
    Piece,
    canonical_4belt_decomposition,
    classify_polytope,
    prime_decompose,
    recognize_prism,
)
from .oracle import MAX_RANK_SURFACE, surface_complex
from .polytope import SimplePolytope, shrink_triangle

S3 = "S3"
RP3 = "RP3"
S2XS1 = "S2xS1"


def _require_full_rank(lam: VectorColoring) -> None:
    if lam.rank() != lam.r:
        raise errors.RankMismatch(
            f"columns span a rank-{lam.rank()} subspace of Z_2^{lam.r}; "
            "pass the colouring in its own rank"
        )


# -- base cases ----------------------------------------------------------------


def base_case_manifold(p: SimplePolytope, lam: VectorColoring) -> Tuple[str, ...]:
    """Manifold of the simplex or the 3-prism, as a tuple of prime labels."""
    validate_coloring(p, lam)
    _require_full_rank(lam)
    r = lam.r
    if p.m == 4:
        return (S3,) if r == 4 else (RP3,)
    info = recognize_prism(p)
    if info is None or info.k != 3:
        raise errors.NotBaseCase(f"no base-case table for this {p.m}-facet polytope")
    b1, b2 = info.bases
    sides = [f for f in range(1, 6) if f not in info.bases]
    side_cols = [lam.column(f) for f in sides]
    if gf2.rank(side_cols) != 3:
        # the three side columns span a plane; the manifold contains a
        # two-sided projective plane and leaves the prime-label table
        raise errors.NotBaseCase("side columns of the 3-prism are dependent")
    if r == 5:
        return (S2XS1,)
    if r == 3:
        return (RP3, RP3)
    side_sum = side_cols[0] ^ side_cols[1] ^ side_cols[2]
    if lam.column(b1) == side_sum or lam.column(b2) == side_sum:
        return (RP3, RP3)
    return (S2XS1,)


# -- prime expression ----------------------------------------------------------


AsphericalKey = Tuple  # (canonical polytope code, canonical colouring columns)


def aspherical_key(p: SimplePolytope, lam: VectorColoring) -> AsphericalKey:
    """Canonical key of an aspherical summand up to isomorphism and GL."""
    code = p.canonical_code()
    best = None
    for labels in p.canonical_labelings():
        # labels: facet -> 0-based canonical position
        cols = [None] * p.m
        for f, pos in labels.items():
            cols[pos] = lam.column(f)
        cand = tuple(normalize(VectorColoring.from_columns(lam.r, cols)).columns[1:])
        if best is None or cand < best:
            best = cand
    return (code, best)


@dataclass(frozen=True)
class AsphericalSummand:
    polytope: SimplePolytope
    coloring: VectorColoring  # normalized, full rank
    key: AsphericalKey
    count: int


@dataclass(frozen=True)
class PrimeExpression:
    """M as a connected sum: counts of RP3, S2xS1 and aspherical summands."""

    rp3: int
    s2xs1: int
    aspherical: Tuple[AsphericalSummand, ...]

    def is_sphere(self) -> bool:
        return self.rp3 == 0 and self.s2xs1 == 0 and not self.aspherical

    def summand_counter(self) -> Counter:
        c = Counter()
        if self.rp3:
            c[RP3] = self.rp3
        if self.s2xs1:
            c[S2XS1] = self.s2xs1
        for a in self.aspherical:
            c[("aspherical",) + a.key] += a.count
        return c


def _scale(expr: PrimeExpression, factor: int) -> PrimeExpression:
    return PrimeExpression(
        expr.rp3 * factor,
        expr.s2xs1 * factor,
        tuple(
            AsphericalSummand(a.polytope, a.coloring, a.key, a.count * factor)
            for a in expr.aspherical
        ),
    )


def _combine(parts: Sequence[PrimeExpression], extra_s2xs1: int) -> PrimeExpression:
    rp3 = sum(e.rp3 for e in parts)
    s2 = sum(e.s2xs1 for e in parts) + extra_s2xs1
    merged: Dict[AsphericalKey, AsphericalSummand] = {}
    for e in parts:
        for a in e.aspherical:
            if a.key in merged:
                prev = merged[a.key]
                merged[a.key] = AsphericalSummand(prev.polytope, prev.coloring, prev.key,
                                                  prev.count + a.count)
            else:
                merged[a.key] = a
    return PrimeExpression(rp3, s2, tuple(merged[k] for k in sorted(merged)))


def prime_expression(p: SimplePolytope, lam: VectorColoring) -> PrimeExpression:
    """Prime decomposition of the glued manifold (empty expression = S3).

    Requires every 3-belt to carry three independent columns, which holds in
    particular whenever the colouring is orientable.
    """
    validate_coloring(p, lam)
    _require_full_rank(lam)
    return _prime_expression_rec(p, lam)


def _prime_expression_rec(p: SimplePolytope, lam: VectorColoring) -> PrimeExpression:
    r = lam.r
    if p.m == 4:
        return PrimeExpression(0, 0, ()) if r == 4 else PrimeExpression(1, 0, ())
    dec = prime_decompose(p)
    if not dec.belts:
        norm = normalize(lam)
        return PrimeExpression(
            0, 0,
            (AsphericalSummand(p, norm, aspherical_key(p, norm), 1),),
        )
    for b in dec.belts:
        if subspace_dim(lam, b.facets) != 3:
            raise errors.DecompositionError(
                f"3-belt {b.facets} carries dependent columns; "
                "the connected-sum formula does not apply"
            )
    # peel one belt at a time: cut along the first 3-belt only
    first = dec.belts[0]
    halves = cut_along_family(p, [first])
    parts = []
    exponents = []
    for piece in halves:
        q = piece.polytope
        track = dict(piece.tracking)
        while True:
            new_fs = [f for f, pr in track.items() if pr.kind == "new"]
            if not new_fs:
                break
            f = new_fs[0]
            q, relabel = shrink_triangle(q, f)
            track = {relabel[g]: pr for g, pr in track.items() if g != f}
        cols = [lam.column(track[f].parent) for f in range(1, q.m + 1)]
        sub = VectorColoring.from_columns(lam.r, cols)
        validate_coloring(q, sub)
        ri = sub.rank()
        parts.append(_scale(_prime_expression_rec(q, normalize(sub)), 1 << (r - ri)))
        exponents.append(r - ri)
    extra = (1 << (r - 3)) - (1 << exponents[0]) - (1 << exponents[1]) + 1
    assert extra >= 0, "sphere-summand count must be non-negative"
    return _combine(parts, extra)


# -- surfaces ------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceClass:
    components: int
    orientable: bool
    genus: Optional[int]  # orientable genus
    crosscaps: Optional[int]  # non-orientable genus


def belt_surface_class(p: SimplePolytope, lam: VectorColoring, belt: Belt) -> SurfaceClass:
    """Topology of the surface glued over a belt: counts and per-component genus."""
    validate_coloring(p, lam)
    cols = [lam.column(f) for f in belt.facets]
    basis = gf2.echelon(cols)
    rb = len(basis)
    components = 1 << (lam.r - rb)
    coords = []
    for c in cols:
        cc = gf2.coords_in_basis(c, basis)
        assert cc is not None
        coords.append(cc)
    k = belt.k
    phi = gf2.solve_all_ones(coords)
    if phi is not None:
        if rb >= 3:
            genus = 1 + (k - 4) * (1 << (rb - 3))
        else:
            # rank-2 orientable: two alternating columns, so k is even
            assert k % 2 == 0
            genus = 1 + (k - 4) // 2
        cls = SurfaceClass(components, True, genus, None)
    else:
        crosscaps = 2 + (k - 4) * (1 << max(rb - 2, 0))
        cls = SurfaceClass(components, False, None, crosscaps)
    if rb <= MAX_RANK_SURFACE:
        sc = surface_complex(coords, rb)
        assert sc.connected
        assert sc.orientable == cls.orientable
        if sc.orientable:
            assert sc.genus == cls.genus, (sc.genus, cls.genus)
        else:
            assert sc.crosscaps == cls.crosscaps
    return cls


# -- JSJ / geometric report ------------------------------------------------------


@dataclass(frozen=True)
class TorusFamily:
    type: int  # 1 = canonical belt, 2 = free quadrangle torus, 3 = Klein bottle
    belt: Optional[Tuple[int, ...]]  # root belt (type 1) or quadrangle belt
    quadrangle: Optional[int]  # root facet (types 2, 3)
    count: int  # submanifolds of this family
    boundary_tori: Optional[int] = None  # type 3: tori bounding the neighbourhoods


@dataclass(frozen=True)
class JsjPiece:
    kind: str  # 'prism' | 'pogorelov' | 'almost_pogorelov'
    geometry: str  # 'H2xR' | 'H3'
    piece: Piece
    r_i: int
    multiplicity: int
    boundary_per_copy: int  # boundary tori of each copy (cusps for H3 pieces)
    deleted_quadrangles: Tuple[int, ...]  # piece facets removed before gluing


@dataclass(frozen=True)
class JsjReport:
    decomposition: CanonicalDecomposition
    r: int
    tori: Tuple[TorusFamily, ...]
    pieces: Tuple[JsjPiece, ...]


def _quad_belt_root(piece: CutPiece, f: int) -> List[int]:
    """Root facets of the 4-belt around a quadrangle of a piece."""
    out = []
    for g in piece.polytope.neighbors[f]:
        pr = piece.tracking[g]
        assert pr.kind != "new", "quadrangle neighbour is a glued disk"
        out.append(pr.parent)
    return out


def jsj_report(p: SimplePolytope, lam: VectorColoring) -> JsjReport:
    """The JSJ / geometric decomposition data of an orientable M(P, lam)."""
    validate_coloring(p, lam)
    _require_full_rank(lam)
    if not is_orientable(p, lam):
        raise errors.NotOrientable("the JSJ report needs an orientable manifold")
    dec = canonical_4belt_decomposition(p)
    r = lam.r
    tori: List[TorusFamily] = []
    for b in dec.belts:
        rb = subspace_dim(lam, b.facets)
        cls = belt_surface_class(p, lam, b)
        assert cls.orientable and cls.genus == 1, "canonical belt surface is not a torus"
        tori.append(TorusFamily(1, b.facets, None, 1 << (r - rb)))
    pieces: List[JsjPiece] = []
    for piece in dec.pieces:
        poly = piece.polytope
        deleted = tuple(sorted(piece.cut.new_facets()))
        if piece.kind == "prism":
            geometry = "H2xR"
        else:
            geometry = "H3"
            deleted = tuple(sorted(set(deleted) | set(piece.free_quadrangles)))
        for f in deleted:
            assert poly.facet_size(f) == 4
        kept = [f for f in range(1, poly.m + 1) if f not in deleted]
        cols = []
        for f in kept:
            pr = piece.cut.tracking[f]
            assert pr.kind != "new"
            cols.append(lam.column(pr.parent))
        r_i = gf2.rank(cols)
        boundary = 0
        for f in deleted:
            rb = gf2.rank([lam.column(g) for g in _quad_belt_root(piece.cut, f)])
            boundary += 1 << (r_i - rb)
        pieces.append(JsjPiece(piece.kind, geometry, piece, r_i,
                               1 << (r - r_i), boundary, deleted))
        if piece.kind != "prism":
            for f in piece.free_quadrangles:
                j = piece.cut.tracking[f].parent
                belt_cols = [lam.column(g) for g in _quad_belt_root(piece.cut, f)]
                basis = gf2.echelon(belt_cols)
                rb = len(basis)
                rfj = len(gf2.echelon(belt_cols + [lam.column(j)]))
                if rfj == rb + 1:
                    tori.append(TorusFamily(2, tuple(sorted(_quad_belt_root(piece.cut, f))),
                                            j, 1 << (r - rfj)))
                else:
                    assert rfj == rb
                    tori.append(TorusFamily(3, tuple(sorted(_quad_belt_root(piece.cut, f))),
                                            j, 1 << (r - rfj), boundary_tori=1 << (r - rb)))
    report = JsjReport(dec, r, tuple(tori), tuple(pieces))
    _check_boundary_identity(report)
    return report


def _check_boundary_identity(report: JsjReport) -> None:
    """Each torus/Klein neighbourhood boundary meets piece copies twice/once."""
    total = sum(pc.multiplicity * pc.boundary_per_copy for pc in report.pieces)
    want = 0
    for t in report.tori:
        if t.type in (1, 2):
            want += 2 * t.count
        else:
            want += t.boundary_tori
    assert total == want, (total, want)


# -- Seifert data for prism pieces ------------------------------------------------


@dataclass(frozen=True)
class SeifertData:
    k_prime: int  # base polygon size after deleting belt quadrangles
    singular_vertices: Tuple[Tuple[int, int], ...]  # root facet pairs (F_a, F_b)
    boundary_per_copy: int
    multiplicity: int


def seifert_data(p: SimplePolytope, lam: VectorColoring, jsj_piece: JsjPiece) -> SeifertData:
    """Seifert invariants of a prism piece of the JSJ decomposition."""
    if jsj_piece.kind != "prism":
        raise errors.NotPrismPiece("Seifert data is defined for prism pieces only")
    piece = jsj_piece.piece
    poly = piece.polytope
    info = piece.prism
    assert info is not None
    bp, bq = info.bases
    col_p = lam.column(piece.cut.tracking[bp].parent)
    col_q = lam.column(piece.cut.tracking[bq].parent)
    deleted = set(jsj_piece.deleted_quadrangles)
    ring = poly.facet_cycle(bp)
    k = len(ring)
    singular = []
    for i in range(k):
        fa, fb = ring[i], ring[(i + 1) % k]
        if fa in deleted or fb in deleted:
            continue
        col_a = lam.column(piece.cut.tracking[fa].parent)
        col_b = lam.column(piece.cut.tracking[fb].parent)
        assert (col_p ^ col_q) not in (col_a, col_b), "non-orientable fiber monodromy"
        if col_p != col_q and (col_p ^ col_q) == (col_a ^ col_b):
            singular.append(tuple(sorted((piece.cut.tracking[fa].parent,
                                          piece.cut.tracking[fb].parent))))
    return SeifertData(
        k_prime=k - len(deleted),
        singular_vertices=tuple(sorted(singular)),
        boundary_per_copy=jsj_piece.boundary_per_copy,
        multiplicity=jsj_piece.multiplicity,
    )


# -- global geometries -------------------------------------------------------------


def global_geometry(p: SimplePolytope, lam: VectorColoring) -> str:
    """The single geometry of M(P, lam), when P yields a geometric manifold."""
    validate_coloring(p, lam)
    info = recognize_prism(p)
    if p.m == 4:
        return "S3"
    if info is not None:
        if info.k == 3:
            return "S2xR"
        if info.k == 4:
            return "R3"
        return "H2xR"
    cls = classify_polytope(p)
    if cls.kind == "pogorelov":
        return "H3"
    raise errors.NotGlobalCase(f"{cls.kind} polytopes do not carry a single geometry")


__all__ = [
    "S3",
    "RP3",
    "S2XS1",
    "base_case_manifold",
    "aspherical_key",
    "AsphericalSummand",
    "PrimeExpression",
    "prime_expression",
    "SurfaceClass",
    "belt_surface_class",
    "TorusFamily",
    "JsjPiece",
    "JsjReport",
    "jsj_report",
    "SeifertData",
    "seifert_data",
    "global_geometry",
]
