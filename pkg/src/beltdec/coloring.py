"""GF(2) vector-colourings of facets: condition (*), orientability, covers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import errors, gf2
from .polytope import SimplePolytope


@dataclass(frozen=True)
class VectorColoring:
    """Columns Lambda_i in Z_2^r per facet, as bitmasks (bit t = coord t).

    columns[f] may be None for uncoloured facets (glued-disk facets of cut
    pieces); condition (*) is only enforced at fully coloured vertices.
    """

    r: int
    columns: Tuple[Optional[int], ...]  # index 0 unused; 1..m

    @staticmethod
    def from_columns(r: int, cols: Sequence[Optional[int]]) -> "VectorColoring":
        return VectorColoring(r, (None,) + tuple(cols))

    @property
    def m(self) -> int:
        return len(self.columns) - 1

    def column(self, f: int) -> Optional[int]:
        return self.columns[f]

    def coloured_columns(self) -> List[int]:
        return [c for c in self.columns[1:] if c is not None]

    def rank(self) -> int:
        return gf2.rank(self.coloured_columns())


def identity_coloring(p: SimplePolytope) -> VectorColoring:
    """Lambda_i = e_i: the colouring of the real moment-angle manifold."""
    return VectorColoring.from_columns(p.m, [1 << (f - 1) for f in range(1, p.m + 1)])


def validate_coloring(p: SimplePolytope, lam: VectorColoring) -> None:
    """Check condition (*): independence at every fully coloured vertex."""
    if lam.m != p.m:
        raise errors.RankMismatch(f"colouring has {lam.m} columns, polytope has {p.m} facets")
    for c in lam.columns[1:]:
        if c is not None and not (0 <= c < (1 << lam.r)):
            raise errors.BadParam(f"column {c} does not fit in Z_2^{lam.r}")
        if c == 0:
            raise errors.ZeroColumn("zero column")
    for v in p.vertices:
        cols = [lam.column(f) for f in v]
        if any(c is None for c in cols):
            continue
        if not gf2.triple_independent(*cols):
            raise errors.StarViolation(f"columns at vertex {v} are dependent")


def subspace(lam: VectorColoring, facets: Iterable[int]) -> List[int]:
    """Echelon basis of the span of the columns over the given facets."""
    return gf2.echelon([lam.column(f) for f in facets if lam.column(f) is not None])


def subspace_dim(lam: VectorColoring, facets: Iterable[int]) -> int:
    return len(subspace(lam, facets))


def orientation_functional(lam: VectorColoring) -> Optional[int]:
    """phi with phi(Lambda_i) = 1 for all coloured facets, if one exists."""
    return gf2.solve_all_ones(lam.coloured_columns())


def is_orientable(p: SimplePolytope, lam: VectorColoring) -> bool:
    """Orientability of the glued manifold: all columns odd in some basis."""
    phi = orientation_functional(lam)
    if phi is None:
        return False
    # cross-check against the basis-expansion criterion on a greedy basis
    cols = lam.coloured_columns()
    basis_idx = gf2.greedy_basis(cols)
    basis = [cols[i] for i in basis_idx]
    for c in cols:
        coords = gf2.coords_in_basis(c, basis)
        assert coords is not None
        assert gf2.weight(coords) % 2 == 1, "functional and basis criteria disagree"
    return True


def orientation_double_cover(
    p: SimplePolytope, lam: VectorColoring
) -> Tuple[VectorColoring, List[int]]:
    """The orientable double cover colouring and the projection matrix.

    Returns (lifted colouring in Z_2^{rank+1}, projection columns): the
    projection maps coordinate t of the lift to the t-th returned ambient
    vector, so that composing projection with the lift gives back lam.
    """
    if is_orientable(p, lam):
        raise errors.AlreadyOrientable("colouring is already orientable")
    cols = list(lam.columns[1:])
    if any(c is None for c in cols):
        raise errors.BadParam("double cover needs a total colouring")
    basis_idx = gf2.greedy_basis(cols)
    basis = [cols[i] for i in basis_idx]
    r = len(basis)
    coords = []
    for c in cols:
        cc = gf2.coords_in_basis(c, basis)
        assert cc is not None
        coords.append(cc)
    evens = [i for i, cc in enumerate(coords) if gf2.weight(cc) % 2 == 0]
    i0 = evens[0]  # smallest facet index with even coordinate weight
    shift = (1 << r) | coords[i0]
    lifted = [cc if gf2.weight(cc) % 2 else cc ^ shift for cc in coords]
    projection = basis + [cols[i0]]  # image of e_{r+1} is Lambda_{i0}
    lam_hat = VectorColoring.from_columns(r + 1, lifted)
    validate_coloring(p, lam_hat)
    assert is_orientable(p, lam_hat)
    for f in range(1, p.m + 1):
        v = lam_hat.column(f)
        img = 0
        for t in range(r + 1):
            if (v >> t) & 1:
                img ^= projection[t]
        assert img == cols[f - 1]
    return lam_hat, projection


def restrict(lam: VectorColoring, piece) -> VectorColoring:
    """Induced colouring on a cut piece (glued-disk facets stay uncoloured)."""
    cols: List[Optional[int]] = []
    for f in range(1, piece.polytope.m + 1):
        pr = piece.tracking[f]
        cols.append(None if pr.kind == "new" else lam.column(pr.parent))
    out = VectorColoring.from_columns(lam.r, cols)
    validate_coloring(piece.polytope, out)
    return out


def restrict_to_map(lam: VectorColoring, q: SimplePolytope, facet_map: Dict[int, int]) -> VectorColoring:
    """Pull a colouring through an old->new facet map (e.g. after shrinking)."""
    cols: List[Optional[int]] = [None] * q.m
    for old, new in facet_map.items():
        c = lam.column(old)
        if c is None:
            continue
        if cols[new - 1] is not None and cols[new - 1] != c:
            raise errors.MergeConflict(f"facets merged into {new} carry different columns")
        cols[new - 1] = c
    out = VectorColoring.from_columns(lam.r, cols)
    validate_coloring(q, out)
    return out


def normalize(lam: VectorColoring) -> VectorColoring:
    """GL(r,2)-normal form: greedy basis columns become e_1, e_2, ..."""
    cols = lam.coloured_columns()
    if len(cols) != lam.m:
        raise errors.BadParam("normalization needs a total colouring")
    basis_idx = gf2.greedy_basis(cols)
    basis = [cols[i] for i in basis_idx]
    out = []
    for c in cols:
        cc = gf2.coords_in_basis(c, basis)
        assert cc is not None
        out.append(cc)
    return VectorColoring.from_columns(len(basis), out)


def is_maximal(p: SimplePolytope, lam: VectorColoring) -> bool:
    """No rank-lowering projection of the colouring satisfies condition (*)."""
    norm = normalize(lam)
    r = norm.r
    if r == 0:
        return True
    cols = norm.columns[1:]
    # candidate projections Z_2^r -> Z_2^{r-1}: drop coordinate j, sending
    # e_j to an arbitrary vector a of the quotient
    for j in range(r):
        low = (1 << j) - 1
        for a in range(1 << (r - 1)):
            ok = True
            projected = {}
            for f, c in enumerate(cols, start=1):
                img = (c & low) | ((c >> (j + 1)) << j)
                if (c >> j) & 1:
                    img ^= a
                projected[f] = img
            for v in p.vertices:
                if not gf2.triple_independent(projected[v[0]], projected[v[1]], projected[v[2]]):
                    ok = False
                    break
            if ok:
                return False
    return True


def enumerate_colorings(
    p: SimplePolytope, rank: int, limit: Optional[int] = None
) -> List[VectorColoring]:
    """All colourings of exact rank up to GL(rank,2), by basis-fixed search.

    Scans facets in index order; a new column must either lie in the span of
    the previously introduced basis vectors or be the next unit vector.
    """
    results: List[VectorColoring] = []
    cols: List[int] = []
    verts_by_facet: Dict[int, List[Tuple[int, int, int]]] = {f: [] for f in range(1, p.m + 1)}
    for v in p.vertices:
        verts_by_facet[max(v)].append(v)

    def ok_at(f: int) -> bool:
        for v in verts_by_facet[f]:
            a, b, c = (cols[x - 1] for x in v)
            if not gf2.triple_independent(a, b, c):
                return False
        return True

    def search(f: int, used: int) -> bool:
        if limit is not None and len(results) >= limit:
            return True
        if f > p.m:
            if used == rank:
                results.append(VectorColoring.from_columns(rank, list(cols)))
            return limit is not None and len(results) >= limit
        remaining = p.m - f + 1
        if used + remaining < rank:
            return False
        candidates = list(range(1, 1 << used))
        if used < rank:
            candidates.append(1 << used)
        for c in candidates:
            cols.append(c)
            if ok_at(f):
                if search(f + 1, used + (1 if c == 1 << used else 0)):
                    cols.pop()
                    return True
            cols.pop()
        return False

    search(1, 0)
    return results


__all__ = [
    "VectorColoring",
    "identity_coloring",
    "validate_coloring",
    "subspace",
    "subspace_dim",
    "orientation_functional",
    "is_orientable",
    "orientation_double_cover",
    "restrict",
    "restrict_to_map",
    "normalize",
    "is_maximal",
    "enumerate_colorings",
]
