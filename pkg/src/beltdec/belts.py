"""k-belts of simple 3-polytopes: enumeration, nesting, curves, cutting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from . import errors
from .polytope import SimplePolytope, Vertex, _sorted_pair, _sorted_triple


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation/reflection of a cyclic sequence."""
    seq = tuple(seq)
    best = None
    for s in (seq, seq[::-1]):
        for i in range(len(s)):
            cand = s[i:] + s[:i]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class Belt:
    """A k-belt: cyclic facet sequence, stored in canonical rotation."""

    facets: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", canonical_cycle(self.facets))

    @property
    def k(self) -> int:
        return len(self.facets)

    @property
    def facet_set(self) -> FrozenSet[int]:
        return frozenset(self.facets)

    def pairs(self) -> List[Tuple[int, int]]:
        f = self.facets
        return [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]


def check_belt(p: SimplePolytope, seq: Sequence[int]) -> Belt:
    """Validate a cyclic facet sequence as a belt of p."""
    seq = tuple(seq)
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        raise errors.NotABelt(f"{seq} is not a simple cycle")
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if consecutive != p.adjacent(seq[i], seq[j]):
                raise errors.NotABelt(f"{seq}: adjacency of {seq[i]},{seq[j]} breaks the cycle")
    for v in p.vertices:
        if len(set(v) & set(seq)) >= 3:
            raise errors.NotABelt(f"{seq}: three belt facets meet at {v}")
    return Belt(seq)


def enumerate_belts(p: SimplePolytope, k: int) -> List[Belt]:
    """All k-belts of p, canonically ordered."""
    found: Set[Tuple[int, ...]] = set()
    nbrs = p.neighbors

    def extend(path: List[int], used: Set[int]) -> None:
        if len(path) == k:
            first, last = path[0], path[-1]
            if first in nbrs[last] and path[1] < last:
                try:
                    b = check_belt(p, path)
                except errors.NotABelt:
                    return
                found.add(b.facets)
            return
        for x in sorted(nbrs[path[-1]]):
            if x <= path[0] or x in used:
                continue
            # x lands at index len(path): non-consecutive members must not touch it
            if any(x in nbrs[y] for y in path[1:-1]):
                continue
            if 2 <= len(path) < k - 1 and x in nbrs[path[0]]:
                continue
            path.append(x)
            used.add(x)
            extend(path, used)
            path.pop()
            used.remove(x)

    for f in range(1, p.m + 1):
        extend([f], {f})
    return sorted(Belt(t) for t in found)


def trivial_facets(p: SimplePolytope, belt: Belt) -> List[int]:
    """Facets surrounded by the belt (nonempty iff the belt is trivial)."""
    out = []
    for f in range(1, p.m + 1):
        if f not in belt.facet_set and p.neighbors[f] == belt.facet_set:
            out.append(f)
    return out


def is_trivial(p: SimplePolytope, belt: Belt) -> bool:
    return bool(trivial_facets(p, belt))


@dataclass(frozen=True)
class Complement:
    """The two components of the belt complement on the boundary sphere."""

    belt: Belt
    sides: Tuple[FrozenSet[int], FrozenSet[int]]  # off-belt facets per side

    def side_of_facet(self, f: int) -> Optional[int]:
        for i, s in enumerate(self.sides):
            if f in s:
                return i
        return None

    def side_of_vertex(self, p: SimplePolytope, v: Vertex) -> int:
        for f in v:
            s = self.side_of_facet(f)
            if s is not None:
                return s
        raise AssertionError(f"vertex {v} has three belt facets")


def complement_components(p: SimplePolytope, belt: Belt) -> Complement:
    """Split the off-belt facets into the two Jordan components."""
    off = [f for f in range(1, p.m + 1) if f not in belt.facet_set]
    comp: Dict[int, int] = {}
    sides: List[Set[int]] = []
    for f in off:
        if f in comp:
            continue
        idx = len(sides)
        sides.append(set())
        stack = [f]
        comp[f] = idx
        while stack:
            g = stack.pop()
            sides[idx].add(g)
            for h in p.neighbors[g]:
                if h in belt.facet_set or h in comp:
                    continue
                comp[h] = idx
                stack.append(h)
    if len(sides) != 2:
        raise errors.NotABelt(f"belt {belt.facets} has {len(sides)} complement components")
    sides.sort(key=min)
    return Complement(belt, (frozenset(sides[0]), frozenset(sides[1])))


def compatible(p: SimplePolytope, b1: Belt, b2: Belt) -> bool:
    """Whether the two belts admit disjoint realizations (nesting test)."""
    if b1.facet_set <= b2.facet_set or b2.facet_set <= b1.facet_set:
        raise errors.DegenerateOverlap(f"{b1.facets} and {b2.facets} overlap degenerately")
    comp = complement_components(p, b1)
    off = b2.facet_set - b1.facet_set
    hit = {comp.side_of_facet(f) for f in off}
    return len(hit) == 1


def _edge_designated_vertex(p: SimplePolytope, e: Tuple[int, int]) -> Tuple[Vertex, Vertex]:
    v1, v2 = sorted(p.edge_vertices[e])
    return v1, v2


@dataclass(frozen=True)
class CurveFamily:
    """Disjoint witness curves: ordered belt crossings per edge."""

    belts: Tuple[Belt, ...]
    # edge -> belt indices ordered from the edge's designated (lex-min) vertex
    edge_order: Dict[Tuple[int, int], Tuple[int, ...]]


def curves_for_family(p: SimplePolytope, belts: Sequence[Belt]) -> CurveFamily:
    """Order the belts along each shared edge and certify non-crossing."""
    belts = tuple(belts)
    for b1, b2 in itertools.combinations(belts, 2):
        if not compatible(p, b1, b2):
            raise errors.NotNested(f"{b1.facets} and {b2.facets} are incompatible")
    comps = [complement_components(p, b) for b in belts]
    by_edge: Dict[Tuple[int, int], List[int]] = {}
    for i, b in enumerate(belts):
        for a, c in b.pairs():
            by_edge.setdefault(_sorted_pair(a, c), []).append(i)
    edge_order: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for e, idxs in by_edge.items():
        v, w = _edge_designated_vertex(p, e)
        def side_facets(i: int, at: Vertex) -> FrozenSet[int]:
            return comps[i].sides[comps[i].side_of_vertex(p, at)]
        def key(i: int):
            return (len(side_facets(i, v)), -len(side_facets(i, w)), belts[i].facets)
        ordered = sorted(idxs, key=key)
        # certify the chain: nearer curves enclose subsets of off-belt facets
        for a, b in zip(ordered, ordered[1:]):
            if not side_facets(a, v) <= side_facets(b, v):
                raise errors.NotNested(
                    f"belts {belts[a].facets} and {belts[b].facets} do not nest along {e}")
        edge_order[e] = tuple(ordered)
    fam = CurveFamily(belts, edge_order)
    _check_no_crossings(p, fam)
    return fam


def _check_no_crossings(p: SimplePolytope, fam: CurveFamily) -> None:
    """Assert that per-facet chords of the curve family do not interleave."""
    for f in range(1, p.m + 1):
        cyc = p.facet_cycle(f)
        d = len(cyc)
        circle: List[int] = []  # belt index per crossing point, in boundary order
        for t in range(d):
            g = cyc[t]
            e = _sorted_pair(f, g)
            pts = [i for i in fam.edge_order.get(e, ()) if f in fam.belts[i].facet_set]
            if not pts:
                continue
            v_start = _sorted_triple((f, cyc[t - 1], g))
            v_des, _ = _edge_designated_vertex(p, e)
            if v_des != v_start:
                pts = pts[::-1]
            circle.extend(pts)
        pos: Dict[int, List[int]] = {}
        for idx, bi in enumerate(circle):
            pos.setdefault(bi, []).append(idx)
        chords = []
        for bi, ps in pos.items():
            assert len(ps) == 2, f"belt {bi} crosses facet {f} {len(ps)} times"
            chords.append(tuple(ps))
        for (a1, a2), (b1, b2) in itertools.combinations(chords, 2):
            if (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2):
                raise errors.NotNested(f"curves cross inside facet {f}")


# -- cutting ------------------------------------------------------------------


@dataclass(frozen=True)
class Provenance:
    """Where a facet of a cut piece came from."""

    kind: str  # 'original' | 'belt' | 'new'
    parent: Optional[int]  # facet of the root polytope, None for 'new'
    belt: Optional[Tuple[int, ...]]  # root-belt key for 'belt'/'new'


@dataclass(frozen=True)
class CutPiece:
    polytope: SimplePolytope
    tracking: Dict[int, Provenance]  # piece facet -> provenance

    def parent_facet(self, f: int) -> Optional[int]:
        return self.tracking[f].parent

    def new_facets(self) -> List[int]:
        return [f for f, pr in self.tracking.items() if pr.kind == "new"]


def cut_along_belt(p: SimplePolytope, belt: Belt) -> Tuple[CutPiece, CutPiece]:
    """Cut along a belt: two polytopes, each with a new k-gonal facet."""
    comp = complement_components(p, belt)
    pieces = []
    for side_idx, side in enumerate(comp.sides):
        order = sorted(side) + sorted(belt.facet_set)
        relabel = {f: i + 1 for i, f in enumerate(order)}
        new = len(order) + 1
        tracking: Dict[int, Provenance] = {}
        for f in side:
            tracking[relabel[f]] = Provenance("original", f, None)
        for f in belt.facet_set:
            tracking[relabel[f]] = Provenance("belt", f, belt.facets)
        tracking[new] = Provenance("new", None, belt.facets)
        verts = []
        for v in p.vertices:
            if comp.side_of_vertex(p, v) == side_idx:
                verts.append(tuple(sorted(relabel[x] for x in v)))
        for a, c in belt.pairs():
            verts.append(tuple(sorted((relabel[a], relabel[c], new))))
        piece = SimplePolytope(new, tuple(verts))
        pieces.append(CutPiece(piece, tracking))
    return pieces[0], pieces[1]


def _compose(child: Dict[int, Provenance], parent: Dict[int, Provenance]) -> Dict[int, Provenance]:
    """Compose piece-of-piece tracking with the parent piece's tracking."""
    out: Dict[int, Provenance] = {}
    for f, pr in child.items():
        if pr.kind == "new":
            out[f] = pr
            continue
        up = parent[pr.parent]
        if up.kind == "new":
            out[f] = up
        elif pr.kind == "belt":
            out[f] = Provenance("belt", up.parent, pr.belt)
        else:
            out[f] = up
    return out


def _lift_belt(piece: CutPiece, belt_root: Belt) -> Optional[Belt]:
    """Express a root belt in piece coordinates if all its facets are present."""
    inv = {pr.parent: f for f, pr in piece.tracking.items() if pr.parent is not None}
    seq = []
    for f in belt_root.facets:
        if f not in inv:
            return None
        seq.append(inv[f])
    return Belt(tuple(seq))


def cut_along_family(p: SimplePolytope, belts: Sequence[Belt]) -> List[CutPiece]:
    """Cut along a nested family of belts; result is order-independent."""
    ident = {f: Provenance("original", f, None) for f in range(1, p.m + 1)}
    if not belts:
        return [CutPiece(p, ident)]
    curves_for_family(p, belts)  # certifies nesting
    return _cut_family_rec(CutPiece(p, ident), list(belts))


def _cut_family_rec(piece: CutPiece, belts_root: List[Belt]) -> List[CutPiece]:
    if not belts_root:
        return [piece]
    first, rest = belts_root[0], belts_root[1:]
    lifted = _lift_belt(piece, first)
    if lifted is None:
        raise errors.NotNested(f"belt {first.facets} vanished in a piece")
    comp = complement_components(piece.polytope, lifted)
    assign: Dict[int, List[Belt]] = {0: [], 1: []}
    for b in rest:
        b_local = _lift_belt(piece, b)
        if b_local is None:
            raise errors.NotNested(f"belt {b.facets} vanished in a piece")
        off = b_local.facet_set - lifted.facet_set
        if not off:
            raise errors.DegenerateOverlap(f"belts {b.facets} and {first.facets} overlap degenerately")
        sides = {comp.side_of_facet(f) for f in off}
        if len(sides) != 1:
            raise errors.NotNested(f"belt {b.facets} splits across {first.facets}")
        assign[sides.pop()].append(b)
    half1, half2 = cut_along_belt(piece.polytope, lifted)
    out = []
    for half in (half1, half2):
        # the cut recorded the belt in piece-local labels; rekey to the root
        track = {
            f: Provenance(pr.kind, pr.parent, first.facets) if pr.belt == lifted.facets else pr
            for f, pr in half.tracking.items()
        }
        out.append(CutPiece(half.polytope, _compose(track, piece.tracking)))
    return _cut_family_rec(out[0], assign[0]) + _cut_family_rec(out[1], assign[1])


__all__ = [
    "Belt",
    "canonical_cycle",
    "check_belt",
    "enumerate_belts",
    "trivial_facets",
    "is_trivial",
    "Complement",
    "complement_components",
    "compatible",
    "CurveFamily",
    "curves_for_family",
    "Provenance",
    "CutPiece",
    "cut_along_belt",
    "cut_along_family",
]
