"""Prime decomposition and the canonical 4-belt decomposition of flag polytopes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import errors
from .belts import (
    Belt,
    CutPiece,
    Provenance,
    check_belt,
    cut_along_family,
    enumerate_belts,
    is_trivial,
    trivial_facets,
)
from .polytope import SimplePolytope, shrink_triangle


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class PrismInfo:
    k: int
    bases: Tuple[int, int]


def recognize_prism(p: SimplePolytope) -> Optional[PrismInfo]:
    """Detect the k-gonal prism; bases are the lexicographically least pair."""
    k = p.m - 2
    if k < 3:
        return None
    non_quads = [f for f in range(1, p.m + 1) if p.facet_size(f) != 4]
    if k == 4:
        if non_quads:
            return None
        base1 = 1
        opp = [f for f in range(2, 7) if not p.adjacent(1, f)]
        return PrismInfo(4, (1, opp[0])) if len(opp) == 1 else None
    if len(non_quads) != 2:
        return None
    a, b = sorted(non_quads)
    if p.adjacent(a, b) or p.facet_size(a) != k or p.facet_size(b) != k:
        return None
    ring = [f for f in range(1, p.m + 1) if f not in (a, b)]
    if any(not (p.adjacent(f, a) and p.adjacent(f, b)) for f in ring):
        return None
    return PrismInfo(k, (a, b))


@dataclass(frozen=True)
class Classification:
    kind: str  # 'simplex' | 'nonflag' | 'cube' | 'prism' | 'pogorelov'
    #          | 'almost_pogorelov' | 'generic'
    witness: Optional[Belt] = None  # a 3-belt / nontrivial 4-belt where relevant
    prism: Optional[PrismInfo] = None


def classify_polytope(p: SimplePolytope) -> Classification:
    """Place p in the hierarchy that drives the decomposition algorithms."""
    if p.m == 4:
        return Classification("simplex")
    b3 = enumerate_belts(p, 3)
    if b3:
        return Classification("nonflag", witness=b3[0])
    info = recognize_prism(p)
    if info is not None:
        if info.k == 4:
            return Classification("cube", prism=info)
        return Classification("prism", prism=info)
    b4 = enumerate_belts(p, 4)
    if not b4:
        return Classification("pogorelov")
    nontrivial = [b for b in b4 if not is_trivial(p, b)]
    if not nontrivial:
        return Classification("almost_pogorelov")
    return Classification("generic", witness=nontrivial[0])


def is_flag(p: SimplePolytope) -> bool:
    return p.m > 4 and not enumerate_belts(p, 3)


# -- quadrangle chains --------------------------------------------------------


def quadrangle_chains(p: SimplePolytope) -> Tuple[List[List[int]], bool]:
    """Maximal chains of adjacent quadrangles; second value flags a full ring."""
    quads = set(p.quadrangles())
    adj = {q: sorted(x for x in p.neighbors[q] if x in quads) for q in quads}
    for q, nb in adj.items():
        if len(nb) > 2:
            raise errors.DecompositionError(f"quadrangle {q} touches {len(nb)} quadrangles")
    seen: Set[int] = set()
    chains: List[List[int]] = []
    ring = False
    for q in sorted(quads):
        if q in seen:
            continue
        comp = {q}
        frontier = [q]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        ends = sorted(x for x in comp if len(adj[x]) <= 1)
        if not ends:
            ring = True
            chains.append(sorted(comp))
            continue
        path = [ends[0]]
        prev = None
        while True:
            nxt = [y for y in adj[path[-1]] if y != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
        assert len(path) == len(comp)
        chains.append(path)
    return chains, ring


def chain_surround(p: SimplePolytope, chain: Sequence[int]) -> Belt:
    """The 4-belt around a chain of two or more adjacent quadrangles."""
    assert len(chain) >= 2
    q1, q2 = chain[0], chain[1]
    e = tuple(sorted((q1, q2)))
    sides = sorted(set(next(f for f in v if f not in e) for v in p.edge_vertices[e]))
    s1, s2 = sides
    for q in chain:
        assert p.adjacent(q, s1) and p.adjacent(q, s2), "chain sides are not parallel"
    interior = set(chain) | {s1, s2}
    e1 = next(f for f in p.neighbors[chain[0]] if f not in interior)
    e2 = next(f for f in p.neighbors[chain[-1]] if f not in interior)
    return check_belt(p, (e1, s1, e2, s2))


# -- canonical decomposition --------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """A piece of the canonical 4-belt decomposition."""

    cut: CutPiece
    kind: str  # 'prism' | 'pogorelov' | 'almost_pogorelov'
    prism: Optional[PrismInfo]
    free_quadrangles: Tuple[int, ...]  # piece facets; quadrangles not from cuts

    @property
    def polytope(self) -> SimplePolytope:
        return self.cut.polytope


@dataclass(frozen=True)
class CanonicalDecomposition:
    polytope: SimplePolytope
    belts: Tuple[Belt, ...]  # canonical 4-belts, in root facet labels
    pieces: Tuple[Piece, ...]


def _root_belt(piece: CutPiece, local: Belt) -> Belt:
    seq = []
    for f in local.facets:
        pr = piece.tracking[f]
        assert pr.kind != "new", "canonical belt candidate touches a glued disk"
        seq.append(pr.parent)
    return Belt(tuple(seq))


def _piece_candidates(piece: CutPiece) -> List[Belt]:
    """Belts (in root labels) that the algorithm still needs to cut inside a piece."""
    r = piece.polytope
    if recognize_prism(r) is not None:
        return []
    chains, ring = quadrangle_chains(r)
    assert not ring, "quadrangle ring outside a prism"
    long_chains = [ch for ch in chains if len(ch) >= 2]
    if long_chains:
        return [_root_belt(piece, chain_surround(r, ch)) for ch in long_chains]
    b4 = enumerate_belts(r, 4)
    quads = set(r.quadrangles())
    good = [
        b for b in b4
        if not is_trivial(r, b) and not (b.facet_set & quads)
    ]
    if good:
        return [_root_belt(piece, b) for b in good]
    # no quadrangle-free nontrivial 4-belt: the piece must be almost Pogorelov
    nontrivial = [b for b in b4 if not is_trivial(r, b)]
    assert not nontrivial, "piece has a nontrivial 4-belt but no admissible cut"
    return []


def _prism_base_pair(piece: CutPiece, belt_key: Tuple[int, ...]) -> Optional[frozenset]:
    """Which opposite pair of a belt carries the bases of a prism piece."""
    info = recognize_prism(piece.polytope)
    if info is None or info.k == 4:
        return None
    roots = frozenset(piece.tracking[b].parent for b in info.bases)
    belt_set = set(belt_key)
    if not roots <= belt_set:
        return None
    return roots


def canonical_4belt_decomposition(
    p: SimplePolytope, rng: Optional[random.Random] = None
) -> CanonicalDecomposition:
    """Cut a flag polytope along its canonical nested family of 4-belts.

    Pieces are k-prisms (k >= 5, adjacent ones twisted) and almost Pogorelov
    polytopes without adjacent quadrangles; the belt family is unique.
    """
    cls = classify_polytope(p)
    if cls.kind in ("simplex", "nonflag"):
        raise errors.NotFlag(f"polytope is {cls.kind}; the decomposition needs a flag polytope")
    if cls.kind == "cube":
        raise errors.IsCube("the cube has no canonical 4-belt decomposition")
    family: List[Belt] = []
    while True:
        pieces = cut_along_family(p, family)
        candidates: List[Belt] = []
        for piece in pieces:
            candidates.extend(_piece_candidates(piece))
        if not candidates:
            break
        candidates = sorted(set(candidates))
        pick = rng.choice(candidates) if rng is not None else candidates[0]
        assert pick not in family
        family.append(pick)
    # merge untwisted adjacent prisms: drop the belt between them
    while True:
        pieces = cut_along_family(p, family)
        by_belt: Dict[Tuple[int, ...], List[CutPiece]] = {b.facets: [] for b in family}
        for piece in pieces:
            for f, pr in piece.tracking.items():
                if pr.kind == "new":
                    by_belt[pr.belt].append(piece)
        dropped = False
        order = list(family)
        if rng is not None:
            rng.shuffle(order)
        for b in order:
            two = by_belt[b.facets]
            assert len(two) == 2
            pair0 = _prism_base_pair(two[0], b.facets)
            pair1 = _prism_base_pair(two[1], b.facets)
            if pair0 is not None and pair0 == pair1:
                family.remove(b)
                dropped = True
                break
        if not dropped:
            break
    final = []
    for piece in cut_along_family(p, family):
        final.append(_finalize_piece(piece))
    return CanonicalDecomposition(p, tuple(sorted(family)), tuple(final))


def _finalize_piece(piece: CutPiece) -> Piece:
    r = piece.polytope
    info = recognize_prism(r)
    free = tuple(
        f for f in sorted(r.quadrangles()) if piece.tracking[f].kind != "new"
    )
    if info is not None:
        assert info.k >= 5, "cube piece in a canonical decomposition"
        return Piece(piece, "prism", info, free)
    cls = classify_polytope(r)
    assert cls.kind in ("pogorelov", "almost_pogorelov"), cls.kind
    for f in free:
        assert piece.tracking[f].kind == "original", "free quadrangle from a cut facet"
        for g in r.neighbors[f]:
            assert r.facet_size(g) != 4, "adjacent quadrangles in a final piece"
    return Piece(piece, cls.kind, None, free)


# -- prime decomposition -------------------------------------------------------


@dataclass(frozen=True)
class PrimeLeaf:
    polytope: SimplePolytope
    facet_map: Dict[int, int]  # leaf facet -> root facet
    label: str  # 'simplex' | 'flag'


@dataclass(frozen=True)
class PrimeDecomposition:
    polytope: SimplePolytope
    belts: Tuple[Belt, ...]  # all 3-belts of the root polytope
    leaves: Tuple[PrimeLeaf, ...]


def prime_decompose(p: SimplePolytope) -> PrimeDecomposition:
    """Cut along all 3-belts and collapse the glued triangles to vertices."""
    belts3 = tuple(enumerate_belts(p, 3))
    if not belts3:
        label = "simplex" if p.m == 4 else "flag"
        ident = {f: f for f in range(1, p.m + 1)}
        return PrimeDecomposition(p, (), (PrimeLeaf(p, ident, label),))
    leaves = []
    for piece in cut_along_family(p, belts3):
        q = piece.polytope
        track = dict(piece.tracking)
        while True:
            new_fs = [f for f, pr in track.items() if pr.kind == "new"]
            if not new_fs:
                break
            f = new_fs[0]
            assert q.facet_size(f) == 3
            q, relabel = shrink_triangle(q, f)
            track = {relabel[g]: pr for g, pr in track.items() if g != f}
        facet_map = {f: pr.parent for f, pr in track.items()}
        label = "simplex" if q.m == 4 else "flag"
        if label == "flag":
            assert not enumerate_belts(q, 3), "prime leaf still has a 3-belt"
        leaves.append(PrimeLeaf(q, facet_map, label))
    return PrimeDecomposition(p, belts3, tuple(leaves))


__all__ = [
    "PrismInfo",
    "recognize_prism",
    "Classification",
    "classify_polytope",
    "is_flag",
    "quadrangle_chains",
    "chain_surround",
    "Piece",
    "CanonicalDecomposition",
    "canonical_4belt_decomposition",
    "PrimeLeaf",
    "PrimeDecomposition",
    "prime_decompose",
]
