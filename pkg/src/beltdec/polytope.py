"""Combinatorial simple 3-polytopes given by facet triples at vertices."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import errors

Vertex = Tuple[int, int, int]  # sorted triple of facet indices
Edge = Tuple[int, int]  # sorted pair of facet indices


def _sorted_triple(t: Iterable[int]) -> Vertex:
    a, b, c = sorted(t)
    return (a, b, c)


def _sorted_pair(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class SimplePolytope:
    """A simple 3-polytope with facets 1..m and vertices as facet triples."""

    m: int
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(_sorted_triple(v) for v in self.vertices)))
        self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        if self.m < 4:
            raise errors.TooFewFacets(f"need at least 4 facets, got {self.m}")
        seen = set()
        for v in self.vertices:
            if len(set(v)) != 3:
                raise errors.DuplicateVertex(f"vertex {v} repeats a facet")
            if not all(1 <= f <= self.m for f in v):
                raise errors.BadParam(f"vertex {v} uses a facet outside 1..{self.m}")
            if v in seen:
                raise errors.DuplicateVertex(f"vertex {v} listed twice")
            seen.add(v)
        edge_count: Dict[Edge, int] = {}
        for v in self.vertices:
            for e in itertools.combinations(v, 2):
                edge_count[e] = edge_count.get(e, 0) + 1
        for e, c in edge_count.items():
            if c != 2:
                raise errors.EdgeMultiplicity(f"facet pair {e} meets in {c} vertices, expected 2")
        nv, ne = len(self.vertices), len(edge_count)
        if nv - ne + self.m != 2 or 3 * nv != 2 * ne:
            raise errors.EulerViolation(f"V={nv}, E={ne}, F={self.m} is not a simple sphere")
        used = {f for v in self.vertices for f in v}
        if used != set(range(1, self.m + 1)):
            raise errors.Disconnected(f"facets {sorted(set(range(1, self.m + 1)) - used)} unused")
        # each facet's link must be a single cycle
        for f in range(1, self.m + 1):
            self._facet_cycle_raw(f)
        # facet adjacency graph connected
        adj = self.neighbors
        reached = {1}
        stack = [1]
        while stack:
            for g in adj[stack.pop()]:
                if g not in reached:
                    reached.add(g)
                    stack.append(g)
        if len(reached) != self.m:
            raise errors.Disconnected("facet adjacency graph is disconnected")

    # -- derived structure --------------------------------------------------

    @cached_property
    def vertex_set(self) -> FrozenSet[Vertex]:
        return frozenset(self.vertices)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        es = set()
        for v in self.vertices:
            es.update(itertools.combinations(v, 2))
        return tuple(sorted(es))

    @cached_property
    def edge_vertices(self) -> Dict[Edge, Tuple[Vertex, Vertex]]:
        ev: Dict[Edge, List[Vertex]] = {}
        for v in self.vertices:
            for e in itertools.combinations(v, 2):
                ev.setdefault(e, []).append(v)
        return {e: (vs[0], vs[1]) for e, vs in ev.items()}

    @cached_property
    def neighbors(self) -> Dict[int, FrozenSet[int]]:
        nb: Dict[int, set] = {f: set() for f in range(1, self.m + 1)}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {f: frozenset(s) for f, s in nb.items()}

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.neighbors[a]

    def facet_size(self, f: int) -> int:
        return len(self.neighbors[f])

    def quadrangles(self) -> List[int]:
        return [f for f in range(1, self.m + 1) if self.facet_size(f) == 4]

    def _facet_cycle_raw(self, f: int) -> List[int]:
        """Cyclic order of neighbors around facet f (orientation arbitrary)."""
        link: Dict[int, List[int]] = {}
        for v in self.vertices:
            if f in v:
                a, b = (x for x in v if x != f)
                link.setdefault(a, []).append(b)
                link.setdefault(b, []).append(a)
        for g, nbrs in link.items():
            if len(nbrs) != 2:
                raise errors.FacetCycleBroken(f"facet {f}: neighbor {g} has link degree {len(nbrs)}")
        start = min(link)
        cycle = [start, min(link[start])]
        while True:
            prev, cur = cycle[-2], cycle[-1]
            nxt = link[cur][0] if link[cur][1] == prev else link[cur][1]
            if nxt == start:
                break
            cycle.append(nxt)
            if len(cycle) > len(link):
                raise errors.FacetCycleBroken(f"facet {f}: link is not a single cycle")
        if len(cycle) != len(link):
            raise errors.FacetCycleBroken(f"facet {f}: link is not a single cycle")
        return cycle

    @cached_property
    def _orientation(self) -> Dict[Vertex, Tuple[int, int, int]]:
        """A globally consistent cyclic orientation of each vertex triple.

        Adjacent vertex triples (sharing an edge) traverse that edge in
        opposite directions, as in any oriented triangulation of the sphere.
        """
        orient: Dict[Vertex, Tuple[int, int, int]] = {}
        v0 = self.vertices[0]
        orient[v0] = v0
        stack = [v0]
        while stack:
            v = stack.pop()
            a, b, c = orient[v]
            for i, j in ((a, b), (b, c), (c, a)):  # directed edges of v
                e = _sorted_pair(i, j)
                w = next(u for u in self.edge_vertices[e] if u != v)
                x = next(f for f in w if f != i and f != j)
                want = (j, i, x)  # w must contain the reversed edge j -> i
                if w in orient:
                    got = orient[w]
                    ok = want in (got, got[1:] + got[:1], got[2:] + got[:2])
                    if not ok:
                        raise errors.EulerViolation("inconsistent orientation: not a sphere")
                else:
                    orient[w] = want
                    stack.append(w)
        return orient

    @cached_property
    def _succ(self) -> Dict[int, Dict[int, int]]:
        """succ[f][a] = b when pivoting around facet f maps neighbor a to b."""
        succ: Dict[int, Dict[int, int]] = {f: {} for f in range(1, self.m + 1)}
        for v in self.vertices:
            a, b, c = self._orientation[v]
            succ[c][a] = b
            succ[a][b] = c
            succ[b][c] = a
        return succ

    @cached_property
    def _pred(self) -> Dict[int, Dict[int, int]]:
        return {f: {b: a for a, b in s.items()} for f, s in self._succ.items()}

    def facet_cycle(self, f: int) -> Tuple[int, ...]:
        """Neighbors of f in consistent cyclic order."""
        succ = self._succ[f]
        start = min(succ)
        out = [start]
        while True:
            nxt = succ[out[-1]]
            if nxt == start:
                return tuple(out)
            out.append(nxt)

    # -- canonical form -----------------------------------------------------

    @cached_property
    def canonical(self) -> Tuple[Tuple[Tuple[int, ...], ...], Dict[int, int]]:
        """Minimal rotation-system code and the relabeling achieving it."""
        best_code = None
        best_labels = None
        for f0 in range(1, self.m + 1):
            for n0 in self.neighbors[f0]:
                for rot in (self._succ, self._pred):
                    code, labels = self._trace(f0, n0, rot)
                    if best_code is None or code < best_code:
                        best_code, best_labels = code, labels
        return best_code, best_labels

    def _trace(self, f0: int, n0: int, rot) -> Tuple[Tuple[Tuple[int, ...], ...], Dict[int, int]]:
        labels = {f0: 0}
        order = [f0]
        entry = {f0: n0}
        code = []
        for f in order:
            seq = [entry[f]]
            while True:
                nxt = rot[f][seq[-1]]
                if nxt == seq[0]:
                    break
                seq.append(nxt)
            row = []
            for nb in seq:
                if nb not in labels:
                    labels[nb] = len(order)
                    order.append(nb)
                    entry[nb] = f
                row.append(labels[nb])
            code.append(tuple(row))
        return tuple(code), labels

    def canonical_code(self) -> Tuple[Tuple[int, ...], ...]:
        return self.canonical[0]

    def canonical_labelings(self) -> List[Dict[int, int]]:
        """All relabelings achieving the minimal code (one per automorphism)."""
        best_code, _ = self.canonical
        out = []
        for f0 in range(1, self.m + 1):
            for n0 in self.neighbors[f0]:
                for rot in (self._succ, self._pred):
                    code, labels = self._trace(f0, n0, rot)
                    if code == best_code:
                        out.append(labels)
        return out


def is_isomorphic(p: SimplePolytope, q: SimplePolytope) -> Optional[Dict[int, int]]:
    """Facet bijection p -> q realizing a combinatorial equivalence, or None."""
    if p.m != q.m or len(p.vertices) != len(q.vertices):
        return None
    cp, lp = p.canonical
    cq, lq = q.canonical
    if cp != cq:
        return None
    inv_q = {lab: f for f, lab in lq.items()}
    mapping = {f: inv_q[lab] for f, lab in lp.items()}
    assert {tuple(sorted(mapping[f] for f in v)) for v in p.vertices} == set(q.vertices)
    return mapping


# -- catalog ----------------------------------------------------------------


def simplex() -> SimplePolytope:
    return SimplePolytope(4, tuple(itertools.combinations(range(1, 5), 3)))


def prism(k: int) -> SimplePolytope:
    """The k-gonal prism: bases 1, 2 and side quadrangles 3..k+2."""
    if k < 3:
        raise errors.BadParam(f"prism needs k >= 3, got {k}")
    sides = list(range(3, k + 3))
    verts = []
    for i in range(k):
        a, b = sides[i], sides[(i + 1) % k]
        verts.append((1, a, b))
        verts.append((2, a, b))
    return SimplePolytope(k + 2, tuple(_sorted_triple(v) for v in verts))


def cube() -> SimplePolytope:
    return prism(4)


def dodecahedron() -> SimplePolytope:
    """The combinatorial dodecahedron: 12 pentagons."""
    top = [2, 3, 4, 5, 6]
    bot = [7, 8, 9, 10, 11]
    verts = []
    for i in range(5):
        t, t1 = top[i], top[(i + 1) % 5]
        b, b1 = bot[i], bot[(i + 1) % 5]
        verts.append((1, t, t1))
        verts.append((t, t1, b1))
        verts.append((t, b, b1))
        verts.append((12, b, b1))
    return SimplePolytope(12, tuple(_sorted_triple(v) for v in verts))


def cut_edge(p: SimplePolytope, edge: Edge) -> SimplePolytope:
    """Cut an edge: a new quadrangle facet m+1 replaces the edge."""
    e = _sorted_pair(*edge)
    if e not in p.edge_vertices:
        raise errors.EdgeNotFound(f"{edge} is not an edge")
    i, j = e
    v1, v2 = p.edge_vertices[e]
    a = next(f for f in v1 if f not in e)
    b = next(f for f in v2 if f not in e)
    n = p.m + 1
    verts = [v for v in p.vertices if v not in (v1, v2)]
    verts += [(n, i, a), (n, j, a), (n, i, b), (n, j, b)]
    return SimplePolytope(n, tuple(_sorted_triple(v) for v in verts))


def associahedron3() -> SimplePolytope:
    """Cube with three pairwise orthogonal disjoint edges cut (9 facets)."""
    q = cube()
    # cube = prism(4): bases 1,2 and ring 3,4,5,6; these three edges are
    # pairwise orthogonal and share no vertex
    for e in ((3, 4), (1, 5), (2, 6)):
        q = cut_edge(q, e)
    return q


def catalog(name: str) -> SimplePolytope:
    """Look up a polytope by name, e.g. 'simplex', 'prism:6', 'cube'."""
    base, _, arg = name.partition(":")
    if base == "simplex":
        return simplex()
    if base == "cube":
        return cube()
    if base == "prism":
        if not arg:
            raise errors.BadParam("prism requires a parameter, e.g. prism:5")
        try:
            k = int(arg)
        except ValueError:
            raise errors.BadParam(f"bad prism parameter {arg!r}") from None
        return prism(k)
    if base == "associahedron3":
        return associahedron3()
    if base == "dodecahedron":
        return dodecahedron()
    raise errors.UnknownName(f"unknown catalog name {name!r}")


# -- surgeries ----------------------------------------------------------------


def cut_vertex(p: SimplePolytope, vertex: Iterable[int]) -> SimplePolytope:
    """Cut off a vertex: a new triangular facet m+1 replaces it."""
    v = _sorted_triple(vertex)
    if v not in p.vertex_set:
        raise errors.VertexNotFound(f"{v} is not a vertex")
    a, b, c = v
    n = p.m + 1
    verts = [w for w in p.vertices if w != v]
    verts += [(a, b, n), (b, c, n), (a, c, n)]
    return SimplePolytope(n, tuple(_sorted_triple(w) for w in verts))


def shrink_triangle(p: SimplePolytope, f: int) -> Tuple[SimplePolytope, Dict[int, int]]:
    """Inverse of cut_vertex: collapse a triangular facet to a vertex.

    Returns the new polytope and the map old facet -> new facet.
    """
    nbrs = sorted(p.neighbors[f])
    if len(nbrs) != 3:
        raise errors.BadParam(f"facet {f} is not a triangle")
    relabel = {}
    nxt = 1
    for g in range(1, p.m + 1):
        if g != f:
            relabel[g] = nxt
            nxt += 1
    verts = [tuple(sorted(relabel[x] for x in v)) for v in p.vertices if f not in v]
    verts.append(tuple(sorted(relabel[x] for x in nbrs)))
    return SimplePolytope(p.m - 1, tuple(verts)), relabel


def connected_sum_vertices(
    p: SimplePolytope,
    v: Iterable[int],
    q: SimplePolytope,
    w: Iterable[int],
    matching: Optional[Dict[int, int]] = None,
) -> Tuple[SimplePolytope, Dict[int, int], Dict[int, int]]:
    """Connected sum along vertices: glue after cutting v from p and w from q.

    matching maps the three facets at v to the three facets at w (defaults to
    sorted order). Returns the sum and facet maps from p and from q.
    """
    v = _sorted_triple(v)
    w = _sorted_triple(w)
    if v not in p.vertex_set:
        raise errors.VertexNotFound(f"{v} is not a vertex of the first summand")
    if w not in q.vertex_set:
        raise errors.VertexNotFound(f"{w} is not a vertex of the second summand")
    if matching is None:
        matching = dict(zip(v, w))
    if sorted(matching) != list(v) or sorted(matching.values()) != list(w):
        raise errors.BadMatching(f"matching must biject {v} onto {w}")
    p_map: Dict[int, int] = {}
    nxt = 1
    for f in range(1, p.m + 1):
        p_map[f] = nxt
        nxt += 1
    q_map: Dict[int, int] = {}
    for g in range(1, q.m + 1):
        if g in w:
            f = next(f for f, gg in matching.items() if gg == g)
            q_map[g] = p_map[f]
        else:
            q_map[g] = nxt
            nxt += 1
    verts = [tuple(sorted(p_map[x] for x in u)) for u in p.vertices if u != v]
    verts += [tuple(sorted(q_map[x] for x in u)) for u in q.vertices if u != w]
    try:
        s = SimplePolytope(p.m + q.m - 3, tuple(verts))
    except errors.PolytopeError as exc:
        raise errors.BadMatching(f"gluing produced an invalid polytope: {exc}") from exc
    return s, p_map, q_map


def surrounding_belt(p: SimplePolytope, f: int) -> Tuple[int, ...]:
    """The cyclic neighbor sequence of facet f, checked to be a belt."""
    cyc = p.facet_cycle(f)
    k = len(cyc)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if not consecutive and p.adjacent(cyc[i], cyc[j]):
                raise errors.NotSurroundedByBelt(f"facet {f}: neighbors {cyc[i]},{cyc[j]} touch")
    for i in range(k):
        t = tuple(sorted((cyc[i], cyc[(i + 1) % k], cyc[(i + 2) % k])))
        if t in p.vertex_set:
            raise errors.NotSurroundedByBelt(f"facet {f}: neighbors {t} share a vertex")
    return cyc


def connected_sum_facets(
    p: SimplePolytope,
    fp: int,
    q: SimplePolytope,
    fq: int,
    identification: Optional[Dict[int, int]] = None,
) -> Tuple[SimplePolytope, Dict[int, int], Dict[int, int]]:
    """Connected sum along k-gonal facets surrounded by belts.

    identification maps the belt around fp onto the belt around fq and must
    send consecutive facets to consecutive facets. Returns the sum and facet
    maps from p and from q (fp and fq are dropped).
    """
    belt_p = surrounding_belt(p, fp)
    belt_q = surrounding_belt(q, fq)
    k = len(belt_p)
    if len(belt_q) != k:
        raise errors.BadIdentification(f"facet sizes differ: {k} vs {len(belt_q)}")
    if identification is None:
        identification = {belt_p[i]: belt_q[(k - i) % k] for i in range(k)}
    if sorted(identification) != sorted(belt_p) or sorted(identification.values()) != sorted(belt_q):
        raise errors.BadIdentification("identification must biject the two belts")
    pos_q = {g: i for i, g in enumerate(belt_q)}
    diffs = set()
    for i in range(k):
        a = pos_q[identification[belt_p[i]]]
        b = pos_q[identification[belt_p[(i + 1) % k]]]
        diffs.add((b - a) % k)
    if diffs not in ({1}, {k - 1}):
        raise errors.BadIdentification("identification must preserve the cyclic order")
    p_map: Dict[int, int] = {}
    nxt = 1
    for f in range(1, p.m + 1):
        if f != fp:
            p_map[f] = nxt
            nxt += 1
    q_map: Dict[int, int] = {}
    for g in range(1, q.m + 1):
        if g == fq:
            continue
        src = next((f for f, gg in identification.items() if gg == g), None)
        if src is not None:
            q_map[g] = p_map[src]
        else:
            q_map[g] = nxt
            nxt += 1
    verts = [tuple(sorted(p_map[x] for x in u)) for u in p.vertices if fp not in u]
    verts += [tuple(sorted(q_map[x] for x in u)) for u in q.vertices if fq not in u]
    try:
        s = SimplePolytope(p.m + q.m - k - 2, tuple(verts))
    except errors.PolytopeError as exc:
        raise errors.BadIdentification(f"gluing produced an invalid polytope: {exc}") from exc
    return s, p_map, q_map


def random_vertex_sum(summands: Sequence[SimplePolytope], rng: random.Random) -> SimplePolytope:
    """Iterated connected sum along random vertices of the given summands."""
    result = summands[0]
    for q in summands[1:]:
        v = rng.choice(result.vertices)
        w = rng.choice(q.vertices)
        perm = list(w)
        rng.shuffle(perm)
        result, _, _ = connected_sum_vertices(result, v, q, w, dict(zip(sorted(v), perm)))
    return result


__all__ = [
    "SimplePolytope",
    "is_isomorphic",
    "simplex",
    "prism",
    "cube",
    "dodecahedron",
    "associahedron3",
    "catalog",
    "cut_vertex",
    "cut_edge",
    "shrink_triangle",
    "connected_sum_vertices",
    "connected_sum_facets",
    "surrounding_belt",
    "random_vertex_sum",
]
