"""Polytope construction, validation, canonical form and surgeries."""

from __future__ import annotations

import random

import pytest

from beltdec import errors
from beltdec.polytope import (
    SimplePolytope,
    associahedron3,
    catalog,
    connected_sum_facets,
    connected_sum_vertices,
    cube,
    cut_edge,
    cut_vertex,
    dodecahedron,
    is_isomorphic,
    prism,
    random_vertex_sum,
    shrink_triangle,
    simplex,
    surrounding_belt,
)


def test_catalog_counts():
    cases = [
        (simplex(), 4, 4, 6),
        (prism(3), 5, 6, 9),
        (cube(), 6, 8, 12),
        (prism(5), 7, 10, 15),
        (associahedron3(), 9, 14, 21),
        (dodecahedron(), 12, 20, 30),
    ]
    for p, m, nv, ne in cases:
        assert p.m == m
        assert len(p.vertices) == nv
        assert len(p.edges) == ne
        assert nv - ne + m == 2
        assert 3 * nv == 2 * ne


def test_facet_sizes():
    p = associahedron3()
    sizes = sorted(p.facet_size(f) for f in range(1, p.m + 1))
    assert sizes == [4, 4, 4, 5, 5, 5, 5, 5, 5]
    d = dodecahedron()
    assert all(d.facet_size(f) == 5 for f in range(1, 13))


def test_catalog_lookup():
    assert catalog("prism:6").m == 8
    assert catalog("cube").m == 6
    with pytest.raises(errors.UnknownName):
        catalog("icosahedron")
    with pytest.raises(errors.BadParam):
        catalog("prism")
    with pytest.raises(errors.BadParam):
        catalog("prism:x")


def test_validation_errors():
    with pytest.raises(errors.TooFewFacets):
        SimplePolytope(3, ((1, 2, 3),))
    with pytest.raises(errors.DuplicateVertex):
        SimplePolytope(4, ((1, 2, 3), (1, 2, 3), (1, 3, 4), (2, 3, 4)))
    with pytest.raises(errors.PolytopeError):
        SimplePolytope(4, ((1, 2, 3), (1, 2, 4), (1, 3, 4)))
    with pytest.raises(errors.PolytopeError):
        # two squares glued: each facet pair meets in 2 vertices but V-E+F fails
        SimplePolytope(5, ((1, 2, 5), (2, 3, 5), (3, 4, 5), (1, 4, 5)))


def test_facet_cycle_is_rotation():
    p = cube()
    cyc = p.facet_cycle(1)
    assert sorted(cyc) == [3, 4, 5, 6]
    for i in range(4):
        assert p.adjacent(cyc[i], cyc[(i + 1) % 4])


def test_isomorphism_under_relabeling():
    rng = random.Random(7)
    for p in (cube(), prism(5), associahedron3(), dodecahedron()):
        perm = list(range(1, p.m + 1))
        rng.shuffle(perm)
        relab = {f: perm[f - 1] for f in range(1, p.m + 1)}
        q = SimplePolytope(p.m, tuple(tuple(sorted(relab[x] for x in v)) for v in p.vertices))
        mapping = is_isomorphic(p, q)
        assert mapping is not None


def test_non_isomorphic():
    assert is_isomorphic(cube(), prism(5)) is None
    assert is_isomorphic(simplex(), cube()) is None
    # prism(6) and the hexagonal-base polytope from a twisted gluing differ
    assert is_isomorphic(prism(6), associahedron3()) is None


def test_cut_vertex_shrink_roundtrip():
    p = dodecahedron()
    v = p.vertices[0]
    q = cut_vertex(p, v)
    assert q.m == p.m + 1
    assert q.facet_size(q.m) == 3
    back, relabel = shrink_triangle(q, q.m)
    assert is_isomorphic(back, p) is not None
    assert sorted(relabel) == list(range(1, q.m + 1))[:-1] or len(relabel) == q.m - 1


def test_cut_edge():
    q = cut_edge(cube(), (3, 4))
    assert q.m == 7
    assert q.facet_size(7) == 4
    with pytest.raises(errors.EdgeNotFound):
        cut_edge(cube(), (1, 2))


def test_vertex_sum_of_simplices_is_prism3():
    s, p_map, q_map = connected_sum_vertices(simplex(), (1, 2, 3), simplex(), (1, 2, 3))
    assert s.m == 5
    assert is_isomorphic(s, prism(3)) is not None
    assert set(p_map.values()) | set(q_map.values()) == set(range(1, 6))


def test_vertex_sum_bad_matching():
    with pytest.raises(errors.BadMatching):
        connected_sum_vertices(simplex(), (1, 2, 3), simplex(), (1, 2, 3),
                               matching={1: 1, 2: 1, 3: 2})


def test_surrounding_belt():
    p = prism(5)
    belt = surrounding_belt(p, 3)
    assert len(belt) == 4
    assert set(belt) == set(p.neighbors[3])
    d = dodecahedron()
    b = surrounding_belt(d, 1)
    assert len(b) == 5


def test_facet_sum_untwisted_is_longer_prism():
    p, q = prism(5), prism(5)
    s, _, _ = connected_sum_facets(p, 3, q, 3)
    assert s.m == 8
    assert is_isomorphic(s, prism(6)) is not None


def test_facet_sum_rejects_bad_identification():
    p, q = prism(5), prism(5)
    bp = surrounding_belt(p, 3)
    bq = surrounding_belt(q, 3)
    # transposition breaks the cyclic order
    ident = {bp[0]: bq[1], bp[1]: bq[0], bp[2]: bq[2], bp[3]: bq[3]}
    with pytest.raises(errors.BadIdentification):
        connected_sum_facets(p, 3, q, 3, ident)
    with pytest.raises(errors.BadIdentification):
        connected_sum_facets(p, 1, prism(6), 3, None)  # pentagon vs quadrangle


def test_random_vertex_sum_sizes():
    rng = random.Random(0)
    s = random_vertex_sum([cube(), prism(5), simplex()], rng)
    assert s.m == 6 + 7 + 4 - 2 * 3
