"""Prime expressions, belt surfaces, JSJ report, Seifert data, geometries."""

from __future__ import annotations

from collections import Counter

import pytest

from beltdec import errors
from beltdec.belts import Belt
from beltdec.coloring import VectorColoring, identity_coloring
from beltdec.invariants import (
    RP3,
    S2XS1,
    S3,
    base_case_manifold,
    belt_surface_class,
    global_geometry,
    jsj_report,
    prime_expression,
    seifert_data,
)
from beltdec.polytope import (
    associahedron3,
    connected_sum_vertices,
    cube,
    dodecahedron,
    prism,
    simplex,
)
from conftest import twisted_prism_pair


def test_base_cases_simplex():
    p = simplex()
    assert base_case_manifold(p, identity_coloring(p)) == (S3,)
    assert base_case_manifold(p, VectorColoring.from_columns(3, [1, 2, 4, 7])) == (RP3,)


def test_base_cases_prism3():
    p = prism(3)  # bases 1, 2; sides 3, 4, 5
    assert base_case_manifold(p, identity_coloring(p)) == (S2XS1,)
    # rank 4: basis e1..e3 on sides, e4 on base 1; three cases for base 2
    cases = [
        ([8, 8, 1, 2, 4], (S2XS1,)),
        ([8, 7, 1, 2, 4], (RP3, RP3)),
        ([8, 11, 1, 2, 4], (S2XS1,)),  # base 2 = e1 + e2 + e4
        ([7, 7, 1, 2, 4], (RP3, RP3)),  # rank 3
    ]
    for cols, want in cases:
        r = max(c.bit_length() for c in cols)
        lam = VectorColoring.from_columns(r, cols)
        assert base_case_manifold(p, lam) == want


def test_base_case_rejects_dependent_sides():
    p = prism(3)
    # sides span a plane: Lambda_5 = Lambda_3 + Lambda_4
    lam = VectorColoring.from_columns(4, [8, 4, 1, 2, 3])
    with pytest.raises(errors.NotBaseCase):
        base_case_manifold(p, lam)
    with pytest.raises(errors.NotBaseCase):
        base_case_manifold(cube(), identity_coloring(cube()))


def test_prime_expression_base_agreement():
    p = prism(3)
    for cols in ([8, 8, 1, 2, 4], [8, 7, 1, 2, 4], [8, 11, 1, 2, 4], [7, 7, 1, 2, 4]):
        r = max(c.bit_length() for c in cols)
        lam = VectorColoring.from_columns(r, cols)
        want = Counter(base_case_manifold(p, lam))
        expr = prime_expression(p, lam)
        got = Counter()
        got[RP3] = expr.rp3
        got[S2XS1] = expr.s2xs1
        got = Counter({k: v for k, v in got.items() if v})
        assert not expr.aspherical
        assert got == Counter({k: v for k, v in want.items() if k != S3})


def test_prime_expression_flag_identity():
    p = cube()
    expr = prime_expression(p, identity_coloring(p))
    assert expr.rp3 == 0 and expr.s2xs1 == 0
    assert len(expr.aspherical) == 1 and expr.aspherical[0].count == 1


def test_prime_expression_cube_pair():
    # two cubes summed at a vertex: the real moment-angle manifold splits as
    # 8 + 8 copies of the cube manifold plus 49 handles
    s, _, _ = connected_sum_vertices(cube(), (1, 3, 4), cube(), (1, 3, 4))
    assert s.m == 9
    expr = prime_expression(s, identity_coloring(s))
    assert expr.rp3 == 0
    assert expr.s2xs1 == (2 ** 3 - 1) ** 2
    assert len(expr.aspherical) == 1
    assert expr.aspherical[0].count == 16


def test_prime_expression_is_sphere():
    p = simplex()
    assert prime_expression(p, identity_coloring(p)).is_sphere()


def test_belt_surface_identity_genus():
    p = prism(6)
    lam = identity_coloring(p)
    cls = belt_surface_class(p, lam, Belt((3, 4, 5, 6, 7, 8)))
    assert cls.orientable and cls.components == 2 ** (8 - 6)
    assert cls.genus == (6 - 4) * 2 ** (6 - 3) + 1


def test_belt_surface_rank2():
    p = prism(6)
    lam = VectorColoring.from_columns(3, [4, 4, 1, 2, 1, 2, 1, 2])
    cls = belt_surface_class(p, lam, Belt((3, 4, 5, 6, 7, 8)))
    assert cls.orientable and cls.genus == 2 and cls.components == 2


def test_belt_surface_klein():
    p = cube()
    lam = VectorColoring.from_columns(3, [4, 4, 1, 2, 1, 3])
    cls = belt_surface_class(p, lam, Belt((3, 4, 5, 6)))
    assert not cls.orientable
    assert cls.crosscaps == 2


def test_jsj_identity_associahedron():
    p = associahedron3()
    rep = jsj_report(p, identity_coloring(p))
    assert rep.decomposition.belts == ()
    assert len(rep.pieces) == 1
    pc = rep.pieces[0]
    assert pc.kind == "almost_pogorelov" and pc.geometry == "H3"
    assert pc.r_i == 6
    assert pc.multiplicity == 8
    assert pc.boundary_per_copy == 12
    assert len(rep.tori) == 3
    assert all(t.type == 2 and t.count == 16 for t in rep.tori)


def test_jsj_requires_orientable():
    p = cube()
    lam = VectorColoring.from_columns(3, [4, 4, 1, 2, 1, 3])
    with pytest.raises(errors.NotOrientable):
        jsj_report(p, lam)


def test_seifert_twisted_pair():
    p = twisted_prism_pair()
    rep = jsj_report(p, identity_coloring(p))
    assert len(rep.pieces) == 2
    for pc in rep.pieces:
        assert pc.kind == "prism"
        sd = seifert_data(p, identity_coloring(p), pc)
        assert sd.k_prime == 4
        assert sd.singular_vertices == ()
        assert sd.multiplicity == pc.multiplicity
    with pytest.raises(errors.NotPrismPiece):
        rep2 = jsj_report(associahedron3(), identity_coloring(associahedron3()))
        seifert_data(associahedron3(), identity_coloring(associahedron3()), rep2.pieces[0])


def test_global_geometry():
    assert global_geometry(simplex(), identity_coloring(simplex())) == "S3"
    assert global_geometry(prism(3), identity_coloring(prism(3))) == "S2xR"
    assert global_geometry(cube(), identity_coloring(cube())) == "R3"
    assert global_geometry(prism(6), identity_coloring(prism(6))) == "H2xR"
    assert global_geometry(dodecahedron(), identity_coloring(dodecahedron())) == "H3"
    with pytest.raises(errors.NotGlobalCase):
        global_geometry(associahedron3(), identity_coloring(associahedron3()))
