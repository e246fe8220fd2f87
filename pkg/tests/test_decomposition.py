"""Classification, prime decomposition and canonical 4-belt decomposition."""

from __future__ import annotations

import random
from collections import Counter

import pytest

from beltdec import errors
from beltdec.decomposition import (
    canonical_4belt_decomposition,
    chain_surround,
    classify_polytope,
    is_flag,
    prime_decompose,
    quadrangle_chains,
    recognize_prism,
)
from beltdec.polytope import (
    associahedron3,
    connected_sum_facets,
    cube,
    dodecahedron,
    is_isomorphic,
    prism,
    random_vertex_sum,
    simplex,
    surrounding_belt,
)
from conftest import twisted_prism_pair


def test_recognize_prism():
    for k in (3, 4, 5, 8):
        info = recognize_prism(prism(k))
        assert info is not None and info.k == k
        assert info.bases == (1, 2)
    assert recognize_prism(simplex()) is None
    assert recognize_prism(dodecahedron()) is None
    assert recognize_prism(associahedron3()) is None


def test_classification():
    assert classify_polytope(simplex()).kind == "simplex"
    assert classify_polytope(prism(3)).kind == "nonflag"
    assert classify_polytope(cube()).kind == "cube"
    assert classify_polytope(prism(5)).kind == "prism"
    assert classify_polytope(dodecahedron()).kind == "pogorelov"
    assert classify_polytope(associahedron3()).kind == "almost_pogorelov"
    assert classify_polytope(twisted_prism_pair()).kind == "generic"


def test_is_flag():
    assert not is_flag(simplex())
    assert not is_flag(prism(3))
    assert is_flag(cube())
    assert is_flag(dodecahedron())


def test_quadrangle_chains():
    chains, ring = quadrangle_chains(associahedron3())
    assert ring is False
    assert sorted(chains) == [[7], [8], [9]]
    chains, ring = quadrangle_chains(prism(6))
    assert ring is True
    chains, ring = quadrangle_chains(dodecahedron())
    assert chains == [] and ring is False


def test_chain_surround():
    p = twisted_prism_pair()
    chains, ring = quadrangle_chains(p)
    assert not ring
    long_chains = [c for c in chains if len(c) >= 2]
    for ch in long_chains:
        belt = chain_surround(p, ch)
        assert belt.k == 4
        assert not set(belt.facets) & set(ch)


def test_prime_decompose_flag_is_trivial():
    for p in (cube(), dodecahedron(), associahedron3()):
        dec = prime_decompose(p)
        assert dec.belts == ()
        assert len(dec.leaves) == 1
        assert dec.leaves[0].label == "flag"


def test_prime_decompose_prism3():
    dec = prime_decompose(prism(3))
    assert len(dec.belts) == 1
    assert [l.label for l in dec.leaves] == ["simplex", "simplex"]
    for leaf in dec.leaves:
        assert sorted(leaf.facet_map) == [1, 2, 3, 4]
        assert is_isomorphic(leaf.polytope, simplex()) is not None


def test_prime_decompose_roundtrip_random():
    rng = random.Random(21)
    pool = [simplex(), cube(), prism(5), dodecahedron()]
    for _ in range(10):
        n = rng.randint(2, 4)
        summands = [rng.choice(pool) for _ in range(n)]
        s = random_vertex_sum(summands, rng)
        dec = prime_decompose(s)
        assert len(dec.leaves) == n
        want = Counter(q.canonical_code() for q in summands)
        got = Counter(l.polytope.canonical_code() for l in dec.leaves)
        assert want == got


def test_canonical_rejects_non_flag_and_cube():
    with pytest.raises(errors.NotFlag):
        canonical_4belt_decomposition(prism(3))
    with pytest.raises(errors.NotFlag):
        canonical_4belt_decomposition(simplex())
    with pytest.raises(errors.IsCube):
        canonical_4belt_decomposition(cube())


def test_canonical_prism_is_single_piece():
    dec = canonical_4belt_decomposition(prism(7))
    assert dec.belts == ()
    assert len(dec.pieces) == 1
    assert dec.pieces[0].kind == "prism"


def test_canonical_pogorelov_single_piece():
    dec = canonical_4belt_decomposition(dodecahedron())
    assert dec.belts == ()
    assert dec.pieces[0].kind == "pogorelov"
    assert dec.pieces[0].free_quadrangles == ()


def test_canonical_almost_pogorelov_single_piece():
    dec = canonical_4belt_decomposition(associahedron3())
    assert dec.belts == ()
    assert dec.pieces[0].kind == "almost_pogorelov"
    assert dec.pieces[0].free_quadrangles == (7, 8, 9)


def test_canonical_twisted_pair():
    p = twisted_prism_pair()
    dec = canonical_4belt_decomposition(p)
    assert len(dec.belts) == 1
    assert sorted(piece.kind for piece in dec.pieces) == ["prism", "prism"]
    for piece in dec.pieces:
        assert piece.prism is not None and piece.prism.k == 5


def test_canonical_untwisted_pair_merges():
    s, _, _ = connected_sum_facets(prism(5), 3, prism(5), 3)
    assert is_isomorphic(s, prism(6)) is not None
    dec = canonical_4belt_decomposition(s)
    assert dec.belts == ()
    assert len(dec.pieces) == 1 and dec.pieces[0].kind == "prism"


def test_canonical_deterministic():
    p = twisted_prism_pair()
    base = canonical_4belt_decomposition(p)
    for seed in range(10):
        d = canonical_4belt_decomposition(p, random.Random(seed))
        assert d.belts == base.belts
