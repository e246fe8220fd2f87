"""Prime and JSJ decompositions of 3-manifolds from colored simple 3-polytopes."""

from __future__ import annotations

from . import errors, gf2, io, oracle
from .belts import (
    Belt,
    Complement,
    CurveFamily,
    CutPiece,
    Provenance,
    check_belt,
    compatible,
    complement_components,
    curves_for_family,
    cut_along_belt,
    cut_along_family,
    enumerate_belts,
    is_trivial,
    trivial_facets,
)
from .coloring import (
    VectorColoring,
    enumerate_colorings,
    identity_coloring,
    is_maximal,
    is_orientable,
    normalize,
    orientation_double_cover,
    orientation_functional,
    restrict,
    restrict_to_map,
    subspace,
    subspace_dim,
    validate_coloring,
)
from .decomposition import (
    CanonicalDecomposition,
    Classification,
    Piece,
    PrimeDecomposition,
    PrimeLeaf,
    PrismInfo,
    canonical_4belt_decomposition,
    chain_surround,
    classify_polytope,
    is_flag,
    prime_decompose,
    quadrangle_chains,
    recognize_prism,
)
from .invariants import (
    JsjPiece,
    JsjReport,
    PrimeExpression,
    SeifertData,
    SurfaceClass,
    TorusFamily,
    base_case_manifold,
    belt_surface_class,
    global_geometry,
    jsj_report,
    prime_expression,
    seifert_data,
)
from .polytope import (
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

__version__ = "0.1.0"
