"""Shared helpers: random colourings and random polytope corpora."""

from __future__ import annotations

import random
from typing import List, Optional

from beltdec import gf2
from beltdec.coloring import VectorColoring
from beltdec.polytope import (
    SimplePolytope,
    associahedron3,
    connected_sum_facets,
    prism,
    surrounding_belt,
)


def random_coloring(
    p: SimplePolytope, r: int, rng: random.Random, tries: int = 200
) -> Optional[VectorColoring]:
    """A random colouring satisfying condition (*), by greedy facet assignment."""
    verts_by = {f: [v for v in p.vertices if max(v) == f] for f in range(1, p.m + 1)}
    for _ in range(tries):
        cols: List[int] = []
        dead = False
        for f in range(1, p.m + 1):
            cands = list(range(1, 1 << r))
            rng.shuffle(cands)
            for c in cands:
                cols.append(c)
                if all(gf2.triple_independent(*(cols[x - 1] for x in v)) for v in verts_by[f]):
                    break
                cols.pop()
            else:
                dead = True
                break
        if not dead:
            return VectorColoring.from_columns(r, cols)
    return None


def random_belt_coloring(rng: random.Random):
    """Random k-gon edge colouring with 4 <= k <= 8 and exact rank 2..4."""
    while True:
        k = rng.randint(4, 8)
        rb = rng.randint(2, 4)
        cols: List[int] = []
        ok = True
        for i in range(k):
            cands = [
                c for c in range(1, 1 << rb)
                if (not cols or c != cols[-1]) and (i < k - 1 or c != cols[0])
            ]
            if not cands:
                ok = False
                break
            cols.append(rng.choice(cands))
        if ok and gf2.rank(cols) == rb:
            return k, rb, cols


def random_facet_sum(rng: random.Random, extra_range=(1, 2)) -> SimplePolytope:
    """Random flag polytope: iterated facet sums along quadrangles."""
    pool = [prism(5), prism(6), prism(7), prism(8), associahedron3()]
    result = rng.choice(pool)
    for _ in range(rng.randint(*extra_range)):
        q = rng.choice(pool)
        f = rng.choice(result.quadrangles())
        g = rng.choice(q.quadrangles())
        bp = surrounding_belt(result, f)
        bq = surrounding_belt(q, g)
        off = rng.randrange(4)
        sgn = rng.choice((1, -1))
        ident = {bp[i]: bq[(off + sgn * i) % 4] for i in range(4)}
        result, _, _ = connected_sum_facets(result, f, q, g, ident)
    return result


def twisted_prism_pair() -> SimplePolytope:
    """Two pentagonal prisms glued along quadrangles with a quarter twist."""
    p, q = prism(5), prism(5)
    bp = surrounding_belt(p, 3)
    bq = surrounding_belt(q, 3)
    ident = {bp[i]: bq[(1 - i) % 4] for i in range(4)}
    s, _, _ = connected_sum_facets(p, 3, q, 3, ident)
    return s
