"""GF(2) linear algebra on int bitmasks (bit t = coordinate t)."""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple


def parity(x: int) -> int:
    """Parity of the popcount of x."""
    return bin(x).count("1") & 1


def weight(x: int) -> int:
    return bin(x).count("1")


def echelon(vectors: Iterable[int]) -> List[int]:
    """Reduced row-echelon basis of the span, highest leading bit first."""
    pivots = {}  # leading bit -> row
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead in pivots:
                v ^= pivots[lead]
            else:
                pivots[lead] = v
                break
    rows = [pivots[lead] for lead in sorted(pivots, reverse=True)]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if (rows[i] >> (rows[j].bit_length() - 1)) & 1:
                rows[i] ^= rows[j]
    return rows


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


def reduce(v: int, basis: List[int]) -> int:
    """Canonical representative of v modulo the span of an echelon basis."""
    for b in basis:
        if (v >> (b.bit_length() - 1)) & 1:
            v ^= b
    return v


def in_span(v: int, basis: List[int]) -> bool:
    return reduce(v, basis) == 0


def greedy_basis(vectors: List[int]) -> List[int]:
    """Indices of the first vectors (in scan order) forming a basis of the span."""
    picked: List[int] = []
    basis: List[int] = []
    for i, v in enumerate(vectors):
        if not in_span(v, basis):
            picked.append(i)
            basis = echelon(basis + [v])
    return picked


def coords_in_basis(v: int, basis_vectors: List[int]) -> Optional[int]:
    """Coefficient bitmask c such that xor of tagged basis vectors equals v."""
    ech: List[Tuple[int, int]] = []  # (reduced vector, coefficient tag)
    for i, bv in enumerate(basis_vectors):
        tag = 1 << i
        for ev, et in ech:
            if (bv >> (ev.bit_length() - 1)) & 1:
                bv ^= ev
                tag ^= et
        if bv:
            ech.append((bv, tag))
            ech.sort(reverse=True)
    tag = 0
    for ev, et in ech:
        if (v >> (ev.bit_length() - 1)) & 1:
            v ^= ev
            tag ^= et
    return None if v else tag


def solve_all_ones(columns: List[int]) -> Optional[int]:
    """A functional phi (bitmask) with parity(phi & c) == 1 for every column c."""
    ech: List[Tuple[int, int]] = []  # (reduced column, rhs)
    for v in columns:
        rhs = 1
        for ev, erhs in ech:
            if (v >> (ev.bit_length() - 1)) & 1:
                v ^= ev
                rhs ^= erhs
        if v:
            ech.append((v, rhs))
            ech.sort(reverse=True)
        elif rhs:
            return None
    phi = 0
    for v, rhs in sorted(ech):  # ascending leading bit: back-substitution
        if parity(v & phi) != rhs:
            phi ^= 1 << (v.bit_length() - 1)
    return phi


def triple_independent(a: int, b: int, c: int) -> bool:
    """Whether three vectors are linearly independent over GF(2)."""
    return bool(a and b and c) and a != b and a != c and b != c and (a ^ b) != c


__all__ = [
    "parity",
    "weight",
    "echelon",
    "rank",
    "reduce",
    "in_span",
    "greedy_basis",
    "coords_in_basis",
    "solve_all_ones",
    "triple_independent",
]
