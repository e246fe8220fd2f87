"""Exception hierarchy shared across the package."""

from __future__ import annotations


class BeltdecError(Exception):
    """Base class for all package errors."""


# --- polytope construction / validation ---

class PolytopeError(BeltdecError):
    pass


class TooFewFacets(PolytopeError):
    pass


class DuplicateVertex(PolytopeError):
    pass


class EdgeMultiplicity(PolytopeError):
    pass


class FacetCycleBroken(PolytopeError):
    pass


class EulerViolation(PolytopeError):
    pass


class Disconnected(PolytopeError):
    pass


class UnknownName(PolytopeError):
    pass


class BadParam(PolytopeError):
    pass


class VertexNotFound(PolytopeError):
    pass


class EdgeNotFound(PolytopeError):
    pass


class BadMatching(PolytopeError):
    pass


class BadIdentification(PolytopeError):
    pass


class NotSurroundedByBelt(PolytopeError):
    pass


# --- belts ---

class BeltError(BeltdecError):
    pass


class NotABelt(BeltError):
    pass


class DegenerateOverlap(BeltError):
    pass


class NotNested(BeltError):
    pass


# --- colourings ---

class ColoringError(BeltdecError):
    pass


class ZeroColumn(ColoringError):
    pass


class StarViolation(ColoringError):
    pass


class AlreadyOrientable(ColoringError):
    pass


class NotOrientable(ColoringError):
    pass


class MergeConflict(ColoringError):
    pass


class RankMismatch(ColoringError):
    pass


# --- decompositions / invariants ---

class DecompositionError(BeltdecError):
    pass


class NotFlag(DecompositionError):
    pass


class IsCube(DecompositionError):
    pass


class NotBaseCase(DecompositionError):
    pass


class NotPrismPiece(DecompositionError):
    pass


class NotGlobalCase(DecompositionError):
    pass


# --- oracle ---

class OracleError(BeltdecError):
    pass


class TooLarge(OracleError):
    pass
