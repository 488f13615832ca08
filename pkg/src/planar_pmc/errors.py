"""Exception types raised across the package."""

from __future__ import annotations


class PlanarPMCError(Exception):
    """Base class for all errors raised by this package."""


class Disconnected(PlanarPMCError):
    pass


class NotPlanar(PlanarPMCError):
    pass


class NotBiconnected(PlanarPMCError):
    pass


class NotTriconnected(PlanarPMCError):
    pass


class InvalidEmbedding(PlanarPMCError):
    """A rotation system fails face closure or Euler's formula."""


class MultiEdge(PlanarPMCError):
    """The latching construction produced a parallel edge.

    This happens exactly when the base plane graph has a two-vertex
    separator, so it doubles as a triconnectivity witness.
    """

    def __init__(self, u: int, v: int, message: str = "") -> None:
        self.pair = (min(u, v), max(u, v))
        super().__init__(message or f"parallel latching edge between {u} and {v}")


class IncompletePmcSet(PlanarPMCError):
    """The treewidth DP found a block with no admissible PMC."""


class ParseError(PlanarPMCError):
    pass


class TooLarge(PlanarPMCError):
    """Brute-force oracle refused an input beyond its practical size."""
