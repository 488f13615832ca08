"""Exact treewidth of planar graphs through polynomial-delay generation of
potential maximal cliques."""

from .errors import (Disconnected, IncompletePmcSet, InvalidEmbedding, MultiEdge, NotBiconnected,
                     NotPlanar, NotTriconnected, ParseError, PlanarPMCError, TooLarge)
from .graph import Component, Graph, components, is_minimal_separator, is_pmc
from .latching import LatchingGraph, build_latching
from .minsep import MinSep, minimal_separators, minimal_separators_avoiding
from .planar import PlaneGraph, embed, faces, is_biconnected, is_planar, is_triconnected
from .pmc import PMC, PmcStats, pmc_sets, pmcs
from .polydelay import UnionStats, union_generate
from .steering import SteeringCertificate, is_pmc_by_steering, is_steering
from .treewidth import TreeDecomposition, treewidth_from_pmcs, treewidth_planar, validate_td

__version__ = "0.1.0"

__all__ = [
    "Component", "Disconnected", "Graph", "IncompletePmcSet", "InvalidEmbedding", "LatchingGraph",
    "MinSep", "MultiEdge", "NotBiconnected", "NotPlanar", "NotTriconnected", "PMC", "ParseError",
    "PlanarPMCError", "PlaneGraph", "PmcStats", "SteeringCertificate", "TooLarge",
    "TreeDecomposition", "UnionStats", "build_latching", "components", "embed", "faces",
    "is_biconnected", "is_minimal_separator", "is_planar", "is_pmc", "is_pmc_by_steering",
    "is_steering", "is_triconnected", "minimal_separators", "minimal_separators_avoiding",
    "pmc_sets", "pmcs", "treewidth_from_pmcs", "treewidth_planar", "union_generate", "validate_td",
]
