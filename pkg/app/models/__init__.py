from app.models.chemgraph import (
    Edge, Face, FaceKind, Family, FusedPair, HexCoord, MolecularGraph, StructureInput, TubuleneSpec,
    check_chiral_vector, edge_key,
)
from app.models.clarcover import GeneralizedClarCover, PossibilityLabel
from app.models.cube import QklEmbedding, QklShape
from app.models.graph import IndexedGraph, ResonanceGraph
from app.models.matching import PerfectMatching
from app.models.polynomial import BivariatePolynomial, parse_polynomial, poly_add, poly_eq, poly_to_string

__all__ = [
    "Edge",
    "Face",
    "FaceKind",
    "Family",
    "FusedPair",
    "HexCoord",
    "MolecularGraph",
    "StructureInput",
    "TubuleneSpec",
    "check_chiral_vector",
    "edge_key",
    "GeneralizedClarCover",
    "PossibilityLabel",
    "QklEmbedding",
    "QklShape",
    "IndexedGraph",
    "ResonanceGraph",
    "PerfectMatching",
    "BivariatePolynomial",
    "parse_polynomial",
    "poly_add",
    "poly_eq",
    "poly_to_string",
]
