from app.schemas.polynomial import PolynomialResponse
from app.schemas.report import BijectionReport, FourCycleReport, GraphSummary, RunReport, ShapeCheck
from app.schemas.resonance import (
    CoverSchema,
    EmbeddingSchema,
    ResonanceEdge,
    ResonanceGraphExport,
    ResonanceNode,
)
from app.schemas.structure import PresetResponse, StructureRequest

__all__ = [
    "PolynomialResponse",
    "BijectionReport",
    "FourCycleReport",
    "GraphSummary",
    "RunReport",
    "ShapeCheck",
    "CoverSchema",
    "EmbeddingSchema",
    "ResonanceEdge",
    "ResonanceGraphExport",
    "ResonanceNode",
    "PresetResponse",
    "StructureRequest",
]
