from pydantic import BaseModel, Field


class ResonanceNode(BaseModel):
    """Schema for one perfect matching as a resonance-graph vertex."""
    id: int
    edges: list[list[int]] = Field(..., description="Matched edges in sorted order")


class ResonanceEdge(BaseModel):
    """Schema for one hexagon flip."""
    source: int
    target: int
    hexagon: int = Field(..., description="Index of the flipped face")


class ResonanceGraphExport(BaseModel):
    """Schema for the JSON export of a resonance graph."""
    vertices: int
    nodes: list[ResonanceNode]
    edges: list[ResonanceEdge]


class CoverSchema(BaseModel):
    """Schema for a generalized Clar cover."""
    hexes: list[int]
    pairs: list[int]
    free_edges: list[list[int]]


class EmbeddingSchema(BaseModel):
    """Schema for a convex Q_{k,l} found in a resonance graph."""
    k: int
    l: int
    vertices: list[int]
    labels: dict[str, int] = Field(..., description="Coordinate string (e.g. '012') to vertex id")
