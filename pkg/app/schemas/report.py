from typing import Any, Optional

from pydantic import BaseModel, Field, computed_field

from app.models.chemgraph import Family


class GraphSummary(BaseModel):
    """Schema for the size summary of a molecular graph."""
    family: Family
    vertices: int
    edges: int
    hexagons: int
    pentagons: int


class ShapeCheck(BaseModel):
    """Schema for the bijection checks of one (k, l) shape class."""
    k: int
    l: int
    gz: int = Field(..., description="Generalized Clar covers with k hexagons and l fused pairs")
    alpha: int = Field(..., description="Convex Q_{k,l} subgraphs of the resonance graph")
    injective: bool
    images_match: bool
    embeddings_valid: bool

    @computed_field
    @property
    def passed(self) -> bool:
        return self.gz == self.alpha and self.injective and self.images_match and self.embeddings_valid


class BijectionReport(BaseModel):
    """Schema for the cover-to-subgraph bijection verification."""
    shapes: list[ShapeCheck]
    passed: bool
    counterexample: Optional[dict[str, Any]] = None


class FourCycleReport(BaseModel):
    """Schema for the 4-cycle labelling check on a resonance graph."""
    cycles: int
    passed: bool
    counterexample: Optional[dict[str, Any]] = None


class RunReport(GraphSummary):
    """Schema for a full verification run."""
    matchings: int
    gzz: list[list[int]]
    gc: list[list[int]]
    equal: bool
    timings_ms: dict[str, float]
    bijection: Optional[BijectionReport] = None
    four_cycles: Optional[FourCycleReport] = None

    @computed_field
    @property
    def passed(self) -> bool:
        checks = [c for c in (self.bijection, self.four_cycles) if c is not None]
        return self.equal and all(c.passed for c in checks)
