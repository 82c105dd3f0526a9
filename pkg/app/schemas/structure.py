from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.models.chemgraph import Family
from app.schemas.report import GraphSummary


class StructureRequest(BaseModel):
    """Schema for a structure given either as a preset name or as file contents."""
    preset: Optional[str] = Field(None, description="Preset name, e.g. 'linear:3', 'tube:2,2,1', 'c20'")
    text: Optional[str] = Field(None, description="Input file contents in one of the three text formats")
    family: Optional[Family] = Field(None, description="Format of 'text'; detected when omitted")
    max_vertices: Optional[int] = Field(None, ge=1, description="Molecular-graph vertex budget")
    max_resonance_vertices: Optional[int] = Field(None, ge=1, description="Resonance-graph vertex budget")

    @model_validator(mode="after")
    def check_source(self) -> "StructureRequest":
        if (self.preset is None) == (self.text is None):
            raise ValueError("give exactly one of 'preset' and 'text'")
        return self


class PresetResponse(GraphSummary):
    """Schema for a resolved preset and its canonical input file."""
    name: str
    text: str
