import logging
from pathlib import Path
from typing import Optional

from app.core.errors import InputFormatError
from app.models.chemgraph import Family, MolecularGraph, StructureInput
from app.repositories.preset_repository import PresetRepository
from app.repositories.structure_repository import StructureRepository
from app.schemas.structure import PresetResponse, StructureRequest
from app.services.chemgraph_service import build_structure
from app.services.verification_service import summarize

logger = logging.getLogger(__name__)


class StructureService:
    """Turns preset names, files and raw text into validated molecular graphs."""

    def __init__(self):
        self.preset_repo = PresetRepository()
        self.structure_repo = StructureRepository()

    def resolve(
        self,
        preset: Optional[str] = None,
        path: Optional[Path] = None,
        text: Optional[str] = None,
        family: Optional[Family] = None,
    ) -> StructureInput:
        """Exactly one of ``preset``, ``path`` and ``text`` must be given."""
        if sum(x is not None for x in (preset, path, text)) != 1:
            raise InputFormatError("give exactly one of a preset, a file or input text")
        if preset is not None:
            return self.preset_repo.get(preset)
        if path is not None:
            return self.structure_repo.load(path, family)
        family = family or self.structure_repo.detect_family(text)
        return self.structure_repo.parse(text, family)

    def build(self, structure: StructureInput) -> MolecularGraph:
        g = build_structure(structure)
        logger.info(
            f"Built {g.family.value}: {g.vertex_count} vertices, {g.edge_count} edges, "
            f"{g.hexagon_count} hexagons, {g.pentagon_count} pentagons"
        )
        return g

    def from_request(self, request: StructureRequest) -> MolecularGraph:
        return self.build(self.resolve(preset=request.preset, text=request.text, family=request.family))

    def preset(self, name: str) -> PresetResponse:
        structure = self.preset_repo.get(name)
        g = self.build(structure)
        return PresetResponse(
            **summarize(g).model_dump(),
            name=name,
            text=self.structure_repo.serialize(structure),
        )

    def write_preset(self, name: str, directory: Path) -> Path:
        """Validate a preset and write its canonical input file into ``directory``."""
        structure = self.preset_repo.get(name)
        self.build(structure)
        path = directory / self.structure_repo.file_name(name, structure.family)
        return self.structure_repo.save(path, structure)
