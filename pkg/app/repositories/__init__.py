from app.repositories.preset_repository import PresetRepository
from app.repositories.structure_repository import StructureRepository

__all__ = [
    "PresetRepository",
    "StructureRepository",
]
