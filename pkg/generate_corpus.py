"""
Script to write the preset inputs and the benzenoid catalogue as input files.

Usage: python generate_corpus.py [output directory] [max hexagons]
"""
import sys
from pathlib import Path

from app.models.chemgraph import Family, StructureInput
from app.repositories.preset_repository import PresetRepository
from app.repositories.structure_repository import StructureRepository
from app.services.catalogue_service import enumerate_benzenoids
from app.services.structure_service import StructureService

output = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
max_hexagons = int(sys.argv[2]) if len(sys.argv) > 2 else 6

structures = StructureService()
repository = StructureRepository()

presets = PresetRepository().names(max_hexagons=4)
for name in presets:
    path = structures.write_preset(name, output / "presets")
    print(f"✅ {name} -> {path}")

catalogue = enumerate_benzenoids(max_hexagons)
for number, hexagons in enumerate(catalogue, start=1):
    structure = StructureInput(family=Family.BENZENOID, hexagons=tuple(hexagons))
    path = output / "catalogue" / f"h{len(hexagons)}_{number:03d}.benzenoid"
    repository.save(path, structure, comment=f"catalogue entry {number}, {len(hexagons)} hexagons")

print(f"✅ Wrote {len(presets)} presets and {len(catalogue)} catalogue benzenoids to {output}")
