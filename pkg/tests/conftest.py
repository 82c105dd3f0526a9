import pytest

from app.models.chemgraph import MolecularGraph
from app.repositories.preset_repository import PresetRepository
from app.services.chemgraph_service import build_structure
from app.services.matching_service import enumerate_perfect_matchings
from app.services.resonance_service import build_resonance_graph


def build_preset(name: str) -> MolecularGraph:
    return build_structure(PresetRepository().get(name))


def resonance_of(g: MolecularGraph):
    ms = enumerate_perfect_matchings(g)
    return ms, build_resonance_graph(g, ms)


@pytest.fixture
def benzene() -> MolecularGraph:
    return build_preset("linear:1")


@pytest.fixture
def naphthalene() -> MolecularGraph:
    return build_preset("linear:2")


@pytest.fixture
def anthracene() -> MolecularGraph:
    return build_preset("linear:3")


@pytest.fixture
def phenanthrene() -> MolecularGraph:
    return build_preset("zigzag:3")


@pytest.fixture
def pyrene() -> MolecularGraph:
    return build_preset("pyrene")


@pytest.fixture
def dodecahedron() -> MolecularGraph:
    return build_preset("c20")
