"""Named inputs covering the three families.

Fullerene rotation systems are derived from explicit edge lists through a
networkx planar embedding, so they are valid by construction.
"""
import itertools
import logging

import networkx as nx

from app.core.errors import UnknownPresetError
from app.models.chemgraph import Family, HexCoord, StructureInput, TubuleneSpec, check_chiral_vector

logger = logging.getLogger(__name__)

FIXED_PRESETS = ("pyrene", "coronene", "c20", "c24", "c60")
PARAMETRIC_PRESETS = ("linear:h", "zigzag:h", "tube:n,m,rings")


def _benzenoid(cells) -> StructureInput:
    return StructureInput(family=Family.BENZENOID, hexagons=tuple(HexCoord(q, r) for q, r in cells))


def linear_cells(h: int) -> list[tuple[int, int]]:
    """Acene chain: benzene, naphthalene, anthracene, ..."""
    return [(i, 0) for i in range(h)]


def zigzag_cells(h: int) -> list[tuple[int, int]]:
    """Zigzag chain (phenanthrene for h = 3), alternating two lattice directions."""
    cells = [(0, 0)]
    for i in range(1, h):
        q, r = cells[-1]
        cells.append((q + 1, r) if i % 2 else (q, r + 1))
    return cells


def barrel_edges(p: int) -> list[tuple[int, int]]:
    """Cubic polyhedron of two p-gon caps joined by a band of 2p pentagons (C20 for p = 5, C24 for p = 6)."""
    a, b, c, d = (lambda i: i % p), (lambda i: p + i % p), (lambda i: 2 * p + i % p), (lambda i: 3 * p + i % p)
    edges = []
    for i in range(p):
        edges += [(a(i), a(i + 1)), (a(i), b(i)), (b(i), c(i)), (c(i), b(i + 1)), (c(i), d(i)), (d(i), d(i + 1))]
    return edges


def icosahedron() -> nx.Graph:
    graph = nx.Graph()
    for i in range(1, 6):
        j = i % 5 + 1
        graph.add_edges_from([(0, i), (i, j), (5 + i, 5 + j), (i, 5 + i), (i, 5 + j), (11, 5 + i)])
    return graph


def truncated_icosahedron() -> nx.Graph:
    """C60: one vertex per directed icosahedron edge."""
    ico = icosahedron()
    graph = nx.Graph()
    for v, u in itertools.permutations(ico.nodes, 2):
        if not ico.has_edge(v, u):
            continue
        graph.add_edge((v, u), (u, v))
        for w in ico.neighbors(v):
            if w != u and ico.has_edge(u, w):
                graph.add_edge((v, u), (v, w))
    return graph


def rotation_from_graph(graph: nx.Graph) -> tuple[tuple[int, ...], ...]:
    """Clockwise neighbour orders of a planar cubic graph, vertices relabelled 0..n-1."""
    relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    planar, embedding = nx.check_planarity(relabelled)
    if not planar:
        raise ValueError("graph is not planar")
    data = embedding.get_data()
    return tuple(tuple(data[v]) for v in range(relabelled.number_of_nodes()))


def _fullerene(graph: nx.Graph) -> StructureInput:
    return StructureInput(family=Family.FULLERENE, rotation=rotation_from_graph(graph))


def _parameters(name: str, prefix: str) -> list[int]:
    try:
        values = [int(x) for x in name[len(prefix):].split(",")]
    except ValueError as e:
        raise UnknownPresetError(f"bad parameters in preset {name!r}") from e
    return values


class PresetRepository:
    """Resolves preset names such as ``linear:3``, ``tube:2,2,1`` or ``c60``."""

    def get(self, name: str) -> StructureInput:
        name = name.strip().lower()
        if name.startswith("linear:") or name.startswith("zigzag:"):
            prefix = name.split(":", 1)[0] + ":"
            values = _parameters(name, prefix)
            if len(values) != 1 or values[0] < 1:
                raise UnknownPresetError(f"{prefix}h needs one positive hexagon count, got {name!r}")
            cells = linear_cells(values[0]) if prefix == "linear:" else zigzag_cells(values[0])
            return _benzenoid(cells)
        if name.startswith("tube:"):
            values = _parameters(name, "tube:")
            if len(values) != 3 or values[2] < 1:
                raise UnknownPresetError(f"tube:n,m,rings needs three integers with rings >= 1, got {name!r}")
            n, m, rings = values
            check_chiral_vector(n, m)
            return StructureInput(family=Family.TUBULENE, tubulene=TubuleneSpec(n, m, rings))
        if name == "pyrene":
            return _benzenoid([(0, 0), (1, 0), (0, 1), (1, -1)])
        if name == "coronene":
            return _benzenoid([(0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
        if name == "c20":
            return _fullerene(nx.Graph(barrel_edges(5)))
        if name == "c24":
            return _fullerene(nx.Graph(barrel_edges(6)))
        if name == "c60":
            return _fullerene(truncated_icosahedron())
        raise UnknownPresetError(
            f"{name!r}; known presets are {', '.join(PARAMETRIC_PRESETS + FIXED_PRESETS)}"
        )

    def names(self, max_hexagons: int = 3) -> list[str]:
        """A representative list of preset names (parametric families up to ``max_hexagons``)."""
        names = [f"linear:{h}" for h in range(1, max_hexagons + 1)]
        names += [f"zigzag:{h}" for h in range(3, max_hexagons + 1)]
        names += ["pyrene", "coronene", "tube:2,2,1", "tube:3,0,2", "c20", "c24", "c60"]
        return names
