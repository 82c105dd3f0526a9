"""Resonance graph construction and the 4-cycle checks on it."""
import logging
from collections.abc import Sequence

from app.models.chemgraph import Edge, MolecularGraph, edge_key
from app.models.graph import IndexedGraph, ResonanceGraph
from app.models.matching import PerfectMatching
from app.schemas.resonance import ResonanceEdge, ResonanceGraphExport, ResonanceNode
from app.services.matching_service import flip, sextet_edges

logger = logging.getLogger(__name__)


def build_resonance_graph(g: MolecularGraph, ms: Sequence[PerfectMatching]) -> ResonanceGraph:
    """Connect each matching to the flip of each of its sextets; labels are face indices."""
    position = {m.partners: i for i, m in enumerate(ms)}
    labels: dict[Edge, int] = {}
    for i, m in enumerate(ms):
        for face_index in g.hexagon_indices:
            h = g.faces[face_index]
            if sextet_edges(m, h) != 3:
                continue
            j = position.get(flip(g, m, h).partners)
            if j is None:
                raise ValueError(f"flip of matching {i} on face {face_index} is missing from the matching list")
            if i < j:
                labels[(i, j)] = face_index
    r = ResonanceGraph(len(ms), labels)
    logger.debug(f"Resonance graph: {r.vertex_count} vertices, {r.edge_count} edges")
    return r


def distance(r: IndexedGraph, u: int, v: int) -> float:
    return r.distance(u, v)


def is_convex(r: IndexedGraph, s) -> bool:
    return r.is_convex(s)


def four_cycles(r: IndexedGraph) -> list[tuple[int, int, int, int]]:
    """Each 4-cycle once as (a, b, d, c): a is its smallest vertex, b < c its neighbours on the cycle."""
    cycles = []
    for a in range(r.vertex_count):
        nbrs = [x for x in r.adjacency[a] if x > a]
        for i, b in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                for d in sorted(r.common_neighbours(b, c)):
                    if d > a:
                        cycles.append((a, b, d, c))
    return cycles


def label_of(r: ResonanceGraph, u: int, v: int) -> int:
    return r.edge_labels[edge_key(u, v)]


def export_resonance_graph(r: ResonanceGraph, ms: Sequence[PerfectMatching]) -> ResonanceGraphExport:
    """JSON mirror of the DOT export: nodes carry their matched edges, edges their hexagon."""
    return ResonanceGraphExport(
        vertices=r.vertex_count,
        nodes=[ResonanceNode(id=i, edges=[list(e) for e in m.sorted_edges()]) for i, m in enumerate(ms)],
        edges=[ResonanceEdge(source=u, target=v, hexagon=r.edge_labels[(u, v)]) for u, v in r.edges],
    )


def resonance_to_dot(r: ResonanceGraph, name: str = "resonance") -> str:
    """Undirected DOT graph: one node per matching id, one edge per flip labelled by its hexagon."""
    lines = [f'graph "{name}" {{']
    lines += [f"  {v};" for v in range(r.vertex_count)]
    lines += [f'  {u} -- {v} [hexagon={r.edge_labels[(u, v)]}, label="{r.edge_labels[(u, v)]}"];' for u, v in r.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
