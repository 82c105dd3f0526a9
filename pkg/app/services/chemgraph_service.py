"""Construction and validation of benzenoids, tubulenes and fullerenes.

Benzenoid and tubulene corners live on an integer lattice scaled by 3: the
centre of hexagon (q, r) sits at (3q, 3r) and its six corners at the offsets
below, so corner positions are exact and shared corners coincide.
"""
import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence

import networkx as nx

from app.core.errors import (
    BadFaceSizeError, DisconnectedHexagonsError, EmptyInputError, HoleDetectedError,
    InputFormatError, InvalidTubuleneError, NotCubicError,
    NotPlanarEmbeddingError,
)
from app.models.chemgraph import (
    Edge, Face, Family, FusedPair, HexCoord, MolecularGraph, StructureInput, TubuleneSpec, check_chiral_vector,
    edge_key,
)

logger = logging.getLogger(__name__)

# Axial neighbour directions in counter-clockwise order
NEIGHBOUR_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

# Corner i lies between neighbour directions i and i + 1 (scaled by 3)
CORNER_OFFSETS = tuple(
    (NEIGHBOUR_DIRECTIONS[i][0] + NEIGHBOUR_DIRECTIONS[(i + 1) % 6][0],
     NEIGHBOUR_DIRECTIONS[i][1] + NEIGHBOUR_DIRECTIONS[(i + 1) % 6][1])
    for i in range(6)
)


def hexagon_corners(q: int, r: int) -> list[tuple[int, int]]:
    """Scaled lattice positions of the six corners of hexagon (q, r), in cyclic order."""
    return [(3 * q + dx, 3 * r + dy) for dx, dy in CORNER_OFFSETS]


def _graph_from_faces(
    family: Family,
    cycles: list[list[int]],
    vertex_count: int,
    positions: tuple[tuple[int, int], ...] | None = None,
) -> MolecularGraph:
    neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
    for cycle in cycles:
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            neighbours[u].add(v)
            neighbours[v].add(u)
    return MolecularGraph(
        family=family,
        adjacency=tuple(tuple(sorted(n)) for n in neighbours),
        faces=tuple(Face.from_cycle(c) for c in cycles),
        positions=positions,
    )


def validate_molecular_graph(g: MolecularGraph) -> None:
    """Check the invariants shared by all families; raises ValueError on violation."""
    degree_sum = sum(len(nbrs) for nbrs in g.adjacency)
    if degree_sum != 2 * g.edge_count:
        raise ValueError("handshake identity violated")
    for u, nbrs in enumerate(g.adjacency):
        if u in nbrs:
            raise ValueError(f"loop at vertex {u}")
        for v in nbrs:
            if u not in g.adjacency[v]:
                raise ValueError(f"asymmetric adjacency {u}-{v}")
    allowed = {3} if g.family == Family.FULLERENE else {2, 3}
    bad = [v for v in range(g.vertex_count) if g.degree(v) not in allowed]
    if bad:
        raise ValueError(f"vertices {bad[:5]} have degree outside {sorted(allowed)}")
    if g.vertex_count and not nx.is_connected(g.to_networkx()):
        raise ValueError("graph is disconnected")
    faces_per_edge: dict[Edge, int] = defaultdict(int)
    for face in g.faces:
        if len(face.vertex_set) != len(face.boundary):
            raise ValueError(f"face {face.boundary} repeats a vertex")
        for e in face.edges:
            if e not in g.edge_set:
                raise ValueError(f"face {face.boundary} uses non-edge {e}")
            faces_per_edge[e] += 1
    crowded = [e for e, count in faces_per_edge.items() if count > 2]
    if crowded:
        raise ValueError(f"edges {crowded[:5]} lie on more than two faces")


def build_benzenoid(hexagons: Iterable[HexCoord]) -> MolecularGraph:
    """Benzenoid graph of a simply connected, edge-connected set of lattice hexagons.

    Vertices are numbered in lexicographic order of their lattice position and
    face i is the i-th hexagon in sorted coordinate order.
    """
    cells = sorted(set(hexagons))
    if not cells:
        raise EmptyInputError("no hexagons given")

    cell_set = set(cells)
    cell_graph = nx.Graph()
    cell_graph.add_nodes_from(cells)
    for cell in cells:
        for dq, dr in NEIGHBOUR_DIRECTIONS:
            other = HexCoord(cell.q + dq, cell.r + dr)
            if other in cell_set:
                cell_graph.add_edge(cell, other)
    if not nx.is_connected(cell_graph):
        components = nx.number_connected_components(cell_graph)
        raise DisconnectedHexagonsError(f"hexagons form {components} separate clusters")

    corner_lists = [hexagon_corners(c.q, c.r) for c in cells]
    positions = sorted({p for corners in corner_lists for p in corners})
    index = {p: i for i, p in enumerate(positions)}
    cycles = [[index[p] for p in corners] for corners in corner_lists]

    g = _graph_from_faces(Family.BENZENOID, cycles, len(positions), tuple(positions))
    euler = g.vertex_count - g.edge_count + g.hexagon_count
    if euler != 1:
        raise HoleDetectedError(f"v - e + h = {euler}, expected 1 (the hexagons enclose {1 - euler} hole(s))")
    validate_molecular_graph(g)
    logger.debug(f"Built benzenoid: {len(cells)} hexagons, {g.vertex_count} vertices, {g.edge_count} edges")
    return g


def build_tubulene(spec: TubuleneSpec) -> MolecularGraph:
    """Hexagonal tessellation of the cylinder for chiral vector n*a1 + m*a2.

    Hexagon centres are axial lattice points modulo (n, m). The height
    h(q, r) = q*m - r*n is invariant under that translation and changes by at
    most D = max(|n|, |m|, |n+m|) between neighbouring hexagons; the tube keeps
    the hexagons with 0 <= h < rings * D, bounded by two straight rings.
    """
    n, m, rings = spec.n, spec.m, spec.rings
    check_chiral_vector(n, m)
    if rings < 1:
        raise InvalidTubuleneError(f"rings must be positive, got {rings}")

    circumference = n * n + m * m + n * m

    def along(x: int, y: int) -> int:
        # twice the inner product with (n, m) in the 60-degree lattice metric
        return 2 * x * n + 2 * y * m + x * m + y * n

    def reduce_centre(q: int, r: int) -> tuple[int, int]:
        t = along(q, r) // (2 * circumference)
        return (q - t * n, r - t * m)

    def reduce_corner(x: int, y: int) -> tuple[int, int]:
        t = along(x, y) // (6 * circumference)
        return (x - 3 * t * n, y - 3 * t * m)

    step = max(abs(n), abs(m), abs(n + m))
    top = rings * step
    reach = 2 * (abs(n) + abs(m)) * (rings + 1) + 2
    centres = sorted({
        reduce_centre(q, r)
        for q in range(-reach, reach + 1)
        for r in range(-reach, reach + 1)
        if 0 <= q * m - r * n < top
    })

    corner_lists = [[reduce_corner(x, y) for x, y in hexagon_corners(q, r)] for q, r in centres]
    positions = sorted({p for corners in corner_lists for p in corners})
    index = {p: i for i, p in enumerate(positions)}
    cycles = [[index[p] for p in corners] for corners in corner_lists]
    if any(len(set(c)) != 6 for c in cycles):
        raise InvalidTubuleneError(f"({n},{m}) is too narrow: a hexagon wraps onto itself")
    shared = _multiply_fused_faces(cycles)
    if shared:
        raise InvalidTubuleneError(f"({n},{m}) is too narrow: hexagons {shared} share more than one edge")

    g = _graph_from_faces(Family.TUBULENE, cycles, len(positions), tuple(positions))
    try:
        validate_molecular_graph(g)
    except ValueError as e:
        raise InvalidTubuleneError(f"({n},{m},{rings}) does not form a tube: {e}") from e

    euler = g.vertex_count - g.edge_count + len(g.faces)
    boundary = _boundary_graph(g)
    cycles_found = nx.number_connected_components(boundary)
    if euler != 0 or cycles_found != 2 or any(d != 2 for _, d in boundary.degree()):
        raise InvalidTubuleneError(
            f"({n},{m},{rings}) is not an annulus: v - e + f = {euler}, {cycles_found} boundary components"
        )
    logger.debug(f"Built ({n},{m}) tubulene: {len(centres)} hexagons, {g.vertex_count} vertices")
    return g


def _multiply_fused_faces(cycles: list[list[int]]) -> tuple[int, int] | None:
    """First pair of faces sharing two or more edges, if any."""
    faces_on_edge: dict[Edge, list[int]] = defaultdict(list)
    for i, cycle in enumerate(cycles):
        for j, u in enumerate(cycle):
            v = cycle[(j + 1) % len(cycle)]
            faces_on_edge[edge_key(u, v)].append(i)
    shared = Counter(tuple(sorted(fs)) for fs in faces_on_edge.values() if len(fs) == 2)
    return next((pair for pair, count in sorted(shared.items()) if count > 1), None)


def _boundary_graph(g: MolecularGraph) -> nx.Graph:
    """Edges lying on exactly one face."""
    count: dict[Edge, int] = defaultdict(int)
    for face in g.faces:
        for e in face.edges:
            count[e] += 1
    boundary = nx.Graph()
    boundary.add_edges_from(e for e in g.edges if count[e] == 1)
    return boundary


def boundary_cycles(g: MolecularGraph) -> list[list[int]]:
    """Vertex sets of the open-end cycles, each sorted, in order of smallest vertex."""
    boundary = _boundary_graph(g)
    return sorted(sorted(c) for c in nx.connected_components(boundary))


def load_fullerene(rotation_system: Sequence[Sequence[int]]) -> MolecularGraph:
    """Fullerene from per-vertex clockwise neighbour orders; faces by face tracing."""
    vertex_count = len(rotation_system)
    for v, nbrs in enumerate(rotation_system):
        if len(nbrs) != 3 or len(set(nbrs)) != 3 or v in nbrs:
            raise NotCubicError(f"vertex {v} lists {list(nbrs)}, expected three distinct neighbours")
        for w in nbrs:
            if not 0 <= w < vertex_count:
                raise InputFormatError(f"vertex {v} lists unknown neighbour {w}")
            if v not in rotation_system[w]:
                raise InputFormatError(f"neighbour lists of {v} and {w} are not symmetric")

    embedding = nx.PlanarEmbedding()
    embedding.set_data({v: list(nbrs) for v, nbrs in enumerate(rotation_system)})
    try:
        embedding.check_structure()
    except nx.NetworkXException as e:
        raise NotPlanarEmbeddingError(str(e)) from e

    visited: set[tuple[int, int]] = set()
    traced: list[list[int]] = []
    for v in range(vertex_count):
        for w in rotation_system[v]:
            if (v, w) not in visited:
                traced.append(embedding.traverse_face(v, w, mark_half_edges=visited))

    edge_count = 3 * vertex_count // 2
    euler = vertex_count - edge_count + len(traced)
    if euler != 2:
        raise NotPlanarEmbeddingError(f"v - e + f = {euler}, expected 2")
    for face in traced:
        if len(face) not in (5, 6) or len(set(face)) != len(face):
            raise BadFaceSizeError(f"traced face {face} has length {len(face)}")

    cycles = sorted(traced, key=lambda c: Face.from_cycle(c).boundary)
    g = _graph_from_faces(Family.FULLERENE, cycles, vertex_count)
    if g.pentagon_count != 12:
        raise BadFaceSizeError(f"{g.pentagon_count} pentagons, expected 12")
    validate_molecular_graph(g)
    logger.debug(f"Loaded fullerene: {vertex_count} vertices, {g.hexagon_count} hexagons")
    return g


def fused_hexagon_pairs(g: MolecularGraph) -> list[FusedPair]:
    """Pairs of hexagonal faces sharing exactly one edge whose perimeter is a 10-cycle."""
    faces_on_edge: dict[Edge, list[int]] = defaultdict(list)
    for i in g.hexagon_indices:
        for e in g.faces[i].edges:
            faces_on_edge[e].append(i)

    candidates = {tuple(sorted(fs)) for fs in faces_on_edge.values() if len(fs) == 2}
    pairs = []
    for i, j in sorted(candidates):
        first, second = g.faces[i], g.faces[j]
        shared = first.edges & second.edges
        if len(shared) == 1 and len(first.vertex_set | second.vertex_set) == 10:
            pairs.append(FusedPair(first=i, second=j, shared_edge=next(iter(shared))))
    return pairs


def perimeter_edges(g: MolecularGraph, pair: FusedPair) -> frozenset[Edge]:
    """Edges of the 10-cycle around a fused pair (the shared edge excluded)."""
    return (g.faces[pair.first].edges | g.faces[pair.second].edges) - {pair.shared_edge}


def pair_vertices(g: MolecularGraph, pair: FusedPair) -> frozenset[int]:
    return g.faces[pair.first].vertex_set | g.faces[pair.second].vertex_set


def face_path(face: Face, u: int, v: int) -> list[int]:
    """Boundary walk from u to v that avoids the edge uv; u and v must be adjacent on the face."""
    b = list(face.boundary)
    i = b.index(u)
    size = len(b)
    forward = [b[(i + s) % size] for s in range(size)]
    if forward[1] == v:
        forward = [b[(i - s) % size] for s in range(size)]
    if forward[-1] != v:
        raise ValueError(f"{u} and {v} are not adjacent on face {face.boundary}")
    return forward


def build_structure(structure: StructureInput) -> MolecularGraph:
    """Dispatch a parsed input to the constructor of its family."""
    if structure.family == Family.BENZENOID:
        return build_benzenoid(structure.hexagons)
    if structure.family == Family.TUBULENE:
        if structure.tubulene is None:
            raise EmptyInputError("no chiral vector given")
        return build_tubulene(structure.tubulene)
    return load_fullerene(structure.rotation)
