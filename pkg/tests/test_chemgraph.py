import networkx as nx
import pytest

from app.core.errors import (
    BadFaceSizeError, DisconnectedHexagonsError, EmptyInputError, HoleDetectedError,
    InvalidChiralVectorError, InvalidTubuleneError, NotCubicError, NotPlanarEmbeddingError,
)
from app.models.chemgraph import Face, FaceKind, Family, HexCoord, MolecularGraph, TubuleneSpec, check_chiral_vector
from app.repositories.preset_repository import (
    PresetRepository, barrel_edges, rotation_from_graph, truncated_icosahedron,
)
from app.services.chemgraph_service import (
    boundary_cycles, build_benzenoid, build_structure, build_tubulene, face_path, fused_hexagon_pairs,
    load_fullerene, perimeter_edges, validate_molecular_graph,
)

RING = [HexCoord(1, 0), HexCoord(0, 1), HexCoord(-1, 1), HexCoord(-1, 0), HexCoord(0, -1), HexCoord(1, -1)]


def _handshake(g) -> bool:
    return sum(g.degree(v) for v in range(g.vertex_count)) == 2 * g.edge_count


def test_benzene_counts(benzene):
    """Test a single hexagon."""
    assert (benzene.vertex_count, benzene.edge_count, benzene.hexagon_count) == (6, 6, 1)
    assert benzene.family == Family.BENZENOID


def test_naphthalene_counts(naphthalene):
    """Test two fused hexagons share exactly one edge."""
    assert (naphthalene.vertex_count, naphthalene.edge_count, naphthalene.hexagon_count) == (10, 11, 2)
    first, second = naphthalene.faces
    assert len(first.edges & second.edges) == 1


def test_linear_chain_counts():
    """Test acenes have 4h+2 vertices and 5h+1 edges."""
    for h in range(1, 6):
        g = build_benzenoid(HexCoord(i, 0) for i in range(h))
        assert g.vertex_count == 4 * h + 2
        assert g.edge_count == 5 * h + 1
        assert g.vertex_count - g.edge_count + g.hexagon_count == 1
        assert _handshake(g)


def test_vertex_numbering_is_lexicographic_on_position(anthracene):
    """Test that vertex ids follow sorted lattice positions."""
    assert list(anthracene.positions) == sorted(anthracene.positions)


def test_benzenoid_errors():
    """Test the three benzenoid rejections."""
    with pytest.raises(EmptyInputError):
        build_benzenoid([])
    with pytest.raises(DisconnectedHexagonsError):
        build_benzenoid([HexCoord(0, 0), HexCoord(2, 0)])
    with pytest.raises(HoleDetectedError) as excinfo:
        build_benzenoid(RING)
    assert "HoleDetected" in str(excinfo.value)


def test_coronene_has_no_hole():
    """Test that filling the ring makes it a valid benzenoid."""
    g = build_benzenoid(RING + [HexCoord(0, 0)])
    assert (g.vertex_count, g.edge_count, g.hexagon_count) == (24, 30, 7)


def test_face_normalization():
    """Test that boundaries start at the smallest vertex and head to its smaller neighbour."""
    face = Face.from_cycle([5, 9, 2, 7, 3, 4])
    assert face.boundary == (2, 7, 3, 4, 5, 9)
    assert face.kind == FaceKind.HEXAGON
    with pytest.raises(ValueError):
        Face.from_cycle([0, 1, 2])


def test_fused_pairs():
    """Test fused pairs of benzene, naphthalene and anthracene."""
    repo = PresetRepository()
    assert fused_hexagon_pairs(build_structure(repo.get("linear:1"))) == []
    assert len(fused_hexagon_pairs(build_structure(repo.get("linear:2")))) == 1
    pairs = fused_hexagon_pairs(build_structure(repo.get("linear:3")))
    assert [(p.first, p.second) for p in pairs] == [(0, 1), (1, 2)]


def test_fused_pair_perimeter_is_ten_cycle(anthracene):
    """Test that each fused pair bounds a 10-cycle."""
    for pair in fused_hexagon_pairs(anthracene):
        edges = perimeter_edges(anthracene, pair)
        assert len(edges) == 10
        cycle = nx.Graph(list(edges))
        assert cycle.number_of_nodes() == 10
        assert all(d == 2 for _, d in cycle.degree())
        assert nx.is_connected(cycle)


def test_face_path(naphthalene):
    """Test the boundary walk between the ends of the shared edge."""
    pair = fused_hexagon_pairs(naphthalene)[0]
    u, v = pair.shared_edge
    path = face_path(naphthalene.faces[pair.first], u, v)
    assert path[0] == u and path[-1] == v and len(path) == 6
    assert all(naphthalene.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_tubulene_rejects_bad_chiral_vectors():
    """Test the chiral vector constraint."""
    for n, m in [(1, 0), (0, 1), (1, -1), (-1, 1), (0, 0)]:
        with pytest.raises(InvalidChiralVectorError):
            build_tubulene(TubuleneSpec(n, m, 1))
        with pytest.raises(InvalidChiralVectorError):
            check_chiral_vector(n, m)


@pytest.mark.parametrize("n,m,rings", [(1, 1, 1), (1, 1, 2), (2, -1, 1), (2, -1, 2)])
def test_tubulene_rejects_hexagons_sharing_two_edges(n, m, rings):
    """Test that tubes so narrow that two hexagons share two edges are rejected."""
    with pytest.raises(InvalidTubuleneError, match="share more than one edge"):
        build_tubulene(TubuleneSpec(n, m, rings))


def test_tubulene_faces_share_at_most_one_edge():
    """Test that accepted tubes fuse each pair of hexagons along at most one edge."""
    for n, m, rings in [(2, 2, 1), (3, 0, 2), (4, -3, 2), (5, 0, 1), (3, 3, 2)]:
        g = build_tubulene(TubuleneSpec(n, m, rings))
        for i, first in enumerate(g.faces):
            for second in g.faces[i + 1:]:
                assert len(first.edges & second.edges) <= 1


@pytest.mark.parametrize("n,m,rings", [(2, 2, 1), (3, 0, 2), (4, -3, 2), (5, 0, 1), (3, 3, 2)])
def test_tubulene_is_annulus(n, m, rings):
    """Test that tubes have hexagonal faces, degrees 2 or 3, and two open ends."""
    g = build_tubulene(TubuleneSpec(n, m, rings))
    assert g.family == Family.TUBULENE
    assert g.hexagon_count == len(g.faces) > 0
    assert {g.degree(v) for v in range(g.vertex_count)} <= {2, 3}
    assert g.vertex_count - g.edge_count + len(g.faces) == 0
    ends = boundary_cycles(g)
    assert len(ends) == 2
    assert not set(ends[0]) & set(ends[1])
    assert _handshake(g)


def test_tube_2_2_is_a_ring_of_four_hexagons():
    """Test the smallest armchair ring."""
    g = build_tubulene(TubuleneSpec(2, 2, 1))
    assert (g.hexagon_count, g.vertex_count, g.edge_count) == (4, 16, 20)
    assert len(fused_hexagon_pairs(g)) == 4


def test_more_rings_add_hexagons():
    """Test that the ring count controls the tube length."""
    one = build_tubulene(TubuleneSpec(3, 0, 1))
    two = build_tubulene(TubuleneSpec(3, 0, 2))
    assert two.hexagon_count == 2 * one.hexagon_count == 6


def test_dodecahedron(dodecahedron):
    """Test C20."""
    g = dodecahedron
    assert (g.vertex_count, g.edge_count, g.pentagon_count, g.hexagon_count) == (20, 30, 12, 0)
    assert g.family == Family.FULLERENE


def test_c24_has_two_hexagons():
    """Test the 24-vertex barrel fullerene."""
    g = load_fullerene(rotation_from_graph(nx.Graph(barrel_edges(6))))
    assert (g.vertex_count, g.pentagon_count, g.hexagon_count) == (24, 12, 2)


def test_c60():
    """Test the truncated icosahedron."""
    g = load_fullerene(rotation_from_graph(truncated_icosahedron()))
    assert (g.vertex_count, g.edge_count, g.pentagon_count, g.hexagon_count) == (60, 90, 12, 20)
    assert g.vertex_count - g.edge_count + len(g.faces) == 2


def test_k4_has_bad_faces():
    """Test that triangular faces are rejected."""
    with pytest.raises(BadFaceSizeError):
        load_fullerene(rotation_from_graph(nx.complete_graph(4)))


def test_fullerene_not_cubic():
    """Test that a vertex without three neighbours is rejected."""
    rotation = [list(nbrs) for nbrs in rotation_from_graph(nx.Graph(barrel_edges(5)))]
    rotation[0] = rotation[0][:2]
    with pytest.raises(NotCubicError):
        load_fullerene(rotation)


def test_fullerene_with_flipped_vertex_is_not_planar():
    """Test that reversing one vertex's rotation breaks the embedding."""
    rotation = [list(nbrs) for nbrs in rotation_from_graph(nx.Graph(barrel_edges(5)))]
    rotation[0] = [rotation[0][1], rotation[0][0], rotation[0][2]]
    with pytest.raises(NotPlanarEmbeddingError):
        load_fullerene(rotation)


def test_validate_rejects_asymmetric_adjacency(benzene):
    """Test the structural validator directly."""
    broken = MolecularGraph(
        family=benzene.family,
        adjacency=((1,),) + benzene.adjacency[1:],
        faces=benzene.faces,
    )
    with pytest.raises(ValueError):
        validate_molecular_graph(broken)
