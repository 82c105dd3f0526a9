import pytest

from app.core.errors import InvalidCoverError
from app.models.clarcover import GeneralizedClarCover, PossibilityLabel
from app.services.bijection_service import (
    clar_cover_to_subgraph, image_matching, iter_possibility_labels, possibility_matchings, verify_bijection,
    verify_four_cycle_lemma,
)
from app.services.chemgraph_service import fused_hexagon_pairs
from app.services.clarcover_service import enumerate_generalized_clar_covers
from app.services.cube_service import find_convex_qkl, is_qkl_embedding
from tests.conftest import build_preset, resonance_of


def _position(ms):
    return {m.partners: i for i, m in enumerate(ms)}


def test_benzene_hexagon_image(benzene):
    """Test that the single sextet cover maps onto the whole resonance graph."""
    ms, r = resonance_of(benzene)
    (cover,) = enumerate_generalized_clar_covers(benzene, 1, 0)
    embedding = clar_cover_to_subgraph(benzene, r, cover, _position(ms))
    assert embedding.sorted_vertices() == [0, 1]
    assert is_qkl_embedding(r, embedding)


def test_hexagon_possibilities(benzene):
    """Test that the two local matchings of a hexagon split its boundary."""
    zero, one = possibility_matchings(benzene, benzene.faces[0])
    assert len(zero) == len(one) == 3
    assert zero | one == benzene.faces[0].edges
    assert not zero & one


def test_fused_pair_possibilities(naphthalene):
    """Test the three local matchings of a fused pair."""
    (pair,) = fused_hexagon_pairs(naphthalene)
    p0, p1, p2 = possibility_matchings(naphthalene, pair)
    assert pair.shared_edge in p1
    assert pair.shared_edge not in p0 | p2
    assert p0 ^ p1 == naphthalene.faces[pair.first].edges
    assert p1 ^ p2 == naphthalene.faces[pair.second].edges
    for local in (p0, p1, p2):
        assert len(local) == 5
        assert len({v for e in local for v in e}) == 10


def test_naphthalene_fused_pair_image(naphthalene):
    """Test that the C10 cover maps onto the whole P3 resonance graph with label 1 in the middle."""
    ms, r = resonance_of(naphthalene)
    (cover,) = enumerate_generalized_clar_covers(naphthalene, 0, 1)
    embedding = clar_cover_to_subgraph(naphthalene, r, cover, _position(ms))
    assert embedding.sorted_vertices() == [0, 1, 2]
    middle = embedding.vertex_map[(1,)]
    assert len(r.adjacency[middle]) == 2
    assert is_qkl_embedding(r, embedding)


def test_image_matching_labels(naphthalene):
    """Test that each label of a cover yields a distinct perfect matching."""
    (cover,) = enumerate_generalized_clar_covers(naphthalene, 0, 1)
    labels = iter_possibility_labels(cover)
    assert [label.values for label in labels] == [(0,), (1,), (2,)]
    images = {image_matching(naphthalene, cover, label).partners for label in labels}
    assert len(images) == 3


def test_label_must_fit_cover(naphthalene):
    """Test that a label of the wrong shape is rejected."""
    (cover,) = enumerate_generalized_clar_covers(naphthalene, 0, 1)
    with pytest.raises(InvalidCoverError):
        image_matching(naphthalene, cover, PossibilityLabel(values=(0, 1), k=1))


@pytest.mark.parametrize("k,l", [(1, 0), (2, 0), (0, 1), (1, 1)])
def test_anthracene_images_are_the_convex_subgraphs(anthracene, k, l):
    """Test that cover images are exactly the convex Q_{k,l} of R(anthracene)."""
    ms, r = resonance_of(anthracene)
    position = _position(ms)
    images = sorted(
        tuple(clar_cover_to_subgraph(anthracene, r, c, position).sorted_vertices())
        for c in enumerate_generalized_clar_covers(anthracene, k, l)
    )
    assert images == find_convex_qkl(r, k, l)


@pytest.mark.parametrize("name", ["linear:1", "linear:2", "linear:3", "zigzag:3", "pyrene", "linear:4"])
def test_verify_bijection_passes(name):
    """Test the full bijection check on small benzenoids."""
    g = build_preset(name)
    ms, r = resonance_of(g)
    report = verify_bijection(g, r, ms)
    assert report.passed
    assert report.counterexample is None
    assert all(s.gz == s.alpha for s in report.shapes)


def test_bijection_on_fullerene(dodecahedron):
    """Test the bijection on C20, where no cover has a cycle."""
    ms, r = resonance_of(dodecahedron)
    report = verify_bijection(dodecahedron, r, ms)
    assert report.passed
    assert [(s.k, s.l, s.gz) for s in report.shapes] == [(0, 0, 36)]


def test_invalid_cover_is_rejected(naphthalene):
    """Test that an overlapping cover raises InvalidCoverError."""
    ms, r = resonance_of(naphthalene)
    bad = GeneralizedClarCover(hexes=(0, 1), pairs=(), free_edges=())
    with pytest.raises(InvalidCoverError):
        clar_cover_to_subgraph(naphthalene, r, bad, _position(ms))


def test_missing_matching_is_rejected(benzene):
    """Test that an image outside the matching table raises InvalidCoverError."""
    ms, r = resonance_of(benzene)
    (cover,) = enumerate_generalized_clar_covers(benzene, 1, 0)
    with pytest.raises(InvalidCoverError):
        clar_cover_to_subgraph(benzene, r, cover, {ms[0].partners: 0})


def test_four_cycles_of_anthracene_are_vacuous(anthracene):
    """Test that R(anthracene), a path, has no 4-cycles."""
    _, r = resonance_of(anthracene)
    report = verify_four_cycle_lemma(anthracene, r)
    assert report.passed and report.cycles == 0


@pytest.mark.parametrize("name", ["zigzag:3", "pyrene", "coronene"])
def test_four_cycle_labels(name):
    """Test the labelling of 4-cycles by disjoint hexagons."""
    g = build_preset(name)
    _, r = resonance_of(g)
    report = verify_four_cycle_lemma(g, r)
    assert report.passed
    assert report.cycles > 0


def test_defaults_use_canonical_matching_order(anthracene):
    """Test the image and the report without a precomputed matching table."""
    ms, r = resonance_of(anthracene)
    (cover,) = [c for c in enumerate_generalized_clar_covers(anthracene, 0, 1) if c.pairs == (0,)]
    assert clar_cover_to_subgraph(anthracene, r, cover) == clar_cover_to_subgraph(anthracene, r, cover, _position(ms))
    assert verify_bijection(anthracene, r).passed
