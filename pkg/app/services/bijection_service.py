"""The map from generalized Clar covers to convex Q_{k,l} subgraphs of the resonance graph.

Each cover component contributes a coordinate: a hexagon has two local
matchings (labels 0, 1), a fused pair has three (labels 0, 1, 2, with 1 the
one that contains the shared edge). The image of a cover is the product of
these choices joined with the cover's free edges.
"""
import logging
from collections import Counter
from collections.abc import Mapping, Sequence
from typing import Any, Optional

from app.core.errors import InvalidCoverError
from app.models.chemgraph import Edge, Face, FusedPair, MolecularGraph, edge_key
from app.models.clarcover import GeneralizedClarCover, PossibilityLabel
from app.models.cube import QklEmbedding, QklShape
from app.models.graph import ResonanceGraph
from app.models.matching import PerfectMatching
from app.models.polynomial import BivariatePolynomial
from app.schemas.report import BijectionReport, FourCycleReport, ShapeCheck
from app.schemas.resonance import CoverSchema
from app.services.chemgraph_service import face_path, fused_hexagon_pairs
from app.services.clarcover_service import enumerate_generalized_clar_covers, gzz_polynomial, validate_cover
from app.services.cube_service import find_qkl_embeddings, gc_polynomial, is_qkl_embedding
from app.services.matching_service import enumerate_perfect_matchings
from app.services.resonance_service import four_cycles, label_of

logger = logging.getLogger(__name__)

Partners = tuple[int, ...]


def _path_edges(path: Sequence[int], start: int) -> set[Edge]:
    return {edge_key(path[i], path[i + 1]) for i in range(start, len(path) - 1, 2)}


def possibility_matchings(g: MolecularGraph, component: Face | FusedPair) -> list[frozenset[Edge]]:
    """Local matchings of a cover component, indexed by possibility label.

    Hexagon: label 0 contains the first boundary edge. Fused pair: label 1
    contains the shared edge, label 0 differs from it by a flip of the first
    hexagon and label 2 by a flip of the second.
    """
    if isinstance(component, Face):
        if not component.is_hexagon:
            raise InvalidCoverError(f"face {component.boundary} is not a hexagon")
        edges = component.boundary_edges()
        return [frozenset(edges[0::2]), frozenset(edges[1::2])]

    u, v = component.shared_edge
    first = face_path(g.faces[component.first], u, v)
    second = face_path(g.faces[component.second], u, v)
    # the u..v walks have six vertices; the inner four carry a forced pair of edges
    first_outer, first_inner = _path_edges(first, 0), _path_edges(first, 1)
    second_outer, second_inner = _path_edges(second, 0), _path_edges(second, 1)
    return [
        frozenset(first_outer | second_inner),
        frozenset({component.shared_edge} | first_inner | second_inner),
        frozenset(first_inner | second_outer),
    ]


def _components(g: MolecularGraph, cover: GeneralizedClarCover, fused: list[FusedPair]) -> list[list[frozenset[Edge]]]:
    options = [possibility_matchings(g, g.faces[i]) for i in cover.hexes]
    options += [possibility_matchings(g, fused[p]) for p in cover.pairs]
    return options


def image_matching(
    g: MolecularGraph,
    cover: GeneralizedClarCover,
    label: PossibilityLabel,
    fused: Optional[list[FusedPair]] = None,
) -> PerfectMatching:
    """The perfect matching a cover assigns to one possibility label."""
    fused = fused_hexagon_pairs(g) if fused is None else fused
    options = _components(g, cover, fused)
    if label.k != cover.k or len(label.values) != len(options):
        raise InvalidCoverError(f"label {label.values} does not fit a cover with k={cover.k}, l={cover.l}")
    edges = set(cover.free_edges)
    for choice, value in zip(options, label.values):
        edges |= choice[value]
    return PerfectMatching.from_edges(g.vertex_count, edges)


def clar_cover_to_subgraph(
    g: MolecularGraph,
    r: ResonanceGraph,
    c: GeneralizedClarCover,
    position: Optional[Mapping[Partners, int]] = None,
    fused: Optional[list[FusedPair]] = None,
) -> QklEmbedding:
    """Image of a cover in r, labelled by possibility strings.

    ``position`` maps partner arrays to resonance-graph vertex ids; it defaults
    to the canonical matching order r is built from.
    """
    try:
        validate_cover(g, c)
    except ValueError as e:
        raise InvalidCoverError(str(e)) from e
    if position is None:
        position = {m.partners: i for i, m in enumerate(enumerate_perfect_matchings(g))}
    fused = fused_hexagon_pairs(g) if fused is None else fused
    options = _components(g, c, fused)
    shape = QklShape(c.k, c.l)
    vertex_map: dict[tuple[int, ...], int] = {}
    for string in shape.strings():
        edges = set(c.free_edges)
        for choice, value in zip(options, string):
            edges |= choice[value]
        partners = PerfectMatching.from_edges(g.vertex_count, edges).partners
        index = position.get(partners)
        if index is None or index >= r.vertex_count:
            raise InvalidCoverError(f"label {string} of cover {c} is not a perfect matching of the graph")
        vertex_map[string] = index
    return QklEmbedding(shape=shape, vertex_map=vertex_map)


def _cover_json(c: GeneralizedClarCover) -> dict[str, Any]:
    return CoverSchema(hexes=list(c.hexes), pairs=list(c.pairs), free_edges=[list(e) for e in c.free_edges]).model_dump()


def _check_shape(
    g: MolecularGraph,
    r: ResonanceGraph,
    k: int,
    l: int,
    position: Mapping[Partners, int],
    fused: list[FusedPair],
    workers: int,
) -> tuple[ShapeCheck, Optional[dict[str, Any]]]:
    covers = enumerate_generalized_clar_covers(g, k, l)
    counterexample: Optional[dict[str, Any]] = None
    images: list[frozenset[int]] = []
    owner: dict[frozenset[int], GeneralizedClarCover] = {}
    injective = embeddings_valid = True

    for cover in covers:
        try:
            embedding = clar_cover_to_subgraph(g, r, cover, position, fused)
        except InvalidCoverError as e:
            embeddings_valid = False
            counterexample = counterexample or {"k": k, "l": l, "reason": str(e), "cover": _cover_json(cover)}
            continue
        if not is_qkl_embedding(r, embedding, convex=True):
            embeddings_valid = False
            counterexample = counterexample or {
                "k": k, "l": l, "reason": "image is not a convex Q_{k,l}",
                "cover": _cover_json(cover), "subgraph": embedding.sorted_vertices(),
            }
        if embedding.vertices in owner:
            injective = False
            counterexample = counterexample or {
                "k": k, "l": l, "reason": "two covers share an image",
                "cover": _cover_json(cover), "other_cover": _cover_json(owner[embedding.vertices]),
                "subgraph": embedding.sorted_vertices(),
            }
        owner.setdefault(embedding.vertices, cover)
        images.append(embedding.vertices)

    found = [e.vertices for e in find_qkl_embeddings(r, k, l, convex=True, workers=workers)]
    images_match = Counter(images) == Counter(found)
    if not images_match and counterexample is None:
        missing = sorted(sorted(s) for s in set(found) - set(images))
        extra = sorted(sorted(s) for s in set(images) - set(found))
        counterexample = {"k": k, "l": l, "reason": "image sets differ from the convex subgraphs"}
        if missing:
            counterexample["subgraph"] = missing[0]
        if extra:
            counterexample["cover"] = _cover_json(owner[frozenset(extra[0])])

    check = ShapeCheck(
        k=k, l=l, gz=len(covers), alpha=len(found),
        injective=injective, images_match=images_match, embeddings_valid=embeddings_valid,
    )
    return check, counterexample


def verify_bijection(
    g: MolecularGraph,
    r: ResonanceGraph,
    ms: Optional[Sequence[PerfectMatching]] = None,
    gzz: Optional[BivariatePolynomial] = None,
    gc: Optional[BivariatePolynomial] = None,
    workers: int = 1,
) -> BijectionReport:
    """Check every shape class with a nonzero count on either side.

    ``ms`` is the matching list r was built from (re-enumerated when omitted);
    precomputed polynomials are reused when given.
    """
    ms = enumerate_perfect_matchings(g) if ms is None else ms
    gzz = gzz_polynomial(g) if gzz is None else gzz
    gc = gc_polynomial(r, workers) if gc is None else gc
    position = {m.partners: i for i, m in enumerate(ms)}
    fused = fused_hexagon_pairs(g)

    shapes: list[ShapeCheck] = []
    counterexample: Optional[dict[str, Any]] = None
    for k, l in (gzz + gc).terms:
        check, failure = _check_shape(g, r, k, l, position, fused, workers)
        shapes.append(check)
        if not check.passed:
            logger.warning(f"Bijection check failed for ({k}, {l}): gz={check.gz}, alpha={check.alpha}")
            counterexample = counterexample or failure or {"k": k, "l": l, "reason": "counts differ"}
    passed = all(s.passed for s in shapes)
    logger.info(f"Bijection verified over {len(shapes)} shape classes: {'pass' if passed else 'FAIL'}")
    return BijectionReport(shapes=shapes, passed=passed, counterexample=counterexample)


def verify_four_cycle_lemma(g: MolecularGraph, r: ResonanceGraph) -> FourCycleReport:
    """Every 4-cycle of r has equal labels on opposite edges and two vertex-disjoint hexagons as labels."""
    cycles = four_cycles(r)
    for a, b, d, c in cycles:
        labels = [label_of(r, a, b), label_of(r, b, d), label_of(r, d, c), label_of(r, c, a)]
        first, second = labels[0], labels[3]
        reason = None
        if labels[0] != labels[2] or labels[1] != labels[3]:
            reason = "opposite edges carry different hexagons"
        elif first == second:
            reason = "adjacent edges carry the same hexagon"
        elif g.faces[first].vertex_set & g.faces[second].vertex_set:
            reason = "the two hexagons share a vertex"
        if reason:
            logger.warning(f"4-cycle {(a, b, d, c)} fails: {reason}")
            return FourCycleReport(
                cycles=len(cycles), passed=False,
                counterexample={"cycle": [a, b, d, c], "labels": labels, "reason": reason},
            )
    return FourCycleReport(cycles=len(cycles), passed=True)


def iter_possibility_labels(cover: GeneralizedClarCover) -> list[PossibilityLabel]:
    """All labels of a cover's image, in coordinate-string order."""
    shape = QklShape(cover.k, cover.l)
    return [PossibilityLabel(values=s, k=cover.k) for s in shape.strings()]
