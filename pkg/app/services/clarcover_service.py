"""Generalized Clar covers and the generalized Zhang-Zhang polynomial."""
import itertools
import logging
from collections.abc import Iterator

from app.models.chemgraph import FusedPair, MolecularGraph
from app.models.clarcover import GeneralizedClarCover
from app.models.polynomial import BivariatePolynomial
from app.services.chemgraph_service import fused_hexagon_pairs, pair_vertices
from app.services.matching_service import iter_matchings_on

logger = logging.getLogger(__name__)


def _uncovered(g: MolecularGraph, hexes, pairs, fused: list[FusedPair]) -> set[int] | None:
    """Vertices left after removing the chosen cycles, or None if two cycles overlap."""
    covered: set[int] = set()
    blocks = [g.faces[i].vertex_set for i in hexes] + [pair_vertices(g, fused[p]) for p in pairs]
    for block in blocks:
        if covered & block:
            return None
        covered |= block
    return set(range(g.vertex_count)) - covered


def enumerate_generalized_clar_covers(g: MolecularGraph, k: int, l: int) -> list[GeneralizedClarCover]:
    """All covers with exactly k hexagons and l fused-pair 10-cycles, in canonical order."""
    if k < 0 or l < 0:
        raise ValueError(f"negative cycle counts ({k}, {l})")
    fused = fused_hexagon_pairs(g)
    covers = []
    for hexes in itertools.combinations(g.hexagon_indices, k):
        for pairs in itertools.combinations(range(len(fused)), l):
            rest = _uncovered(g, hexes, pairs, fused)
            if rest is None:
                continue
            for partners in iter_matchings_on(g.adjacency, rest):
                free_edges = tuple(sorted((u, partners[u]) for u in rest if u < partners[u]))
                covers.append(GeneralizedClarCover(hexes=hexes, pairs=pairs, free_edges=free_edges))
    logger.debug(f"gz({k},{l}) = {len(covers)}")
    return covers


def _cycle_systems(
    g: MolecularGraph,
    fused: list[FusedPair],
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], set[int]]]:
    """Every pairwise vertex-disjoint choice of hexagons and fused pairs, with the covered set."""
    blocks = [("hex", i, g.faces[i].vertex_set) for i in g.hexagon_indices]
    blocks += [("pair", p, pair_vertices(g, pair)) for p, pair in enumerate(fused)]

    def extend(start: int, hexes: list[int], pairs: list[int], covered: set[int]):
        yield tuple(hexes), tuple(pairs), covered
        for position in range(start, len(blocks)):
            kind, index, vertices = blocks[position]
            if covered & vertices:
                continue
            chosen = hexes if kind == "hex" else pairs
            chosen.append(index)
            yield from extend(position + 1, hexes, pairs, covered | vertices)
            chosen.pop()

    yield from extend(0, [], [], set())


def gzz_polynomial(g: MolecularGraph) -> BivariatePolynomial:
    """Sum over disjoint cycle systems of x^#C6 y^#C10 times the matchings of the rest."""
    fused = fused_hexagon_pairs(g)
    everything = set(range(g.vertex_count))
    terms: dict[tuple[int, int], int] = {}
    for hexes, pairs, covered in _cycle_systems(g, fused):
        count = sum(1 for _ in iter_matchings_on(g.adjacency, everything - covered))
        if count:
            key = (len(hexes), len(pairs))
            terms[key] = terms.get(key, 0) + count
    polynomial = BivariatePolynomial(terms)
    logger.debug(f"GZZ = {polynomial}")
    return polynomial


def zz_polynomial(g: MolecularGraph) -> BivariatePolynomial:
    """Classic Zhang-Zhang polynomial: the y = 0 slice of GZZ."""
    return gzz_polynomial(g).y0_slice()


def total_covers(g: MolecularGraph) -> int:
    return gzz_polynomial(g).evaluate(1, 1)


def validate_cover(g: MolecularGraph, cover: GeneralizedClarCover) -> None:
    """Raise ValueError unless the cover's components partition V(G) and are proper subgraphs."""
    fused = fused_hexagon_pairs(g)
    seen: set[int] = set()
    blocks = [g.faces[i].vertex_set for i in cover.hexes]
    blocks += [pair_vertices(g, fused[p]) for p in cover.pairs]
    blocks += [frozenset(e) for e in cover.free_edges]
    for i in cover.hexes:
        if not g.faces[i].is_hexagon:
            raise ValueError(f"face {i} is not a hexagon")
    for u, v in cover.free_edges:
        if not g.has_edge(u, v):
            raise ValueError(f"free edge {(u, v)} is not an edge")
    for block in blocks:
        if seen & block:
            raise ValueError(f"components overlap on {sorted(seen & block)}")
        seen |= block
    if len(seen) != g.vertex_count:
        raise ValueError(f"cover misses vertices {sorted(set(range(g.vertex_count)) - seen)}")
