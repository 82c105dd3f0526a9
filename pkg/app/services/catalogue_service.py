"""Catalogue of benzenoid systems up to lattice symmetry, and polynomial search over it."""
import logging
from collections.abc import Iterable

from app.core.errors import HoleDetectedError
from app.models.chemgraph import HexCoord
from app.models.polynomial import BivariatePolynomial
from app.services.chemgraph_service import NEIGHBOUR_DIRECTIONS, build_benzenoid
from app.services.clarcover_service import gzz_polynomial
from app.services.matching_service import count_perfect_matchings

logger = logging.getLogger(__name__)

Cells = tuple[tuple[int, int], ...]


def _rotate(cell: tuple[int, int]) -> tuple[int, int]:
    q, r = cell
    return (-r, q + r)


def _reflect(cell: tuple[int, int]) -> tuple[int, int]:
    q, r = cell
    return (r, q)


def _translate_to_origin(cells: Iterable[tuple[int, int]]) -> Cells:
    ordered = sorted(cells)
    q0, r0 = ordered[0]
    return tuple((q - q0, r - r0) for q, r in ordered)


def canonical_form(cells: Iterable[tuple[int, int]]) -> Cells:
    """Smallest translated image of the cell set under the twelve lattice symmetries."""
    images = []
    current = list(cells)
    for _ in range(6):
        current = [_rotate(c) for c in current]
        images.append(_translate_to_origin(current))
        images.append(_translate_to_origin(_reflect(c) for c in current))
    return min(images)


def _has_hole(cells: Cells) -> bool:
    try:
        build_benzenoid(HexCoord(q, r) for q, r in cells)
    except HoleDetectedError:
        return True
    return False


def enumerate_benzenoids(max_hexagons: int) -> list[list[HexCoord]]:
    """All hole-free polyhexes with 1..max_hexagons hexagons, one per symmetry class.

    Ordered by hexagon count, then by canonical cell tuple.
    """
    if max_hexagons < 1:
        return []
    level: set[Cells] = {((0, 0),)}
    catalogue: list[Cells] = []
    for size in range(1, max_hexagons + 1):
        if size > 1:
            grown: set[Cells] = set()
            for cells in level:
                occupied = set(cells)
                for q, r in cells:
                    for dq, dr in NEIGHBOUR_DIRECTIONS:
                        cell = (q + dq, r + dr)
                        if cell not in occupied:
                            grown.add(canonical_form(occupied | {cell}))
            level = grown
        # polyhexes with holes still seed larger ones
        kept = sorted(cells for cells in level if not _has_hole(cells))
        logger.debug(f"{len(kept)} benzenoids with {size} hexagons")
        catalogue.extend(kept)
    return [[HexCoord(q, r) for q, r in cells] for cells in catalogue]


def search_benzenoids(target: BivariatePolynomial, max_hexagons: int) -> list[list[HexCoord]]:
    """Catalogue members whose GZZ polynomial equals ``target``.

    A cover with k hexagons and l fused pairs needs k + 2l distinct hexagons,
    and the constant term is the Kekule count, which is checked before the
    full polynomial.
    """
    top_k = max((k + 2 * l for k, l in target.terms), default=0)
    matches = []
    for hexagons in enumerate_benzenoids(max_hexagons):
        if len(hexagons) < top_k:
            continue
        g = build_benzenoid(hexagons)
        if count_perfect_matchings(g) != target.coefficient(0, 0):
            continue
        if gzz_polynomial(g) == target:
            logger.info(f"Found benzenoid {[(h.q, h.r) for h in hexagons]} for {target}")
            matches.append(hexagons)
    return matches
