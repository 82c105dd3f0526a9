"""Perfect matching enumeration, sextet detection and hexagon flips."""
import logging
from collections.abc import Iterator, Sequence
from typing import Optional

from app.core.errors import NotAHexagonError, NotASextetError
from app.models.chemgraph import Face, MolecularGraph
from app.models.matching import PerfectMatching

logger = logging.getLogger(__name__)


def _search(
    adjacency: Sequence[Sequence[int]],
    partners: list[int],
    free: list[bool],
) -> Iterator[None]:
    """Branch on the lowest free vertex, trying its free neighbours in ascending order.

    Yields once per completed matching with ``partners`` filled in; the order
    is lexicographic on the partner array.
    """
    u = next((v for v, is_free in enumerate(free) if is_free), None)
    if u is None:
        yield None
        return
    free[u] = False
    for w in adjacency[u]:
        if not free[w]:
            continue
        free[w] = False
        partners[u], partners[w] = w, u
        if not _strands_neighbour(adjacency, free, u, w):
            yield from _search(adjacency, partners, free)
        free[w] = True
        partners[u] = partners[w] = -1
    free[u] = True


def _strands_neighbour(adjacency: Sequence[Sequence[int]], free: list[bool], u: int, w: int) -> bool:
    """True if covering u and w leaves a free neighbour of theirs with no free neighbour."""
    for x in (u, w):
        for y in adjacency[x]:
            if free[y] and not any(free[z] for z in adjacency[y]):
                return True
    return False


def iter_matchings_on(
    adjacency: Sequence[Sequence[int]],
    allowed: Optional[set[int]] = None,
) -> Iterator[tuple[int, ...]]:
    """Partner arrays of the perfect matchings of the subgraph induced on ``allowed``.

    Vertices outside ``allowed`` keep partner -1.
    """
    vertex_count = len(adjacency)
    free = [allowed is None or v in allowed for v in range(vertex_count)]
    if sum(free) % 2:
        return
    partners = [-1] * vertex_count
    for _ in _search(adjacency, partners, free):
        yield tuple(partners)


def enumerate_perfect_matchings(g: MolecularGraph) -> list[PerfectMatching]:
    """All perfect matchings of g in canonical order; ``index`` is the position."""
    matchings = [
        PerfectMatching(partners=p, index=i)
        for i, p in enumerate(iter_matchings_on(g.adjacency))
    ]
    logger.debug(f"Enumerated {len(matchings)} perfect matchings on {g.vertex_count} vertices")
    return matchings


def count_perfect_matchings(g: MolecularGraph, allowed: Optional[set[int]] = None) -> int:
    return sum(1 for _ in iter_matchings_on(g.adjacency, allowed))


def _require_hexagon(h: Face) -> None:
    if not h.is_hexagon:
        raise NotAHexagonError(f"face {h.boundary} is a {h.kind.value}")


def sextet_edges(m: PerfectMatching, h: Face) -> int:
    return sum(1 for u, v in h.edges if m.partners[u] == v)


def is_sextet(g: MolecularGraph, m: PerfectMatching, h: Face) -> bool:
    """True iff the hexagon h carries three edges of m."""
    _require_hexagon(h)
    return sextet_edges(m, h) == 3


def flip(g: MolecularGraph, m: PerfectMatching, h: Face) -> PerfectMatching:
    """Replace the three matched edges of a sextet by the other three edges of h."""
    if not is_sextet(g, m, h):
        raise NotASextetError(f"face {h.boundary} is not alternating in the matching")
    partners = list(m.partners)
    b = h.boundary
    # matched pairs are (b0,b1),(b2,b3),(b4,b5) or (b1,b2),(b3,b4),(b5,b0); take the other ones
    shift = 1 if m.partners[b[0]] == b[1] else 0
    for i in range(3):
        u, v = b[(2 * i + shift) % 6], b[(2 * i + shift + 1) % 6]
        partners[u], partners[v] = v, u
    return PerfectMatching(partners=tuple(partners))
