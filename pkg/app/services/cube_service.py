"""Induced (convex) Q_{k,l} subgraphs and the generalized cube polynomial.

The search is anchored backtracking over the product structure: an anchor
vertex plays the all-zero corner, the unit strings pick distinct neighbours
as axes, and every other string is forced as a common neighbour closing a
4-cycle (or the next vertex along a P3 axis). No general subgraph
isomorphism is needed.
"""
import itertools
import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor

from app.models.cube import QklEmbedding, QklShape
from app.models.graph import IndexedGraph
from app.models.polynomial import BivariatePolynomial
from app.schemas.resonance import EmbeddingSchema

logger = logging.getLogger(__name__)

String = tuple[int, ...]


class _Plan:
    """Placement order and per-string rules for one shape."""

    def __init__(self, shape: QklShape):
        self.shape = shape
        sizes = shape.sizes
        # unit strings first in axis order, then by coordinate sum
        self.strings: list[String] = sorted(
            itertools.product(*(range(s) for s in sizes)),
            key=lambda b: (sum(b), tuple(-x for x in b)),
        )
        self.corners = {
            b for b in self.strings if all(x in (0, s - 1) for x, s in zip(b, sizes))
        }
        self.lower: dict[String, list[String]] = {}
        self.rule: dict[String, tuple] = {}
        for b in self.strings[1:]:
            support = [i for i, x in enumerate(b) if x]
            self.lower[b] = [_minus(b, t) for t in support]
            if len(support) == 1:
                i = support[0]
                if b[i] == 1:
                    previous = _unit(len(b), i - 1) if self._same_group(i - 1, i) else None
                    self.rule[b] = ("axis", previous)
                else:
                    self.rule[b] = ("extend", _unit(len(b), i))
            else:
                i, j = support[0], support[1]
                self.rule[b] = ("square", _minus(b, i), _minus(b, j), _minus(_minus(b, i), j))

    def _same_group(self, a: int, b: int) -> bool:
        k = self.shape.k
        return a >= 0 and (a < k) == (b < k)


def _unit(length: int, i: int) -> String:
    return tuple(1 if t == i else 0 for t in range(length))


def _minus(b: String, i: int) -> String:
    return b[:i] + (b[i] - 1,) + b[i + 1:]


def _search_anchor(h: IndexedGraph, plan: _Plan, anchor: int, convex: bool) -> list[QklEmbedding]:
    strings = plan.strings
    placed: dict[String, int] = {strings[0]: anchor}
    used = {anchor}
    found: list[QklEmbedding] = []

    def candidates(b: String) -> Iterator[int]:
        rule = plan.rule[b]
        if rule[0] == "axis":
            floor = placed[rule[1]] if rule[1] is not None else -1
            yield from (x for x in h.adjacency[anchor] if x > floor)
        elif rule[0] == "extend":
            yield from h.adjacency[placed[rule[1]]]
        else:
            _, left, right, base = rule
            closing = h.common_neighbours(placed[left], placed[right]) - {placed[base]}
            if convex and len(closing) != 1:
                # a second common neighbour would sit on a geodesic outside the set
                return
            yield from sorted(closing)

    def fits(b: String, x: int) -> bool:
        if x in used:
            return False
        if b in plan.corners and x < anchor:
            return False
        lower = plan.lower[b]
        if any(not h.has_edge(x, placed[a]) for a in lower):
            return False
        # no chords to anything placed so far
        return len(h.neighbour_sets[x] & used) == len(lower)

    def extend(position: int) -> None:
        if position == len(strings):
            if not convex or h.is_convex(used):
                found.append(QklEmbedding(shape=plan.shape, vertex_map=dict(placed)))
            return
        b = strings[position]
        for x in candidates(b):
            if fits(b, x):
                placed[b] = x
                used.add(x)
                extend(position + 1)
                used.discard(x)
                del placed[b]

    extend(1)
    return found


def find_qkl_embeddings(
    h: IndexedGraph,
    k: int,
    l: int,
    convex: bool = True,
    workers: int = 1,
) -> list[QklEmbedding]:
    """One embedding per distinct vertex set inducing Q_{k,l} (convex if requested).

    Sets are ordered by their sorted vertex tuples; the result does not depend
    on ``workers``.
    """
    shape = QklShape(k, l)
    if shape.order > h.vertex_count or (shape.dimension > h.max_degree and shape.dimension > 0):
        return []
    plan = _Plan(shape)
    anchors = range(h.vertex_count)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda a: _search_anchor(h, plan, a, convex), anchors))
    else:
        batches = [_search_anchor(h, plan, a, convex) for a in anchors]

    unique: dict[frozenset[int], QklEmbedding] = {}
    for batch in batches:
        for embedding in batch:
            unique.setdefault(embedding.vertices, embedding)
    return [unique[key] for key in sorted(unique, key=sorted)]


def find_convex_qkl(h: IndexedGraph, k: int, l: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Vertex sets (sorted tuples) of the induced convex subgraphs isomorphic to Q_{k,l}."""
    return [tuple(e.sorted_vertices()) for e in find_qkl_embeddings(h, k, l, True, workers)]


def count_induced_hypercubes(h: IndexedGraph, k: int, workers: int = 1) -> int:
    """Number of induced Q_k subgraphs, convex or not."""
    return len(find_qkl_embeddings(h, k, 0, convex=False, workers=workers))


def _shape_bounds(h: IndexedGraph, k: int, l: int) -> bool:
    return 2**k * 3**l <= h.vertex_count and (k + l == 0 or k + l <= h.max_degree)


def gc_polynomial(h: IndexedGraph, workers: int = 1) -> BivariatePolynomial:
    """Generalized cube polynomial: coefficient (k, l) counts convex Q_{k,l}.

    A convex Q_{k+1,l} or Q_{k,l+1} contains a convex Q_{k,l}, so each row and
    the column of y-powers stop at their first zero.
    """
    terms: dict[tuple[int, int], int] = {}
    l = 0
    while _shape_bounds(h, 0, l):
        k = 0
        while _shape_bounds(h, k, l):
            count = len(find_qkl_embeddings(h, k, l, True, workers))
            if not count:
                break
            terms[(k, l)] = count
            k += 1
        if (0, l) not in terms:
            break
        l += 1
    polynomial = BivariatePolynomial(terms)
    logger.debug(f"GC = {polynomial}")
    return polynomial


def cube_polynomial(h: IndexedGraph, workers: int = 1) -> BivariatePolynomial:
    """Classic cube polynomial (induced hypercubes, no convexity), as x-only terms."""
    terms: dict[tuple[int, int], int] = {}
    k = 0
    while _shape_bounds(h, k, 0):
        count = count_induced_hypercubes(h, k, workers)
        if not count:
            break
        terms[(k, 0)] = count
        k += 1
    return BivariatePolynomial(terms)


def is_qkl_embedding(h: IndexedGraph, embedding: QklEmbedding, convex: bool = True) -> bool:
    """Check that the map is injective, preserves adjacency both ways, and (optionally) is convex."""
    shape = embedding.shape
    vertex_map = embedding.vertex_map
    if set(vertex_map) != set(shape.strings()) or len(embedding.vertices) != shape.order:
        return False
    for a, b in itertools.combinations(vertex_map, 2):
        if QklShape.adjacent(a, b) != h.has_edge(vertex_map[a], vertex_map[b]):
            return False
    return not convex or h.is_convex(embedding.vertices)


def embedding_to_schema(embedding: QklEmbedding) -> EmbeddingSchema:
    shape = embedding.shape
    return EmbeddingSchema(
        k=shape.k,
        l=shape.l,
        vertices=embedding.sorted_vertices(),
        labels={"".join(map(str, s)): embedding.vertex_map[s] for s in shape.strings()},
    )
