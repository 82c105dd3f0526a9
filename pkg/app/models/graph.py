from __future__ import annotations

import math
import threading
from collections.abc import Iterable
from typing import Optional

import networkx as nx

from app.core.errors import UnknownVertexError
from app.models.chemgraph import Edge, edge_key


class IndexedGraph:
    """Immutable simple graph on vertices 0..n-1 with memoized BFS distances.

    Distance rows are computed on demand, one breadth-first search per source,
    and shared between threads under a lock.
    """

    def __init__(self, vertex_count: int, edges: Iterable[Edge]):
        neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(n)) for n in neighbours)
        self.neighbour_sets: tuple[frozenset[int], ...] = tuple(frozenset(n) for n in neighbours)
        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(vertex_count))
        self._graph.add_edges_from(self.edges)
        self._rows: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "IndexedGraph":
        return cls(vertex_count, edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "IndexedGraph":
        """Relabel nodes 0..n-1 in sorted node order."""
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls(relabelled.number_of_nodes(), relabelled.edges())

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @property
    def edge_count(self) -> int:
        return self._graph.number_of_edges()

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbour_sets[u]

    def to_networkx(self) -> nx.Graph:
        return self._graph.copy()

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise UnknownVertexError(f"vertex {v} not in 0..{self.vertex_count - 1}")

    def distance_row(self, source: int) -> dict[int, int]:
        self._check(source)
        row = self._rows.get(source)
        if row is None:
            row = nx.single_source_shortest_path_length(self._graph, source)
            with self._lock:
                row = self._rows.setdefault(source, row)
        return row

    def distance(self, u: int, v: int) -> float:
        """Unweighted shortest-path length, ``math.inf`` across components."""
        self._check(v)
        return self.distance_row(u).get(v, math.inf)

    def is_convex(self, subset: Iterable[int]) -> bool:
        """True iff every geodesic between two members stays inside ``subset``.

        A neighbour w of u lies on a u-v geodesic iff d(w, v) = d(u, v) - 1;
        checking that every such first step stays inside the set covers all
        geodesics by induction on their length.
        """
        members = set(subset)
        if not members:
            raise ValueError("convexity of an empty set")
        for v in members:
            self._check(v)
        for v in members:
            row = self.distance_row(v)
            for u in members:
                if u == v or u not in row:
                    continue
                target = row[u] - 1
                for w in self.adjacency[u]:
                    if row.get(w) == target and w not in members:
                        return False
        return True

    def common_neighbours(self, u: int, v: int) -> frozenset[int]:
        return self.neighbour_sets[u] & self.neighbour_sets[v]


class ResonanceGraph(IndexedGraph):
    """Graph on perfect matchings; edges are hexagon flips labelled by face index."""

    def __init__(self, vertex_count: int, edge_labels: dict[Edge, int]):
        super().__init__(vertex_count, edge_labels.keys())
        self.edge_labels: dict[Edge, int] = dict(sorted(edge_labels.items()))

    def label(self, u: int, v: int) -> Optional[int]:
        return self.edge_labels.get(edge_key(u, v))
