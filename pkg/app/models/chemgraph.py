from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import networkx as nx

from app.core.errors import InvalidChiralVectorError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Family(str, enum.Enum):
    """Molecular graph families."""
    BENZENOID = "benzenoid"
    TUBULENE = "tubulene"
    FULLERENE = "fullerene"


class FaceKind(str, enum.Enum):
    """Face sizes allowed in the three families."""
    PENTAGON = "pentagon"
    HEXAGON = "hexagon"


@dataclass(frozen=True, order=True)
class HexCoord:
    """Axial coordinate of a hexagon centre on the infinite hexagonal lattice."""
    q: int
    r: int


def check_chiral_vector(n: int, m: int) -> None:
    if abs(n) + abs(m) <= 1 or n * m == -1:
        raise InvalidChiralVectorError(f"({n},{m}) violates |n|+|m| > 1 and nm != -1")


@dataclass(frozen=True)
class TubuleneSpec:
    """Chiral vector (n, m) and number of hexagon rings between the open ends."""
    n: int
    m: int
    rings: int = 1


@dataclass(frozen=True)
class Face:
    """A pentagonal or hexagonal face given by its cyclically ordered boundary."""
    kind: FaceKind
    boundary: tuple[int, ...]

    @classmethod
    def from_cycle(cls, cycle: list[int] | tuple[int, ...]) -> "Face":
        """Normalize a boundary to start at its smallest vertex, heading to the smaller neighbour."""
        size = len(cycle)
        if size == 5:
            kind = FaceKind.PENTAGON
        elif size == 6:
            kind = FaceKind.HEXAGON
        else:
            raise ValueError(f"face of length {size}")
        start = cycle.index(min(cycle))
        rotated = list(cycle[start:]) + list(cycle[:start])
        if rotated[-1] < rotated[1]:
            rotated = [rotated[0]] + rotated[:0:-1]
        return cls(kind=kind, boundary=tuple(rotated))

    @property
    def is_hexagon(self) -> bool:
        return self.kind == FaceKind.HEXAGON

    @cached_property
    def edges(self) -> frozenset[Edge]:
        b = self.boundary
        return frozenset(edge_key(b[i], b[(i + 1) % len(b)]) for i in range(len(b)))

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def boundary_edges(self) -> list[Edge]:
        """Boundary edges in cyclic order, starting with (boundary[0], boundary[1])."""
        b = self.boundary
        return [edge_key(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class FusedPair:
    """Two hexagonal faces sharing exactly one edge; their perimeter is a 10-cycle."""
    first: int
    second: int
    shared_edge: Edge


@dataclass(frozen=True)
class MolecularGraph:
    """Plane graph with explicit faces; the common substrate of all three families.

    Vertices are 0..n-1, ``adjacency[v]`` is the sorted neighbour tuple of v and
    ``faces`` lists the pentagonal and hexagonal faces only (the open boundary
    of benzenoids and tubulenes is not a face).
    """
    family: Family
    adjacency: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]
    positions: Optional[tuple[tuple[int, int], ...]] = field(default=None, compare=False)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(
            (u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v
        ))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def hexagon_indices(self) -> tuple[int, ...]:
        return tuple(i for i, face in enumerate(self.faces) if face.is_hexagon)

    @property
    def hexagon_count(self) -> int:
        return len(self.hexagon_indices)

    @property
    def pentagon_count(self) -> int:
        return len(self.faces) - self.hexagon_count

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class StructureInput:
    """Parsed input for one of the three families; exactly one payload is set."""
    family: Family
    hexagons: tuple[HexCoord, ...] = ()
    tubulene: Optional[TubuleneSpec] = None
    rotation: tuple[tuple[int, ...], ...] = ()
