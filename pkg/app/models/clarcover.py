from __future__ import annotations

from dataclasses import dataclass

from app.models.chemgraph import Edge


@dataclass(frozen=True, order=True)
class GeneralizedClarCover:
    """Spanning subgraph whose components are hexagonal faces (C6), perimeters of
    fused hexagon pairs (C10) and single edges (K2).

    ``hexes`` holds face indices, ``pairs`` indices into the graph's fused-pair
    list, ``free_edges`` the K2 components; all three are sorted. Field order
    makes the natural ordering the canonical cover order.
    """
    hexes: tuple[int, ...]
    pairs: tuple[int, ...]
    free_edges: tuple[Edge, ...]

    @property
    def k(self) -> int:
        return len(self.hexes)

    @property
    def l(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PossibilityLabel:
    """Per-component choice of local matching: 0/1 on each C6, 0/1/2 on each C10."""
    values: tuple[int, ...]
    k: int

    @property
    def l(self) -> int:
        return len(self.values) - self.k
