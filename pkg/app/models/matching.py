from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from app.models.chemgraph import Edge


@dataclass(frozen=True)
class PerfectMatching:
    """A perfect matching stored as a per-vertex partner array.

    ``index`` is the position in the canonical (lexicographic) order of the
    host graph's matchings and doubles as the resonance-graph vertex id; it is
    ``None`` for matchings produced by a flip until they are looked up.
    """
    partners: tuple[int, ...]
    index: Optional[int] = field(default=None, compare=False)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset((u, v) for u, v in enumerate(self.partners) if u < v)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def contains(self, u: int, v: int) -> bool:
        return self.partners[u] == v

    @classmethod
    def from_edges(cls, vertex_count: int, edges, index: Optional[int] = None) -> "PerfectMatching":
        partners = [-1] * vertex_count
        for u, v in edges:
            partners[u] = v
            partners[v] = u
        return cls(partners=tuple(partners), index=index)
