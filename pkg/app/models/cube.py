from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property


@dataclass(frozen=True)
class QklShape:
    """Q_{k,l} = P2^k x P3^l; strings have k binary then l ternary coordinates."""
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.l < 0:
            raise ValueError(f"negative shape ({self.k}, {self.l})")

    @property
    def dimension(self) -> int:
        return self.k + self.l

    @property
    def sizes(self) -> tuple[int, ...]:
        return (2,) * self.k + (3,) * self.l

    @property
    def order(self) -> int:
        return 2**self.k * 3**self.l

    @property
    def size(self) -> int:
        """Number of edges: each axis contributes (length - 1) * order / length."""
        return sum((s - 1) * self.order // s for s in self.sizes)

    def strings(self) -> list[tuple[int, ...]]:
        """All coordinate strings ordered by coordinate sum, then lexicographically."""
        return sorted(
            itertools.product(*(range(s) for s in self.sizes)),
            key=lambda b: (sum(b), b),
        )

    def corners(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*((0, s - 1) for s in self.sizes)))

    @staticmethod
    def adjacent(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        """Strings differ by exactly 1 in exactly one coordinate."""
        diffs = [abs(x - y) for x, y in zip(a, b) if x != y]
        return diffs == [1]


@dataclass(frozen=True)
class QklEmbedding:
    """Bijection from Q_{k,l} strings to host-graph vertex ids."""
    shape: QklShape
    vertex_map: dict[tuple[int, ...], int] = field(hash=False)

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_map.values())

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertex_map.values())
