"""Point-level layout of block spaces.

Blocks are laid out consecutively from ``origin``: block 0 holds the first
``size(0)`` points, block 1 the next ``size(1)`` and so on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidInput
from .satset import SatSet


@dataclass(frozen=True)
class BlockStructure:
    default_size: int = 1
    size_exceptions: tuple[tuple[int, int], ...] = ()
    origin: int = 0
    universe: str = "ℕ"
    label: str = field(default="singleton blocks", compare=False)

    def __post_init__(self):
        if self.default_size < 1:
            raise InvalidInput("block sizes must be positive")
        normalized = tuple(sorted(dict(self.size_exceptions).items()))
        for b, s in normalized:
            if b < 0 or s < 1:
                raise InvalidInput(f"bad block size entry ({b}, {s})")
        object.__setattr__(self, "size_exceptions", normalized)

    def size(self, b: int) -> int:
        return dict(self.size_exceptions).get(b, self.default_size)

    def all_singletons(self) -> bool:
        return self.default_size == 1 and all(s == 1 for _, s in self.size_exceptions)

    def first_big_block(self) -> int | None:
        if self.default_size > 1:
            taken = {b for b, s in self.size_exceptions if s == 1}
            b = 0
            while b in taken:
                b += 1
            return b
        big = [b for b, s in self.size_exceptions if s > 1]
        return big[0] if big else None

    def start(self, b: int) -> int:
        extra = sum(s - self.default_size for i, s in self.size_exceptions if i < b)
        return self.origin + b * self.default_size + extra

    def points(self, b: int) -> list[int]:
        s = self.start(b)
        return list(range(s, s + self.size(b)))


SINGLETON_BLOCKS = BlockStructure()

# block 0 = {1}, block n = {2n, 2n+1} on the positive integers
PAIRED_BLOCKS = BlockStructure(
    default_size=2, size_exceptions=((0, 1),), origin=1, universe="ℕ", label="paired blocks"
)


def _point_list(points: list[int]) -> str:
    return "{" + ", ".join(str(p) for p in sorted(points)) + "}"


def concretize(blocks: BlockStructure, a: SatSet) -> str:
    """Render a block set as the underlying set of points."""
    pts = [p for b in sorted(a.exceptions) for p in blocks.points(b)]
    if not a.cofinite:
        return "∅" if not pts else _point_list(pts)
    if not pts:
        return blocks.universe
    return f"{blocks.universe} ∖ {_point_list(pts)}"
