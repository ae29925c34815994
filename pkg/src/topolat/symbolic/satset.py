"""Finite and cofinite sets of block indices.

A ``SatSet`` is either the finite set ``exceptions`` or the complement of
``exceptions`` in the natural numbers.  These sets form a Boolean algebra in
which every operation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import InvalidInput


def _indices(blocks: Iterable[int]) -> frozenset[int]:
    out = frozenset(blocks)
    for b in out:
        if isinstance(b, bool) or not isinstance(b, int) or b < 0:
            raise InvalidInput(f"block index must be a natural number, got {b!r}")
    return out


def _fmt(blocks: Iterable[int]) -> str:
    return "{" + ",".join(str(b) for b in sorted(blocks)) + "}"


@dataclass(frozen=True)
class SatSet:
    cofinite: bool
    exceptions: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "exceptions", _indices(self.exceptions))

    @classmethod
    def finite(cls, blocks: Iterable[int] = ()) -> SatSet:
        return cls(False, frozenset(blocks))

    @classmethod
    def cofinite_except(cls, blocks: Iterable[int] = ()) -> SatSet:
        return cls(True, frozenset(blocks))

    @classmethod
    def empty(cls) -> SatSet:
        return cls(False, frozenset())

    @classmethod
    def full(cls) -> SatSet:
        return cls(True, frozenset())

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.exceptions

    @property
    def is_full(self) -> bool:
        return self.cofinite and not self.exceptions

    def __contains__(self, b: int) -> bool:
        return (b in self.exceptions) != self.cofinite

    def __invert__(self) -> SatSet:
        return SatSet(not self.cofinite, self.exceptions)

    def __or__(self, other: SatSet) -> SatSet:
        a, b = self, other
        if a.cofinite and b.cofinite:
            return SatSet(True, a.exceptions & b.exceptions)
        if a.cofinite:
            return SatSet(True, a.exceptions - b.exceptions)
        if b.cofinite:
            return SatSet(True, b.exceptions - a.exceptions)
        return SatSet(False, a.exceptions | b.exceptions)

    def __and__(self, other: SatSet) -> SatSet:
        return ~(~self | ~other)

    def __sub__(self, other: SatSet) -> SatSet:
        return self & ~other

    def __le__(self, other: SatSet) -> bool:
        return (self - other).is_empty

    def __lt__(self, other: SatSet) -> bool:
        return self <= other and self != other

    def __ge__(self, other: SatSet) -> bool:
        return other <= self

    def __gt__(self, other: SatSet) -> bool:
        return other < self

    def isdisjoint(self, other: SatSet) -> bool:
        return (self & other).is_empty

    def single_block(self) -> int | None:
        """The block index if this is a one-block set, else ``None``."""
        if not self.cofinite and len(self.exceptions) == 1:
            return next(iter(self.exceptions))
        return None

    def max_index(self) -> int:
        return max(self.exceptions, default=-1)

    def __str__(self):
        if not self.cofinite:
            return "∅" if not self.exceptions else _fmt(self.exceptions)
        return "ℕ" if not self.exceptions else "ℕ∖" + _fmt(self.exceptions)

    def to_obj(self) -> dict:
        return {"mode": "cofinite" if self.cofinite else "finite", "exceptions": sorted(self.exceptions)}

    @classmethod
    def from_obj(cls, obj) -> SatSet:
        if isinstance(obj, list):
            return cls.finite(obj)
        if not isinstance(obj, dict) or obj.get("mode") not in ("finite", "cofinite"):
            raise InvalidInput(f'block set must be a list or {{"mode": "finite"|"cofinite", "exceptions": [...]}}, got {obj!r}')
        exceptions = obj.get("exceptions", [])
        if not isinstance(exceptions, list):
            raise InvalidInput(f"exceptions must be a list, got {exceptions!r}")
        return cls(obj["mode"] == "cofinite", frozenset(exceptions))


def sat_algebra(op: str, a: SatSet, b: SatSet | int | None = None) -> SatSet | bool:
    if op == "union":
        return a | b
    if op == "intersect":
        return a & b
    if op == "complement":
        return ~a
    if op == "subset":
        return a <= b
    if op == "membership":
        return b in a
    raise InvalidInput(f"unknown block-set operation {op!r}")
