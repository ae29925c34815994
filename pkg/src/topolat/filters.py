"""Filters on a finite ground set.

Every filter on a finite set is principal, so a filter is kept as its least
member and membership is a superset test.  An *open* filter is one with a
base of open sets (here: the least member is open); a *regular* filter is an
open filter in which every member contains the closure of another member.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GroundSet, SetMask, Topology, closure_of, format_mask
from .errors import InvalidInput


@dataclass(frozen=True)
class FiniteFilter:
    ground: GroundSet
    min_member: SetMask

    def __post_init__(self):
        self.ground.check(self.min_member)
        if self.min_member == 0:
            raise InvalidInput("a proper filter cannot contain the empty set")

    def __contains__(self, mask: SetMask) -> bool:
        return self.min_member & ~mask == 0

    def members(self) -> list[SetMask]:
        return [m for m in self.ground.subsets() if m in self]

    def __str__(self):
        return "↑" + format_mask(self.min_member)


def all_filters(ground: GroundSet) -> list[FiniteFilter]:
    return [FiniteFilter(ground, m) for m in range(1, ground.full + 1)]


def _same_ground(t: Topology, f: FiniteFilter) -> None:
    if t.ground != f.ground:
        raise InvalidInput(f"filter on {f.ground.n} points used with a topology on {t.n} points")


def neighborhood_filter(t: Topology, x: int) -> FiniteFilter:
    t.ground.check_point(x)
    return FiniteFilter(t.ground, t.point_kernels[x])


def adherence(t: Topology, f: FiniteFilter) -> SetMask:
    # closure is monotone, so the least member has the smallest closure
    _same_ground(t, f)
    return closure_of(t, f.min_member)


def converges(t: Topology, f: FiniteFilter, x: int) -> bool:
    """``f`` contains the neighborhood filter of ``x``."""
    _same_ground(t, f)
    t.ground.check_point(x)
    return t.point_kernels[x] in f


def filter_kind(t: Topology, f: FiniteFilter) -> tuple[bool, bool]:
    """Return ``(is_open, is_regular)``."""
    _same_ground(t, f)
    is_open = t.is_open(f.min_member)
    # the least member must contain the closure of some member, hence its own
    is_regular = is_open and closure_of(t, f.min_member) == f.min_member
    return is_open, is_regular
