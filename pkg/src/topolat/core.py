"""Finite topologies as canonical families of bitmasks.

Points of a ground set of size ``n`` are the indices ``0..n-1`` and a subset
is an ``int`` whose bit ``i`` marks membership of point ``i``.  A topology is
stored as the ascending tuple of its open masks, so two topologies are equal
exactly when their tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import InvalidInput, TopologyAxiomError

MAX_POINTS = 16
MAX_ENUMERATION_POINTS = 5

SetMask = int


def mask_of(points: Iterable[int]) -> SetMask:
    return reduce(lambda acc, p: acc | (1 << p), points, 0)


def points_of(mask: SetMask) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def format_mask(mask: SetMask) -> str:
    if not mask:
        return "{}"
    return "{" + ",".join(str(p) for p in points_of(mask)) + "}"


@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_POINTS:
            raise InvalidInput(f"ground set size must be an integer in 1..{MAX_POINTS}, got {self.n!r}")

    @property
    def full(self) -> SetMask:
        return (1 << self.n) - 1

    def points(self) -> range:
        return range(self.n)

    def subsets(self) -> range:
        return range(1 << self.n)

    def check(self, mask: SetMask) -> SetMask:
        if not isinstance(mask, int) or mask < 0 or mask > self.full:
            raise InvalidInput(f"mask {mask!r} does not fit a ground set of {self.n} points")
        return mask

    def check_point(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise InvalidInput(f"point {x!r} is not in a ground set of {self.n} points")
        return x


@dataclass(frozen=True)
class Preorder:
    """Specialization preorder; ``rows[x]`` is the mask of all ``y`` with ``x <= y``."""

    n: int
    rows: tuple[SetMask, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def is_reflexive(self) -> bool:
        return all(self.leq(x, x) for x in range(self.n))

    def is_transitive(self) -> bool:
        for x in range(self.n):
            for y in points_of(self.rows[x]):
                if self.rows[y] & ~self.rows[x]:
                    return False
        return True

    def is_symmetric(self) -> bool:
        return all(self.leq(y, x) for x in range(self.n) for y in points_of(self.rows[x]))

    def is_antisymmetric(self) -> bool:
        return all(x == y or not self.leq(y, x) for x in range(self.n) for y in points_of(self.rows[x]))

    def classes(self) -> list[SetMask]:
        """Classes of mutual specialization, ordered by least member."""
        seen = 0
        out = []
        for x in range(self.n):
            if seen >> x & 1:
                continue
            cls = mask_of(y for y in points_of(self.rows[x]) if self.leq(y, x))
            seen |= cls
            out.append(cls)
        return out

    def up_sets(self) -> list[SetMask]:
        full = (1 << self.n) - 1
        return [
            m for m in range(full + 1)
            if all(self.rows[x] & ~m == 0 for x in points_of(m))
        ]


@dataclass(frozen=True)
class Topology:
    """A topology on ``ground``; ``opens`` is the ascending tuple of open masks.

    Use :meth:`from_opens` or :func:`from_subbasis` to build one; the raw
    constructor trusts its arguments.
    """

    ground: GroundSet
    opens: tuple[SetMask, ...]

    @classmethod
    def from_opens(cls, ground: GroundSet, opens: Iterable[SetMask]) -> Topology:
        family = sorted({ground.check(m) for m in opens})
        validate_family(ground, family)
        return cls(ground, tuple(family))

    @classmethod
    def discrete(cls, n: int) -> Topology:
        g = GroundSet(n)
        return cls(g, tuple(g.subsets()))

    @classmethod
    def indiscrete(cls, n: int) -> Topology:
        g = GroundSet(n)
        return cls(g, (0, g.full) if g.full else (0,))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> SetMask:
        return self.ground.full

    @cached_property
    def open_set(self) -> frozenset[SetMask]:
        return frozenset(self.opens)

    def is_open(self, mask: SetMask) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: SetMask) -> bool:
        return (self.full & ~mask) in self.open_set

    @cached_property
    def closed_sets(self) -> tuple[SetMask, ...]:
        return tuple(sorted(self.full & ~o for o in self.opens))

    @cached_property
    def point_kernels(self) -> tuple[SetMask, ...]:
        kers = [self.full] * self.n
        for o in self.opens:
            for x in points_of(o):
                kers[x] &= o
        return tuple(kers)

    @cached_property
    def point_closures(self) -> tuple[SetMask, ...]:
        # x in cl(y) iff y in ker(x)
        kers = self.point_kernels
        return tuple(
            mask_of(x for x in range(self.n) if kers[x] >> y & 1) for y in range(self.n)
        )

    def interior(self, mask: SetMask) -> SetMask:
        out = 0
        for ker in self.point_kernels:
            if ker & ~mask == 0:
                out |= ker
        return out

    def __le__(self, other: Topology) -> bool:
        _same_ground(self, other)
        return self.open_set <= other.open_set

    def __lt__(self, other: Topology) -> bool:
        _same_ground(self, other)
        return self.open_set < other.open_set

    def __ge__(self, other: Topology) -> bool:
        return other <= self

    def __gt__(self, other: Topology) -> bool:
        return other < self

    def describe(self) -> str:
        return "{" + ", ".join(format_mask(o) for o in self.opens) + "}"


def _same_ground(t1: Topology, t2: Topology) -> None:
    if t1.ground != t2.ground:
        raise InvalidInput(f"ground mismatch: {t1.n} points vs {t2.n} points")


def validate_family(ground: GroundSet, family: Sequence[SetMask]) -> None:
    """Raise :class:`TopologyAxiomError` unless ``family`` is a topology on ``ground``."""
    members = set(family)
    if 0 not in members:
        raise TopologyAxiomError("contains-empty-set", [[]])
    if ground.full not in members:
        raise TopologyAxiomError("contains-ground-set", [points_of(ground.full)])
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in members:
                raise TopologyAxiomError("closed-under-union", [points_of(a), points_of(b)])
            if a & b not in members:
                raise TopologyAxiomError("closed-under-intersection", [points_of(a), points_of(b)])


def from_subbasis(ground: GroundSet, family: Iterable[SetMask]) -> Topology:
    """Smallest topology on ``ground`` containing every member of ``family``.

    The least open set around each point is the intersection of the subbasis
    members containing it; the opens are then all unions of those.
    """
    members = [ground.check(m) for m in family]
    kers = []
    for x in ground.points():
        k = ground.full
        for m in members:
            if m >> x & 1:
                k &= m
        kers.append(k)
    opens = {0}
    for k in set(kers):
        opens |= {o | k for o in opens}
    opens.add(ground.full)
    return Topology(ground, tuple(sorted(opens)))


def closure_of(t: Topology, a: SetMask) -> SetMask:
    t.ground.check(a)
    return t.full & ~t.interior(t.full & ~a)


def kernel_of(t: Topology, a: SetMask) -> SetMask:
    t.ground.check(a)
    out = 0
    for x in points_of(a):
        out |= t.point_kernels[x]
    return out


def specialization(t: Topology) -> Preorder:
    """``x <= y`` iff ``x`` lies in the closure of ``{y}``."""
    return Preorder(t.n, tuple(t.point_kernels))


def meet(t1: Topology, t2: Topology) -> Topology:
    _same_ground(t1, t2)
    return Topology(t1.ground, tuple(sorted(t1.open_set & t2.open_set)))


def join(t1: Topology, t2: Topology) -> Topology:
    _same_ground(t1, t2)
    return from_subbasis(t1.ground, t1.open_set | t2.open_set)


def lattice_op(t1: Topology, t2: Topology, mode: str) -> Topology:
    if mode == "meet":
        return meet(t1, t2)
    if mode == "join":
        return join(t1, t2)
    raise InvalidInput(f"unknown lattice mode {mode!r}; expected 'meet' or 'join'")


def at_topology(t: Topology) -> Topology:
    """Topology generated by the complements of closures of (finite) subsets."""
    closed = {closure_of(t, h) for h in t.ground.subsets()}
    return from_subbasis(t.ground, (t.full & ~c for c in closed))


def is_kernelled(t: Topology, a: SetMask) -> bool:
    return kernel_of(t, a) == a


def alexandroff_closure(t: Topology) -> Topology:
    """The family of all kernelled subsets, i.e. the least AT topology above ``t``."""
    kers = t.point_kernels
    opens = []
    for a in t.ground.subsets():
        union = 0
        for x in points_of(a):
            union |= kers[x]
        if union == a:
            opens.append(a)
    return Topology(t.ground, tuple(opens))


def same_interval(t1: Topology, t2: Topology) -> bool:
    """True iff both topologies have the same point closures."""
    _same_ground(t1, t2)
    return t1.point_closures == t2.point_closures


def t0_quotient(t: Topology) -> tuple[Topology, tuple[int, ...]]:
    classes = specialization(t).classes()
    cls_of = [0] * t.n
    for i, c in enumerate(classes):
        for x in points_of(c):
            cls_of[x] = i
    ground = GroundSet(len(classes))
    opens = {mask_of(cls_of[x] for x in points_of(o)) for o in t.opens}
    return Topology(ground, tuple(sorted(opens))), tuple(cls_of)


def partition_topology(ground: GroundSet, blocks: Sequence[SetMask]) -> Topology:
    opens = {0}
    for b in blocks:
        opens |= {o | b for o in opens}
    return Topology(ground, tuple(sorted(opens)))
