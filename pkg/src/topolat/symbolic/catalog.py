"""Symbolic topologies and filters on the blocks of a countable space.

Every topology sharing the point closures of an R0 space whose closures are
the blocks has block-saturated open sets, so all work happens on block
indices.  Two families of topologies are representable:

``AtRho``
    open sets are ∅ and the cofinite block sets (the bottom of the interval);
``MultiConv(S)``
    a set is open iff it misses every block of the finite set ``S`` or is
    cofinite.  ``S = ∅`` is the discrete block topology (the top of the
    interval) and ``S = {s}`` makes every sequence of blocks converge to ``s``.

Filters are either principal on a block set or generated by the cofinite
sets containing a finite set of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import InvalidInput, UnsupportedCombination
from ..separation import AxiomProfile
from .blocks import SINGLETON_BLOCKS, BlockStructure, concretize
from .satset import SatSet

AT_RHO = "AtRho"
MULTI_CONV = "MultiConv"
PRINCIPAL = "Principal"
COFINITE_CONTAINING = "CofiniteContaining"


def _fmt(blocks: Iterable[int]) -> str:
    return "{" + ",".join(str(b) for b in sorted(blocks)) + "}"


@dataclass(frozen=True)
class SymTopology:
    tag: str
    special: frozenset[int] = frozenset()
    blocks: BlockStructure = SINGLETON_BLOCKS

    def __post_init__(self):
        if self.tag not in (AT_RHO, MULTI_CONV):
            raise InvalidInput(f"unknown symbolic topology tag {self.tag!r}")
        object.__setattr__(self, "special", SatSet.finite(self.special).exceptions)
        if self.tag == AT_RHO and self.special:
            raise InvalidInput("AtRho takes no special blocks")

    @classmethod
    def cofinite(cls, blocks: BlockStructure = SINGLETON_BLOCKS) -> SymTopology:
        return cls(AT_RHO, frozenset(), blocks)

    @classmethod
    def converging_to(cls, special: Iterable[int] = (), blocks: BlockStructure = SINGLETON_BLOCKS) -> SymTopology:
        return cls(MULTI_CONV, frozenset(special), blocks)

    @property
    def special_set(self) -> SatSet:
        return SatSet.finite(self.special)

    def __str__(self):
        if self.tag == AT_RHO:
            return AT_RHO
        return f"{MULTI_CONV}({_fmt(self.special)})"

    def to_obj(self) -> dict:
        if self.tag == AT_RHO:
            return {"tag": AT_RHO}
        return {"tag": MULTI_CONV, "special": sorted(self.special)}

    @classmethod
    def from_obj(cls, obj, blocks: BlockStructure = SINGLETON_BLOCKS) -> SymTopology:
        if not isinstance(obj, dict) or obj.get("tag") not in (AT_RHO, MULTI_CONV):
            raise InvalidInput(f'symbolic topology must have "tag" AtRho or MultiConv, got {obj!r}')
        special = obj.get("special", [])
        if not isinstance(special, list):
            raise InvalidInput(f'"special" must be a list of block indices, got {special!r}')
        return cls(obj["tag"], frozenset(special), blocks)


@dataclass(frozen=True)
class SymFilter:
    tag: str
    base: SatSet

    def __post_init__(self):
        if self.tag == PRINCIPAL:
            if self.base.is_empty:
                raise InvalidInput("a principal filter needs a nonempty base")
        elif self.tag == COFINITE_CONTAINING:
            if self.base.cofinite:
                raise InvalidInput("CofiniteContaining needs a finite base")
        else:
            raise InvalidInput(f"unknown symbolic filter tag {self.tag!r}")

    @classmethod
    def principal(cls, base: SatSet) -> SymFilter:
        return cls(PRINCIPAL, base)

    @classmethod
    def cofinite_containing(cls, blocks: Iterable[int] = ()) -> SymFilter:
        return cls(COFINITE_CONTAINING, SatSet.finite(blocks))

    def contains(self, a: SatSet) -> bool:
        if self.tag == PRINCIPAL:
            return self.base <= a
        return a.cofinite and self.base <= a

    def indices(self) -> frozenset[int]:
        return self.base.exceptions

    def __str__(self):
        if self.tag == PRINCIPAL:
            return f"{PRINCIPAL}({self.base})"
        return f"{COFINITE_CONTAINING}({_fmt(self.base.exceptions)})"

    def to_obj(self) -> dict:
        if self.tag == PRINCIPAL:
            return {"tag": PRINCIPAL, "base": self.base.to_obj()}
        return {"tag": COFINITE_CONTAINING, "base": sorted(self.base.exceptions)}

    @classmethod
    def from_obj(cls, obj) -> SymFilter:
        if not isinstance(obj, dict) or obj.get("tag") not in (PRINCIPAL, COFINITE_CONTAINING):
            raise InvalidInput(f'symbolic filter must have "tag" Principal or CofiniteContaining, got {obj!r}')
        base = obj.get("base", [])
        if obj["tag"] == PRINCIPAL:
            return cls(PRINCIPAL, SatSet.from_obj(base))
        if not isinstance(base, list):
            raise InvalidInput(f"CofiniteContaining base must be a list, got {base!r}")
        return cls.cofinite_containing(base)


# -- open sets, closures, kernels -------------------------------------------


def sym_open(t: SymTopology, a: SatSet) -> bool:
    if a.cofinite:
        return True
    if t.tag == AT_RHO:
        return a.is_empty
    return a.isdisjoint(t.special_set)


def sym_closed(t: SymTopology, a: SatSet) -> bool:
    return sym_open(t, ~a)


def sym_closure(t: SymTopology, a: SatSet) -> SatSet:
    if not a.cofinite:
        return a
    if t.tag == AT_RHO:
        return SatSet.full()
    return a | t.special_set


def sym_kernel(t: SymTopology, a: SatSet) -> SatSet:
    # every co-singleton block set is open, so the kernel adds nothing
    return a


# -- filters ------------------------------------------------------------------


def sym_nbhd(t: SymTopology, b: int) -> SymFilter:
    if t.tag == MULTI_CONV and b not in t.special:
        return SymFilter.principal(SatSet.finite([b]))
    return SymFilter.cofinite_containing([b])


def filter_contains(big: SymFilter, small: SymFilter) -> bool:
    """``big ⊇ small`` as families of sets."""
    if big.tag == PRINCIPAL and small.tag == PRINCIPAL:
        return big.base <= small.base
    if big.tag == PRINCIPAL:
        # the cofinite sets containing B meet exactly in B
        return big.base <= small.base
    if small.tag == PRINCIPAL:
        # all supersets of the small base must be cofinite and contain B
        return small.base.cofinite and big.base <= small.base
    return big.base <= small.base


def sym_adherence(t: SymTopology, f: SymFilter) -> SatSet:
    if f.tag == PRINCIPAL:
        return sym_closure(t, f.base)
    if t.tag == AT_RHO:
        return SatSet.full()
    return f.base | t.special_set


def sym_converges(t: SymTopology, f: SymFilter, b: int) -> bool:
    return filter_contains(f, sym_nbhd(t, b))


def sym_filter_kind(t: SymTopology, f: SymFilter) -> tuple[bool, bool]:
    """Return ``(is_open, is_regular)`` for a catalog filter."""
    if f.tag == PRINCIPAL:
        is_open = sym_open(t, f.base)
        return is_open, is_open and sym_closure(t, f.base) == f.base
    # the cofinite sets are open in every catalog topology
    if t.tag == AT_RHO:
        return True, False
    return True, t.special <= f.base.exceptions


# -- axioms -------------------------------------------------------------------


@dataclass(frozen=True)
class SymWitness:
    reason: str
    blocks: tuple[int, ...] = ()
    sets: tuple[SatSet, ...] = ()

    def describe(self) -> str:
        parts = [self.reason]
        if self.blocks:
            parts.append("blocks " + ",".join(map(str, self.blocks)))
        if self.sets:
            parts.append("sets " + " ".join(str(s) for s in self.sets))
        return "; ".join(parts)


SCOPE_SATSET = "closed sets and open sets quantified over finite/cofinite block sets"
SCOPE_FILTERS = "compactness decided through catalog filters and the block cover"


@dataclass(frozen=True)
class SymAxiomProfile(AxiomProfile):
    scope: dict = field(default_factory=dict, compare=False)

    def to_row(self) -> dict[str, object]:
        row = super().to_row()
        row["scope"] = "; ".join(f"{k}: {v}" for k, v in sorted(self.scope.items()))
        return row


def sym_classify(t: SymTopology) -> SymAxiomProfile:
    witnesses: dict = {}
    scope = {
        "regular": SCOPE_SATSET,
        "presober": SCOPE_SATSET,
        "compact": SCOPE_FILTERS,
    }
    big = t.blocks.first_big_block()
    t0 = big is None
    if not t0:
        pts = t.blocks.points(big)[:2]
        same = SymWitness(f"points {pts[0]} and {pts[1]} share a block", (big,), (SatSet.finite([big]),))
        witnesses["T0"] = same
        witnesses["T1"] = same
        witnesses["sober"] = same

    special = sorted(t.special)
    if t.tag == AT_RHO:
        r1 = regular = presober = False
        compact = True
        pair = SymWitness("every open set containing either block is cofinite, so they meet", (0, 1),
                          (SatSet.cofinite_except([1]), SatSet.cofinite_except([0])))
        witnesses["R1"] = pair
        witnesses["regular"] = SymWitness("open set ℕ∖{1} contains no closure of an open set around block 0",
                                          (0,), (SatSet.cofinite_except([1]),))
        witnesses["presober"] = SymWitness("ℕ is irreducible but every point closure is a single block",
                                           (), (SatSet.full(),))
    else:
        r1 = regular = len(special) <= 1
        presober = True
        compact = bool(special)
        if not r1:
            s0, s1 = special[:2]
            witnesses["R1"] = SymWitness("every open set containing either block is cofinite, so they meet",
                                         (s0, s1), (SatSet.cofinite_except([s1]), SatSet.cofinite_except([s0])))
            witnesses["regular"] = SymWitness(
                f"every open set around block {s0} has a closure containing block {s1}",
                (s0,), (SatSet.cofinite_except([s1]),))
        if not compact:
            witnesses["compact"] = SymWitness(
                "the cover by single blocks has no finite subcover; CofiniteContaining(∅) has no adherent point",
                (), (SatSet.full(),))
    if not t0 or not r1:
        witnesses.setdefault("T2", witnesses.get("T0") or witnesses["R1"])
    if not presober:
        witnesses.setdefault("sober", witnesses["presober"])
    return SymAxiomProfile(
        T0=t0, T1=t0, T2=t0 and r1, R0=True, R1=r1, regular=regular,
        presober=presober, sober=t0 and presober, compact=compact,
        witnesses=witnesses, scope=scope,
    )


# -- order and the beta construction ------------------------------------------


def _check_blocks(t1: SymTopology, t2: SymTopology) -> None:
    if t1.blocks != t2.blocks:
        raise InvalidInput("symbolic topologies over different block structures")


def sym_leq(t1: SymTopology, t2: SymTopology) -> bool:
    _check_blocks(t1, t2)
    if t1.tag == AT_RHO:
        return True
    if t2.tag == AT_RHO:
        return False
    return t1.special >= t2.special


def sym_compare(t1: SymTopology, t2: SymTopology) -> str:
    le, ge = sym_leq(t1, t2), sym_leq(t2, t1)
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def strictness_witness(coarse: SymTopology, fine: SymTopology) -> SatSet | None:
    """A block set open in ``fine`` but not in ``coarse``, if ``coarse < fine``."""
    if sym_compare(coarse, fine) != "less":
        return None
    # a single block outside the special set of ``fine`` is open there only
    if coarse.tag == MULTI_CONV:
        b = min(coarse.special - fine.special)
    else:
        b = min(set(range(len(fine.special) + 1)) - fine.special)
    return SatSet.finite([b])


def sym_beta(t: SymTopology, x: int, f: SymFilter) -> SymTopology:
    """Catalog member equal to ``t ∩ (E(x) ∪ f)``.

    Raises :class:`UnsupportedCombination` when the result is not an AtRho or
    MultiConv topology.
    """
    if sym_converges(t, f, x):
        return t
    if t.tag == MULTI_CONV and f.tag == COFINITE_CONTAINING and f.base.exceptions <= {x}:
        return SymTopology(MULTI_CONV, t.special | {x}, t.blocks)
    # some block a != x is required by f, so ℕ∖{a} is open in t (it is
    # cofinite), contains x, and is not in f
    a = next(b for b in range(x + 2 + f.base.max_index() + 1) if b != x and b in f.base)
    escaping = SatSet.cofinite_except([a])
    raise UnsupportedCombination(
        f"beta({t}, {x}, {f}) leaves the catalog: the cofinite open set {escaping} "
        f"contains block {x} but is not in the filter, so the cofinite sets containing "
        f"block {x} and missing block {a} are not open"
    )


def describe_set(t: SymTopology, a: SatSet) -> str:
    return concretize(t.blocks, a)
