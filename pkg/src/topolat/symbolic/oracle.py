"""Finite-truncation oracle for the symbolic decision rules.

The block sets whose exceptions lie in ``0..m`` form a finite Boolean
algebra isomorphic to the powerset of ``m + 2`` atoms: the explicit blocks
``0..m`` and one atom standing for every block above ``m``.  A catalog
topology restricted to that algebra is a finite topology, so closures,
kernels, adherences and axioms can be decided with the finite machinery,
straight from the openness rule and the filter membership rule.

The tail atom cannot be split, so answers are computed one level up and
read back with block ``m + 1`` as a sentinel: a result contains the tail
exactly when it contains that block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable

from ..core import (
    GroundSet,
    Topology,
    closure_of,
    from_subbasis,
    kernel_of,
    mask_of,
    points_of,
)
from ..errors import InvalidInput
from .catalog import (
    AT_RHO,
    COFINITE_CONTAINING,
    SymFilter,
    SymTopology,
    filter_contains,
    sym_adherence,
    sym_beta,
    sym_classify,
    sym_closure,
    sym_converges,
    sym_filter_kind,
    sym_kernel,
    sym_nbhd,
    sym_open,
)
from .satset import SatSet

LEVELS = range(4, 9)


@dataclass(frozen=True)
class Truncation:
    m: int

    @property
    def n(self) -> int:
        return self.m + 2

    @property
    def tail(self) -> int:
        return 1 << (self.m + 1)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.n)

    def encode(self, a: SatSet) -> int:
        if a.max_index() > self.m:
            raise InvalidInput(f"{a} does not fit truncation level {self.m}")
        fin = mask_of(a.exceptions)
        return self.full & ~fin if a.cofinite else fin

    def decode(self, mask: int) -> SatSet:
        explicit = set(points_of(mask & (self.tail - 1)))
        if mask & self.tail:
            return SatSet.cofinite_except(set(range(self.m + 1)) - explicit)
        return SatSet.finite(explicit)

    def decode_sentinel(self, mask: int) -> SatSet:
        """Read a level-(m) answer off a level-(m+1) mask using block ``m`` as the tail."""
        keep = (1 << self.m) - 1
        explicit = set(points_of(mask & keep))
        if mask >> self.m & 1:
            return SatSet.cofinite_except(set(range(self.m)) - explicit)
        return SatSet.finite(explicit)

    def embed(self, mask: int) -> int:
        """Image of a level-m mask in the level-(m+1) algebra."""
        out = mask & (self.tail - 1)
        if mask & self.tail:
            out |= self.tail | (self.tail << 1)
        return out


def open_rule(t: SymTopology, tr: Truncation, mask: int) -> bool:
    cofinite = bool(mask & tr.tail)
    if t.tag == AT_RHO:
        return mask == 0 or cofinite
    return cofinite or mask & mask_of(t.special) == 0


def member_rule(f: SymFilter, tr: Truncation, mask: int) -> bool:
    base = tr.encode(f.base)
    if f.tag == COFINITE_CONTAINING and not mask & tr.tail:
        return False
    return base & ~mask == 0


@lru_cache(maxsize=None)
def model(t: SymTopology, m: int) -> Topology:
    tr = Truncation(m)
    opens = tuple(mask for mask in range(tr.full + 1) if open_rule(t, tr, mask))
    return Topology(tr.ground, opens)


def _up(m: int) -> Truncation:
    return Truncation(m + 1)


def oracle_closure(t: SymTopology, a: SatSet, m: int) -> SatSet:
    tr = _up(m)
    return tr.decode_sentinel(closure_of(model(t, tr.m), tr.encode(a)))


def oracle_kernel(t: SymTopology, a: SatSet, m: int) -> SatSet:
    tr = _up(m)
    return tr.decode_sentinel(kernel_of(model(t, tr.m), tr.encode(a)))


def oracle_open(t: SymTopology, a: SatSet, m: int) -> bool:
    tr = Truncation(m)
    return model(t, m).is_open(tr.encode(a))


def _members(f: SymFilter, tr: Truncation) -> list[int]:
    return [mask for mask in range(tr.full + 1) if member_rule(f, tr, mask)]


@lru_cache(maxsize=None)
def _least_member(f: SymFilter, tr: Truncation) -> int:
    least = tr.full
    for mask in _members(f, tr):
        least &= mask
    return least


def oracle_adherence(t: SymTopology, f: SymFilter, m: int) -> SatSet:
    tr = _up(m)
    # closure is monotone, so inside the finite model the least member decides
    return tr.decode_sentinel(closure_of(model(t, tr.m), _least_member(f, tr)))


def oracle_filter_contains(big: SymFilter, small: SymFilter, m: int) -> bool:
    # every filter on the finite model is principal on its least member
    tr = _up(m)
    return member_rule(big, tr, _least_member(small, tr))


def oracle_converges(t: SymTopology, f: SymFilter, b: int, m: int) -> bool:
    # the model neighborhood filter of b is principal on the least open around b
    tr = _up(m)
    return member_rule(f, tr, model(t, tr.m).point_kernels[b])


def oracle_nbhd(t: SymTopology, b: int, m: int) -> bool:
    """Does the formula neighborhood filter coincide with the one generated by the model opens?"""
    tr = _up(m)
    topo = model(t, tr.m)
    nb = sym_nbhd(t, b)
    least_open = topo.point_kernels[b]
    opens_inside = all(member_rule(nb, tr, o) for o in topo.opens if o >> b & 1)
    members_contain_open = all(least_open & ~mask == 0 for mask in _members(nb, tr))
    return opens_inside and members_contain_open


def oracle_filter_kind(t: SymTopology, f: SymFilter, m: int) -> tuple[bool, bool]:
    tr = _up(m)
    topo = model(t, tr.m)
    least = _least_member(f, tr)
    is_open = topo.is_open(least)
    return is_open, is_open and closure_of(topo, least) == least


@dataclass(frozen=True)
class OracleAxioms:
    R0: bool
    R1: bool
    regular: bool
    presober: bool
    compact: bool


def _irreducible_in(topo: Topology, c: int) -> bool:
    # in a finite space C is irreducible iff any two nonempty relatively open
    # subsets of C meet, i.e. the least neighborhoods of any two points do
    kers = topo.point_kernels
    pts = points_of(c)
    return bool(pts) and all(kers[p] & kers[q] & c for p in pts for q in pts)


def oracle_axioms(t: SymTopology, m: int, filter_bound: int = 2) -> OracleAxioms:
    tr = Truncation(m)
    topo = model(t, m)
    explicit = range(m + 1)
    cl = topo.point_closures
    ker = topo.point_kernels
    r0 = all(bool(cl[b] >> a & 1) == bool(cl[a] >> b & 1) for a in explicit for b in explicit)
    r1 = r0 and all(
        ker[a] & ker[b] == 0 for a in explicit for b in explicit if cl[a] != cl[b]
    )
    regular = all(
        closure_of(topo, ker[x]) & ~v == 0
        for v in topo.opens for x in points_of(v) if x <= m
    )
    fine = model(t, m + 1)
    fine_cl = fine.point_closures
    presober = True
    for c in topo.closed_sets:
        if not c:
            continue
        e = tr.embed(c)
        if _irreducible_in(fine, e) and not any(fine_cl[g] == e for g in range(m + 2)):
            presober = False
            break
    compact = all(
        not oracle_adherence(t, f, m).is_empty
        for f in _small_catalog(filter_bound)
    )
    return OracleAxioms(r0, r1, regular, presober, compact)


def _small_catalog(bound: int) -> list[SymFilter]:
    out = []
    for k in range(bound + 2):
        for c in combinations(range(bound + 1), k):
            if c:
                out.append(SymFilter.principal(SatSet.finite(c)))
            out.append(SymFilter.principal(SatSet.cofinite_except(c)))
            out.append(SymFilter.cofinite_containing(c))
    return out


def oracle_beta(t: SymTopology, x: int, f: SymFilter, result: SymTopology, m: int) -> bool:
    """Does ``result`` have exactly the open sets of ``t ∩ (E(x) ∪ f)`` at level ``m``?"""
    tr = Truncation(m)
    for mask in range(tr.full + 1):
        literal = open_rule(t, tr, mask) and (not mask >> x & 1 or member_rule(f, tr, mask))
        if literal != open_rule(result, tr, mask):
            return False
    return True


def subbase_topology_agrees(rho: SymTopology, m: int = 6) -> bool:
    """Generate from ∅ and the co-single-block sets, and from the complements of
    closures of finite sets; both must give the cofinite block topology."""
    tr = Truncation(m)
    ground = tr.ground
    subbase = [0] + [tr.full & ~(1 << b) for b in range(m + 1)]
    generated = from_subbasis(ground, subbase)
    finite_sets = range(1 << (m + 1))
    bottom = from_subbasis(ground, [tr.full & ~closure_of(generated, h) for h in finite_sets])
    return generated == bottom == model(rho, m)


# -- agreement sweep ------------------------------------------------------------


SAMPLE_TOPOLOGIES = (
    SymTopology.cofinite(),
    SymTopology.converging_to(()),
    SymTopology.converging_to((0,)),
    SymTopology.converging_to((2,)),
    SymTopology.converging_to((0, 1)),
    SymTopology.converging_to((0, 2, 3)),
)


def sample_sets(top: int = 3) -> list[SatSet]:
    out = []
    for k in range(top + 2):
        for c in combinations(range(top + 1), k):
            out.append(SatSet.finite(c))
            out.append(SatSet.cofinite_except(c))
    return out


def sample_filters(top: int = 3) -> list[SymFilter]:
    out = []
    for a in sample_sets(top):
        if not a.is_empty:
            out.append(SymFilter.principal(a))
        if not a.cofinite:
            out.append(SymFilter.cofinite_containing(a.exceptions))
    return out


@dataclass
class Agreement:
    formula: str
    level: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    unstable: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unstable


def _compare(name: str, m: int, cases, formula: Callable, oracle: Callable) -> Agreement:
    ag = Agreement(name, m)
    for case in cases:
        expected = formula(*case)
        got = oracle(*case, m)
        nxt = oracle(*case, m + 1)
        ag.checked += 1
        if got != expected:
            ag.mismatches.append((case, expected, got))
        if got != nxt:
            ag.unstable.append((case, got, nxt))
    return ag


def _beta_cases():
    for t in SAMPLE_TOPOLOGIES:
        for x in range(3):
            for f in sample_filters(2):
                yield t, x, f


def _beta_formula(t, x, f):
    from ..errors import UnsupportedCombination

    try:
        return sym_beta(t, x, f)
    except UnsupportedCombination:
        return None


def _beta_oracle(t, x, f, m):
    # the oracle side checks closure in the catalog: the literal family must
    # match some catalog member whose special blocks lie in 0..m
    tr = Truncation(m)
    literal = frozenset(
        mask for mask in range(tr.full + 1)
        if open_rule(t, tr, mask) and (not mask >> x & 1 or member_rule(f, tr, mask))
    )
    candidates = [SymTopology.cofinite()] + [
        SymTopology.converging_to(c) for k in range(6) for c in combinations(range(min(m, 4) + 1), k)
    ]
    for cand in candidates:
        if frozenset(model(cand, m).opens) == literal:
            return cand
    return None


def truncation_agreement(levels=LEVELS) -> list[Agreement]:
    """Compare every symbolic decision rule with the oracle at each level and the next."""
    sets = sample_sets()
    filters = sample_filters()
    blocks = range(4)
    results = []
    for m in levels:
        results.append(_compare("open", m, [(t, a) for t in SAMPLE_TOPOLOGIES for a in sets],
                                sym_open, oracle_open))
        results.append(_compare("closure", m, [(t, a) for t in SAMPLE_TOPOLOGIES for a in sets],
                                sym_closure, oracle_closure))
        results.append(_compare("kernel", m, [(t, a) for t in SAMPLE_TOPOLOGIES for a in sets],
                                sym_kernel, oracle_kernel))
        results.append(_compare("neighborhood", m, [(t, b) for t in SAMPLE_TOPOLOGIES for b in blocks],
                                lambda t, b: True, oracle_nbhd))
        results.append(_compare("adherence", m, [(t, f) for t in SAMPLE_TOPOLOGIES for f in filters],
                                sym_adherence, oracle_adherence))
        results.append(_compare("filter-inclusion", m, [(f, g) for f in filters for g in filters],
                                filter_contains, oracle_filter_contains))
        results.append(_compare("convergence", m,
                                [(t, f, b) for t in SAMPLE_TOPOLOGIES for f in filters for b in blocks],
                                sym_converges, oracle_converges))
        results.append(_compare("filter-kind", m, [(t, f) for t in SAMPLE_TOPOLOGIES for f in filters],
                                sym_filter_kind, oracle_filter_kind))
        results.append(_compare("axioms", m, [(t,) for t in SAMPLE_TOPOLOGIES],
                                _formula_axioms, oracle_axioms))
        results.append(_compare("beta-catalog", m, list(_beta_cases()), _beta_formula, _beta_oracle))
    return results


def _formula_axioms(t: SymTopology) -> OracleAxioms:
    p = sym_classify(t)
    return OracleAxioms(p.R0, p.R1, p.regular, p.presober, p.compact)
