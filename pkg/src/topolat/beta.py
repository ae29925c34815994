"""The coarsening beta = tau ∩ (E(x) ∪ F) on a finite ground set.

E(x) is the family of all subsets missing the pivot ``x``; together with a
filter F it forms a topology, and intersecting with tau replaces the
neighborhoods of ``x`` by those neighborhoods that belong to F.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GroundSet,
    Topology,
    at_topology,
    closure_of,
    format_mask,
    same_interval,
    validate_family,
)
from .errors import InternalInconsistency, InvalidInput, TopologyAxiomError
from .filters import FiniteFilter, adherence, neighborhood_filter
from .separation import classify


@dataclass(frozen=True)
class BetaSpec:
    base: Topology
    pivot: int
    filter: FiniteFilter

    def __post_init__(self):
        self.base.ground.check_point(self.pivot)
        if self.filter.ground != self.base.ground:
            raise InvalidInput("beta filter and topology live on different ground sets")

    def __str__(self):
        return f"beta(pivot={self.pivot}, filter={self.filter})"


def ex_filter_topology(ground: GroundSet, x: int, f: FiniteFilter) -> Topology:
    ground.check_point(x)
    family = sorted(m for m in ground.subsets() if not m >> x & 1 or m in f)
    try:
        validate_family(ground, family)
    except TopologyAxiomError as exc:
        raise InternalInconsistency(f"E({x}) ∪ {f} is not a topology: {exc}") from exc
    return Topology(ground, tuple(family))


def beta(spec: BetaSpec) -> Topology:
    """Intersect the base with E(x) ∪ F and cross-check the result.

    The closed sets must be exactly the base-closed sets that contain the
    pivot or whose complement lies in F.  When the base is R0 the least
    neighborhoods must also match the local-base description.
    """
    tau, x, f = spec.base, spec.pivot, spec.filter
    ef = ex_filter_topology(tau.ground, x, f)
    result = Topology(tau.ground, tuple(sorted(tau.open_set & ef.open_set)))

    full = tau.full
    for a in tau.ground.subsets():
        expected = tau.is_closed(a) and (bool(a >> x & 1) or (full & ~a) in f)
        if result.is_closed(a) != expected:
            raise InternalInconsistency(
                f"{spec}: closed-set description disagrees at {format_mask(a)}"
            )

    if _is_r0(tau):
        cl_x = tau.point_closures[x]
        for y in range(tau.n):
            if cl_x >> y & 1:
                base = [v for v in tau.opens if v >> x & 1 and v in f]
            else:
                base = [v for v in tau.opens if v >> y & 1 and not v >> x & 1]
            least = full
            for v in base:
                least &= v
            if not base or least != result.point_kernels[y]:
                raise InternalInconsistency(
                    f"{spec}: local base at {y} does not generate the beta neighborhoods"
                )
    return result


def _is_r0(t: Topology) -> bool:
    return all(c == k for c, k in zip(t.point_closures, t.point_kernels))


@dataclass(frozen=True)
class IntervalCriteriaReport:
    beta_R0: bool
    filter_contains_Nat: bool
    beta_in_interval: bool
    adh_equals_clx: bool

    @property
    def consistent(self) -> bool:
        first_three = self.beta_R0 == self.filter_contains_Nat == self.beta_in_interval
        return first_three and (not self.adh_equals_clx or self.beta_in_interval)


def interval_criteria_report(rho: Topology, spec: BetaSpec) -> IntervalCriteriaReport:
    """Compute the four equivalent conditions for beta to stay in the interval.

    Requires ``rho`` to be R0 and the base to share its point closures.
    """
    if not _is_r0(rho):
        raise InvalidInput("reference topology must be R0")
    if not same_interval(spec.base, rho):
        raise InvalidInput("beta base does not lie in the interval of the reference topology")
    b = beta(spec)
    x, f = spec.pivot, spec.filter
    nat = neighborhood_filter(at_topology(rho), x)
    return IntervalCriteriaReport(
        beta_R0=classify(b).R0,
        filter_contains_Nat=nat.min_member in f,
        beta_in_interval=same_interval(b, rho),
        adh_equals_clx=adherence(spec.base, f) == rho.point_closures[x],
    )


def open_subfilter_witness(spec: BetaSpec) -> FiniteFilter | None:
    """First open U containing the least member of F whose closure is cl(x).

    Open subfilters of a principal filter ↑A are exactly ↑U for open U ⊇ A,
    and the adherence of ↑U is cl(U).
    """
    tau, x, f = spec.base, spec.pivot, spec.filter
    target = tau.point_closures[x]
    for u in tau.opens:
        if u and u in f and closure_of(tau, u) == target:
            return FiniteFilter(tau.ground, u)
    return None


def r1_filter_criterion(spec: BetaSpec) -> tuple[bool, FiniteFilter | None]:
    """Decide whether beta is R1 through the open-subfilter criterion.

    The criterion and a direct R1 check of beta are both computed; a
    disagreement raises :class:`InternalInconsistency`.
    """
    if not classify(spec.base).R1:
        raise InvalidInput("base topology must be R1")
    witness = open_subfilter_witness(spec)
    holds = witness is not None
    if holds != classify(beta(spec)).R1:
        raise InternalInconsistency(f"{spec}: open-subfilter criterion disagrees with R1 of beta")
    return holds, witness


def beta_equals_base(spec: BetaSpec) -> bool:
    return beta(spec) == spec.base


def filter_contains_neighborhoods(spec: BetaSpec) -> bool:
    return spec.base.point_kernels[spec.pivot] in spec.filter

