"""Exhaustive machine checks of the finite claims about R0, R1, interval and beta facts.

Every claim is checked over its whole finite instance space: all topologies
on ``n`` labeled points, and for the beta claims every pivot and every
filter as well.  The checks recompute closures, separations and
irreducibility from the open sets directly, so they are independent of the
shortcuts used in :mod:`topolat.separation` and :mod:`topolat.beta`.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .beta import BetaSpec, beta, interval_criteria_report, r1_filter_criterion
from .core import (
    GroundSet,
    Topology,
    alexandroff_closure,
    at_topology,
    closure_of,
    kernel_of,
    partition_topology,
    points_of,
    specialization,
)
from .enumeration import (
    enumerate_by_closure,
    enumerate_by_preorders,
    enumerate_topologies,
)
from .errors import InternalInconsistency
from .filters import FiniteFilter, adherence, all_filters, neighborhood_filter
from .interchange import topology_to_obj
from .separation import AXIOMS, classify, irreducible_report

VERIFIED = "verified"
REFUTED = "refuted"
NOT_APPLICABLE = "not-applicable"

# filter products (topology x pivot x filter) are only swept up to this size
MAX_PRODUCT_POINTS = 4


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    statement: str
    n: int
    instances: int
    verdict: str
    witness: dict | None = None
    reason: str = ""
    failures: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def as_obj(self, timings: bool = False) -> dict:
        obj = {
            "claim": self.claim,
            "statement": self.statement,
            "n": self.n,
            "instances": self.instances,
            "verdict": self.verdict,
            "failures": self.failures,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.reason:
            obj["reason"] = self.reason
        if timings:
            obj["elapsed"] = round(self.elapsed, 3)
        return obj


# -- definition-level helpers ---------------------------------------------------


def _closed(t: Topology) -> list[int]:
    return [t.full & ~o for o in t.opens]


@lru_cache(maxsize=1 << 16)
def _brute_closure(t: Topology, a: int) -> int:
    out = t.full
    for c in _closed(t):
        if a & ~c == 0:
            out &= c
    return out


def _brute_kernel(t: Topology, a: int) -> int:
    out = t.full
    for o in t.opens:
        if a & ~o == 0:
            out &= o
    return out


def _brute_reducible(t: Topology, c: int) -> bool:
    parts = [d for d in _closed(t) if d and d != c and d & ~c == 0]
    return any(p | q == c for i, p in enumerate(parts) for q in parts[i:])


def _brute_irreducibles(t: Topology) -> list[int]:
    return [c for c in sorted(_closed(t)) if c and not _brute_reducible(t, c)]


def _separated(t: Topology, a: int, b: int) -> bool:
    """Disjoint opens around ``a`` and ``b``."""
    around_a = [u for u in t.opens if a & ~u == 0]
    around_b = [v for v in t.opens if b & ~v == 0]
    return any(u & v == 0 for u in around_a for v in around_b)


def _brute_r0(t: Topology) -> tuple[bool, bool, bool]:
    cl = [_brute_closure(t, 1 << x) for x in range(t.n)]
    ker = [_brute_kernel(t, 1 << x) for x in range(t.n)]
    symmetric = all(bool(cl[y] >> x & 1) == bool(cl[x] >> y & 1)
                    for x in range(t.n) for y in range(t.n))
    cl_is_ker = cl == ker
    opens_hold_closures = all(cl[x] & ~v == 0 for v in t.opens for x in points_of(v))
    return symmetric, cl_is_ker, opens_hold_closures


def _brute_r1(t: Topology) -> tuple[bool, bool, bool]:
    n = t.n
    cl = [_brute_closure(t, 1 << x) for x in range(n)]
    r0 = _brute_r0(t)[0]
    closures_apart = all(
        cl[x] == cl[y] or _separated(t, cl[x], cl[y]) for x in range(n) for y in range(n)
    )
    points_apart = r0 and all(
        cl[x] >> y & 1 or _separated(t, 1 << x, 1 << y) for x in range(n) for y in range(n)
    )
    adherence_ok = r0
    for x in range(n):
        nbhd = [u for u in t.opens if u >> x & 1]
        adh = t.full
        for u in nbhd:
            adh &= _brute_closure(t, u)
        adherence_ok = adherence_ok and adh == cl[x]
    return closures_apart, points_apart, adherence_ok


def _brute_regular(t: Topology) -> bool:
    for v in t.opens:
        for x in points_of(v):
            if not any(u >> x & 1 and _brute_closure(t, u) & ~v == 0 for u in t.opens):
                return False
    return True


def _topology_witness(t: Topology, **extra) -> dict:
    out = {"topology": topology_to_obj(t)}
    for key, value in extra.items():
        out[key] = value
    return out


def _mask_obj(mask: int) -> list[int]:
    return points_of(mask)


# -- per-topology claims --------------------------------------------------------
#
# A per-topology check returns a witness dict when the claim fails on that
# topology and None otherwise.  A filter-product check yields one such result
# per (pivot, filter) instance in its hypothesis.


def _check_closure_kernel(t: Topology):
    for x in range(t.n):
        for y in range(t.n):
            if bool(closure_of(t, 1 << y) >> x & 1) != bool(kernel_of(t, 1 << x) >> y & 1):
                return _topology_witness(t, points=[x, y], detail="x in cl(y) disagrees with y in ker(x)")
    for a in t.ground.subsets():
        if closure_of(t, a) != _brute_closure(t, a) or kernel_of(t, a) != _brute_kernel(t, a):
            return _topology_witness(t, set=_mask_obj(a), detail="closure or kernel differs from its definition")
    return None


def _check_r0(t: Topology):
    forms = _brute_r0(t)
    if len(set(forms)) != 1 or forms[0] != classify(t).R0:
        return _topology_witness(t, detail=f"symmetric/cl=ker/opens-hold-closures/classifier = {forms} {classify(t).R0}")
    return None


def _check_r1(t: Topology):
    forms = _brute_r1(t)
    if len(set(forms)) != 1 or forms[0] != classify(t).R1:
        return _topology_witness(t, detail=f"closures/points/adherence/classifier = {forms} {classify(t).R1}")
    return None


def _check_at_coincidence(t: Topology):
    r0 = _brute_r0(t)[0]
    r1 = _brute_r1(t)[0]
    reg = _brute_regular(t)
    p = classify(t)
    if not (r0 == r1 == reg == p.R0 == p.R1 == p.regular):
        return _topology_witness(t, detail=f"R0={r0} R1={r1} regular={reg}")
    return None


def _check_r0_partition(t: Topology):
    classes = specialization(t).classes()
    is_partition = t == partition_topology(t.ground, classes)
    if classify(t).R0 != is_partition:
        return _topology_witness(t, detail=f"R0={classify(t).R0} partition-topology={is_partition}")
    return None


def _check_interval_bounds(t: Topology):
    at, bar = at_topology(t), alexandroff_closure(t)
    if not at <= t <= bar:
        return _topology_witness(t, detail="at(T) <= T <= bar(T) fails")
    if not at == t == bar:
        return _topology_witness(t, detail="interval does not collapse to T on a finite ground")
    return None


def _check_interval_closures(t: Topology):
    at, bar = at_topology(t), alexandroff_closure(t)
    for x in range(t.n):
        c = _brute_closure(t, 1 << x)
        if not c == _brute_closure(at, 1 << x) == _brute_closure(bar, 1 << x):
            return _topology_witness(t, points=[x], detail="point closures differ across the interval")
    return None


def _check_r1_presober(t: Topology):
    p = classify(t)
    if p.R1 and not p.presober:
        return _topology_witness(t, detail="R1 but not presober")
    return None


def _check_sober(t: Topology):
    irr = _brute_irreducibles(t)
    if irr != list(irreducible_report(t).irreducible_closed):
        return _topology_witness(t, detail="irreducible closed sets differ from the definition")
    cl = [_brute_closure(t, 1 << x) for x in range(t.n)]
    generic = {c: [g for g in points_of(c) if cl[g] == c] for c in irr}
    presober = all(generic[c] for c in irr)
    # every point closure is irreducible with that point generic, so unique
    # generic points means distinct points have distinct closures
    unique = all(len(generic[c]) <= 1 for c in irr)
    t0 = len(set(cl)) == t.n
    p = classify(t)
    if unique != t0:
        return _topology_witness(t, detail="uniqueness of generic points differs from T0")
    if p.presober != presober or p.sober != (presober and unique) or p.sober != (p.T0 and p.presober):
        return _topology_witness(t, detail="sober differs from T0 and presober")
    return None


def _check_compact(t: Topology):
    if not classify(t).compact:
        return _topology_witness(t, detail="finite topology reported non-compact")
    return None


# -- filter-product claims --------------------------------------------------------


def _specs(t: Topology) -> Iterator[tuple[int, FiniteFilter]]:
    for x in range(t.n):
        for f in all_filters(t.ground):
            yield x, f


def _spec_witness(t: Topology, x: int, f: FiniteFilter, **extra) -> dict:
    return _topology_witness(t, pivot=x, filter=_mask_obj(f.min_member), **extra)


def _is_r0(t: Topology) -> bool:
    return _brute_r0(t)[0]


def _contains_at_nbhd(t: Topology, x: int, f: FiniteFilter) -> bool:
    return all(u in f for u in at_topology(t).opens if u >> x & 1)


def _check_ex_filter(t: Topology):
    for x, f in _specs(t):
        family = {m for m in t.ground.subsets() if not m >> x & 1 or m in f}
        ok = all(a | b in family and a & b in family for a in family for b in family)
        yield None if ok else _spec_witness(t, x, f, detail="E(x) ∪ F not closed under union/intersection")


def _beta_closed_failure(t: Topology, x: int, f: FiniteFilter):
    try:
        b = beta(BetaSpec(t, x, f))
    except InternalInconsistency as exc:
        return _spec_witness(t, x, f, detail=str(exc))
    closed_t = set(_closed(t))
    closed_b = set(_closed(b))
    cx = _brute_closure(t, 1 << x)
    r0 = _is_r0(t)
    for a in t.ground.subsets():
        expected = a in closed_t and (bool(a >> x & 1) or (t.full & ~a) in f)
        if (a in closed_b) != expected:
            return _spec_witness(t, x, f, set=_mask_obj(a), detail="beta-closed set description fails")
        ct, cb = _brute_closure(t, a), _brute_closure(b, a)
        if r0 and not (ct & ~cb == 0 and cb & ~(ct | cx) == 0):
            return _spec_witness(t, x, f, set=_mask_obj(a), detail="cl_tau(A) ⊆ cl_beta(A) ⊆ cl_tau(A) ∪ cl(x) fails")
    return None


def _check_beta_closed(t: Topology):
    for x, f in _specs(t):
        yield _beta_closed_failure(t, x, f)


def _check_beta_coarser(t: Topology):
    for x, f in _specs(t):
        ok = beta(BetaSpec(t, x, f)) <= t
        yield None if ok else _spec_witness(t, x, f, detail="beta is not coarser than tau")


def _check_beta_equals_base(t: Topology):
    for x, f in _specs(t):
        equal = beta(BetaSpec(t, x, f)) == t
        contains = all(u in f for u in t.opens if u >> x & 1)
        yield None if equal == contains else _spec_witness(
            t, x, f, detail=f"beta == tau is {equal}, F ⊇ N(x) is {contains}")


def _check_beta_equals_literal(t: Topology):
    for x, f in _specs(t):
        equal = beta(BetaSpec(t, x, f)) == t
        same = f == neighborhood_filter(t, x)
        yield None if equal == same else _spec_witness(
            t, x, f, detail=f"beta == tau is {equal}, F == N(x) is {same}")


def _local_base_failure(t: Topology, x: int, f: FiniteFilter):
    b = beta(BetaSpec(t, x, f))
    cx = _brute_closure(t, 1 << x)
    if _brute_closure(b, 1 << x) != cx:
        return _spec_witness(t, x, f, detail="cl_beta(x) differs from cl(x)")
    for y in range(t.n):
        if cx >> y & 1:
            local = [u for u in t.opens if u >> x & 1 and u in f]
        else:
            local = [u for u in t.opens if u >> y & 1 and not u >> x & 1]
        expected = t.full
        for u in local:
            expected &= u
        if expected != _brute_kernel(b, 1 << y):
            return _spec_witness(t, x, f, points=[y], detail="local base does not give the beta neighborhoods")
    return None


def _check_beta_local_base(t: Topology):
    if not _is_r0(t):
        return
    for x, f in _specs(t):
        yield _local_base_failure(t, x, f)


def _interval_failure(t: Topology, x: int, f: FiniteFilter):
    spec = BetaSpec(t, x, f)
    r = interval_criteria_report(t, spec)
    b = beta(spec)
    r0 = _is_r0(b)
    at_nbhd = _contains_at_nbhd(t, x, f)
    same = all(_brute_closure(b, 1 << y) == _brute_closure(t, 1 << y) for y in range(t.n))
    adh = adherence(t, f) == _brute_closure(t, 1 << x)
    if not (r0 == at_nbhd == same) or (adh and not same):
        return _spec_witness(t, x, f, detail=f"R0={r0} F⊇N_at(x)={at_nbhd} in-interval={same} adh=cl(x)={adh}")
    if (r.beta_R0, r.filter_contains_Nat, r.beta_in_interval, r.adh_equals_clx) != (r0, at_nbhd, same, adh):
        return _spec_witness(t, x, f, detail="interval report disagrees with the direct computation")
    return None


def _check_beta_interval(t: Topology):
    if not _is_r0(t):
        return
    for x, f in _specs(t):
        yield _interval_failure(t, x, f)


def _r1_criterion_failure(t: Topology, x: int, f: FiniteFilter):
    spec = BetaSpec(t, x, f)
    try:
        holds, _ = r1_filter_criterion(spec)
    except InternalInconsistency as exc:
        return _spec_witness(t, x, f, detail=str(exc))
    cx = _brute_closure(t, 1 << x)
    # open subfilters of a principal filter are the principal filters on its open members
    direct = any(u and u in f and _brute_closure(t, u) == cx for u in t.opens)
    if holds != direct or direct != _brute_r1(beta(spec))[0]:
        return _spec_witness(t, x, f, detail=f"criterion={holds} direct={direct}")
    return None


def _check_beta_r1(t: Topology):
    if not _brute_r1(t)[0]:
        return
    for x, f in _specs(t):
        yield _r1_criterion_failure(t, x, f)


def _irreducible_failure(t: Topology, x: int, f: FiniteFilter):
    b = beta(BetaSpec(t, x, f))
    for a in sorted(_closed(b)):
        if a and _brute_reducible(t, a) and not _brute_reducible(b, a):
            return _spec_witness(t, x, f, set=_mask_obj(a), beta=topology_to_obj(b),
                                 detail="beta-closed set is reducible in tau but irreducible in beta")
    return None


def _check_beta_irreducibles(t: Topology):
    # on a finite ground the interval of an R0 topology is that topology
    # alone, so the presober members of such intervals are the R0 topologies
    if not _is_r0(t):
        return
    for x, f in _specs(t):
        yield _irreducible_failure(t, x, f)


def _check_beta_irreducibles_interval(t: Topology):
    if not _is_r0(t):
        return
    for x, f in _specs(t):
        if _contains_at_nbhd(t, x, f):
            yield _irreducible_failure(t, x, f)


def _check_beta_presober(t: Topology):
    if not _is_r0(t):
        return
    for x, f in _specs(t):
        if not _contains_at_nbhd(t, x, f):
            continue
        b = beta(BetaSpec(t, x, f))
        cl = [_brute_closure(b, 1 << y) for y in range(b.n)]
        ok = all(c in cl for c in _brute_irreducibles(b))
        yield None if ok else _spec_witness(t, x, f, detail="beta has an irreducible closed set without generic point")


@dataclass(frozen=True)
class Claim:
    claim: str
    statement: str
    check: Callable
    product: bool = False
    flagged: str = ""


CLAIMS: tuple[Claim, ...] = (
    Claim("closure-kernel-duality",
          "x ∈ cl({y}) iff y ∈ ker({x}); closure and kernel match their definitions",
          _check_closure_kernel),
    Claim("r0-characterizations",
          "symmetric specialization, cl(x) = ker(x), and opens containing the closures of their points agree",
          _check_r0),
    Claim("r1-characterizations",
          "separated point closures, R0 with separated non-specializing points, and R0 with adh N(x) = cl(x) agree",
          _check_r1),
    Claim("alexandroff-coincidence",
          "R0, R1 and regular coincide (every finite topology is Alexandroff)",
          _check_at_coincidence),
    Claim("r0-is-partition",
          "R0 iff the topology is the partition topology of its specialization classes",
          _check_r0_partition),
    Claim("interval-bounds",
          "at(T) <= T <= bar(T), and on a finite ground at(T) = T = bar(T)",
          _check_interval_bounds),
    Claim("interval-point-closures",
          "T, at(T) and bar(T) have the same point closures",
          _check_interval_closures),
    Claim("r1-implies-presober",
          "every R1 topology is presober",
          _check_r1_presober),
    Claim("sober-decomposition",
          "irreducible closed sets match the definition; generic points are unique iff T0; sober iff T0 and presober",
          _check_sober),
    Claim("finite-compact",
          "every finite topology is compact",
          _check_compact),
    Claim("ex-filter-topology",
          "E(x) ∪ F is a topology for every pivot and filter",
          _check_ex_filter, product=True),
    Claim("beta-closed-sets",
          "A is beta-closed iff A is tau-closed and (x ∈ A or X∖A ∈ F); for R0 tau, cl_tau(A) ⊆ cl_beta(A) ⊆ cl_tau(A) ∪ cl(x)",
          _check_beta_closed, product=True),
    Claim("beta-coarser",
          "beta <= tau",
          _check_beta_coarser, product=True),
    Claim("beta-equals-base",
          "beta = tau iff F ⊇ N_tau(x)",
          _check_beta_equals_base, product=True),
    Claim("beta-equals-base-literal",
          "beta = tau iff F = N_tau(x)",
          _check_beta_equals_literal, product=True,
          flagged="the equality form fails whenever F is strictly finer than N_tau(x); "
                  "the superset form is checked as beta-equals-base"),
    Claim("beta-local-base",
          "for R0 tau: cl_beta(x) = cl(x) and the beta neighborhoods follow the two-case local base",
          _check_beta_local_base, product=True),
    Claim("beta-interval",
          "for R0 tau: beta R0 iff F ⊇ N_at(x) iff beta in the interval; adh F = cl(x) puts beta in the interval",
          _check_beta_interval, product=True),
    Claim("beta-r1-criterion",
          "for R1 tau: beta is R1 iff some tau-open filter inside F has adherence cl(x)",
          _check_beta_r1, product=True),
    Claim("beta-irreducibles",
          "for presober tau in the interval of an R0 topology, any pivot and any filter: "
          "a beta-closed tau-reducible set is beta-reducible (so beta-irreducible implies tau-irreducible)",
          _check_beta_irreducibles, product=True),
    Claim("beta-irreducibles-in-interval",
          "as beta-irreducibles, restricted to filters F ⊇ N_at(x)",
          _check_beta_irreducibles_interval, product=True),
    Claim("beta-presober",
          "for presober tau in the interval of an R0 topology and F ⊇ N_at(x): beta is presober",
          _check_beta_presober, product=True),
)

CLAIM_IDS = ("dual-enumeration", "interval-membership") + tuple(c.claim for c in CLAIMS)


def _instances(claim: Claim, t: Topology) -> Iterator[dict | None]:
    if claim.product:
        yield from claim.check(t)
    else:
        yield claim.check(t)


def _run_chunk(args) -> list[tuple[int, int, dict | None]]:
    """Run every applicable claim on a slice of the topology list.

    Returns, per claim, the instance count, the failure count and the first
    failing witness in enumeration order.
    """
    n, opens_list, names = args
    g = GroundSet(n)
    by_name = {c.claim: c for c in CLAIMS}
    out = []
    for name in names:
        claim = by_name[name]
        total = failed = 0
        first = None
        for opens in opens_list:
            for witness in _instances(claim, Topology(g, opens)):
                total += 1
                if witness is not None:
                    failed += 1
                    if first is None:
                        first = witness
        out.append((total, failed, first))
    return out


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _dual_enumeration_report(n: int, jobs: int) -> ClaimReport:
    start = time.perf_counter()
    a = enumerate_by_closure(n)
    b = enumerate_by_preorders(n, jobs)
    witness = None
    if a != b:
        diff = sorted(set(a) ^ set(b))
        witness = {"n": n, "closure_count": len(a), "preorder_count": len(b),
                   "example_opens": [_mask_obj(m) for m in diff[0]] if diff else None}
    return ClaimReport(
        "dual-enumeration",
        "open-family closure and preorder up-sets enumerate the same topologies",
        n, len(a), REFUTED if witness else VERIFIED, witness,
        failures=0 if witness is None else 1,
        elapsed=time.perf_counter() - start,
    )


def _interval_membership_report(tops: list[Topology]) -> ClaimReport:
    """For all pairs: T1 in the interval of T2 iff same point closures iff T1 = T2.

    Point-closure tuples are hashed, so all pairs are decided by grouping.
    """
    start = time.perf_counter()
    n = tops[0].n
    groups: dict[tuple, list[Topology]] = {}
    witness = None
    for t in tops:
        key = tuple(_brute_closure(t, 1 << x) for x in range(n))
        groups.setdefault(key, []).append(t)
        if witness is None and not at_topology(t) <= t <= alexandroff_closure(t):
            witness = _topology_witness(t, detail="not inside its own interval")
    for members in groups.values():
        if len(members) > 1 and witness is None:
            witness = {"first": topology_to_obj(members[0]), "second": topology_to_obj(members[1]),
                       "detail": "distinct topologies with the same point closures"}
    return ClaimReport(
        "interval-membership",
        "T1 lies in the interval of T2 iff they share point closures, and on a finite ground iff T1 = T2",
        n, len(tops) ** 2, REFUTED if witness else VERIFIED, witness,
        failures=0 if witness is None else 1,
        elapsed=time.perf_counter() - start,
    )


def verify_claims(n: int, jobs: int = 1) -> list[ClaimReport]:
    """One report per claim, in a fixed order; refutations carry a witness.

    Output does not depend on ``jobs``: chunks are merged in enumeration order.
    """
    tops = enumerate_topologies(n, jobs)
    reports = [_dual_enumeration_report(n, jobs), _interval_membership_report(tops)]
    active = [c for c in CLAIMS if not (c.product and n > MAX_PRODUCT_POINTS)]
    names = [c.claim for c in active]
    chunks = _chunks([t.opens for t in tops], jobs * 4 if jobs > 1 else 1)
    start = time.perf_counter()
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, [(n, c, names) for c in chunks]))
    else:
        results = [_run_chunk((n, c, names)) for c in chunks]
    share = (time.perf_counter() - start) / max(1, len(names))
    merged = {}
    for k, name in enumerate(names):
        total = sum(r[k][0] for r in results)
        failed = sum(r[k][1] for r in results)
        first = next((r[k][2] for r in results if r[k][2] is not None), None)
        merged[name] = (total, failed, first)
    for claim in CLAIMS:
        if claim.claim not in merged:
            reports.append(ClaimReport(
                claim.claim, claim.statement, n, 0, NOT_APPLICABLE,
                reason=f"filter-product sweeps run only for n <= {MAX_PRODUCT_POINTS}",
            ))
            continue
        total, failed, witness = merged[claim.claim]
        if claim.flagged:
            verdict = NOT_APPLICABLE
            reason = claim.flagged if witness is not None else claim.flagged + " (no counterexample at this size)"
        else:
            verdict = REFUTED if witness is not None else VERIFIED
            reason = ""
        reports.append(ClaimReport(claim.claim, claim.statement, n, total, verdict, witness,
                                   reason, failed, share))
    return reports


def any_refuted(reports: list[ClaimReport]) -> bool:
    return any(r.verdict == REFUTED for r in reports)


def render_reports(reports: list[ClaimReport], timings: bool = False) -> str:
    lines = []
    for r in reports:
        head = f"[{r.verdict}] {r.claim}  n={r.n}  instances={r.instances}"
        if r.failures:
            head += f"  failing={r.failures}"
        if timings:
            head += f"  elapsed={r.elapsed:.3f}s"
        lines.append(head)
        lines.append(f"    {r.statement}")
        if r.reason:
            lines.append(f"    reason: {r.reason}")
        if r.witness is not None:
            lines.append("    witness: " + json.dumps(r.witness, sort_keys=True, ensure_ascii=False))
    counts = Counter(r.verdict for r in reports)
    lines.append(
        f"summary: {counts[VERIFIED]} verified, {counts[REFUTED]} refuted, "
        f"{counts[NOT_APPLICABLE]} not applicable"
    )
    return "\n".join(lines)


def render_reports_structured(reports: list[ClaimReport], timings: bool = False) -> str:
    return json.dumps([r.as_obj(timings) for r in reports], indent=2, sort_keys=True, ensure_ascii=False)


# -- classification table ----------------------------------------------------------


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class ClassificationTable:
    n: int
    rows: tuple[tuple[tuple[bool, ...], int], ...]
    total: int
    r0_count: int

    @property
    def bell_ok(self) -> bool:
        return self.r0_count == bell(self.n)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*AXIOMS, "count"])
        for pattern, count in self.rows:
            w.writerow([*("1" if v else "0" for v in pattern), count])
        w.writerow([])
        w.writerow(["total", self.total])
        w.writerow(["R0", self.r0_count])
        w.writerow(["bell", bell(self.n)])
        w.writerow(["R0_equals_bell", "yes" if self.bell_ok else "no"])
        return buf.getvalue()

    def as_obj(self) -> dict:
        return {
            "n": self.n,
            "axioms": list(AXIOMS),
            "rows": [{"pattern": dict(zip(AXIOMS, p)), "count": c} for p, c in self.rows],
            "total": self.total,
            "R0": self.r0_count,
            "bell": bell(self.n),
            "R0_equals_bell": self.bell_ok,
        }


def classification_table(n: int, jobs: int = 1) -> ClassificationTable:
    """Number of topologies per axiom pattern, most axioms first."""
    tops = enumerate_topologies(n, jobs)
    counts = Counter(classify(t).pattern() for t in tops)
    rows = tuple(sorted(counts.items(), key=lambda kv: tuple(not v for v in kv[0])))
    r0 = sum(c for p, c in counts.items() if p[AXIOMS.index("R0")])
    return ClassificationTable(n, rows, len(tops), r0)


__all__ = [
    "CLAIMS",
    "CLAIM_IDS",
    "ClaimReport",
    "ClassificationTable",
    "any_refuted",
    "bell",
    "classification_table",
    "render_reports",
    "render_reports_structured",
    "verify_claims",
]
