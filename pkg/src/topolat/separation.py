"""Separation axioms, irreducible closed sets and generic points.

Several axioms are decided more than once, through characterizations that
are known to be equivalent.  If two routes disagree the result is not
trusted and :class:`InternalInconsistency` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SetMask, Topology, closure_of, format_mask, kernel_of, points_of
from .errors import InternalInconsistency
from .filters import adherence, all_filters, neighborhood_filter

AXIOMS = ("T0", "T1", "T2", "R0", "R1", "regular", "presober", "sober", "compact")


@dataclass(frozen=True)
class Witness:
    reason: str
    points: tuple[int, ...] = ()
    sets: tuple[SetMask, ...] = ()

    def describe(self) -> str:
        parts = [self.reason]
        if self.points:
            parts.append("points " + ",".join(map(str, self.points)))
        if self.sets:
            parts.append("sets " + " ".join(format_mask(s) for s in self.sets))
        return "; ".join(parts)


@dataclass(frozen=True)
class AxiomProfile:
    T0: bool
    T1: bool
    T2: bool
    R0: bool
    R1: bool
    regular: bool
    presober: bool
    sober: bool
    compact: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        checks = {
            "T1 iff R0 and T0": self.T1 == (self.R0 and self.T0),
            "T2 iff R1 and T0": self.T2 == (self.R1 and self.T0),
            "sober iff T0 and presober": self.sober == (self.T0 and self.presober),
            "regular implies R1": not self.regular or self.R1,
            "R1 implies R0": not self.R1 or self.R0,
        }
        for name, ok in checks.items():
            if not ok:
                raise InternalInconsistency(f"axiom profile violates {name}: {self.pattern()}")
        for ax in AXIOMS:
            if not getattr(self, ax) and ax not in self.witnesses:
                raise InternalInconsistency(f"negative verdict for {ax} has no witness")

    def pattern(self) -> tuple[bool, ...]:
        return tuple(getattr(self, ax) for ax in AXIOMS)

    def as_dict(self) -> dict[str, bool]:
        return {ax: getattr(self, ax) for ax in AXIOMS}

    def to_row(self) -> dict[str, object]:
        """Flat record: one boolean column per axiom plus one witness column per axiom."""
        row: dict[str, object] = dict(self.as_dict())
        for ax in AXIOMS:
            w = self.witnesses.get(ax)
            row[f"{ax}_witness"] = w.describe() if w is not None else ""
        return row


@dataclass(frozen=True)
class IrreducibleReport:
    irreducible_closed: tuple[SetMask, ...]
    generic_points: dict

    def describe(self) -> str:
        return ", ".join(
            f"{format_mask(c)} generic {format_mask(self.generic_points[c])}"
            for c in self.irreducible_closed
        )


def _is_reducible(t: Topology, c: SetMask) -> bool:
    # C = C1 u C2 with proper closed parts iff some proper closed C1 leaves a
    # remainder whose closure is still proper in C
    for c1 in t.closed_sets:
        if c1 and c1 != c and c1 & ~c == 0:
            if closure_of(t, c & ~c1) != c:
                return True
    return False


def irreducible_report(t: Topology) -> IrreducibleReport:
    closures = t.point_closures
    irreducible = []
    generic = {}
    for c in t.closed_sets:
        if c == 0 or _is_reducible(t, c):
            continue
        irreducible.append(c)
        generic[c] = sum(1 << g for g in points_of(c) if closures[g] == c)
    return IrreducibleReport(tuple(irreducible), generic)


def _first_pair(n, pred):
    for x in range(n):
        for y in range(n):
            if x != y and pred(x, y):
                return x, y
    return None


def _decide_r0(t: Topology) -> tuple[bool, Witness | None]:
    cl = t.point_closures
    ker = t.point_kernels

    # symmetric specialization
    bad = _first_pair(t.n, lambda x, y: bool(cl[y] >> x & 1) != bool(cl[x] >> y & 1))
    primary = bad is None
    # point closures equal point kernels
    alt_kernel = all(cl[x] == ker[x] for x in range(t.n))
    # every open set contains the closures of its points
    alt_open = all(cl[x] & ~v == 0 for v in t.opens for x in points_of(v))
    if not primary == alt_kernel == alt_open:
        raise InternalInconsistency(
            f"R0 characterizations disagree on {t.describe()}: "
            f"symmetric={primary} cl=ker={alt_kernel} open-contains-closure={alt_open}"
        )
    if primary:
        return True, None
    x, y = bad
    return False, Witness("x in cl(y) but y not in cl(x)" if cl[y] >> x & 1 else "y in cl(x) but x not in cl(y)",
                          (x, y), (cl[x], cl[y]))


def _decide_r1(t: Topology, r0: bool) -> tuple[bool, Witness | None]:
    cl = t.point_closures
    ker = t.point_kernels

    # distinct point closures lie in disjoint opens; the least open around
    # cl(x) is its kernel, so disjoint opens exist iff the kernels are disjoint
    def inseparable(x, y):
        return cl[x] != cl[y] and kernel_of(t, cl[x]) & kernel_of(t, cl[y]) != 0

    bad = _first_pair(t.n, inseparable)
    primary = bad is None
    alt_points = r0 and _first_pair(
        t.n, lambda x, y: not cl[x] >> y & 1 and ker[x] & ker[y] != 0
    ) is None
    alt_adherence = r0 and all(
        adherence(t, neighborhood_filter(t, x)) == cl[x] for x in range(t.n)
    )
    if not primary == alt_points == alt_adherence:
        raise InternalInconsistency(
            f"R1 characterizations disagree on {t.describe()}: "
            f"closures={primary} points={alt_points} adherence={alt_adherence}"
        )
    if primary:
        return True, None
    x, y = bad
    return False, Witness("point closures cannot be separated by disjoint open sets",
                          (x, y), (cl[x], cl[y]))


def _decide_regular(t: Topology) -> tuple[bool, Witness | None]:
    ker = t.point_kernels
    for v in t.opens:
        for x in points_of(v):
            # ker(x) is the least open around x and closure is monotone
            u = ker[x]
            if closure_of(t, u) & ~v:
                return False, Witness("no open U with x in U and cl(U) inside V", (x,), (v,))
    return True, None


def _decide_t0(t: Topology) -> tuple[bool, Witness | None]:
    cl = t.point_closures
    bad = _first_pair(t.n, lambda x, y: cl[x] == cl[y])
    if bad is None:
        return True, None
    return False, Witness("distinct points with the same closure", bad, (cl[bad[0]],))


def _decide_t1(t: Topology) -> tuple[bool, Witness | None]:
    for x, c in enumerate(t.point_closures):
        if c != 1 << x:
            return False, Witness("singleton is not closed", (x,), (c,))
    return True, None


def _decide_t2(t: Topology) -> tuple[bool, Witness | None]:
    ker = t.point_kernels
    bad = _first_pair(t.n, lambda x, y: ker[x] & ker[y] != 0)
    if bad is None:
        return True, None
    return False, Witness("distinct points without disjoint neighborhoods", bad,
                          (ker[bad[0]], ker[bad[1]]))


def _decide_compact(t: Topology) -> tuple[bool, Witness | None]:
    # compact iff every filter has an adherent point
    for f in all_filters(t.ground):
        if adherence(t, f) == 0:
            return False, Witness("filter without adherent point", (), (f.min_member,))
    return True, None


def classify(t: Topology) -> AxiomProfile:
    witnesses = {}
    verdicts = {}

    def record(name, result):
        ok, w = result
        verdicts[name] = ok
        if w is not None:
            witnesses[name] = w

    record("T0", _decide_t0(t))
    record("T1", _decide_t1(t))
    record("T2", _decide_t2(t))
    record("R0", _decide_r0(t))
    record("R1", _decide_r1(t, verdicts["R0"]))
    record("regular", _decide_regular(t))

    report = irreducible_report(t)
    missing = [c for c in report.irreducible_closed if report.generic_points[c] == 0]
    record("presober", (not missing, Witness("irreducible closed set without generic point", (), tuple(missing[:1]))
                        if missing else None))
    multiple = [c for c in report.irreducible_closed if bin(report.generic_points[c]).count("1") != 1]
    if multiple:
        c = multiple[0]
        record("sober", (False, Witness("irreducible closed set without a unique generic point",
                                        tuple(points_of(report.generic_points[c])), (c,))))
    else:
        record("sober", (True, None))
    record("compact", _decide_compact(t))
    return AxiomProfile(**verdicts, witnesses=witnesses)


def generic_points_unique(t: Topology) -> bool:
    report = irreducible_report(t)
    return all(bin(g).count("1") <= 1 for g in report.generic_points.values())
