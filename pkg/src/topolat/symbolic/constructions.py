"""Constructions and filter-catalog checks on symbolic block topologies."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import InvalidInput
from .blocks import PAIRED_BLOCKS, BlockStructure, concretize
from .catalog import (
    SymFilter,
    SymTopology,
    filter_contains,
    strictness_witness,
    sym_adherence,
    sym_beta,
    sym_classify,
    sym_closure,
    sym_compare,
    sym_converges,
    sym_filter_kind,
    sym_kernel,
    sym_nbhd,
    sym_open,
)
from .satset import SatSet

DEFAULT_BOUND = 6

MINIMALITY_SCOPE = (
    "only catalog filters were checked: principal filters on finite or cofinite "
    "block sets and cofinite-generated filters, with base indices up to {bound}, "
    "deduplicated under permutations of non-special blocks"
)


def _canonical(f: SymFilter, special: frozenset[int]) -> tuple:
    # blocks outside the special set are interchangeable; relabel the ones in
    # the base onto the lowest free indices
    idx = sorted(f.indices())
    free = (i for i in range(len(idx) + len(special) + 1) if i not in special)
    relabel = {b: b if b in special else None for b in idx}
    for b in idx:
        if relabel[b] is None:
            relabel[b] = next(free)
    return f.tag, f.base.cofinite, frozenset(relabel.values())


def catalog_filters(bound: int = DEFAULT_BOUND, special: frozenset[int] = frozenset()) -> list[SymFilter]:
    """Every catalog filter with base indices in ``0..bound``, one per symmetry class."""
    universe = range(bound + 1)
    subsets = [frozenset(c) for k in range(bound + 2) for c in combinations(universe, k)]
    out = []
    seen = set()
    for s in subsets:
        cands = [SymFilter.principal(SatSet.cofinite_except(s)), SymFilter.cofinite_containing(s)]
        if s:
            cands.insert(0, SymFilter.principal(SatSet.finite(s)))
        for f in cands:
            key = _canonical(f, special)
            if key not in seen:
                seen.add(key)
                out.append(f)
    return out


@dataclass(frozen=True)
class MinimalityReport:
    topology: SymTopology
    mode: str
    passed: bool
    checked: int
    relevant: int
    witness: SymFilter | None
    scope: str

    def describe(self) -> str:
        head = f"{self.topology} minimality condition ({self.mode}): {'pass' if self.passed else 'fail'}"
        lines = [head, f"  filters checked: {self.checked}; with a point closure as adherence: {self.relevant}"]
        if self.witness is not None:
            lines.append(f"  witness: {self.witness} (adherence {sym_adherence(self.topology, self.witness)}, not convergent)")
        lines.append(f"  scope: {self.scope}")
        return "\n".join(lines)


def minimality_condition(t: SymTopology, mode: str = "R1", bound: int = DEFAULT_BOUND) -> MinimalityReport:
    """Check that every open (``R1``) or regular (``regular``) catalog filter
    whose adherence is a single block converges to that block."""
    if mode not in ("R1", "regular"):
        raise InvalidInput(f"mode must be 'R1' or 'regular', got {mode!r}")
    if not getattr(sym_classify(t), mode):
        raise InvalidInput(f"{t} is not {mode}")
    checked = relevant = 0
    witness = None
    for f in catalog_filters(bound, t.special):
        is_open, is_regular = sym_filter_kind(t, f)
        if not (is_open if mode == "R1" else is_regular):
            continue
        checked += 1
        b = sym_adherence(t, f).single_block()
        if b is None:
            continue
        relevant += 1
        if not sym_converges(t, f, b) and witness is None:
            witness = f
    return MinimalityReport(t, mode, witness is None, checked, relevant, witness,
                            MINIMALITY_SCOPE.format(bound=bound))


def presober_chain(k: int, blocks: BlockStructure | None = None) -> list[SymTopology]:
    if k < 1:
        raise InvalidInput("chain length must be at least 1")
    t = SymTopology.converging_to((), blocks) if blocks else SymTopology.converging_to()
    chain = [t]
    for i in range(k - 1):
        t = sym_beta(t, i, SymFilter.cofinite_containing([i]))
        chain.append(t)
    return chain


@dataclass(frozen=True)
class ChainStep:
    coarser: SymTopology
    finer: SymTopology
    pivot: int
    strictly_less: bool
    presober_before: bool
    presober_after: bool
    filter_contains_bottom_nbhd: bool
    witness_open: SatSet | None

    @property
    def ok(self) -> bool:
        return (self.strictly_less and self.presober_before and self.presober_after
                and self.filter_contains_bottom_nbhd and self.witness_open is not None)


def presober_chain_report(k: int) -> list[ChainStep]:
    """Each step of the chain, with the facts that make it a presober descent."""
    chain = presober_chain(k)
    bottom = SymTopology.cofinite()
    steps = []
    for i, (fine, coarse) in enumerate(zip(chain, chain[1:])):
        f = SymFilter.cofinite_containing([i])
        steps.append(ChainStep(
            coarser=coarse,
            finer=fine,
            pivot=i,
            strictly_less=sym_compare(coarse, fine) == "less",
            presober_before=sym_classify(fine).presober,
            presober_after=sym_classify(coarse).presober,
            filter_contains_bottom_nbhd=filter_contains(f, sym_nbhd(bottom, i)),
            witness_open=strictness_witness(coarse, fine),
        ))
    return steps


# -- demonstrations -------------------------------------------------------------


@dataclass
class Demo:
    title: str
    lines: list[str] = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    def add(self, line: str) -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join([self.title, *self.lines])


def paired_blocks_demo(shown: int = 4) -> Demo:
    """The R0, non-T0 topology on the positive integers with closures {1}, {2n, 2n+1}."""
    from .oracle import subbase_topology_agrees

    blocks = PAIRED_BLOCKS
    rho = SymTopology.cofinite(blocks)
    demo = Demo("paired blocks on the positive integers")
    subbase = [SatSet.empty()] + [SatSet.cofinite_except([b]) for b in range(shown)]
    demo.add("subbase: " + ", ".join(concretize(blocks, s) for s in subbase) + ", ...")
    closures = [concretize(blocks, sym_closure(rho, SatSet.finite([b]))) for b in range(shown)]
    demo.add("point closures: " + ", ".join(closures) + ", ...")
    demo.facts["point_closures"] = closures
    generated_is_cofinite = subbase_topology_agrees(rho)
    demo.facts["subbase_generates_cofinite_blocks"] = generated_is_cofinite
    demo.add(f"subbase generates ∅ plus the cofinite block sets: {generated_is_cofinite}")
    # complements of closures of finite sets are again complements of finite block unions
    at_equal = all(
        sym_open(rho, ~sym_closure(rho, SatSet.finite(h))) for h in [(), (0,), (1, 3), (0, 2, 5)]
    ) and generated_is_cofinite
    demo.facts["at_equals_rho"] = at_equal
    demo.add(f"bottom of the interval equals rho: {at_equal}")
    kernels = [concretize(blocks, sym_kernel(rho, SatSet.finite([b]))) for b in range(shown)]
    demo.facts["alexandroff_generators"] = kernels
    top = SymTopology.converging_to((), blocks)
    demo.add("AT closure generated by the point kernels: " + ", ".join(kernels) + ", ... = " + str(top))
    profile = sym_classify(rho)
    demo.facts["R0"] = profile.R0
    demo.facts["T0"] = profile.T0
    demo.add(f"rho is R0: {profile.R0}; rho is T0: {profile.T0}")
    return demo


def one_point_demo(x: int = 0) -> Demo:
    """Coarsen the discrete block topology at ``x`` by the cofinite filter around ``x``."""
    top = SymTopology.converging_to()
    bottom = SymTopology.cofinite()
    f = sym_nbhd(bottom, x)
    demo = Demo(f"coarsening the AT closure at block {x}")
    adh = sym_adherence(top, f)
    demo.facts["adherence"] = adh
    demo.add(f"filter {f}: adherence in the AT closure = {adh}; point closure = {SatSet.finite([x])}")
    b = sym_beta(top, x, f)
    demo.facts["beta"] = b
    demo.add(f"beta = {b}")
    profile = sym_classify(b)
    order = sym_compare(b, top)
    w = strictness_witness(b, top)
    demo.facts.update(R1=profile.R1, order=order, witness=w,
                      witness_in_filter=f.contains(w) if w is not None else None)
    demo.add(f"beta {'strictly weaker than' if order == 'less' else order + ' to'} the AT closure; "
             f"witness open: block {w}; beta is {'R1' if profile.R1 else 'not R1'}")
    return demo


def presober_descent_demo(k: int = 5) -> Demo:
    demo = Demo(f"descending chain of {k} presober topologies")
    chain = presober_chain(k)
    for t in chain:
        demo.add(f"{t}: presober={sym_classify(t).presober}")
    steps = presober_chain_report(k)
    for s in steps:
        demo.add(f"{s.coarser} < {s.finer}: pivot {s.pivot}, witness open {s.witness_open}, "
                 f"filter contains bottom neighborhoods: {s.filter_contains_bottom_nbhd}")
    demo.facts["chain"] = chain
    demo.facts["steps_ok"] = all(s.ok for s in steps)
    demo.add(f"every step strictly descending and presober: {demo.facts['steps_ok']}")
    return demo
