"""Topologies on finite sets, their separation axioms and the beta coarsening."""

from .beta import (
    BetaSpec,
    beta,
    interval_criteria_report,
    open_subfilter_witness,
    r1_filter_criterion,
)
from .core import (
    GroundSet,
    Preorder,
    Topology,
    alexandroff_closure,
    at_topology,
    closure_of,
    from_subbasis,
    join,
    kernel_of,
    lattice_op,
    meet,
    partition_topology,
    same_interval,
    specialization,
    t0_quotient,
)
from .enumeration import enumerate_topologies
from .errors import (
    InternalInconsistency,
    InvalidInput,
    TopolatError,
    TopologyAxiomError,
    UnsupportedCombination,
)
from .filters import (
    FiniteFilter,
    adherence,
    converges,
    filter_kind,
    neighborhood_filter,
)
from .harness import ClaimReport, classification_table, verify_claims
from .separation import AxiomProfile, IrreducibleReport, classify, irreducible_report

__version__ = "0.1.0"

__all__ = [
    "AxiomProfile",
    "BetaSpec",
    "ClaimReport",
    "FiniteFilter",
    "GroundSet",
    "InternalInconsistency",
    "InvalidInput",
    "IrreducibleReport",
    "Preorder",
    "TopolatError",
    "Topology",
    "TopologyAxiomError",
    "UnsupportedCombination",
    "adherence",
    "alexandroff_closure",
    "at_topology",
    "beta",
    "classification_table",
    "classify",
    "closure_of",
    "converges",
    "enumerate_topologies",
    "filter_kind",
    "from_subbasis",
    "irreducible_report",
    "join",
    "kernel_of",
    "lattice_op",
    "interval_criteria_report",
    "meet",
    "neighborhood_filter",
    "open_subfilter_witness",
    "partition_topology",
    "r1_filter_criterion",
    "same_interval",
    "specialization",
    "t0_quotient",
    "verify_claims",
]
