"""Symbolic topologies on countable sets partitioned into blocks.

Sets of blocks are finite or cofinite (:class:`SatSet`); the representable
topologies are the cofinite block topology and the topologies in which a
finite set of blocks are limits of every cofinite filter.
"""

from .blocks import PAIRED_BLOCKS, SINGLETON_BLOCKS, BlockStructure, concretize
from .catalog import (
    SymAxiomProfile,
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
    sym_leq,
    sym_nbhd,
    sym_open,
)
from .constructions import (
    catalog_filters,
    minimality_condition,
    one_point_demo,
    paired_blocks_demo,
    presober_chain,
    presober_chain_report,
    presober_descent_demo,
)
from .satset import SatSet, sat_algebra

__all__ = [
    "PAIRED_BLOCKS",
    "SINGLETON_BLOCKS",
    "BlockStructure",
    "SatSet",
    "SymAxiomProfile",
    "SymFilter",
    "SymTopology",
    "catalog_filters",
    "concretize",
    "filter_contains",
    "minimality_condition",
    "one_point_demo",
    "paired_blocks_demo",
    "presober_chain",
    "presober_chain_report",
    "presober_descent_demo",
    "sat_algebra",
    "strictness_witness",
    "sym_adherence",
    "sym_beta",
    "sym_classify",
    "sym_closure",
    "sym_compare",
    "sym_converges",
    "sym_filter_kind",
    "sym_kernel",
    "sym_leq",
    "sym_nbhd",
    "sym_open",
]
