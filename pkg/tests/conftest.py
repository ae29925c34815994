from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import strategies as st

from topolat.core import GroundSet, Topology, from_subbasis
from topolat.enumeration import enumerate_topologies

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def all_topologies(n: int) -> tuple[Topology, ...]:
    return tuple(enumerate_topologies(n))


def partition_example() -> Topology:
    """{∅, {0}, {1,2}, X} on three points."""
    return Topology(GroundSet(3), (0, 0b001, 0b110, 0b111))


def two_generic_example() -> Topology:
    """Opens are ∅ and the supersets of {0,1}: X has generic points 0 and 1."""
    return Topology(GroundSet(3), (0, 0b011, 0b111))


@st.composite
def topologies(draw, min_n: int = 1, max_n: int = 4):
    n = draw(st.integers(min_n, max_n))
    g = GroundSet(n)
    family = draw(st.lists(st.integers(0, g.full), max_size=6))
    return from_subbasis(g, family)


@st.composite
def topology_pairs(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    g = GroundSet(n)
    a = draw(st.lists(st.integers(0, g.full), max_size=5))
    b = draw(st.lists(st.integers(0, g.full), max_size=5))
    return from_subbasis(g, a), from_subbasis(g, b)


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    # one verdict line per acceptance criterion, in criterion order
    outcome = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py::test_criterion_" not in rep.nodeid:
                continue
            name = rep.nodeid.split("::")[-1]
            if outcome.get(name) != "FAIL":
                outcome[name] = "PASS" if key == "passed" else "FAIL"
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(outcome):
        _, _, number, *words = name.split("_")
        terminalreporter.write_line(f"criterion {int(number):2d}: {outcome[name]}  {' '.join(words)}")
