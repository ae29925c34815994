from __future__ import annotations

import pytest

from topolat.core import GroundSet, Topology, closure_of
from topolat.errors import InvalidInput
from topolat.filters import (
    FiniteFilter,
    adherence,
    all_filters,
    converges,
    filter_kind,
    neighborhood_filter,
)
from topolat.separation import classify

from conftest import all_topologies, partition_example
from oracles import closure

G3 = GroundSet(3)


def f3(mask: int) -> FiniteFilter:
    return FiniteFilter(G3, mask)


def test_empty_filter_rejected():
    with pytest.raises(InvalidInput):
        FiniteFilter(G3, 0)


def test_membership_is_superset():
    f = f3(0b010)
    assert 0b110 in f and 0b010 in f and 0b001 not in f
    assert f.members() == [0b010, 0b011, 0b110, 0b111]
    assert str(f) == "↑{1}"


def test_all_filters_count():
    assert len(all_filters(G3)) == 7


class TestNeighborhoods:
    def test_discrete(self):
        assert neighborhood_filter(Topology.discrete(3), 1).min_member == 0b010

    def test_indiscrete(self):
        assert neighborhood_filter(Topology.indiscrete(3), 1).min_member == 0b111

    def test_partition(self):
        assert neighborhood_filter(partition_example(), 1).min_member == 0b110


class TestAdherence:
    def test_examples(self):
        assert adherence(Topology.discrete(3), f3(0b010)) == 0b010
        assert all(adherence(Topology.indiscrete(3), f) == 0b111 for f in all_filters(G3))
        assert adherence(partition_example(), f3(0b010)) == 0b110

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_is_intersection_of_member_closures(self, n):
        for t in all_topologies(n):
            for f in all_filters(t.ground):
                expected = t.full
                for m in f.members():
                    expected &= closure(t, m)
                assert adherence(t, f) == expected

    def test_ground_mismatch(self):
        with pytest.raises(InvalidInput):
            adherence(Topology.discrete(2), f3(1))


class TestConvergence:
    def test_examples(self):
        assert converges(Topology.discrete(3), f3(0b010), 1)
        assert not converges(Topology.discrete(3), f3(0b011), 1)
        assert converges(partition_example(), f3(0b010), 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_convergence_facts_exhaustive(self, n):
        for t in all_topologies(n):
            for f in all_filters(t.ground):
                adh = adherence(t, f)
                for x in range(n):
                    nbhd_members = [u for u in t.opens if u >> x & 1]
                    by_definition = all(u in f for u in nbhd_members)
                    assert converges(t, f, x) == by_definition
                    if converges(t, f, x):
                        assert adh >> x & 1
                        # convergence spreads over the closure of the limit
                        for y in range(n):
                            if closure_of(t, 1 << x) >> y & 1:
                                assert converges(t, f, y)


class TestFilterKind:
    def test_examples(self):
        assert filter_kind(Topology.discrete(3), f3(0b010)) == (True, True)
        assert filter_kind(Topology.indiscrete(3), f3(0b010)) == (False, False)
        assert filter_kind(partition_example(), f3(0b110)) == (True, True)

    def test_open_but_not_regular(self):
        t = Topology(G3, (0, 0b001, 0b011, 0b111))
        assert filter_kind(t, f3(0b001)) == (True, False)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_member_definitions(self, n):
        for t in all_topologies(n):
            for f in all_filters(t.ground):
                members = f.members()
                # every member contains an open member
                open_base = all(any(t.is_open(b) and b & ~m == 0 for b in members) for m in members)
                regular = open_base and all(
                    any(closure(t, b) & ~m == 0 for b in members) for m in members)
                assert filter_kind(t, f) == (open_base, regular)
                if regular:
                    assert filter_kind(t, f)[0]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_neighborhood_adherence_contains_closure(n):
    for t in all_topologies(n):
        r0, r1 = classify(t).R0, classify(t).R1
        equal_everywhere = True
        for x in range(n):
            adh = adherence(t, neighborhood_filter(t, x))
            cl = closure_of(t, 1 << x)
            assert cl & ~adh == 0
            equal_everywhere &= adh == cl
        assert (r0 and equal_everywhere) == r1
