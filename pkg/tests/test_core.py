from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topolat.core import (
    MAX_POINTS,
    GroundSet,
    Topology,
    alexandroff_closure,
    at_topology,
    closure_of,
    format_mask,
    from_subbasis,
    is_kernelled,
    join,
    kernel_of,
    lattice_op,
    mask_of,
    meet,
    partition_topology,
    points_of,
    same_interval,
    specialization,
    t0_quotient,
)
from topolat.errors import InvalidInput, TopologyAxiomError

from conftest import all_topologies, partition_example, topologies, topology_pairs
from oracles import closure, kernel, pairwise_closure

X3 = 0b111


def test_mask_helpers_round_trip():
    assert mask_of([0, 2]) == 0b101
    assert points_of(0b101) == [0, 2]
    assert format_mask(0) == "{}"
    assert format_mask(0b110) == "{1,2}"


@pytest.mark.parametrize("n", [0, -1, MAX_POINTS + 1])
def test_ground_size_limits(n):
    with pytest.raises(InvalidInput):
        GroundSet(n)


def test_ground_rejects_wide_mask_and_bad_point():
    g = GroundSet(3)
    with pytest.raises(InvalidInput):
        g.check(0b1000)
    with pytest.raises(InvalidInput):
        g.check_point(3)


class TestFromSubbasis:
    def test_empty_subbasis_is_indiscrete(self):
        assert from_subbasis(GroundSet(3), []) == Topology.indiscrete(3)

    def test_atoms_give_discrete(self):
        t = from_subbasis(GroundSet(3), [0b001, 0b010, 0b100])
        assert t == Topology.discrete(3)
        assert len(t.opens) == 8

    def test_two_complements(self):
        t = from_subbasis(GroundSet(3), [X3 & ~0b001, X3 & ~0b110])
        assert t.opens == (0, 0b001, 0b110, X3)

    def test_rejects_mask_outside_ground(self):
        with pytest.raises(InvalidInput):
            from_subbasis(GroundSet(2), [0b100])

    @given(st.integers(1, 5).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=6))))
    @settings(max_examples=200)
    def test_matches_pairwise_fixed_point(self, case):
        n, family = case
        g = GroundSet(n)
        assert from_subbasis(g, family).open_set == pairwise_closure(g, family)


class TestFromOpens:
    def test_canonical_order_and_dedup(self):
        t = Topology.from_opens(GroundSet(3), [X3, 0b110, 0, 0b001, 0b110])
        assert t.opens == (0, 0b001, 0b110, X3)

    @pytest.mark.parametrize("family,axiom", [
        ([X3], "contains-empty-set"),
        ([0], "contains-ground-set"),
        ([0, 0b001, 0b010, X3], "closed-under-union"),
        ([0, 0b011, 0b110, X3], "closed-under-intersection"),
    ])
    def test_axiom_diagnostics(self, family, axiom):
        with pytest.raises(TopologyAxiomError) as info:
            Topology.from_opens(GroundSet(3), family)
        assert info.value.axiom == axiom
        if axiom.startswith("closed"):
            assert len(info.value.witness) == 2


class TestClosureKernel:
    def test_indiscrete(self):
        t = Topology.indiscrete(3)
        assert closure_of(t, 0b010) == X3
        assert kernel_of(t, 0b010) == X3

    def test_discrete(self):
        t = Topology.discrete(3)
        assert closure_of(t, 0b010) == 0b010
        assert kernel_of(t, 0b010) == 0b010

    def test_partition(self):
        t = partition_example()
        assert closure_of(t, 0b010) == 0b110
        assert kernel_of(t, 0b010) == 0b110

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_duality_and_definitions_exhaustive(self, n):
        for t in all_topologies(n):
            for x in range(n):
                for y in range(n):
                    in_cl = bool(closure_of(t, 1 << y) >> x & 1)
                    in_ker = bool(kernel_of(t, 1 << x) >> y & 1)
                    assert in_cl == in_ker
            for a in t.ground.subsets():
                assert closure_of(t, a) == closure(t, a)
                assert kernel_of(t, a) == kernel(t, a)


class TestSpecialization:
    def test_discrete_is_identity(self):
        p = specialization(Topology.discrete(2))
        assert p.matrix() == [[True, False], [False, True]]

    def test_indiscrete_is_full(self):
        p = specialization(Topology.indiscrete(2))
        assert p.matrix() == [[True, True], [True, True]]

    def test_partition_classes(self):
        p = specialization(partition_example())
        assert p.classes() == [0b001, 0b110]
        assert p.leq(1, 2) and p.leq(2, 1)
        assert not p.leq(0, 1) and not p.leq(1, 0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_is_preorder_matching_closures(self, n):
        for t in all_topologies(n):
            p = specialization(t)
            assert p.is_reflexive() and p.is_transitive()
            for x in range(n):
                for y in range(n):
                    assert p.leq(x, y) == bool(closure_of(t, 1 << y) >> x & 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_opens_are_up_sets(self, n):
        for t in all_topologies(n):
            assert tuple(specialization(t).up_sets()) == t.opens


class TestLattice:
    def test_meet_with_discrete(self):
        t = partition_example()
        assert meet(t, Topology.discrete(3)) == t

    def test_join_with_indiscrete(self):
        t = partition_example()
        assert join(t, Topology.indiscrete(3)) == t

    def test_join_two_points(self):
        g = GroundSet(2)
        a = Topology(g, (0, 0b01, 0b11))
        b = Topology(g, (0, 0b10, 0b11))
        assert join(a, b) == Topology.discrete(2)

    def test_bad_mode_and_ground_mismatch(self):
        with pytest.raises(InvalidInput):
            lattice_op(Topology.discrete(2), Topology.discrete(2), "sum")
        with pytest.raises(InvalidInput):
            meet(Topology.discrete(2), Topology.discrete(3))

    @given(topology_pairs())
    @settings(max_examples=150)
    def test_bounds_and_commutativity(self, pair):
        a, b = pair
        m, j = meet(a, b), join(a, b)
        assert m <= a <= j and m <= b <= j
        assert m == meet(b, a) and j == join(b, a)
        assert meet(a, a) == a and join(a, a) == a

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(
        *[st.lists(st.integers(0, (1 << n) - 1), max_size=4).map(
            lambda fam, n=n: from_subbasis(GroundSet(n), fam)) for _ in range(3)])))
    @settings(max_examples=100)
    def test_associativity_and_absorption(self, triple):
        a, b, c = triple
        assert meet(meet(a, b), c) == meet(a, meet(b, c))
        assert join(join(a, b), c) == join(a, join(b, c))
        assert meet(a, join(a, b)) == a
        assert join(a, meet(a, b)) == a


class TestInterval:
    @pytest.mark.parametrize("t", [Topology.discrete(3), Topology.indiscrete(3), partition_example()])
    def test_at_fixes_finite_topologies(self, t):
        assert at_topology(t) == t

    def test_bar_of_partition(self):
        t = partition_example()
        assert alexandroff_closure(t) == t
        assert [a for a in range(8) if is_kernelled(t, a)] == list(t.opens)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_interval_collapses(self, n):
        for t in all_topologies(n):
            at, bar = at_topology(t), alexandroff_closure(t)
            assert at <= t <= bar
            assert at == t == bar
            assert at.point_closures == t.point_closures == bar.point_closures

    def test_same_interval_examples(self):
        t = partition_example()
        assert same_interval(t, t)
        assert not same_interval(Topology.discrete(2), Topology.indiscrete(2))

    def test_same_interval_is_equality_on_three_points(self):
        tops = all_topologies(3)
        for a in tops:
            for b in tops:
                assert same_interval(a, b) == (a == b) == (specialization(a) == specialization(b))


class TestQuotient:
    def test_discrete_identity(self):
        q, cls = t0_quotient(Topology.discrete(3))
        assert q == Topology.discrete(3) and cls == (0, 1, 2)

    def test_indiscrete_single_point(self):
        q, cls = t0_quotient(Topology.indiscrete(3))
        assert q.n == 1 and cls == (0, 0, 0)

    def test_partition_to_two_points(self):
        q, cls = t0_quotient(partition_example())
        assert q == Topology.discrete(2)
        assert cls == (0, 1, 1)

    @given(topologies())
    @settings(max_examples=100)
    def test_quotient_is_t0(self, t):
        q, _ = t0_quotient(t)
        assert len(set(q.point_closures)) == q.n


def test_partition_topology_builder():
    g = GroundSet(3)
    assert partition_topology(g, [0b001, 0b110]) == partition_example()
