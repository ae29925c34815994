from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topolat.errors import InvalidInput
from topolat.symbolic import SatSet, sat_algebra

# exceptions stay below HORIZON - 1, so membership on range(HORIZON) is faithful
HORIZON = 10

sat_sets = st.builds(SatSet, st.booleans(), st.frozensets(st.integers(0, 7), max_size=5))


def model(a: SatSet) -> frozenset[int]:
    return frozenset(b for b in range(HORIZON) if b in a)


@given(sat_sets, sat_sets)
@settings(max_examples=300)
def test_operations_match_finite_model(a, b):
    assert model(a | b) == model(a) | model(b)
    assert model(a & b) == model(a) & model(b)
    assert model(a - b) == model(a) - model(b)
    assert model(~a) == frozenset(range(HORIZON)) - model(a)
    assert (a <= b) == (model(a) <= model(b))
    assert (a == b) == (model(a) == model(b))
    assert a.isdisjoint(b) == model(a).isdisjoint(model(b))


@given(sat_sets, sat_sets, sat_sets)
@settings(max_examples=200)
def test_boolean_algebra_laws(a, b, c):
    assert ~~a == a
    assert a | b == b | a and a & b == b & a
    assert a | (b | c) == (a | b) | c
    assert a & (b | c) == (a & b) | (a & c)
    assert a | (b & c) == (a | b) & (a | c)
    assert ~(a | b) == ~a & ~b
    assert a | ~a == SatSet.full() and (a & ~a).is_empty
    assert a | (a & b) == a


@given(sat_sets)
def test_json_round_trip(a):
    assert SatSet.from_obj(a.to_obj()) == a


class TestSatAlgebra:
    def test_union_of_finite_and_cofinite(self):
        r = sat_algebra("union", SatSet.finite([1]), SatSet.cofinite_except([1, 2]))
        assert r == SatSet.cofinite_except([2])

    def test_intersect(self):
        assert sat_algebra("intersect", SatSet.finite([0, 1]), SatSet.cofinite_except([1])) == SatSet.finite([0])

    def test_complement(self):
        assert sat_algebra("complement", SatSet.finite([3])) == SatSet.cofinite_except([3])

    def test_subset_and_membership(self):
        assert sat_algebra("subset", SatSet.finite([5]), SatSet.cofinite_except([4]))
        assert not sat_algebra("subset", SatSet.cofinite_except([]), SatSet.finite([0]))
        assert sat_algebra("membership", SatSet.cofinite_except([2]), 100)
        assert not sat_algebra("membership", SatSet.cofinite_except([2]), 2)

    def test_unknown_op(self):
        with pytest.raises(InvalidInput):
            sat_algebra("xor", SatSet.empty(), SatSet.empty())


def test_rendering():
    assert str(SatSet.empty()) == "∅"
    assert str(SatSet.full()) == "ℕ"
    assert str(SatSet.finite([2, 0])) == "{0,2}"
    assert str(SatSet.cofinite_except([1])) == "ℕ∖{1}"


def test_list_shorthand_and_errors():
    assert SatSet.from_obj([1, 2]) == SatSet.finite([1, 2])
    for bad in ({"mode": "both"}, {"mode": "finite", "exceptions": 3}, "x"):
        with pytest.raises(InvalidInput):
            SatSet.from_obj(bad)
    with pytest.raises(InvalidInput):
        SatSet.finite([-1])


def test_single_block():
    assert SatSet.finite([4]).single_block() == 4
    assert SatSet.finite([1, 2]).single_block() is None
    assert SatSet.cofinite_except([]).single_block() is None
