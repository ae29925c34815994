from __future__ import annotations

import pytest

from topolat.errors import InvalidInput
from topolat.symbolic import SatSet, SymFilter, SymTopology, sym_closure
from topolat.symbolic.oracle import (
    LEVELS,
    SAMPLE_TOPOLOGIES,
    Truncation,
    _compare,
    model,
    oracle_adherence,
    oracle_axioms,
    oracle_closure,
    sample_sets,
    subbase_topology_agrees,
    truncation_agreement,
)


@pytest.fixture(scope="module")
def agreement():
    return truncation_agreement()


def test_every_formula_agrees_at_every_level(agreement):
    assert {a.level for a in agreement} == set(LEVELS)
    bad = [(a.formula, a.level, a.mismatches[:1], a.unstable[:1]) for a in agreement if not a.ok]
    assert not bad
    assert all(a.checked > 0 for a in agreement)


def test_formula_names_cover_the_rules(agreement):
    assert {a.formula for a in agreement} == {
        "open", "closure", "kernel", "neighborhood", "adherence", "filter-inclusion",
        "convergence", "filter-kind", "axioms", "beta-catalog",
    }


def test_wrong_closure_formula_is_caught():
    def wrong(t, a):
        # forgets the special blocks
        return a

    cases = [(t, a) for t in SAMPLE_TOPOLOGIES for a in sample_sets()]
    ag = _compare("closure", 5, cases, wrong, oracle_closure)
    assert not ag.ok and ag.mismatches


def test_wrong_axiom_rule_is_caught():
    def wrong(t):
        o = oracle_axioms(t, 5)
        return type(o)(o.R0, o.R1, o.regular, not o.presober, o.compact)

    ag = _compare("axioms", 5, [(t,) for t in SAMPLE_TOPOLOGIES], wrong, oracle_axioms)
    assert len(ag.mismatches) == len(SAMPLE_TOPOLOGIES)


class TestTruncation:
    def test_encode_decode_round_trip(self):
        tr = Truncation(4)
        for a in sample_sets(4):
            assert tr.decode(tr.encode(a)) == a

    def test_encode_rejects_large_index(self):
        with pytest.raises(InvalidInput):
            Truncation(3).encode(SatSet.finite([7]))

    def test_model_is_a_topology_with_block_closures(self):
        for t in SAMPLE_TOPOLOGIES:
            topo = model(t, 4)
            for b in range(5):
                assert topo.point_closures[b] == 1 << b

    def test_examples(self):
        mc0 = SymTopology.converging_to((0,))
        assert oracle_closure(mc0, SatSet.cofinite_except([5]), 6) == sym_closure(mc0, SatSet.cofinite_except([5]))
        assert oracle_adherence(SymTopology.converging_to(()), SymFilter.cofinite_containing([]), 5).is_empty

    def test_atrho_axioms(self):
        o = oracle_axioms(SymTopology.cofinite(), 5)
        assert o.R0 and not o.R1 and not o.presober and o.compact


def test_subbase_generates_cofinite_blocks():
    assert subbase_topology_agrees(SymTopology.cofinite())
