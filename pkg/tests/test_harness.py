from __future__ import annotations

import csv
import io
import json

import pytest

from topolat.harness import (
    CLAIM_IDS,
    NOT_APPLICABLE,
    REFUTED,
    VERIFIED,
    any_refuted,
    bell,
    classification_table,
    render_reports,
    render_reports_structured,
    verify_claims,
)
from topolat.separation import AXIOMS


@pytest.fixture(scope="module")
def reports3():
    return verify_claims(3)


def by_id(reports):
    return {r.claim: r for r in reports}


def test_one_report_per_claim_in_fixed_order(reports3):
    assert tuple(r.claim for r in reports3) == CLAIM_IDS


def test_deterministic_across_job_counts(reports3):
    other = verify_claims(3, jobs=2)
    assert render_reports(reports3) == render_reports(other)
    assert render_reports_structured(reports3) == render_reports_structured(other)


def test_verdicts_on_three_points(reports3):
    r = by_id(reports3)
    assert r["beta-equals-base-literal"].verdict == NOT_APPLICABLE
    assert r["beta-equals-base-literal"].reason
    assert r["beta-irreducibles"].verdict == REFUTED
    assert r["beta-irreducibles"].witness is not None
    others = [c for c in CLAIM_IDS if c not in ("beta-equals-base-literal", "beta-irreducibles")]
    assert all(r[c].verdict == VERIFIED for c in others), [r[c].claim for c in others if r[c].verdict != VERIFIED]
    assert any_refuted(reports3)


def test_instance_counts_cover_full_space(reports3):
    r = by_id(reports3)
    assert r["closure-kernel-duality"].instances == 29
    assert r["interval-membership"].instances == 29 ** 2
    # 29 topologies x 3 pivots x 7 filters
    assert r["beta-coarser"].instances == 609
    # 5 R0 topologies x 3 x 7
    assert r["beta-local-base"].instances == 105


def test_small_sizes_have_nothing_refuted_but_irreducibles():
    for n in (1, 2):
        refuted = [r.claim for r in verify_claims(n) if r.verdict == REFUTED]
        assert refuted == ([] if n == 1 else ["beta-irreducibles"])


def test_product_claims_skipped_above_four():
    r = by_id(verify_claims(5))
    assert r["beta-coarser"].verdict == NOT_APPLICABLE and r["beta-coarser"].instances == 0
    assert r["r1-implies-presober"].verdict == VERIFIED
    assert r["dual-enumeration"].instances == 6942


def test_witness_is_replayable(reports3):
    w = by_id(reports3)["beta-irreducibles"].witness
    text = json.dumps(w, sort_keys=True)
    assert json.loads(text)["topology"]["n"] == 3


def test_rendering(reports3):
    text = render_reports(reports3)
    assert text.splitlines()[-1] == "summary: 21 verified, 1 refuted, 1 not applicable"
    assert "elapsed" not in text
    assert "elapsed" in render_reports(reports3, timings=True)
    data = json.loads(render_reports_structured(reports3))
    assert [d["claim"] for d in data] == list(CLAIM_IDS)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_bell(n, expected):
    assert bell(n) == expected


class TestTable:
    def test_one_point_has_every_axiom(self):
        t = classification_table(1)
        assert t.rows == ((tuple(True for _ in AXIOMS), 1),)

    def test_three_points(self):
        t = classification_table(3)
        assert t.total == 29 and t.r0_count == 5 and t.bell_ok
        assert sum(c for _, c in t.rows) == 29

    def test_csv(self):
        rows = list(csv.reader(io.StringIO(classification_table(3).to_csv())))
        assert rows[0] == [*AXIOMS, "count"]
        assert ["total", "29"] in rows and ["R0_equals_bell", "yes"] in rows

    def test_four_points(self):
        t = classification_table(4)
        assert (t.total, t.r0_count) == (355, 15)
        assert t.as_obj()["R0_equals_bell"] is True
