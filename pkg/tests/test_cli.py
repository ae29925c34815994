from __future__ import annotations

import json
import subprocess
import sys

import pytest

from topolat.cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, run

from conftest import DATA

MC0 = '{"tag": "MultiConv", "special": [0]}'
MC_EMPTY = '{"tag": "MultiConv", "special": []}'


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    def test_two_generic_points(self, capsys):
        code, out, _ = call(capsys, "classify", DATA / "two_point_generic.json")
        assert code == EXIT_OK
        assert "presober  true" in out and "R1        false" in out
        assert "{0,1,2} generic {0,1}" in out

    def test_structured(self, capsys):
        code, out, _ = call(capsys, "classify", DATA / "partition.json", "--format", "structured")
        data = json.loads(out)
        assert code == EXIT_OK and data["axioms"]["regular"] is True and data["axioms"]["T0"] is False

    @pytest.mark.parametrize("name", ["malformed.json", "not_a_topology.json", "missing.json"])
    def test_bad_files(self, capsys, name):
        code, out, err = call(capsys, "classify", DATA / name)
        assert code == EXIT_USAGE and err.startswith("topolat: error:") and not out


class TestConstruct:
    def test_beta_round_trip(self, capsys, tmp_path):
        target = tmp_path / "beta.json"
        code, _, _ = call(capsys, "construct", "beta", DATA / "beta_discrete.json", "-o", target)
        assert code == EXIT_OK
        assert json.loads(target.read_text())["opens"] == [[], [1], [0, 1], [2], [1, 2], [0, 1, 2]]
        code, out, _ = call(capsys, "classify", target)
        assert code == EXIT_OK and "R1        false" in out

    @pytest.mark.parametrize("what", ["at", "bar"])
    def test_interval_ends_fix_finite_topologies(self, capsys, what):
        path = DATA / "sierpinski_like.json"
        _, out, _ = call(capsys, "construct", what, path)
        assert json.loads(out) == json.loads(path.read_text())

    def test_meet_and_join(self, capsys):
        a, b = DATA / "partition.json", DATA / "two_point_generic.json"
        _, meet, _ = call(capsys, "construct", "meet", a, b)
        _, join, _ = call(capsys, "construct", "join", a, b)
        assert json.loads(meet)["opens"] == [[], [0, 1, 2]]
        assert len(json.loads(join)["opens"]) >= 4

    def test_wrong_arity(self, capsys):
        code, _, err = call(capsys, "construct", "meet", DATA / "partition.json")
        assert code == EXIT_USAGE and "error" in err


class TestEnumerateVerifyTable:
    def test_enumerate_count(self, capsys):
        code, out, _ = call(capsys, "enumerate", 3, "--count-only")
        assert code == EXIT_OK and out.startswith("count: 29")

    def test_enumerate_structured(self, capsys):
        _, out, _ = call(capsys, "enumerate", 2, "--format", "structured")
        assert len(json.loads(out)["topologies"]) == 4

    def test_verify_exit_reflects_refutation(self, capsys):
        code, out, _ = call(capsys, "verify", 2)
        assert code == EXIT_REFUTED
        assert "[refuted] beta-irreducibles" in out

    def test_verify_one_point_clean(self, capsys):
        code, out, _ = call(capsys, "verify", 1)
        assert code == EXIT_OK and "0 refuted" in out

    def test_table_csv(self, capsys):
        code, out, _ = call(capsys, "table", 3)
        assert code == EXIT_OK and "R0_equals_bell,yes" in out

    def test_usage_errors_exit_two(self, capsys):
        for argv in (["enumerate", "0"], ["frobnicate"], ["verify", "3", "--jobs", "x"]):
            with pytest.raises(SystemExit) as info:
                run(argv)
            assert info.value.code == EXIT_USAGE
        capsys.readouterr()

    def test_enumerate_too_large(self, capsys):
        code, _, err = call(capsys, "enumerate", 6)
        assert code == EXIT_USAGE and "n <=" in err


class TestSymbolic:
    def test_classify(self, capsys):
        code, out, _ = call(capsys, "sym", "classify", MC0)
        assert code == EXIT_OK and "R1        true" in out and "scope" in out

    def test_beta(self, capsys):
        code, out, _ = call(capsys, "sym", "beta", MC_EMPTY, 0,
                            '{"tag": "CofiniteContaining", "base": [0]}', "--format", "structured")
        assert code == EXIT_OK and json.loads(out)["beta"] == {"tag": "MultiConv", "special": [0]}

    def test_beta_out_of_catalog(self, capsys):
        code, _, err = call(capsys, "sym", "beta", MC_EMPTY, 0, '{"tag": "CofiniteContaining", "base": [1]}')
        assert code == EXIT_USAGE and "leaves the catalog" in err

    def test_minimality(self, capsys):
        _, out, _ = call(capsys, "sym", "minimality", MC_EMPTY)
        assert "fail" in out and "CofiniteContaining({0})" in out
        _, out, _ = call(capsys, "sym", "minimality", MC0, "--mode", "regular")
        assert "pass" in out

    def test_chain(self, capsys):
        _, out, _ = call(capsys, "sym", "chain", 3)
        assert "MultiConv({0,1}): presober=True" in out

    def test_demos(self, capsys):
        _, out, _ = call(capsys, "sym", "demo", "one-point-coarsening")
        assert "beta strictly weaker than the AT closure; witness open: block {0}; beta is R1" in out
        _, out, _ = call(capsys, "sym", "demo", "paired-blocks", "--format", "structured")
        assert json.loads(out)["facts"]["point_closures"][:2] == ["{1}", "{2, 3}"]
        _, out, _ = call(capsys, "sym", "demo", "presober-descent", 4)
        assert "strictly descending and presober: True" in out

    def test_unknown_demo(self, capsys):
        code, _, err = call(capsys, "sym", "demo", "nope")
        assert code == EXIT_USAGE and "paired-blocks" in err

    def test_oracle_single_level(self, capsys):
        code, out, _ = call(capsys, "sym", "oracle", "--low", 4, "--high", 4)
        assert code == EXIT_OK and out.rstrip().endswith("True")

    def test_paired_block_rendering(self, capsys):
        _, out, _ = call(capsys, "sym", "classify", '{"tag": "AtRho"}', "--blocks", "paired")
        assert "T0        false" in out


def test_byte_identical_output():
    argv = [sys.executable, "-m", "topolat", "verify", "3", "--format", "structured"]
    a = subprocess.run(argv, capture_output=True)
    b = subprocess.run(argv + ["--jobs", "2"], capture_output=True)
    assert a.stdout == b.stdout and a.returncode == b.returncode == EXIT_REFUTED
