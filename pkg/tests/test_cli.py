"""Command line behaviour: exit codes, formats, and byte-stable dumps.

Golden files under tests/golden/ pin the serialization; regenerate them
only on a deliberate schema version bump.
"""

import json
import os
from pathlib import Path

import pytest

from kahlercheck.cli import main
from kahlercheck.kahler import CheckResult, PackageReport

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_single_case_json(capsys):
    code, out = run(capsys, "verify", "--case", "poly", "--n", "2", "--m", "2", "--jobs", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == "1"
    assert payload["pass"] is True
    assert payload["congruence_selfcheck"] is True
    (report,) = payload["reports"]
    assert report["case"] == "poly" and report["n"] == 2 and report["m"] == 2
    names = [c["name"] for c in report["checks"]]
    assert "hodge_riemann" in names and "poincare_duality" in names
    assert "generated_at" in payload["meta"]


def test_verify_grid_counts(capsys):
    code, out = run(capsys, "verify", "--case", "all", "--n", "1..2", "--m", "0..2", "--jobs", "1")
    assert code == 0
    payload = json.loads(out)
    # poly: 6 jobs, ext: m <= 2n keeps all 6 here, ext-usual: one per n
    assert len(payload["reports"]) == 14


def test_verify_markdown(capsys):
    code, out = run(capsys, "verify", "--case", "ext", "--n", "2", "--m", "2",
                    "--jobs", "1", "--format", "markdown")
    assert code == 0
    assert "# verification report" in out
    assert "suite: pass" in out


def test_verify_ext_usual_carries_signatures(capsys):
    code, out = run(capsys, "verify", "--case", "ext-usual", "--n", "2", "--jobs", "1")
    assert code == 0
    (report,) = json.loads(out)["reports"]
    doc = {c["name"]: c for c in report["checks"]}["hodge_riemann_failure_documented"]
    sigs = {e["degree"]: tuple(e["signature"]) for e in doc["details"]["full_piece_signatures"]}
    assert sigs[-1] == (2, 2, 0)
    assert sigs[0] == (3, 3, 0)


def test_verify_out_of_range_is_exit_2(capsys):
    code, _ = run(capsys, "verify", "--case", "ext", "--n", "2", "--m", "5", "--jobs", "1")
    assert code == 2


def test_verify_poly_needs_m(capsys):
    code, _ = run(capsys, "verify", "--case", "poly", "--n", "2", "--jobs", "1")
    assert code == 2


def test_caps_env_override(capsys, monkeypatch):
    monkeypatch.setenv("KAHLERCHECK_TOTAL_DIM_CAP", "3")
    code, _ = run(capsys, "verify", "--case", "poly", "--n", "2", "--m", "2", "--jobs", "1")
    assert code == 2


def test_failure_exit_code_plumbing(capsys, monkeypatch):
    import kahlercheck.cli as cli

    def failing(case, n, m=None, space=None):
        return PackageReport(str(case), n, m, [CheckResult("stub", False, {})])

    monkeypatch.setattr(cli, "run_package", failing)
    code, out = run(capsys, "verify", "--case", "poly", "--n", "1", "--m", "1", "--jobs", "1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_parallel_matches_serial(capsys):
    code1, out1 = run(capsys, "verify", "--case", "poly", "--n", "1..2", "--m", "1..2", "--jobs", "1")
    code2, out2 = run(capsys, "verify", "--case", "poly", "--n", "1..2", "--m", "1..2", "--jobs", "2")
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("meta"), b.pop("meta")
    a["config"].pop("jobs"), b["config"].pop("jobs")
    assert a == b


def test_dump_is_byte_stable(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["dump", "--case", "ext", "--n", "2", "--m", "3", "--out", str(p1)]) == 0
    assert main(["dump", "--case", "ext", "--n", "2", "--m", "3", "--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert b"generated_at" not in p1.read_bytes()


@pytest.mark.parametrize(
    "name,argv",
    [
        ("dump_poly_1_2.json", ["dump", "--case", "poly", "--n", "1", "--m", "2"]),
        ("dump_ext_2_2.json", ["dump", "--case", "ext", "--n", "2", "--m", "2"]),
        ("dump_ext_usual_2.json", ["dump", "--case", "ext-usual", "--n", "2"]),
    ],
)
def test_dump_matches_golden(capsys, name, argv):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_logconcavity_poly_json(capsys):
    code, out = run(capsys, "logconcavity", "--target", "poly", "--n", "2", "--m", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["chain"]["pass"] is True
    assert payload["chain"]["routes_agree"] is True


def test_logconcavity_coinvariant_csv_golden(capsys):
    code, out = run(capsys, "logconcavity", "--target", "coinvariant", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "coinvariant_3.csv").read_text()


def test_logconcavity_novak(capsys):
    code, out = run(capsys, "logconcavity", "--target", "novak", "--n", "4")
    assert code == 0
    assert json.loads(out)["logconcavity"]["pass"] is True


def test_logconcavity_poly_needs_m(capsys):
    code, _ = run(capsys, "logconcavity", "--target", "poly", "--n", "2")
    assert code == 2


def test_schur_nonneg_cli(capsys):
    code, out = run(capsys, "schur", "nonneg", "--lam", "3,1", "--mu", "1,1")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_schur_odd_sum_is_exit_2(capsys):
    code, _ = run(capsys, "schur", "nonneg", "--lam", "2,1", "--mu", "1,1")
    assert code == 2


def test_schur_non_partition_is_exit_2(capsys):
    code, _ = run(capsys, "schur", "nonneg", "--lam", "1,2", "--mu", "1,1")
    assert code == 2


def test_schur_pieri_cli(capsys):
    code, out = run(capsys, "schur", "pieri", "--lam", "2,1", "--k", "2", "--mode", "column")
    assert code == 0
    assert json.loads(out)["result"]["pass"] is True


def test_schur_line_cli(capsys):
    code, out = run(capsys, "schur", "line", "--start", "1", "--step", "1", "--count", "4")
    assert code == 0


def test_usual_report_cli(capsys):
    code, out = run(capsys, "usual-report", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["hr_holds"] is False
    degrees = [e["degree"] for e in payload["lefschetz_signatures"]]
    assert degrees == sorted(degrees)


def test_verify_markdown_carries_details(capsys):
    code, out = run(capsys, "verify", "--case", "poly", "--n", "1", "--m", "2",
                    "--jobs", "1", "--format", "markdown")
    assert code == 0
    assert '"gram_ranks":{"-2":1,"0":1,"2":1}' in out
    assert '"transpose_symmetry":true' in out


def test_schur_nonneg_grid(capsys):
    code, out = run(capsys, "schur", "nonneg", "--max-size", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert payload["result"]["failures"] == []
    assert payload["result"]["pairs"] > 10


def test_schur_nonneg_grid_excludes_explicit_shapes(capsys):
    code, _ = run(capsys, "schur", "nonneg", "--max-size", "2", "--lam", "1")
    assert code == 2


def test_schur_nonneg_needs_shapes_or_grid(capsys):
    code, _ = run(capsys, "schur", "nonneg")
    assert code == 2


def test_logconcavity_cap_override(capsys):
    code, out = run(capsys, "logconcavity", "--target", "coinvariant", "--n", "3", "--cap", "4")
    assert code == 0
    assert json.loads(out)["pass"] is True
    code, _ = run(capsys, "logconcavity", "--target", "coinvariant", "--n", "3", "--cap", "2")
    assert code == 2
    code, _ = run(capsys, "logconcavity", "--target", "poly", "--n", "2",
                  "--m", "2", "--cap", "5")
    assert code == 2


def test_logconcavity_chain_markdown(capsys):
    code, out = run(capsys, "logconcavity", "--target", "poly", "--n", "2",
                    "--m", "2", "--format", "markdown")
    assert code == 0
    assert "- degree -2: pass" in out
    assert '"slack":{"1+1":1}' in out
