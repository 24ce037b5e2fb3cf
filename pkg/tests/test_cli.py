"""Command line interface: exit codes, output formats, determinism."""

import json

from sievelab.cli import main


def run(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as e:  # argparse rejects unknown flags or choices
        code = e.code
    out = capsys.readouterr().out
    return code, out


# --- enumerate ------------------------------------------------------------------

def test_enumerate_A_square(capsys):
    code, out = run(capsys, ["enumerate", "--family", "A", "--n", "4", "--k", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 6
    assert len(payload["items"]) == 6
    assert payload["truncated"] is False


def test_enumerate_digon(capsys):
    code, out = run(capsys, ["enumerate", "--family", "D", "--n", "1", "--k", "3"])
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_enumerate_hexagon_triangulations(capsys):
    code, out = run(capsys, ["enumerate", "--family", "classicalA",
                             "--n", "6", "--k", "3"])
    assert code == 0
    assert json.loads(out)["count"] == 14


def test_enumerate_limit(capsys):
    code, out = run(capsys, ["enumerate", "--family", "A", "--n", "5",
                             "--k", "2", "--limit", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["truncated"] is True
    assert len(payload["items"]) == 3
    assert payload["count"] > 3


def test_enumerate_text_format(capsys):
    code, out = run(capsys, ["enumerate", "--family", "A", "--n", "4",
                             "--k", "1", "--format", "text"])
    assert code == 0
    assert "6" in out


def test_enumerate_csv_format(capsys):
    code, out = run(capsys, ["enumerate", "--family", "A", "--n", "4",
                             "--k", "1", "--format", "csv"])
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l]
    assert len(lines) == 7  # header plus six rows


# --- verify ---------------------------------------------------------------------

def test_verify_passing_theorem(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm2.5",
                             "--n", "4", "--k", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert payload["reports"][0]["csp_holds"] is True


def test_verify_range_grid(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm3.4",
                             "--n-range", "2:3", "--k-range", "0:2"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["reports"]) == 6


def test_verify_failing_variant_exit_code(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm1.1-2",
                             "--n", "2", "--k", "1"])
    assert code == 1
    assert json.loads(out)["all_pass"] is False


def test_verify_exploratory_forces_success(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm1.1-2",
                             "--n", "2", "--k", "1", "--exploratory"])
    assert code == 0
    assert json.loads(out)["all_pass"] is False


def test_verify_shifted_variant_passes(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm1.1-2",
                             "--n", "2", "--k", "1", "--variant", "shifted"])
    assert code == 0


def test_verify_orbit_poly_needs_family(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "orbit-poly",
                           "--n", "3", "--k", "1"])
    assert code == 2
    code, out = run(capsys, ["verify", "--theorem", "orbit-poly",
                             "--family", "C", "--n", "3", "--k", "1"])
    assert code == 0


def test_verify_family_rejected_for_fixed_theorems(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "thm2.5", "--family", "C",
                           "--n", "4", "--k", "1"])
    assert code == 2


def test_verify_csv(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm2.5",
                             "--n", "4", "--k", "1", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,n,k,variant,group_order,label")
    assert len(lines) == 5


def test_verify_text(capsys):
    code, out = run(capsys, ["verify", "--theorem", "thm2.5",
                             "--n", "4", "--k", "1", "--format", "text"])
    assert code == 0
    assert "csp_holds=True" in out


# --- audit -----------------------------------------------------------------------

def test_audit_basis_A(capsys):
    code, out = run(capsys, ["audit", "basis-A", "--n", "4", "--k", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    rep = payload["reports"][0]
    assert rep["count"] == 20 and rep["rank"] == 20


def test_audit_conjecture_D(capsys):
    code, out = run(capsys, ["audit", "conjecture-D", "--n", "2", "--k", "2"])
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["count"] == 10 and rep["rank"] == 11
    assert "evidence" in rep["note"]


def test_audit_equivariance_requires_family(capsys):
    code, _ = run(capsys, ["audit", "equivariance", "--n", "3", "--k", "1"])
    assert code == 2
    code, out = run(capsys, ["audit", "equivariance", "--family", "D", "--n", "3", "--k", "1"])
    assert code == 0
    assert json.loads(out)["reports"][0]["mode"] == "mod_J"


def test_audit_basis_rejects_family_flag(capsys):
    code, _ = run(capsys, ["audit", "basis-A", "--family", "A", "--n", "4", "--k", "1"])
    assert code == 2


def test_audit_characters(capsys):
    code, out = run(capsys, ["audit", "characters", "--n", "3", "--k", "2"])
    assert code == 0
    payload = json.loads(out)
    families = {r["family"] for r in payload["reports"]}
    assert families == {"A", "D"}
    assert payload["all_pass"] is True


def test_audit_folding(capsys):
    code, out = run(capsys, ["audit", "folding", "--n", "3", "--k", "2"])
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["pass"] is True
    assert [e["d"] for e in rep["entries"]] == [1, 2, 3, 6]


# --- usage errors -------------------------------------------------------------------

def test_unknown_theorem(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "thm9.9", "--n", "3", "--k", "1"])
    assert code == 2


def test_missing_required_n(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "thm2.5", "--k", "1"])
    assert code == 2


def test_conflicting_n_and_range(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "thm2.5", "--n", "3",
                           "--n-range", "3:4", "--k", "1"])
    assert code == 2


def test_bad_range_syntax(capsys):
    code, _ = run(capsys, ["verify", "--theorem", "thm2.5",
                           "--n-range", "4-6", "--k", "1"])
    assert code == 2


def test_enumerate_rejects_ranges(capsys):
    code, _ = run(capsys, ["enumerate", "--family", "A",
                           "--n-range", "3:4", "--k", "1"])
    assert code == 2


# --- determinism ----------------------------------------------------------------------

def test_output_identical_across_worker_counts(tmp_path, capsys):
    args = ["verify", "--theorem", "thm2.5", "--n-range", "3:5",
            "--k-range", "0:2"]
    f1 = tmp_path / "w1.json"
    f2 = tmp_path / "w4.json"
    assert main(args + ["--workers", "1", "--out", str(f1)]) == 0
    assert main(args + ["--workers", "4", "--out", str(f2)]) == 0
    capsys.readouterr()
    assert f1.read_bytes() == f2.read_bytes()


def test_worker_env_override(tmp_path, capsys, monkeypatch):
    args = ["audit", "basis-A", "--n-range", "3:4", "--k", "1"]
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    assert main(args + ["--out", str(f1)]) == 0
    monkeypatch.setenv("SIEVE_LAB_WORKERS", "3")
    assert main(args + ["--out", str(f2)]) == 0
    capsys.readouterr()
    assert f1.read_bytes() == f2.read_bytes()


def test_out_file_contains_json(tmp_path, capsys):
    f = tmp_path / "r.json"
    assert main(["enumerate", "--family", "C", "--n", "2", "--k", "1",
                 "--out", str(f)]) == 0
    capsys.readouterr()
    assert json.loads(f.read_text())["count"] == 4
