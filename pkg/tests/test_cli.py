import csv
import json
import subprocess
import sys

from jetgauge.cli import main
from jetgauge.report import VerificationReport


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    return code


def test_signature_text(capsys):
    assert main(["signature", "--axes", "4", "--order", "3"]) == 0
    assert capsys.readouterr().out.strip() == "(11, 23)"


def test_signature_json(capsys):
    assert main(["signature", "--axes", "4", "--order", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["p"], data["q"]) == (4, 10)


def test_signature_listing(capsys):
    main(["signature", "--axes", "4", "--order", "1", "--list"])
    out = capsys.readouterr().out
    assert "d^t" in out and "d^z" in out


def test_unknown_subcommand_exits_2(capsys):
    assert main(["no-such-command"]) == 2


def test_malformed_flags_exit_2(capsys):
    assert main(["signature", "--axes"]) == 2
    assert main(["census", "--sector", "nonsense"]) == 2


def test_domain_errors_exit_2(capsys):
    assert main(["signature", "--axes", "0", "--order", "1"]) == 2
    assert main(["signature", "--axes", "1", "--order", "2"]) == 2  # no spacelike axis
    assert "error" in capsys.readouterr().err


def test_proca_table_csv(capsys):
    assert main(["proca-table", "--format", "csv"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.strip().splitlines()))
    assert len(rows) == 28 and all(len(r) == 28 for r in rows)
    assert rows[0][4] == "-1"


def test_proca_table_json(capsys):
    main(["proca-table", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 28
    assert data["table"][4][15] == -2


def test_census_json(capsys):
    assert main(["census", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    sectors = {tuple(r["sector"]): (r["positive"], r["negative"], r["zero"])
               for r in data["censuses"]}
    assert sectors[(3, 3)] == (21, 78, 91)
    assert sectors[(2, 3)] == (21, 13, 46)
    assert data["flags"]


def test_census_single_sector(capsys):
    assert main(["census", "--sector", "1,3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["censuses"]) == 1
    assert data["censuses"][0]["positive"] == 28


def test_isotropic(capsys):
    assert main(["isotropic", "--sector", "23", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["size"] == 7
    assert data["gram_identically_zero"] is True
    assert data["hypercharge_first_order_invariant"] is True


def test_electroweak_json(capsys):
    assert main(["electroweak"]) == 0
    data = json.loads(capsys.readouterr().out)
    diag = [data["mixed_mass_matrix_display"][i][i] for i in range(4)]
    assert diag == ["0", "5", "4", "4"]
    assert data["mixing"]["sin2_theta_w"] == "1/5"


def test_octonion_verify(capsys):
    assert main(["octonion", "verify"]) == 0
    assert "0 fail" in capsys.readouterr().out


def test_su3_json(capsys):
    assert main(["su3", "--fix", "e4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dimension"] == 8
    used = set().union(*(set(row) for row in data["basis"]))
    assert used == {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "G4"}


def test_pheno_consistency(capsys):
    assert main(["pheno", "consistency"]) == 0
    out = capsys.readouterr().out
    assert "iota" in out and "[pass]" in out


def test_pheno_constants_override(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"M_W": 80.3790}), encoding="utf-8")
    assert main(["pheno", "consistency", "--constants", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    chi = next(e for e in data["entries"] if e["name"].startswith("chi"))
    assert chi["status"] == "pass"


def test_verify_all_passes_and_is_deterministic(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["verify-all", "--format", "json", "--out", str(out1)]) == 0
    assert main(["verify-all", "--format", "json", "--out", str(out2)]) == 0
    b1 = out1.read_bytes()
    assert b1 == out2.read_bytes()
    data = json.loads(b1)
    assert data["counts"]["fail"] == 0
    assert data["counts"]["flagged"] >= 1


def test_exit_code_contract_on_failure():
    rep = VerificationReport()
    s = rep.suite("demo")
    s.check("good", True)
    assert rep.exit_code == 0
    s.check("bad", False)
    assert rep.exit_code == 1
    s2 = VerificationReport()
    st = s2.suite("flag-only")
    st.flag("note", "reference-data inconsistency")
    assert s2.exit_code == 0  # flagged rows never fail a run


def test_simulate_csv(tmp_path, capsys):
    traj_path = tmp_path / "traj.csv"
    cfg = {
        "field": {"kind": "uniform_B", "params": {"B": [0, 0, 1.0]}},
        "particle": {"x0": [0, 0, 0, 0], "u0": [1.0, 0.01, 0, 0], "m": 1.0, "q": 1.0},
        "integrator": {"dlambda": 0.01, "steps": 50},
        "output": {"path": str(traj_path), "format": "csv"},
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
    assert main(["simulate", "--config", str(cfg_path)]) == 0
    rows = list(csv.reader(traj_path.read_text().splitlines()))
    assert rows[0] == ["lambda", "x0", "x1", "x2", "x3", "u0", "u1", "u2", "u3"]
    assert len(rows) == 52  # header + 51 samples


def test_simulate_wong_abelian(tmp_path, capsys):
    traj_path = tmp_path / "traj.json"
    cfg = {
        "field": {"kind": "uniform_E", "params": {"E": [0.5, 0, 0]}},
        "particle": {
            "x0": [0, 0, 0, 0],
            "u0": [1.0, 0, 0, 0],
            "m": 1.0,
            "q": 1.0,
            "I": {"dim": 2, "pair": [1, 2], "value": 0.5},
        },
        "integrator": {"dlambda": 0.01, "steps": 20},
        "output": {"path": str(traj_path), "format": "json"},
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
    assert main(["simulate", "--config", str(cfg_path)]) == 0
    data = json.loads(traj_path.read_text())
    assert data["meta"]["law"] == "wong"
    assert len(data["samples"]) == 21


def test_simulate_bad_config(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text("{\"field\": {\"kind\": \"warp\"}}", encoding="utf-8")
    assert main(["simulate", "--config", str(cfg_path)]) == 2


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "jetgauge.cli", "signature", "--axes", "4", "--order", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(4, 10)"
