import csv
import io
import json

import numpy as np
import pytest

from elwgate import cli
from elwgate.tables import default_table_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("rho, kind, singular", [
    ("2.0943951", "Maximal", False),
    ("0", "TwoEqual", True),
    ("1.5707963", "Generic", False),
])
def test_classify(capsys, rho, kind, singular):
    code, rec = run_json(capsys, "classify", "--tau", "0", "--rho", rho, "--sigma", "0")
    assert code == 0
    assert rec["class"] == kind
    assert rec["singular"] is singular
    assert set(rec) >= {"params", "eigenvalues", "class", "gaps", "singular"}


def test_classify_fraction_and_degrees(capsys):
    _, a = run_json(capsys, "classify", "--rho", "2pi/3")
    _, b = run_json(capsys, "classify", "--rho", "120", "--deg")
    assert a["class"] == b["class"] == "Maximal"
    assert a["params"]["rho"] == pytest.approx(b["params"]["rho"], abs=1e-14)


def test_bad_angle_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "--rho", "two")
    assert code == 2 and "error" in err


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def _scan(capsys, *argv):
    code, out, _ = run(capsys, "scan", *argv)
    return code, list(csv.DictReader(io.StringIO(out)))


def test_scan_single_point(capsys):
    code, rows = _scan(capsys, "--tau", "0", "--rho", "0", "--sigma", "2pi/3:2pi/3:1")
    assert code == 0 and len(rows) == 1
    assert rows[0]["class"] == "Maximal" and rows[0]["stab_dim"] == "8"


def test_scan_rho_line(capsys):
    code, out, _ = run(capsys, "scan", "--rho", "pi/3:2pi/3:3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == "tau,rho,sigma,ev1,ev2,ev3,class,stab_dim"
    assert [r["class"] for r in rows] == ["TwoEqual", "Generic", "Maximal"]
    assert [r["stab_dim"] for r in rows] == ["4", "2", "8"]


def test_scan_outputs_and_jobs(capsys):
    _, serial, _ = run(capsys, "scan", "--tau", "0:pi:3", "--rho", "0:pi:3", "--outputs", "class")
    _, par, _ = run(capsys, "scan", "--tau", "0:pi:3", "--rho", "0:pi:3", "--outputs", "class", "--jobs", "2")
    assert serial == par
    assert serial.splitlines()[0] == "tau,rho,sigma,class"
    assert len(serial.splitlines()) == 10


@pytest.mark.parametrize("spec", ["1:0:3", "0:1:0", "0:1", "a:b:c"])
def test_scan_invalid(capsys, spec):
    code, _, _ = run(capsys, "scan", "--rho", spec)
    assert code == 2


def test_stability(capsys):
    code, rec = run_json(capsys, "stability", "--rho", "2pi/3")
    assert code == 0 and rec["dim"] == 8
    assert rec["swap_split"] == {"even": 3, "odd": 5}
    assert len(rec["generators"]) == 8


def test_payoff_classical(capsys):
    code, rec = run_json(capsys, "payoff", "--rho", "1.1", "--tau", "0.3", "--phi2", "0.4",
                         "--strategy-a", "U2", "--strategy-b", "U3", "--payoff-a", "1,2,3;4,5,6;7,8,9")
    assert code == 0
    assert rec["payoff_a"] == pytest.approx(6, abs=1e-12)
    assert rec["payoff_b"] == pytest.approx(8, abs=1e-12)


def test_payoff_coefficients(capsys):
    code, rec = run_json(capsys, "payoff", "--strategy-a", "0,0,0,0,0,0,0,0", "--strategy-b", "U1",
                         "--payoff-a", "1,0,0;0,0,0;0,0,0")
    assert code == 0 and rec["payoff_a"] == pytest.approx(1)


@pytest.mark.parametrize("argv", [
    ["payoff", "--strategy-a", "U4", "--payoff-a", "1,0,0;0,1,0;0,0,1"],
    ["payoff", "--strategy-a", "1,2", "--payoff-a", "1,0,0;0,1,0;0,0,1"],
    ["payoff", "--payoff-a", "1,0;0,1"],
    ["payoff"],
])
def test_payoff_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_counter(capsys):
    code, rec = run_json(capsys, "counter", "--rho", "2.0943951", "--seed", "7")
    assert code == 0 and rec["match"] and rec["max_deviation"] <= 1e-8
    _, exact = run_json(capsys, "counter", "--rho", "2pi/3", "--seed", "7")
    assert exact["max_deviation"] <= 1e-10


def test_counter_non_maximal(capsys):
    code, _, err = run(capsys, "counter", "--rho", "pi/2")
    assert code == 3 and "NotMaximallyEntangled" in err


def test_mixed(capsys):
    code, rec = run_json(capsys, "mixed", "--p1", "0.0555556", "--p2", "0.5555556")
    assert code == 0 and rec["status"] == "infeasible"
    assert rec["cos_delta"] == pytest.approx(-1.12041, abs=1e-4)


def test_mixed_out_of_domain(capsys):
    assert run(capsys, "mixed", "--p1", "0.8", "--p2", "0.5")[0] == 3


def test_verify_paper_reports_table_errata(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1
    assert "PASS maximal triples: 48/48" in out
    assert "FAIL generators: 45/54" in out
    assert "max-i/G1" in out and "two-iii/G1" in out


def test_verify_paper_json(capsys):
    code, rec = run_json(capsys, "verify-paper", "--json")
    assert code == 1 and rec["ok"] is False
    names = {c["name"]: c for c in rec["checks"]}
    assert names["generators"]["passed"] == 45
    assert all(c["ok"] for n, c in names.items() if n not in ("generators", "generator tables span"))


def test_verify_paper_corrupted_data(capsys, tmp_path):
    lines = default_table_path().read_text().splitlines()
    i = next(k for k, l in enumerate(lines) if l.startswith("max-ii "))
    f = lines[i].split()
    f[5] = "7"
    lines[i] = " ".join(f)
    bad = tmp_path / "gen.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify-paper", "--data", str(bad))
    assert code == 1 and "max-ii/G1" in out


def test_verify_paper_unreadable_data(capsys, tmp_path):
    bad = tmp_path / "gen.txt"
    bad.write_text("garbage\n")
    code, out, _ = run(capsys, "verify-paper", "--data", str(bad))
    assert code == 1 and "FAIL generator data" in out


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "game.json"
    cfg.write_text(json.dumps({"tau": 0, "rho": 2 * np.pi / 3, "sigma": 0, "phi2": 0.5, "phi3": 1.0,
                               "epsilon": "minus", "payoff_a": [[1, 2, 3], [4, 5, 6], [7, 8, 9]]}))
    _, rec = run_json(capsys, "classify", "--config", str(cfg))
    assert rec["class"] == "Maximal"
    _, rec = run_json(capsys, "classify", "--config", str(cfg), "--rho", "pi/2")
    assert rec["class"] == "Generic"
    code, rec = run_json(capsys, "payoff", "--config", str(cfg), "--strategy-a", "U3", "--strategy-b", "U1")
    assert code == 0 and rec["payoff_a"] == pytest.approx(7)


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "game.json"
    cfg.write_text("{not json")
    assert run(capsys, "classify", "--config", str(cfg))[0] == 2


@pytest.mark.parametrize("argv", [
    ["classify", "--rho", "1.3", "--sigma", "0.4"],
    ["counter", "--rho", "2pi/3", "--seed", "3"],
    ["payoff", "--seed", "5", "--payoff-a", "1,0,0;0,1,0;0,0,1"],
    ["stability", "--tau", "pi/2"],
])
def test_output_is_deterministic_and_round_trips(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    obj = json.loads(first)
    assert json.loads(json.dumps(obj)) == obj
