import json
import subprocess
import sys

import pytest

from gl11inv.cli import RunConfig, main
from gl11inv.gl11 import GL11
from gl11inv.qseries import QSeries
from gl11inv.superpoly import from_json_obj, parse


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_ssvec_marks_symbol_invariant(capsys):
    code, out = run(capsys, "ssvec", "--family", "h", "--k", "2", "--deg", "4", "--json")
    assert code == 0
    data = json.loads(out)
    first = data["series"][0]
    assert first["r"] == 0 and first["invariant"] is True
    assert parse(GL11, first["coefficient"]["text"]) == parse(GL11, "a0*c0 + phi0*psi0")


def test_ssvec_text_output(capsys):
    code, out = run(capsys, "ssvec", "--family", "s", "--k", "1", "--deg", "0")
    assert code == 0
    assert "c0" in out


def test_usage_errors(capsys):
    for argv in (["ssvec", "--family", "h", "--k", "0"], ["accept", "nosuch"],
                 ["hp", "--deg", "-1"], ["ssvec", "--family", "x"], ["nosuch"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_hp_rows(capsys):
    code, out = run(capsys, "hp", "--deg", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True
    for name, series in data["series"].items():
        assert series["coefficients"][-2:] == [38, 63], name
    code, out = run(capsys, "hp", "--deg", "0", "--json")
    assert all(s["coefficients"] == [1] for s in json.loads(out)["series"].values())


def test_json_roundtrips_through_parsers(capsys):
    _, out = run(capsys, "ssvec", "--family", "b", "--k", "2", "--deg", "2", "--json")
    for row in json.loads(out)["series"]:
        coeff = row["coefficient"]
        assert from_json_obj(GL11, coeff["terms"]) == parse(GL11, coeff["text"])
    _, out = run(capsys, "pp", "--deg", "5", "--json")
    series = QSeries.from_json(json.loads(out)["series"])
    assert list(series.coeffs) == [1, 1, 3, 6, 12, 21]


def test_invariance_command(capsys):
    _, out = run(capsys, "invariance", "--expr", "a0", "--json")
    data = json.loads(out)
    assert data["invariant"] is False and data["operator"] == "E12[0]"
    _, out = run(capsys, "invariance", "--expr", "a0*c0 + phi0*psi0", "--json")
    assert json.loads(out)["invariant"] is True


def test_chevalley_and_cancel(capsys):
    _, out = run(capsys, "chevalley", "--expr", "c0", "--json")
    assert json.loads(out)["image"]["text"] == "1*u1_0 + 1*v1_0"
    _, out = run(capsys, "cancel", "--expr", "a0", "--json")
    data = json.loads(out)
    assert data["passes"] is False and data["D"]["c0_shift"] == -1


def test_probe_and_chi(capsys):
    code, out = run(capsys, "probe", "canc_3_4", "--deg", "3", "--json")
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out = run(capsys, "chi", "--m", "2", "--n", "1", "--deg", "6", "--json")
    assert code == 0 and json.loads(out)["equal"] is True


def test_basis_and_aseries(capsys):
    code, out = run(capsys, "basis", "--deg", "3", "--json")
    assert code == 0
    degrees = [row["degree"] for row in json.loads(out)["basis"]]
    assert degrees == sorted(degrees) and degrees[0] == 0
    code, out = run(capsys, "aseries", "--n", "1", "--deg", "2", "--t-cap", "1", "--json")
    rows = json.loads(out)["coefficients"]
    assert rows[0]["monomial"] == "1" and rows[0]["coefficient"]["text"] == "1*c0"


def test_accept_suite_exit_zero(capsys):
    code, out = run(capsys, "accept", "qseries")
    assert code == 0
    assert out.count("PASS") >= 3 and "FAIL" not in out


def test_same_config_same_bytes():
    argv = [sys.executable, "-m", "gl11inv", "basis", "--deg", "4", "--json", "--seed", "7"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_module_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "gl11inv", "hp", "--deg", "2"], capture_output=True)
    assert ok.returncode == 0
    bad = subprocess.run([sys.executable, "-m", "gl11inv", "accept", "nosuch"], capture_output=True)
    assert bad.returncode == 2


def test_run_config_validation():
    assert RunConfig().deg == 4
    with pytest.raises(ValueError):
        RunConfig(deg=-1)


def test_accept_reports_failure_with_exit_one(capsys, monkeypatch):
    from gl11inv import acceptance

    def broken():
        return [acceptance._timed(6, "forced failure", lambda: (False, "forced"))]

    monkeypatch.setitem(acceptance.CRITERIA, 6, broken)
    code, out = run(capsys, "accept", "qseries")
    assert code == 1
    assert "FAIL [6] forced failure" in out
