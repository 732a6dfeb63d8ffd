import json
import subprocess
import sys

import pytest

from hqgenocchi.cli import dispatch, main

SMALL_GRID = {"q": ["1/2"], "h": [1], "n_max": 3, "m_max": 3, "k_max": 1, "odd": [1, 3],
              "x": ["0", "1"], "s": ["-1", "2"], "p": [3], "padic_levels": 2}


def test_genocchi_examples():
    assert dispatch(["genocchi", "--h", "1", "--q", "1/2", "--n", "2"]) == (0, "-4/5")
    assert dispatch(["genocchi", "--h", "1", "--q", "1/2", "--n", "3", "--route", "rec"]) == (0, "-4/5")
    assert dispatch(["genocchi", "--h", "1", "--q", "1/2", "--n", "2", "--x", "1"]) == (0, "8/5")


def test_genocchi_fractional_argument():
    # q = 1/4 has the exact square root 1/2, so x = 1/2 is representable; 1/2 does not
    assert dispatch(["genocchi", "--h", "1", "--q", "1/4", "--n", "1", "--x", "1/2",
                     "--scale", "2"]) == (0, "1/1")
    code, _ = dispatch(["genocchi", "--h", "1", "--q", "1/2", "--n", "1", "--x", "1/2",
                        "--scale", "2"])
    assert code == 1


def test_genocchi_table():
    code, out = dispatch(["genocchi", "--h", "1", "--q", "1/2", "--n", "3", "--table"])
    assert code == 0
    assert out.splitlines() == ["0,0/1", "1,1/1", "2,-4/5", "3,-4/5"]


def test_bernstein():
    assert dispatch(["bernstein", "--k", "1", "--n", "3", "--x", "2", "--q", "1/2"]) == (0, "9/8")
    assert dispatch(["bernstein", "--k", "4", "--n", "3", "--x", "2", "--q", "1/2"])[0] == 1


def test_zeta():
    code, out = dispatch(["zeta", "--s", "0", "--q", "0.5", "--h", "1", "--x", "1"])
    assert (code, out) == (0, "1.000000000000 + 0.000000000000i")
    code, out = dispatch(["zeta", "--s", "-1", "--q", "0.5", "--h", "1", "--x", "0"])
    assert (code, out) == (0, "-0.400000000000 + 0.000000000000i")
    code, out = dispatch(["zeta", "--s", "1.5+2i", "--q", "0.4", "--h", "2", "--x", "1"])
    assert code == 0 and out.endswith("i")


def test_padic():
    code, out = dispatch(["padic", "--n", "1", "--p", "3", "--Nmax", "2"])
    assert code == 0
    assert json.loads(out)[1] == {"N": 2, "partial": "4/1", "valuation": 2}
    assert dispatch(["padic", "--n", "2", "--p", "3", "--Nmax", "2", "--partial"]) == (0, "36/1")
    assert dispatch(["padic", "--n", "1", "--p", "3", "--Nmax", "2", "--q", "1/2"])[0] == 1


def test_list():
    code, out = dispatch(["list"])
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert ["bernstein-moment-printed", "exact", "expected-fail"] in rows
    assert ["thm2-reflection", "exact", "pass"] in rows


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["genocchi", "--h", "1", "--q", "1/2"],
    ["genocchi", "--h", "1", "--q", "0.5", "--n", "2"],
    ["genocchi", "--h", "1", "--q", "1/2", "--n", "2", "--bogus", "1"],
    ["zeta", "--s", "0", "--q", "1/2", "--h", "1", "--x", "1"],
    ["zeta", "--s", "0", "--q", "0.5", "--h", "0", "--x", "1"],
    ["padic", "--n", "1", "--p", "4", "--Nmax", "2"],
    ["verify", "--suite", "no-such-id"],
])
def test_usage_errors(argv, capsys):
    code, out = dispatch(argv)
    assert code == 1 and out == ""
    assert capsys.readouterr().err


def test_help_exits_zero():
    code, out = dispatch(["--help"])
    assert code == 0 and "genocchi" in out


def test_verify_with_config(tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps(SMALL_GRID))
    out_path = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    code, out = dispatch(["verify", "--suite", "all", "--config", str(cfg), "--out", str(out_path),
                          "--csv", str(csv_path)])
    assert code == 0 and out.startswith("cases_run=")
    report = json.loads(out_path.read_text())
    assert report["failures"] == []
    assert report["grid"]["q"] == ["1/2"]
    assert csv_path.read_text().count("\n") == report["cases_run"] + 1


def test_verify_grid_from_environment(tmp_path, monkeypatch):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps(SMALL_GRID))
    monkeypatch.setenv("QGK_GRID", str(cfg))
    code, out = dispatch(["verify", "--suite", "thm2-reflection"])
    assert code == 0
    assert json.loads(out)["grid"]["q"] == ["1/2"]


def test_verify_bad_config(tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text('{"nope": 1}')
    assert dispatch(["verify", "--config", str(cfg)])[0] == 1


def test_verify_exit_two_on_failures(monkeypatch):
    from fractions import Fraction as F
    from hqgenocchi import verify
    broken = verify.Identity("zz-broken", "exact", lambda g: [{"n": 0}],
                             lambda p: (F(0), F(1), False, F(-1)))
    monkeypatch.setitem(verify._REGISTRY, "zz-broken", broken)
    code, out = dispatch(["verify", "--suite", "zz-broken"])
    assert code == 2
    assert json.loads(out)["failures"][0]["id"] == "zz-broken"


def test_main_prints(capsys):
    assert main(["genocchi", "--h", "1", "--q", "1/2", "--n", "2"]) == 0
    assert capsys.readouterr().out == "-4/5\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hqgenocchi", "genocchi", "--h", "1", "--q", "1/2", "--n", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1/1\n"
