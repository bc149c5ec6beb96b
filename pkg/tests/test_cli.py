import json

import numpy as np
import pytest

from schrodlab.cli import ConfigError, main, parse_config_text, resolve_config
from schrodlab.report import read_csv, write_csv


def _run(tmp_path, *args, name="out"):
    out = tmp_path / name
    return main([*args, "--out", str(out)]), out


def test_solve_reports_energy(tmp_path):
    rc, out = _run(tmp_path, "solve", "--potential", "coulomb")
    assert rc == 0
    data = json.loads((out / "solve.json").read_text())
    assert data["schema"] == 1
    assert data["energy"] == pytest.approx(-0.5, abs=1e-4)
    assert data["energy_ev"] == pytest.approx(-13.6, abs=0.01)


def test_scatter_backscatter_row(tmp_path):
    rc, out = _run(tmp_path, "scatter", "--potential", "yukawa", "--mu", "0.5", "--p", "1", "--theta", "180")
    assert rc == 0
    lines = (out / "scattering.csv").read_text().splitlines()
    assert lines[0] == "theta_deg,q,f,dcs"
    cols = read_csv(out / "scattering.csv")
    assert cols["f"][0] == pytest.approx(2 / 4.25, abs=1e-6)


def test_energetics_csv(tmp_path):
    rc, out = _run(tmp_path, "energetics")
    assert rc == 0
    assert (out / "energetics.csv").read_text().splitlines()[0] == "r,psi2,KE,C,PE,E"
    d = read_csv(out / "energetics.csv")
    i = np.argmin(np.abs(d["r"] - 2.0))
    assert abs(d["C"][i]) < 1e-5
    summary = json.loads((out / "energetics.json").read_text())
    assert summary["crossings"] == [pytest.approx(2.0, abs=1e-3)]
    assert all(v["pass"] for v in summary["virial"])


def test_energetics_lab_units(tmp_path):
    _, out = _run(tmp_path, "energetics", "--units", "lab")
    d = read_csv(out / "energetics.csv")
    np.testing.assert_allclose(d["r_m"], d["r"] * 5.29177e-11)
    np.testing.assert_allclose(d["E_ev"], d["E"] * 27.2114, rtol=1e-10)


def test_momentum_csv(tmp_path):
    rc, out = _run(tmp_path, "decompose")
    assert rc == 0
    d = read_csv(out / "momentum.csv")
    assert list(d) == ["p", "a", "a_sq_times_4pi_p2"]
    assert d["p"][0] == 0.0
    assert d["a"][0] == pytest.approx(0.9003, abs=1e-3)
    meta = json.loads((out / "momentum.json").read_text())
    assert meta["parseval"] == pytest.approx(1.0, abs=1e-4)


def test_propagate_ledger(tmp_path):
    rc, out = _run(
        tmp_path, "propagate", "--potential", "yukawa", "--strength", "-1",
        "--steps", "400", "--stride", "100", "--n-x", "1024", "--x-min", "-50", "--x-max", "50",
    )
    assert rc == 0
    d = read_csv(out / "tdse_ledger.csv")
    assert list(d) == ["t", "norm", "KE", "PE", "E"]
    assert len(d["t"]) == 5
    snaps = read_csv(out / "tdse_snapshots.csv")
    assert len(snaps["t"]) == 5 * 1024


def test_outputs_are_deterministic(tmp_path):
    for name in ("a", "b"):
        _run(tmp_path, "energetics", "--n", "1000", "--r-max", "30", name=name)
    for f in sorted((tmp_path / "a").iterdir()):
        assert f.read_bytes() == (tmp_path / "b" / f.name).read_bytes(), f.name


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# scattering setup\ncommand = scatter\npotential = yukawa\nmu = 0.5  # screening\ntheta = 90, 180\n")
    c = resolve_config(["--config", str(cfg), "--mu", "1.0"])
    assert c.command == "scatter"
    assert c.mu == 1.0
    rc = main(["--config", str(cfg), "--out", str(tmp_path / "o")])
    assert rc == 0
    assert len(read_csv(tmp_path / "o" / "scattering.csv")["f"]) == 2


def test_empty_config_means_verify_defaults():
    c = resolve_config([])
    assert c.command == "verify"
    assert (c.potential, c.r_max, c.n) == ("coulomb", 40.0, 4000)


@pytest.mark.parametrize(
    "text", ["bogus = 1\n", "no equals sign\n", "n = many\n", "absorbing = maybe\n"]
)
def test_bad_config_text(text):
    with pytest.raises(ConfigError):
        parse_config_text(text)


@pytest.mark.parametrize(
    "args",
    [
        ["frobnicate"],
        ["solve", "--no-such-flag"],
        ["solve", "--units", "imperial"],
        ["solve", "--potential", "square"],
        ["solve", "--n", "abc"],
        ["scatter", "--potential", "coulomb"],
        ["scatter", "--potential", "yukawa", "--theta", "ninety"],
        ["solve", "--potential", "tabulated"],
        ["solve", "--config", "/nonexistent/run.cfg"],
    ],
)
def test_usage_errors_exit_2(tmp_path, args):
    assert main(args + ["--out", str(tmp_path)]) == 2


def test_tabulated_potential_from_file(tmp_path):
    r = np.linspace(0.01, 30.0, 600)
    table = tmp_path / "well.dat"
    np.savetxt(table, np.column_stack([r, -np.exp(-r) / r]), header="r V")
    rc, out = _run(tmp_path, "solve", "--potential", "tabulated", "--table", str(table), "--r-max", "30", "--n", "3000")
    assert rc == 0
    assert json.loads((out / "solve.json").read_text())["energy"] < 0


def test_failing_physics_exits_1(tmp_path):
    # r_max too small: the packet reaches the edge without absorption
    rc, _ = _run(
        tmp_path, "propagate", "--potential", "free", "--no-absorbing",
        "--x-min", "-30", "--x-max", "30", "--n-x", "512", "--steps", "3000",
    )
    assert rc == 1


def test_empty_rows_rejected(tmp_path):
    with pytest.raises(ValueError):
        write_csv(tmp_path / "x.csv", ["a"], [])
    assert not (tmp_path / "x.csv").exists()


def test_verify_writes_verdict(tmp_path, capsys):
    rc, out = _run(tmp_path, "verify")
    verdict = json.loads((out / "verdict.json").read_text())
    assert rc == 0
    assert verdict["pass"] is True
    assert verdict["pass"] == all(c["pass"] for c in verdict["checks"])
    assert {c["criterion"] for c in verdict["checks"]} == set(range(1, 11))
    for c in verdict["checks"]:
        assert {"name", "anchor", "expected", "computed", "tol", "pass"} <= set(c)
    assert "overall: PASS" in capsys.readouterr().out
