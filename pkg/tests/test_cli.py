import json

import numpy as np
import pandas as pd
import pytest

from ncqosc import __version__
from ncqosc.cli.main import main

ARTIFACTS = ["energy", "phase", "ncparams", "rho", "density"]


def read_csv(path):
    return pd.read_csv(path, comment="#")


def write_json(tmp_path, obj, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def test_cases(capsys):
    assert main(["cases"]) == 0
    out = capsys.readouterr().out
    assert "Catalog Cases" in out
    assert "set2-case2" in out


def test_run_writes_the_csv_bundle(tmp_path):
    out = tmp_path / "run"
    code = main(["run", "--config", "fig1", "--case", "set1-case2", "--t-max", "2",
                 "--samples", "11", "--out", str(out)])
    assert code == 0
    for name in ARTIFACTS:
        assert (out / f"{name}.csv").exists()

    raw = (out / "energy.csv").read_bytes()
    assert raw.startswith(f"# ncqosc {__version__}\r\n".encode())
    assert b"\r\nt,energy,energy_over_omega0\r\n" in raw
    assert b"# case set1-case2" in raw
    assert b"# units: t [time], energy [hbar = 1]" in raw

    energy = read_csv(out / "energy.csv")
    assert len(energy) == 11
    np.testing.assert_allclose(energy["energy"], energy["energy"][0], rtol=1e-9)
    density = read_csv(out / "density.csv")
    assert len(density) == 31 * 32


def test_run_at_t_zero(tmp_path):
    code = main(["run", "--config", "fig1", "--case", "set1-case1", "--t-max", "0",
                 "--out", str(tmp_path)])
    assert code == 0
    phase = read_csv(tmp_path / "phase.csv")
    assert len(phase) == 1
    assert phase["theta_quadrature"][0] == 0.0


def test_run_with_a_negative_charge(tmp_path):
    config = write_json(tmp_path, {"M": 1, "q": -1, "omega0": 1e3, "B0": 1e2, "Gamma": 1,
                                   "sigma": 1e7, "Delta_c": 1e7, "n": 1, "m": 2,
                                   "family": "SetI", "case": "I"})
    out = tmp_path / "run"
    code = main(["run", "--config", config, "--t-max", "1", "--samples", "5", "--out", str(out)])
    assert code == 0
    for name in ARTIFACTS:
        assert (out / f"{name}.csv").exists()
    phase = read_csv(out / "phase.csv")
    assert len(phase) == 5
    assert phase["theta_closed_form"].isna().all()
    assert np.all(np.isfinite(phase["theta_quadrature"]))


def test_run_needs_a_case(tmp_path, capsys):
    assert main(["run", "--config", "fig1", "--out", str(tmp_path)]) == 2
    assert "no case selected" in capsys.readouterr().err


def test_missing_config(tmp_path, capsys):
    code = main(["run", "--config", str(tmp_path / "missing.json"), "--case", "set1-case1",
                 "--out", str(tmp_path)])
    assert code == 2
    assert "config file not found" in capsys.readouterr().err


def test_run_outside_the_reality_window(tmp_path):
    config = write_json(tmp_path, {"M": 1, "q": 1, "omega0": 1, "B0": 4, "Gamma": 1,
                                   "sigma": 0.5, "Delta_c": 2, "family": "SetI", "case": "I"})
    assert main(["run", "--config", config, "--t-max", "2", "--out", str(tmp_path)]) == 3
    diagnostics = json.loads((tmp_path / "diagnostics.json").read_text(encoding="utf-8"))
    assert diagnostics["window"]["upper_radicand"] == "theta discriminant"
    assert min(diagnostics["offending_times"]) > np.log(4.0) / 2
    assert not (tmp_path / "energy.csv").exists()


def test_bad_case_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["run", "--config", "fig1", "--case", "set3-case1"])


def test_figure1(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["figures", "fig1", "--samples", "11", "--out", str(first)]) == 0
    assert main(["figures", "fig1", "--samples", "11", "--out", str(second)]) == 0
    assert (first / "fig1.svg").exists()
    assert (first / "fig1.csv").read_bytes() == (second / "fig1.csv").read_bytes()

    frame = read_csv(first / "fig1.csv")
    assert frame["curve"].nunique() == 6
    assert len(frame) == 6 * 11
    assert frame["Gamma_t"].max() == pytest.approx(5.0)


def test_figure1_in_parallel(tmp_path):
    serial, parallel = tmp_path / "serial", tmp_path / "parallel"
    assert main(["figures", "fig1", "--samples", "11", "--out", str(serial)]) == 0
    assert main(["figures", "fig1", "--samples", "11", "--jobs", "2", "--out", str(parallel)]) == 0
    assert (serial / "fig1.csv").read_bytes() == (parallel / "fig1.csv").read_bytes()


def test_figure2(tmp_path):
    assert main(["figures", "fig2", "--samples", "11", "--out", str(tmp_path)]) == 0
    frame = read_csv(tmp_path / "fig2.csv")
    assert list(frame["curve"].unique()) == ["Case I", "Case II", "B=0 Case I", "B=0 Case II"]


def test_sweep(tmp_path):
    code = main(["sweep", "--config", "fig1", "--case", "set1-case1", "--param", "B0",
                 "--values", "0,100", "--t-max", "1", "--samples", "5", "--out", str(tmp_path)])
    assert code == 0
    frame = read_csv(tmp_path / "sweep.csv")
    assert sorted(frame["value"].unique()) == [0.0, 100.0]
    assert len(frame) == 10
    assert (tmp_path / "sweep.svg").exists()


def test_sweep_unknown_parameter(tmp_path):
    code = main(["sweep", "--config", "fig1", "--case", "set1-case1", "--param", "colour",
                 "--values", "1", "--out", str(tmp_path)])
    assert code == 2


def test_validate_empty_config(tmp_path):
    assert main(["validate", "--config", write_json(tmp_path, {})]) == 2


def test_validate_reports_a_violated_constraint(tmp_path):
    config = write_json(tmp_path, {"M": 1, "q": 1, "omega0": 1e3, "B0": 1e2, "Gamma": 1,
                                   "sigma": 1e7, "Delta_c": 1e7, "mu": 1.01})
    report = tmp_path / "report.json"
    assert main(["validate", "--config", config, "--report", str(report)]) == 1
    suites = {entry["name"]: entry for entry in json.loads(report.read_text(encoding="utf-8"))["suites"]}
    assert suites["ep-constraint"]["passed"] is False
    assert suites["commutators"]["passed"] is True


def test_validate_always_writes_a_report(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(["validate"]) == 0
    assert "Validation Report" in capsys.readouterr().out
    report = json.loads((tmp_path / "validation.json").read_text(encoding="utf-8"))
    assert report["passed"] is True

    out = tmp_path / "reports"
    assert main(["validate", "--out", str(out)]) == 0
    assert (out / "validation.json").exists()
