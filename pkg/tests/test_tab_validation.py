import json
from math import inf, log

import numpy as np
import pytest

from ncqosc.tab_validation import (
    SuiteResult, benchmark_families, run_validation, sample_times, tab_validation,
    validation_report, write_report,
)
from ncqosc.tab_validation import suites
from ncqosc.tab_validation.suites import (
    check_charge_asymmetry, check_commutators, check_ep_constraints,
)


def test_tab_validation(capsys):
    results = [SuiteResult("commutators", True, 1e-16, 1e-14),
               SuiteResult("energy", False, inf, 1e-10, "raised")]
    table = tab_validation(results)
    out = capsys.readouterr().out
    assert "Validation Report" in out
    assert list(table.index) == ["commutators", "energy"]
    assert list(table.columns) == ["passed", "worst", "tolerance", "detail"]


def test_tab_validation_rejects_other_entries():
    with pytest.raises(TypeError, match="SuiteResult"):
        tab_validation([("commutators", True)])


def test_report_encodes_failures(tmp_path):
    results = [SuiteResult("a", True, 1e-16, 1e-14), SuiteResult("b", False, inf, 1e-10, "x")]
    report = validation_report(results)
    assert report["passed"] is False
    assert report["suites"][1]["worst"] is None
    path = write_report(results, tmp_path / "report.json")
    assert json.loads(open(path, encoding="utf-8").read()) == report


def test_commutator_suite():
    result = check_commutators(samples=50)
    assert result.passed
    assert result.worst <= 1e-14


def test_benchmark_families_satisfy_their_constraints():
    for family in benchmark_families().values():
        assert family.constraint_mismatch() <= 1e-12


def test_perturbed_mu_fails_the_constraint_suite(fig1_params):
    bad = fig1_params.replace(mu=1.01)
    result = check_ep_constraints(bad, bad)
    assert not result.passed
    assert "mu^4" in result.detail


def test_sample_times_avoid_active_bounds(window_params, fig1_params):
    times = sample_times("set1-case1", window_params, 5)
    assert times.size == 5
    assert 0 < times[0] and times[-1] < log(4.0) / 2
    np.testing.assert_allclose(sample_times("set1-case1", fig1_params, 5),
                               np.linspace(0.0, 4.0, 5))
    empty = fig1_params.replace(Delta_c=1e5, mu=None)
    assert sample_times("set1-case1", empty, 5) is None


def test_validation_passes_on_the_bundled_scenario(fig1_params):
    results = run_validation(fig1_params)
    assert [result.name for result in results] == [
        "commutators", "hamiltonian", "ep-constraint", "ep-residual", "ep-integrator",
        "invariant-odes", "nc-parameters", "phase", "orthonormality", "ratio-field",
        "energy", "charge-asymmetry", "reality-windows",
    ]
    failing = [(result.name, result.worst, result.detail) for result in results if not result.passed]
    assert failing == []


def test_charge_asymmetry_suite(fig1_params):
    result = check_charge_asymmetry(fig1_params, fig1_params)
    assert result.passed
    assert result.worst > 1e-12


def test_charge_asymmetry_skips_a_field_free_scenario(fig1_params):
    free = fig1_params.replace(B0=0.0)
    result = check_charge_asymmetry(free, free)
    assert result.passed
    assert "skipped" in result.detail


def test_charge_symmetric_energies_fail_the_suite(fig1_params, monkeypatch):
    def symmetric(case, params, t):
        energy = np.ones_like(np.asarray(t, dtype=float))
        return energy, energy.copy()

    monkeypatch.setattr(suites, "charge_asymmetry", symmetric)
    result = check_charge_asymmetry(fig1_params, fig1_params)
    assert not result.passed
    assert result.worst == 0.0
