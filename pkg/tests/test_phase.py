import numpy as np
import pytest

from ncqosc.errors import DomainError, OutOfCatalog
from ncqosc.model import build_scenario
from ncqosc.phase import (
    atanh_difference, eigenstate_assemble, phase_closed_form, phase_integrand,
    phase_quadrature, phase_series,
)
from ncqosc.wavefunction import PolarPoint, eigenfunction, spec_at

GRID = np.linspace(0.0, 4.0, 9)


def test_phase_starts_at_zero(fig1_params):
    assert phase_quadrature(1, 0, "set1-case1", fig1_params, 0.0) == 0.0
    assert phase_closed_form("set1-case1", 1, 0, fig1_params, 0.0) == 0.0


def test_ground_tower_phase_vanishes(fig1_params):
    # m = 0 means n + l = 0
    assert phase_quadrature(2, -2, "set1-case3", fig1_params, 3.0) == 0.0
    series = phase_series("set1-case4", fig1_params, 1, -1, GRID)
    np.testing.assert_array_equal(series.theta_quad, 0.0)


def test_negative_tower_is_rejected(fig1_params):
    with pytest.raises(ValueError, match="n \\+ l"):
        phase_quadrature(0, -1, "set1-case1", fig1_params, 1.0)


def test_set1_case2_phase_is_linear(fig1_params):
    series = phase_series("set1-case2", fig1_params, 1, 0, GRID)
    slopes = np.diff(series.theta_quad) / np.diff(GRID)
    np.testing.assert_allclose(slopes, slopes[0], rtol=1e-10)
    integrand = phase_integrand("set1-case2", fig1_params)
    assert slopes[0] == pytest.approx(float(integrand(0.0)), rel=1e-10)
    assert series.agrees()


@pytest.mark.parametrize("case", ["set1-case1", "set1-case3", "set2-case2"])
def test_closed_form_matches_quadrature(case, fig1_params):
    series = phase_series(case, fig1_params, 1, 0, GRID)
    assert series.theta_closed is not None
    assert series.max_deviation <= 1e-6


def test_tower_scales_the_phase(fig1_params):
    one = phase_quadrature(1, 0, "set2-case2", fig1_params, 2.0)
    three = phase_quadrature(1, 2, "set2-case2", fig1_params, 2.0)
    assert three == pytest.approx(3 * one, rel=1e-12)


def test_quadrature_only_cases(fig1_params):
    with pytest.raises(OutOfCatalog):
        phase_closed_form("set1-case4", 1, 0, fig1_params, 1.0)
    series = phase_series("set2-case1", fig1_params, 1, 0, GRID)
    assert series.theta_closed is None
    assert series.max_deviation is None
    assert np.all(np.isfinite(series.theta_quad))


def test_closed_form_needs_nonnegative_field(fig1_params):
    with pytest.raises(DomainError, match="q B0 >= 0"):
        phase_closed_form("set1-case1", 1, 0, fig1_params.replace(q=-1.0), 1.0)


def test_negative_charge_falls_back_to_quadrature(fig1_params):
    params = fig1_params.replace(q=-1.0)
    grid = np.linspace(0.0, 1.0, 5)
    series = phase_series("set1-case1", params, 1, 2, grid)
    assert series.theta_closed is None
    assert series.max_deviation is None
    assert np.all(np.isfinite(series.theta_quad))
    assert series.theta_quad[-1] == pytest.approx(phase_quadrature(1, 2, "set1-case1", params, 1.0))


def test_zero_field_closed_form_is_linear(fig1_params):
    params = fig1_params.replace(B0=0.0)
    series = phase_series("set1-case1", params, 1, 0, GRID)
    assert series.max_deviation <= 1e-6
    np.testing.assert_allclose(np.diff(series.theta_closed), series.theta_closed[1], rtol=1e-10)


def test_atanh_difference():
    assert atanh_difference(0.5, 0.2, "x") == pytest.approx(np.arctanh(0.5) - np.arctanh(0.2))
    # both arguments above one: the imaginary parts cancel
    assert atanh_difference(3.0, 2.0, "x") == pytest.approx(0.5 * np.log(2.0 / 3.0))
    with pytest.raises(DomainError, match="imaginary residue"):
        atanh_difference(0.5, 2.0, "x")
    with pytest.raises(DomainError):
        atanh_difference(1.0, 0.5, "x")


def test_eigenstate_differs_from_eigenfunction_by_a_phase(fig1_params):
    ep = build_scenario("set1-case1", fig1_params).ep
    psi = eigenstate_assemble(1, 2, "set1-case1", fig1_params, 1.5, 0.7, 2.0)
    phi = eigenfunction(spec_at(ep, 1, 2, 1.5), PolarPoint(0.7, 2.0))
    assert abs(psi) == pytest.approx(abs(phi), rel=1e-12)
    theta = phase_quadrature(1, 1, "set1-case1", fig1_params, 1.5)
    assert psi == pytest.approx(np.exp(1j * theta) * phi, rel=1e-9)
