from math import inf, log, sqrt

import numpy as np
import pytest

from ncqosc.energy import (
    THETA_RADICAND, certify_window, charge_asymmetry, dominant_balance_spot_check,
    energy_asymptote, energy_case_series, energy_general, reality_window,
)
from ncqosc.errors import NotApplicableCase, OutsideRealityWindow
from ncqosc.model import all_cases
from ncqosc.tab_validation.suites import sample_times

GAMMA_T = np.linspace(0.0, 5.0, 51)
ASYMPTOTE_FIG1 = 2e7 + 1e3 * sqrt(1e7 - 1) + 3000.0


def test_constant_energy_of_set1_case2(fig1_params):
    series = energy_case_series("set1-case2", fig1_params, 1, GAMMA_T)
    assert series.value[0] == pytest.approx(2.3635e7, rel=1e-4)
    assert np.std(series.value) / np.mean(series.value) <= 1e-12
    assert energy_asymptote("set1-case2", fig1_params, 1) == pytest.approx(series.value[0])


def test_series_scaling_and_frame(fig1_params):
    series = energy_case_series("set1-case1", fig1_params, 1, GAMMA_T)
    np.testing.assert_allclose(series.scaled, series.value / 1e3)
    frame = series.to_frame()
    assert list(frame.columns) == ["t", "energy", "energy_over_omega0"]
    assert len(frame) == GAMMA_T.size


def test_set1_asymptote(fig1_params):
    limit = energy_asymptote("set1-case1", fig1_params, 1)
    assert limit == pytest.approx(ASYMPTOTE_FIG1, rel=1e-12)
    assert limit == pytest.approx(2.31652775e7, rel=1e-8)
    late = energy_case_series("set1-case1", fig1_params, 1, [20.0]).value[0]
    assert abs(late - limit) / limit <= 1e-6
    assert energy_asymptote("set1-case3", fig1_params, 1) == limit


@pytest.mark.parametrize("case", [str(case) for case in all_cases()])
def test_reduced_forms_match_general_formula(case, fig1_params):
    grid = sample_times(case, fig1_params, 21)
    series = energy_case_series(case, fig1_params, 1, grid)
    general = energy_general(1, 0, case, fig1_params, grid)
    np.testing.assert_allclose(series.value, general, rtol=1e-9)


def test_ground_state_energy_has_no_cross_term(fig1_params):
    energy = energy_general(0, 0, "set1-case1", fig1_params, GAMMA_T)
    np.testing.assert_allclose(energy, 1e7, rtol=1e-9)


def test_set1_case4_has_an_interior_minimum(fig1_params):
    value = energy_case_series("set1-case4", fig1_params, 1, GAMMA_T).value
    lowest = int(np.argmin(value))
    assert 0 < lowest < GAMMA_T.size - 1
    with pytest.raises(NotApplicableCase):
        energy_asymptote("set1-case4", fig1_params, 1)


def test_faster_field_decay_approaches_the_limit_sooner(fig1_params):
    t = GAMMA_T[1:]
    case1 = energy_case_series("set1-case1", fig1_params, 1, t).value
    case3 = energy_case_series("set1-case3", fig1_params, 1, t).value
    assert np.all(np.abs(case3 - ASYMPTOTE_FIG1) < np.abs(case1 - ASYMPTOTE_FIG1))


def test_strong_field_raises_set2_energies(fig2_params):
    zero_field = fig2_params.replace(B0=0.0)
    case1 = energy_case_series("set2-case1", fig2_params, 1, GAMMA_T, dominant_balance=True).value
    case2 = energy_case_series("set2-case2", fig2_params, 1, GAMMA_T).value
    assert np.all(case1 > energy_case_series("set2-case1", zero_field, 1, GAMMA_T).value)
    assert np.all(case2 > energy_case_series("set2-case2", zero_field, 1, GAMMA_T).value)
    # Case I loses more energy over the window
    assert case1[0] - case1[-1] > case2[0] - case2[-1]
    np.testing.assert_allclose(case1 * (GAMMA_T + 1), 6e7, rtol=5e-2)
    np.testing.assert_allclose(case2 * (GAMMA_T + 1), 2.95e7, rtol=1e-2)
    assert energy_asymptote("set2-case1", fig2_params, 1) == 0.0


def test_dominant_balance_against_high_precision(fig2_params):
    assert dominant_balance_spot_check(fig2_params, [0.0, 2.5, 5.0]) < 1e-12


def test_weak_field_is_continuous(fig1_params):
    weak = energy_case_series("set1-case1", fig1_params.replace(B0=1e-6), 1, GAMMA_T).value
    none = energy_case_series("set1-case1", fig1_params.replace(B0=0.0), 1, GAMMA_T).value
    np.testing.assert_allclose(weak, none, rtol=1e-9)


def test_charge_asymmetry(fig1_params):
    e_plus, e_minus = charge_asymmetry("set1-case1", fig1_params, 1.0)
    assert e_plus != pytest.approx(e_minus, rel=1e-9)
    e_plus, e_minus = charge_asymmetry("set1-case1", fig1_params.replace(B0=0.0), 1.0)
    assert e_plus == pytest.approx(e_minus, rel=1e-12)


def test_reduced_energy_requires_unit_xi2(fig1_params):
    with pytest.raises(NotApplicableCase, match="xi2"):
        energy_case_series("set1-case1", fig1_params.replace(xi2=2.0, mu=None), 1, GAMMA_T)


def test_unbounded_window(fig1_params):
    window = reality_window("set1-case1", fig1_params)
    assert window.upper == inf and window.lower == -inf
    assert window.source == "unbounded"
    assert window.contains(1e6)


def test_set2_case2_lower_bound_is_open(fig1_params):
    window = reality_window("set2-case2", fig1_params)
    assert window.lower == pytest.approx(-1.0)
    assert window.lower_open
    assert not window.contains(window.lower)
    assert window.contains(-0.5)
    assert window.to_dict()["lower_open"] is True
    assert not reality_window("set1-case1", fig1_params).lower_open


def test_finite_set1_window(window_params):
    window = reality_window("set1-case1", window_params)
    assert window.upper == pytest.approx(log(4.0) / 2, rel=1e-12)
    assert window.upper_radicand == THETA_RADICAND
    assert reality_window("set1-case3", window_params).upper == pytest.approx(log(4.0) / 4)
    assert reality_window("set1-case1", window_params.replace(B0=2.0)).upper == 0.0


def test_empty_window(fig1_params):
    window = reality_window("set1-case1", fig1_params.replace(Delta_c=1e5, mu=None))
    assert window.empty
    assert not window.contains(0.0)
    assert window.source.startswith("empty")


def test_set2_case1_window(fig2_params):
    window = reality_window("set2-case1", fig2_params)
    assert window.lower == pytest.approx(sqrt(1e6 / 1e7) - 1.0, rel=1e-12)
    assert window.upper == pytest.approx(sqrt(1e41) - 1.0, rel=1e-12)
    bounds = certify_window("set2-case1", fig2_params)
    assert [bound.side for bound in bounds] == ["lower", "upper"]
    assert all(bound.agrees for bound in bounds)


def test_certified_theta_bound(window_params):
    (bound,) = certify_window("set1-case1", window_params)
    assert bound.side == "upper"
    assert bound.root == pytest.approx(log(4.0) / 2, rel=1e-9)
    assert bound.agrees


def test_energy_outside_the_window(window_params):
    with pytest.raises(OutsideRealityWindow, match="reality window") as info:
        energy_general(1, 0, "set1-case1", window_params, np.array([0.5, 1.0, 2.0]))
    assert info.value.t == 1.0
    assert "bound by " + THETA_RADICAND in str(info.value)
