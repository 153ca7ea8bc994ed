import numpy as np
import pytest

from ncqosc.errors import ConstraintViolated, SingularDenominator, UnknownCase
from ncqosc.model import (
    Case, CaseId, Family, ScenarioParams, TimeProfile, all_cases, build_scenario, catalog,
    derive_mu, general_profiles, impose_case_rates,
)


def test_case_id_parsing():
    case = CaseId.parse("set1-case2")
    assert case.family is Family.SET_I
    assert case.case is Case.II
    assert CaseId.parse("II", family="SetII").id == "set2-case2"
    assert CaseId.parse("case 1", family="set2") == CaseId(Family.SET_II, Case.I)
    assert len(all_cases()) == 6


@pytest.mark.parametrize("value", ["set2-case3", "set3-case1", "bogus", "set1-case9"])
def test_unknown_case(value):
    with pytest.raises(UnknownCase):
        CaseId.parse(value, family="SetI" if value == "bogus" else None)


def test_params_validation():
    with pytest.raises(ValueError, match="M must be > 0"):
        ScenarioParams(M=0, q=1, omega0=1, B0=0, Gamma=1, sigma=1, Delta_c=1)
    with pytest.raises(TypeError, match="q must be a real number"):
        ScenarioParams(M=1, q="1", omega0=1, B0=0, Gamma=1, sigma=1, Delta_c=1)
    with pytest.raises(ValueError, match="quantum numbers"):
        ScenarioParams(M=1, q=1, omega0=1, B0=0, Gamma=1, sigma=1, Delta_c=1, n=-1)


def test_params_defaults(fig1_params):
    assert fig1_params.xi2 == 1.0
    assert fig1_params.theta_rate == fig1_params.Gamma
    assert fig1_params.l == -1


def test_derived_mu_matches_figure_choice(fig1_params):
    mu = derive_mu(CaseId.parse("set1-case1"), fig1_params.replace(mu=None))
    assert mu == pytest.approx((4e14 / (4e14 - 1)) ** 0.25, rel=1e-15)
    assert mu == pytest.approx(1.0, rel=1e-12)


def test_catalog_profiles(fig1_params):
    f, omega, B, ep = catalog("set1-case1", fig1_params)
    assert float(f.value(1.0)) == pytest.approx(np.exp(-1.0))
    assert float(omega.value(3.0)) == 1e3
    assert float(B.value(3.0)) == 1e2

    f, omega, B, ep = catalog("set2-case1", fig1_params)
    assert float(f.value(3.0)) == 1.0
    assert float(omega.value(1.0)) == pytest.approx(500.0)
    assert float(B.value(1.0)) == pytest.approx(50.0)
    assert ep.k == 2


def test_damping_starts_at_one(fig1_params):
    for case in all_cases():
        assert float(catalog(case, fig1_params).f.value(0.0)) == 1.0


def test_case_rates_are_imposed(fig1_params):
    p = impose_case_rates(CaseId.parse("set1-case4"), fig1_params.replace(Gamma=2.0, mu=None))
    assert (p.vartheta, p.delta, p.Lambda) == (2.0, 2.0, 2.0)
    assert impose_case_rates(CaseId.parse("set2-case2"), fig1_params).k == -2


def test_constraint_violation_is_reported(fig1_params):
    with pytest.raises(ConstraintViolated, match="mu\\^4") as info:
        catalog("set1-case1", fig1_params.replace(mu=1.01))
    assert info.value.mismatch == pytest.approx(1 - 1.01 ** -4, rel=1e-6)
    # non-strict keeps the inconsistent mu
    assert catalog("set1-case1", fig1_params.replace(mu=1.01), strict=False).ep.mu == 1.01


def test_round_trip_constraints_for_both_figures(fig1_params, fig2_params):
    for params in (fig1_params, fig2_params):
        for case in all_cases():
            build_scenario(case, params).ep.check_constraint()


def test_mu_derived_flag(fig1_params):
    scenario = build_scenario("set2-case2", fig1_params.replace(mu=None))
    assert scenario.mu_derived
    assert scenario.params.mu == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("profile", [
    TimeProfile.exponential(2.0, -0.7),
    TimeProfile.rational(3.0, 1.5, 0.5, 1.0),
    TimeProfile.rational(1.0, 1.0, 1.0, -0.5),
    TimeProfile.constant(4.0),
])
def test_profile_derivative_matches_finite_difference(profile):
    t = np.linspace(0.0, 4.0, 9)
    h = 1e-5
    fd = (profile.value(t + h) - profile.value(t - h)) / (2 * h)
    np.testing.assert_allclose(profile.derivative(t), fd, rtol=1e-8, atol=1e-9)


def test_rational_profile_rejects_zero_offset():
    profile = TimeProfile.rational(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(SingularDenominator, match="Gamma\\*t \\+ chi"):
        profile.value(-1.0)


def test_eta_of_exponential_damping():
    f = TimeProfile.exponential(1.0, -0.3)
    np.testing.assert_allclose(f.eta(np.array([0.0, 2.0])), 0.3)


def test_general_profiles_flag_off_catalog(fig1_params):
    *_, off_catalog = general_profiles(fig1_params.replace(Lambda=1.0))
    assert not off_catalog
    *_, off_catalog = general_profiles(fig1_params.replace(Lambda=0.5))
    assert off_catalog
