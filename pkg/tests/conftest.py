import matplotlib
import pytest

matplotlib.use("Agg")

from ncqosc import ScenarioParams, load_scenario  # noqa: E402


@pytest.fixture
def fig1_params():
    return load_scenario("fig1").params


@pytest.fixture
def fig2_params():
    return load_scenario("fig2").params


@pytest.fixture
def window_params():
    """Set-I constants with M sigma < 1, so Case I has a finite upper bound."""
    return ScenarioParams(M=1, q=1, omega0=1, B0=4, Gamma=1, sigma=0.5, Delta_c=2)
