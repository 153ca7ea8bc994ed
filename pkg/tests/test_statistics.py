import numpy as np
import pytest
import statsmodels.api as sm

from ncqosc.statistics import R2, convergence_order, linear_fit


def test_linear_fit_exact_line():
    fit = linear_fit([0.0, 1.0, 2.0, 3.0], [1.0, 3.0, 5.0, 7.0])
    assert fit.slope == pytest.approx(2.0)
    assert fit.intercept == pytest.approx(1.0)
    assert fit.r2 == pytest.approx(1.0)


def test_linear_fit_needs_three_points():
    with pytest.raises(ValueError, match="at least three points"):
        linear_fit([0.0, 1.0], [0.0, 1.0])
    with pytest.raises(ValueError, match="equal length"):
        linear_fit([0.0, 1.0, 2.0], [0.0, 1.0])


def test_R2():
    rng = np.random.default_rng(1)
    x = np.linspace(0, 1, 50)
    model = sm.OLS(2 * x + rng.normal(scale=0.1, size=50), sm.add_constant(x)).fit()
    assert 0 < R2(model) < 1
    with pytest.raises(TypeError, match="statsmodels"):
        R2("not a model")


def test_convergence_order():
    steps = np.array([0.1, 0.05, 0.025, 0.0125])
    assert convergence_order(steps, 3.0 * steps ** 2) == pytest.approx(2.0)
    assert convergence_order(steps, 0.5 * steps) == pytest.approx(1.0)


def test_convergence_order_rejects_bad_input():
    with pytest.raises(ValueError, match="positive"):
        convergence_order([0.1, 0.05], [1e-3, 0.0])
    with pytest.raises(ValueError, match="same length"):
        convergence_order([0.1, 0.05, 0.025], [1e-3, 1e-4])
