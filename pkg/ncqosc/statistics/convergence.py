from typing import NamedTuple

import numpy as np
import pandas as pd
import statsmodels.api as sm
import statsmodels.formula.api as smf


class LinearFit(NamedTuple):
    slope: float
    intercept: float
    r2: float


def _as_positive(values, name: str) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size < 2:
        raise ValueError(f"{name} must be a 1-d sequence of at least two values")
    if np.any(~np.isfinite(values)) or np.any(values <= 0):
        raise ValueError(f"{name} must be finite and positive")
    return values


def R2(model: sm.regression.linear_model.RegressionResultsWrapper) -> float:
    """
    Coefficient of determination of a fitted OLS model.

    Raises
    ------
    TypeError
        If ``model`` is not a statsmodels regression result.
    """
    if not isinstance(model, sm.regression.linear_model.RegressionResultsWrapper):
        raise TypeError("Input must be a statsmodels regression results object (from sm.OLS.fit()).")
    return float(model.rsquared)


def linear_fit(x, y) -> LinearFit:
    """
    Ordinary least squares line through ``(x, y)``.

    Parameters
    ----------
    x, y : array_like
        Samples of equal length (at least three).

    Returns
    -------
    LinearFit
        ``(slope, intercept, r2)``.

    Examples
    --------
    >>> fit = linear_fit([0.0, 1.0, 2.0, 3.0], [1.0, 3.0, 5.0, 7.0])
    >>> round(fit.slope, 12), round(fit.intercept, 12)
    (2.0, 1.0)
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-d sequences of equal length")
    if x.size < 3:
        raise ValueError("a line fit needs at least three points")
    model = sm.OLS(y, sm.add_constant(x)).fit()
    intercept, slope = model.params
    return LinearFit(float(slope), float(intercept), R2(model))


def convergence_order(steps, errors) -> float:
    """
    Observed order ``p`` of ``error ~ C step**p``.

    The order is the slope of ``log(error)`` against ``log(step)`` from an
    OLS fit.

    Parameters
    ----------
    steps, errors : array_like
        Positive step sizes and the matching positive errors.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If the inputs differ in length or contain non-positive values.

    Examples
    --------
    >>> round(convergence_order([0.1, 0.05, 0.025], [1e-2, 2.5e-3, 6.25e-4]), 10)
    2.0
    """
    steps = _as_positive(steps, "steps")
    errors = _as_positive(errors, "errors")
    if steps.shape != errors.shape:
        raise ValueError("steps and errors must have the same length")
    frame = pd.DataFrame({"log_step": np.log(steps), "log_error": np.log(errors)})
    model = smf.ols("log_error ~ log_step", data=frame).fit()
    return float(model.params["log_step"])
