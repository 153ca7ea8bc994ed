from math import factorial

import numpy as np


def genlaguerre_recurrence(m: int, alpha: float, z):
    """
    Generalized Laguerre polynomial ``L_m^(alpha)(z)`` by the three-term
    recurrence

    ``(k+1) L_{k+1} = (2k + 1 + alpha - z) L_k - (k + alpha) L_{k-1}``.

    Examples
    --------
    >>> float(genlaguerre_recurrence(2, 0.0, 0.0))
    1.0
    """
    z = np.asarray(z, dtype=float)
    previous = np.ones_like(z)
    if m == 0:
        return previous
    current = 1.0 + alpha - z
    for k in range(1, m):
        previous, current = current, ((2 * k + 1 + alpha - z) * current
                                      - (k + alpha) * previous) / (k + 1)
    return current


def tricomi_U_poly(m: int, b_param: float, z):
    """
    Terminating Tricomi confluent hypergeometric function ``U(-m, b, z)``.

    Parameters
    ----------
    m : int
        Non-negative integer; the first argument of ``U`` is ``-m``.
    b_param : float
        Second argument of ``U``.
    z : float or array_like
        Evaluation point(s).

    Returns
    -------
    float or numpy.ndarray
        ``(-1)**m m! L_m^(b-1)(z)``.

    Raises
    ------
    TypeError
        If ``m`` is not an integer.
    ValueError
        If ``m`` is negative.

    Examples
    --------
    >>> tricomi_U_poly(0, 2.5, 3.0)
    1.0
    >>> tricomi_U_poly(1, 2.0, 5.0)
    3.0
    >>> tricomi_U_poly(2, 1.0, 0.0)
    2.0

    See Also
    --------
    scipy.special.eval_genlaguerre : Library evaluation of the same polynomial.
    """
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise TypeError(f"m must be an integer, got {m!r}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    value = (-1) ** m * factorial(m) * genlaguerre_recurrence(int(m), b_param - 1.0, z)
    return float(value) if np.ndim(value) == 0 else value
