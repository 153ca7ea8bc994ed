import logging
import os

import pandas as pd
from plotnine import aes, geom_line, ggplot, ggtitle, labs, theme, theme_bw

logger = logging.getLogger(__name__)


def ggenergy(frame: pd.DataFrame,
             x: str = "Gamma_t",
             y: str = "energy_over_omega0",
             color: str = "curve",
             title: str = "Energy expectation") -> ggplot:
    """
    Line plot of energy curves stored in long format.

    Parameters
    ----------
    frame : pandas.DataFrame
        One row per sample with at least the columns ``x``, ``y`` and
        ``color``.
    x, y : str, optional
        Column names of the axes. Defaults to scaled time ``Gamma_t`` and
        the energy in units of ``omega0``.
    color : str, optional
        Column that separates the curves.
    title : str, optional

    Returns
    -------
    plotnine.ggplot

    Raises
    ------
    TypeError
        If ``frame`` is not a DataFrame.
    ValueError
        If a required column is missing.

    Examples
    --------
    >>> import pandas as pd
    >>> frame = pd.DataFrame({"Gamma_t": [0.0, 1.0], "energy_over_omega0": [2.0, 1.0],
    ...                       "curve": ["Case I", "Case I"]})
    >>> plot = ggenergy(frame)
    """
    if not isinstance(frame, pd.DataFrame):
        raise TypeError("frame must be a pandas DataFrame in long format.")
    missing = [name for name in (x, y, color) if name not in frame.columns]
    if missing:
        raise ValueError(f"frame lacks the column(s) {', '.join(missing)}")

    data = frame.assign(**{color: frame[color].astype(str)})
    return (
        ggplot(data, aes(x=x, y=y, color=color)) +
        geom_line() +
        theme_bw() +
        theme(legend_position="right") +
        ggtitle(title) +
        labs(x="Γt" if x == "Gamma_t" else x,
             y="⟨E⟩/ω₀" if y == "energy_over_omega0" else y,
             color="")
    )


def save_svg(plot: ggplot, path: str, width: float = 7.0, height: float = 4.5) -> str:
    """Write ``plot`` as an SVG file and return the path."""
    path = os.fspath(path)
    plot.save(path, format="svg", width=width, height=height, units="in", verbose=False)
    logger.info("wrote %s", path)
    return path
