import pandas as pd
import pytest
from plotnine import ggplot

from ncqosc.graphics import ggenergy, save_svg


@pytest.fixture
def frame():
    return pd.DataFrame({
        "Gamma_t": [0.0, 1.0, 2.0] * 2,
        "energy_over_omega0": [3.0, 2.0, 1.5, 2.5, 2.0, 1.8],
        "curve": ["Case I"] * 3 + ["Case II"] * 3,
    })


def test_ggenergy_returns_plot(frame):
    plot = ggenergy(frame, title="demo")
    assert isinstance(plot, ggplot)


def test_ggenergy_numeric_color_column(frame):
    plot = ggenergy(frame.assign(value=[0.0] * 3 + [1e2] * 3), color="value")
    assert isinstance(plot, ggplot)


def test_ggenergy_validation(frame):
    with pytest.raises(TypeError, match="DataFrame"):
        ggenergy(frame.to_dict())
    with pytest.raises(ValueError, match="energy_over_omega0"):
        ggenergy(frame.drop(columns="energy_over_omega0"))


def test_save_svg(frame, tmp_path):
    path = save_svg(ggenergy(frame), tmp_path / "energy.svg", width=4, height=3)
    assert path == str(tmp_path / "energy.svg")
    assert "<svg" in (tmp_path / "energy.svg").read_text(encoding="utf-8")
