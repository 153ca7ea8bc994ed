"""
Batch front end behind the ``ncqosc`` command.

Every command writes RFC-4180 CSV files (CRLF rows, ``%.17g`` floats)
preceded by provenance comment lines; SVG plots are derived from the CSV
data.
"""
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from math import pi
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from ncqosc import __version__
from ncqosc.dataset.load_data import ScenarioConfig, load_scenario
from ncqosc.energy.energy import dominant_balance_spot_check, energy_case_series, energy_general
from ncqosc.energy.window import RealityWindow, reality_window
from ncqosc.errors import ConfigError, OutsideRealityWindow
from ncqosc.graphics.ggenergy import ggenergy, save_svg
from ncqosc.model.catalog import build_scenario
from ncqosc.model.params import Case, CaseId, Family, ScenarioParams, all_cases
from ncqosc.ncparams.ncparams import nc_pair
from ncqosc.phase.phase import phase_series
from ncqosc.tab_validation.suites import run_validation
from ncqosc.tab_validation.tab_validation import tab_validation, write_report
from ncqosc.wavefunction.eigenfunction import sample_density, spec_at

logger = logging.getLogger(__name__)

COMMANDS = ("run", "figures", "validate", "sweep", "cases")
FLOAT_FORMAT = "%.17g"
FIGURE_SPAN = 5.0
SPOT_CHECK_TIMES = (0.0, 2.5, 5.0)

CASE_DESCRIPTIONS = {
    "set1-case1": ("exp(-Gamma t)", "omega0", "B0", "exponential EP, vartheta = Gamma"),
    "set1-case2": ("exp(-Gamma t)", "omega0", "B0 exp(Gamma t)", "exponential EP, vartheta = Gamma"),
    "set1-case3": ("exp(-Gamma t)", "omega0", "B0 exp(-Gamma t)", "exponential EP, vartheta = Gamma"),
    "set1-case4": ("exp(-Gamma t)", "omega0 exp(-Gamma t/2)", "B0 exp(Gamma t)",
                   "exponential EP, vartheta = Gamma"),
    "set2-case1": ("1", "omega0/(Gamma t + chi)", "B0/(Gamma t + chi)", "rational EP, k = 2"),
    "set2-case2": ("1", "omega0/(Gamma t + chi)", "B0/(Gamma t + chi)", "critical rational EP, k = -2"),
}


@dataclass(frozen=True)
class RunRequest:
    """
    Parsed command-line request.

    ``t_max = 0`` yields the single sample ``t = 0``.
    """

    command: str
    config_path: Optional[str] = None
    case: Optional[CaseId] = None
    t_max: float = 5.0
    samples: int = 101
    output_dir: str = "."

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if not self.t_max >= 0:
            raise ValueError(f"t_max must be >= 0, got {self.t_max!r}")
        if self.samples < 2:
            raise ValueError(f"samples must be >= 2, got {self.samples}")

    @property
    def grid(self) -> np.ndarray:
        if self.t_max == 0:
            return np.zeros(1)
        return np.linspace(0.0, self.t_max, self.samples)


@dataclass(frozen=True)
class Curve:
    """One energy curve of a figure."""

    label: str
    case: CaseId
    params: ScenarioParams
    dominant_balance: bool = False


def provenance_lines(sha256: str, case: str, units: str) -> List[str]:
    return [f"# ncqosc {__version__}", f"# config-sha256 {sha256}", f"# case {case}",
            f"# units: {units}"]


def write_csv(path, frame: pd.DataFrame, header: Sequence[str]) -> str:
    """Write provenance comment lines followed by ``frame`` as CRLF CSV."""
    path = os.fspath(path)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        for line in header:
            handle.write(line + "\r\n")
        frame.to_csv(handle, index=False, lineterminator="\r\n", float_format=FLOAT_FORMAT)
    logger.info("wrote %s", path)
    return path


def write_diagnostics(output_dir, window: RealityWindow, times) -> str:
    path = os.path.join(os.fspath(output_dir), "diagnostics.json")
    payload = {"window": window.to_dict(),
               "offending_times": [float(t) for t in np.atleast_1d(times)]}
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True, default=str)
        handle.write("\n")
    logger.info("wrote %s", path)
    return path


def _resolve_case(req: RunRequest, config: ScenarioConfig) -> CaseId:
    case = req.case or config.case
    if case is None:
        raise ConfigError("no case selected; pass --case or set it in the config", config.source)
    return case


def check_window(case: CaseId, params: ScenarioParams, grid, output_dir) -> RealityWindow:
    """Raise OutsideRealityWindow (after writing diagnostics) if the grid leaves the window."""
    window = reality_window(case, params)
    inside = np.atleast_1d(window.contains(grid))
    if not np.all(inside):
        offending = np.atleast_1d(grid)[~inside]
        write_diagnostics(output_dir, window, offending)
        raise OutsideRealityWindow(window, float(offending[0]))
    return window


def run_case(req: RunRequest) -> Dict[str, str]:
    """
    Evaluate one case on ``[0, t_max]`` and write its CSV bundle.

    Returns
    -------
    dict
        Artifact name to written path: ``energy``, ``phase``,
        ``ncparams``, ``rho`` and ``density``.
    """
    config = load_scenario(req.config_path)
    case = _resolve_case(req, config)
    params = config.params
    os.makedirs(req.output_dir, exist_ok=True)
    grid = req.grid
    check_window(case, params, grid, req.output_dir)

    scenario = build_scenario(case, params)
    ep, p = scenario.ep, scenario.params
    n, m = p.n, p.m
    pair = nc_pair(case, params)
    energy = np.atleast_1d(energy_general(n, m, case, params, grid))
    phase = phase_series(case, params, n, p.l, grid)
    a, b, c = (np.atleast_1d(value) for value in pair.coefficients(grid))

    frames = {
        "energy": (pd.DataFrame({"t": grid, "energy": energy,
                                 "energy_over_omega0": energy / p.omega0}),
                   "t [time], energy [hbar = 1], energy_over_omega0 [1]"),
        "phase": (pd.DataFrame({"t": grid, "theta_quadrature": phase.theta_quad,
                                "theta_closed_form": (phase.theta_closed if phase.theta_closed
                                                      is not None else np.full_like(grid, np.nan))}),
                  "t [time], theta [rad]"),
        "ncparams": (pd.DataFrame({"t": grid,
                                   "theta": np.atleast_1d(pair.theta(grid)),
                                   "Omega": np.atleast_1d(pair.Omega(grid)),
                                   "kappa": np.atleast_1d(pair.kappa(grid)),
                                   "a": a, "b": b, "c": c}),
                     "t [time], theta [length^2], Omega [momentum^2], kappa [momentum^2], a b c [hbar = 1]"),
        "rho": (pd.DataFrame({"t": grid, "rho": ep.rho(grid), "rho_dot": ep.rho_dot(grid),
                              "a": ep.a(grid), "b": ep.b(grid)}),
                "t [time], rho [length], rho_dot [length/time], a b [hbar = 1]"),
    }

    t_last = float(grid[-1])
    spec = spec_at(ep, n, m, t_last, case)
    r = np.linspace(0.0, 3.0 * spec.rho, 31)
    ang = np.linspace(0.0, 2 * pi, 32, endpoint=False)
    density = sample_density(spec, r, ang)
    R, A = np.meshgrid(r, ang, indexing="ij")
    frames["density"] = (pd.DataFrame({"r": R.ravel(), "ang": A.ravel(), "density": density.ravel()}),
                         f"r [length], ang [rad], density [1/length^2] at t = {t_last:.17g}")

    written = {}
    for name, (frame, units) in frames.items():
        header = provenance_lines(config.sha256, case.id, units)
        written[name] = write_csv(os.path.join(req.output_dir, f"{name}.csv"), frame, header)
    return written


def figure_curves(which: str) -> List[Curve]:
    """Curves of the two energy figures, in plotting order."""
    if which not in ("fig1", "fig2"):
        raise ConfigError(f"unknown figure {which!r}; choose fig1 or fig2")
    params = load_scenario(which).params
    free = params.replace(B0=0.0)
    if which == "fig1":
        cases = [CaseId(Family.SET_I, case) for case in (Case.I, Case.II, Case.III, Case.IV)]
        curves = [Curve(f"Case {case.case.value}", case, params) for case in cases]
        curves.append(Curve("B=0 Cases I-III", cases[0], free))
        curves.append(Curve("B=0 Case IV", cases[3], free))
        return curves
    first, second = CaseId(Family.SET_II, Case.I), CaseId(Family.SET_II, Case.II)
    return [Curve("Case I", first, params, dominant_balance=True),
            Curve("Case II", second, params),
            Curve("B=0 Case I", first, free),
            Curve("B=0 Case II", second, free)]


def evaluate_curve(curve: Curve, gamma_t) -> pd.DataFrame:
    """Ground-tower energy of one curve on scaled times ``Gamma t``."""
    p = curve.params
    gamma_t = np.asarray(gamma_t, dtype=float)
    t = gamma_t / p.Gamma if p.Gamma > 0 else gamma_t
    series = energy_case_series(curve.case, p, p.n, t, dominant_balance=curve.dominant_balance)
    return pd.DataFrame({"curve": curve.label, "case": curve.case.id, "B0": p.B0,
                         "Gamma_t": gamma_t, "t": t, "energy": series.value,
                         "energy_over_omega0": series.scaled})


def figures(which: str, output_dir: str = ".", samples: int = 101, jobs: int = 1) -> Dict[str, str]:
    """
    Regenerate one energy figure as CSV (authoritative) and SVG.

    With ``jobs > 1`` the curves are evaluated on a process pool and
    reassembled in curve order.
    """
    curves = figure_curves(which)
    gamma_t = np.linspace(0.0, FIGURE_SPAN, samples)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            frames = list(pool.map(evaluate_curve, curves, repeat(gamma_t)))
    else:
        frames = [evaluate_curve(curve, gamma_t) for curve in curves]
    frame = pd.concat(frames, ignore_index=True)

    if which == "fig2":
        worst = dominant_balance_spot_check(curves[0].params, SPOT_CHECK_TIMES)
        logger.info("fig2 dominant-balance spot check: worst relative deviation %.3e", worst)

    config = load_scenario(which)
    os.makedirs(output_dir, exist_ok=True)
    cases = ",".join(dict.fromkeys(curve.case.id for curve in curves))
    header = provenance_lines(config.sha256, cases,
                              "Gamma_t [1], t [time], energy [hbar = 1], energy_over_omega0 [1]")
    csv_path = write_csv(os.path.join(output_dir, f"{which}.csv"), frame, header)
    title = ("Set-I energy, B0 = 1e2" if which == "fig1" else "Set-II energy, B0 = 1e20")
    svg_path = save_svg(ggenergy(frame, title=title), os.path.join(output_dir, f"{which}.svg"))
    return {"csv": csv_path, "svg": svg_path}


def sweep(config_path: str, case: Optional[CaseId], param: str, values: Sequence[float],
          output_dir: str = ".", t_max: float = 5.0, samples: int = 101) -> Dict[str, str]:
    """
    Re-run the energy series of one case for each value of ``param``.

    Writes ``sweep.csv`` in long format and ``sweep.svg``.
    """
    config = load_scenario(config_path)
    req = RunRequest("sweep", config_path, case, t_max, samples, output_dir)
    case = _resolve_case(req, config)
    if param not in ScenarioParams.__dataclass_fields__:
        raise ConfigError(f"unknown sweep parameter {param!r}", config.source)
    os.makedirs(output_dir, exist_ok=True)
    grid = req.grid

    frames = []
    for value in tqdm(values, desc=f"sweep {param}", ncols=95):
        try:
            params = config.params.replace(**{param: value})
        except (TypeError, ValueError) as err:
            raise ConfigError(f"{param} = {value!r}: {err}", config.source) from err
        check_window(case, params, grid, output_dir)
        energy = np.atleast_1d(energy_general(params.n, params.m, case, params, grid))
        frames.append(pd.DataFrame({"parameter": param, "value": value, "t": grid,
                                    "energy": energy,
                                    "energy_over_omega0": energy / params.omega0}))
    frame = pd.concat(frames, ignore_index=True)

    header = provenance_lines(config.sha256, case.id,
                              f"value [units of {param}], t [time], energy [hbar = 1], "
                              "energy_over_omega0 [1]")
    csv_path = write_csv(os.path.join(output_dir, "sweep.csv"), frame, header)
    plot = ggenergy(frame, x="t", color="value", title=f"{case.id}: sweep over {param}")
    svg_path = save_svg(plot, os.path.join(output_dir, "sweep.svg"))
    return {"csv": csv_path, "svg": svg_path}


def validate(config_path: Optional[str] = None, report_path: Optional[str] = None,
             output_dir: str = ".") -> bool:
    """
    Run the validation suites, print the table and write the JSON report.

    The report goes to ``report_path`` when given, else to
    ``validation.json`` in ``output_dir``.

    The config is loaded without the constraint check so that a violated
    constraint shows up as a failing suite.
    """
    params = load_scenario(config_path or "fig1", strict=False).params
    results = run_validation(params)
    tab_validation(results)
    if not report_path:
        os.makedirs(output_dir, exist_ok=True)
        report_path = os.path.join(output_dir, "validation.json")
    write_report(results, report_path)
    logger.info("wrote %s", report_path)
    return all(result.passed for result in results)


def list_cases() -> pd.DataFrame:
    """Print and return the catalog of closed-form cases."""
    rows = [(case.id, case.family.value, case.case.value) + CASE_DESCRIPTIONS[case.id]
            for case in all_cases()]
    table = pd.DataFrame(rows, columns=["id", "family", "case", "f", "omega", "B", "EP family"])
    table = table.set_index("id")
    print("Catalog Cases")
    print(table.to_string())
    return table
