import dataclasses
import hashlib
import json
import logging
import os
from dataclasses import dataclass
from typing import Optional

from ncqosc.errors import ConfigError, ConstraintViolated, UnknownCase
from ncqosc.model.catalog import build_scenario, check_all_constraints
from ncqosc.model.params import CaseId, ScenarioParams

logger = logging.getLogger(__name__)

DATASET_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "datasets")
SCENARIO_NAMES_FILE = os.path.join(DATASET_DIR, "scenario_names.txt")

REQUIRED_KEYS = ("M", "q", "omega0", "B0", "Gamma", "sigma", "Delta_c")
PARAM_KEYS = tuple(field.name for field in dataclasses.fields(ScenarioParams))
SELECTOR_KEYS = ("family", "case")


@dataclass(frozen=True)
class ScenarioConfig:
    """
    A loaded scenario config.

    Attributes
    ----------
    params : ScenarioParams
    case : CaseId or None
        Case selected by the ``family``/``case`` keys, if any.
    sha256 : str
        Hash of the canonical JSON encoding, see :func:`config_hash`.
    source : str
        Bundled name or file path the config was read from.
    """

    params: ScenarioParams
    case: Optional[CaseId]
    sha256: str
    source: str


def get_scenario_names() -> list:
    """Report the bundled scenario configs."""
    with open(SCENARIO_NAMES_FILE, encoding="utf-8") as handle:
        names = [line.strip() for line in handle]
    return list(filter(None, names))


def config_hash(obj: dict) -> str:
    """
    SHA-256 of the sorted-key JSON encoding of a config object.

    Examples
    --------
    >>> config_hash({"b": 1, "a": 2}) == config_hash({"a": 2, "b": 1})
    True
    """
    canonical = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _resolve(name_or_path: str) -> str:
    if name_or_path in get_scenario_names():
        return os.path.join(DATASET_DIR, name_or_path + ".json")
    return os.fspath(name_or_path)


def _read(path: str) -> dict:
    if not os.path.isfile(path):
        raise ConfigError("config file not found", path)
    try:
        with open(path, encoding="utf-8") as handle:
            obj = json.load(handle)
    except (OSError, UnicodeDecodeError) as err:
        raise ConfigError(f"cannot read config: {err}", path) from err
    except json.JSONDecodeError as err:
        raise ConfigError(f"malformed JSON: {err.msg} (line {err.lineno})", path) from err
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object", path)
    if not obj:
        raise ConfigError("config is empty", path)
    return obj


def parse_config(obj: dict, path: Optional[str] = None) -> tuple:
    """
    Validate a decoded config object.

    Returns
    -------
    tuple
        ``(params, case)`` where ``case`` is None without a ``case`` key.

    Raises
    ------
    ConfigError
        For unknown keys, missing required keys, non-numeric values or an
        unknown case.
    """
    unknown = sorted(set(obj) - set(PARAM_KEYS) - set(SELECTOR_KEYS))
    if unknown:
        raise ConfigError(f"unknown key(s): {', '.join(unknown)}", path)
    missing = [key for key in REQUIRED_KEYS if key not in obj]
    if missing:
        raise ConfigError(f"missing required key(s): {', '.join(missing)}", path)

    values = {}
    for key in PARAM_KEYS:
        if key not in obj or obj[key] is None:
            continue
        value = obj[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{key} must be a number, got {value!r}", path)
        values[key] = value
    try:
        params = ScenarioParams(**values)
    except (TypeError, ValueError) as err:
        raise ConfigError(str(err), path) from err

    case = None
    if "case" in obj:
        try:
            case = CaseId.parse(obj["case"], obj.get("family"))
        except UnknownCase as err:
            raise ConfigError(str(err), path) from err
    elif "family" in obj:
        raise ConfigError("family given without case", path)
    return params, case


def load_scenario(name_or_path: str, strict: bool = True) -> ScenarioConfig:
    """
    Load a bundled scenario or a JSON config file.

    Use :func:`get_scenario_names` to see the bundled scenarios.

    Parameters
    ----------
    name_or_path : str
        Bundled name such as ``"fig1"`` or a path to a JSON file.
    strict : bool, optional
        When True a supplied mu is checked against the family constraint of
        the selected case (of every catalog case without one).

    Returns
    -------
    ScenarioConfig

    Raises
    ------
    TypeError
        If ``name_or_path`` is not a string or path.
    ConfigError
        If the file is missing, empty or malformed, or a strict constraint
        check fails.

    Examples
    --------
    >>> config = load_scenario("fig1")
    >>> config.params.B0, config.case
    (100.0, None)
    """
    if not isinstance(name_or_path, (str, os.PathLike)):
        raise TypeError(
            "This function accepts only a bundled scenario name or a path. "
            "Please use get_scenario_names() to see the bundled scenarios."
        )
    path = _resolve(name_or_path)
    obj = _read(path)
    params, case = parse_config(obj, path)
    if strict and params.mu is not None:
        try:
            if case is None:
                check_all_constraints(params)
            else:
                build_scenario(case, params)
        except ConstraintViolated as err:
            raise ConfigError(str(err), path) from err
    logger.debug("loaded scenario %s", path)
    return ScenarioConfig(params, case, config_hash(obj), os.fspath(name_or_path))
