import json

import pytest

from ncqosc.dataset import config_hash, get_scenario_names, load_scenario, parse_config
from ncqosc.errors import ConfigError
from ncqosc.model import CaseId

BASE = {"M": 1, "q": 1, "omega0": 1e3, "B0": 1e2, "Gamma": 1, "sigma": 1e7, "Delta_c": 1e7}


def write_config(tmp_path, obj, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def test_bundled_scenarios():
    assert get_scenario_names() == ["fig1", "fig2"]
    fig1 = load_scenario("fig1")
    assert fig1.params.B0 == 100.0
    assert fig1.params.mu == 1.0
    assert fig1.case is None
    assert load_scenario("fig2").params.B0 == 1e20


def test_hash_ignores_key_order(tmp_path):
    reordered = dict(reversed(list(BASE.items())))
    first = load_scenario(write_config(tmp_path, BASE, "a.json"))
    second = load_scenario(write_config(tmp_path, reordered, "b.json"))
    assert first.sha256 == second.sha256 == config_hash(BASE)
    assert len(first.sha256) == 64


def test_case_selection(tmp_path):
    config = load_scenario(write_config(tmp_path, dict(BASE, case="set1-case2")))
    assert config.case == CaseId.parse("set1-case2")
    config = load_scenario(write_config(tmp_path, dict(BASE, family="SetII", case="II")))
    assert config.case.id == "set2-case2"


def test_missing_file():
    with pytest.raises(ConfigError, match="config file not found"):
        load_scenario("no/such/file.json")


def test_not_a_path():
    with pytest.raises(TypeError, match="get_scenario_names"):
        load_scenario(42)


@pytest.mark.parametrize("obj, message", [
    ({}, "config is empty"),
    (dict(BASE, colour=1), "unknown key\\(s\\): colour"),
    ({k: v for k, v in BASE.items() if k != "sigma"}, "missing required key\\(s\\): sigma"),
    (dict(BASE, B0="big"), "B0 must be a number"),
    (dict(BASE, M=0), "M must be > 0"),
    (dict(BASE, family="SetI"), "family given without case"),
    (dict(BASE, case="set1-case7"), "unknown case"),
])
def test_invalid_configs(tmp_path, obj, message):
    with pytest.raises(ConfigError, match=message):
        load_scenario(write_config(tmp_path, obj))


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"M\": 1,", encoding="utf-8")
    with pytest.raises(ConfigError, match="malformed JSON"):
        load_scenario(str(path))


def test_constraint_is_checked_only_when_strict(tmp_path):
    path = write_config(tmp_path, dict(BASE, mu=1.01))
    with pytest.raises(ConfigError, match="violated"):
        load_scenario(path)
    assert load_scenario(path, strict=False).params.mu == 1.01


def test_parse_config_without_mu():
    params, case = parse_config(dict(BASE, n=2, m=1))
    assert params.mu is None
    assert (params.n, params.m) == (2, 1)
    assert case is None
