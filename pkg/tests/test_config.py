import json

import pytest

from wordrep.config import RunConfig, config_path, load_config


def test_defaults():
    c = load_config(env={})
    assert c == RunConfig()
    assert c.budget.t_max == 3 and c.budget.node_limit == 10**8


def test_precedence(tmp_path):
    f = tmp_path / "run.json"
    f.write_text(json.dumps({"t_max": 2, "workers": 3, "seed": 7}))
    env = {"WORDREP_WORKERS": "5", "WORDREP_SEED": "9"}
    c = load_config({"seed": 11, "t_max": None}, env, f)
    assert (c.t_max, c.workers, c.seed) == (2, 5, 11)


def test_env_coercion():
    env = {"WORDREP_M_MAX": "none", "WORDREP_TIMINGS": "yes", "WORDREP_STRICT": "0", "WORDREP_NODE_LIMIT": "500"}
    c = load_config(env=env)
    assert c.m_max is None and c.timings is True and c.strict is False and c.node_limit == 500


def test_other_prefixed_variables_ignored():
    c = load_config(env={"WORDREP_CONFIG": "x.json", "WORDREP_NONWR8": "list.g6"})
    assert c == RunConfig()


def test_rejections(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"colour": "red"}))
    with pytest.raises(ValueError, match="unknown config key"):
        load_config(env={}, path=f)
    with pytest.raises(ValueError):
        load_config({"workers": 0}, env={})
    with pytest.raises(ValueError):
        load_config(env={"WORDREP_TIMINGS": "maybe"})
    with pytest.raises(ValueError):
        RunConfig(t_max=0)


def test_config_path():
    assert config_path("a.json", {"WORDREP_CONFIG": "b.json"}) == "a.json"
    assert config_path(None, {"WORDREP_CONFIG": "b.json"}) == "b.json"
    assert config_path(None, {}) is None


def test_round_trip_dict():
    c = RunConfig(workers=2, output="out.jsonl")
    assert RunConfig(**c.to_dict()) == c
