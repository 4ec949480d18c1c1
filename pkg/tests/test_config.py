from pathlib import Path

import pytest

from entlink.config import AppConfig, ServiceConfig, load_config, parse_config
from entlink.errors import ConfigError


def test_empty_config_uses_defaults():
    cfg = parse_config(None)
    assert cfg == AppConfig()
    assert cfg.service is None
    assert cfg.hyperparameters.gamma1 == 0.0003
    assert cfg.topic.sweeps == 500 and cfg.topic.burn_in == 200 and cfg.topic.thin == 10


def test_sections_override_defaults(tmp_path):
    path = tmp_path / "conf" / "app.yaml"
    path.parent.mkdir()
    path.write_text(
        "graph: {w_prior: 0.2, w_context: 0.5, w_coherence: 0.3}\n"
        "topic: {sweeps: 50, burn_in: 10}\n"
        "hyperparameters: {alpha: 0.5}\n"
        "service:\n  kb: ../data/kb.jsonl\n  index: /abs/kb.idx\n  port: 9000\n  workers: 2\n"
    )
    cfg = load_config(path)
    assert cfg.graph.w_context == 0.5
    assert (cfg.topic.sweeps, cfg.topic.burn_in, cfg.topic.thin) == (50, 10, 10)
    assert cfg.hyperparameters.alpha == 0.5 and cfg.hyperparameters.beta == 0.001
    assert cfg.service.kb == str((tmp_path / "data" / "kb.jsonl").resolve())
    assert cfg.service.index == "/abs/kb.idx"
    assert (cfg.service.port, cfg.service.workers, cfg.service.timeout_s) == (9000, 2, 600.0)


@pytest.mark.parametrize("data", [
    [1, 2],
    {"extra": {}},
    {"graph": {"w_prior": 0.9}},
    {"graph": {"bogus": 1}},
    {"graph": 3},
    {"topic": {"sweeps": 0}},
    {"hyperparameters": {"beta": -1}},
    {"service": {}},
    {"service": {"kb": "k", "timeout_s": 0}},
    {"service": {"kb": "k", "workers": 0}},
    {"service": {"kb": "k", "strategy": "magic"}},
    {"service": {"kb": "k", "port": 70000}},
])
def test_invalid_configs(data):
    with pytest.raises(ConfigError):
        parse_config(data, Path("."))


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("graph: [unclosed\n")
    with pytest.raises(ConfigError):
        load_config(path)


def test_service_invariants():
    with pytest.raises(ConfigError):
        ServiceConfig(kb="k", timeout_s=-1)
    assert ServiceConfig(kb="k").workers >= 1
