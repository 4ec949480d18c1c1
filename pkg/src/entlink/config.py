"""YAML configuration for the strategies and the HTTP service.

Every section is optional; omitted keys keep their defaults::

    graph:   {w_prior: 0.3, w_context: 0.4, w_coherence: 0.3}
    topic:   {sweeps: 500, burn_in: 200, thin: 10}
    hyperparameters: {alpha: 0.001, beta_bg: 0.1}
    service: {kb: kb.jsonl, index: kb.idx, port: 8080, workers: 4}
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import yaml

from .errors import ConfigError
from .graph_ned import GraphConfig
from .harness import DEFAULT_TIMEOUT_S, STRATEGIES
from .kb import PathLike
from .topic_ned import Hyperparameters, TopicConfig


@dataclass(frozen=True)
class ServiceConfig:
    kb: str
    index: Optional[str] = None
    host: str = "127.0.0.1"
    port: int = 8080
    strategy: str = "graph"
    timeout_s: float = DEFAULT_TIMEOUT_S
    workers: int = 4
    seed: int = 0
    # report runtime_s as 0 so identical requests give identical bodies
    fixed_clock: bool = False

    def __post_init__(self):
        if not self.timeout_s > 0:
            raise ConfigError("service.timeout_s must be > 0")
        if self.workers < 1:
            raise ConfigError("service.workers must be >= 1")
        if self.strategy not in STRATEGIES:
            raise ConfigError(f"service.strategy must be one of {STRATEGIES}")
        if not 0 <= self.port <= 65535:
            raise ConfigError("service.port out of range")


@dataclass(frozen=True)
class AppConfig:
    graph: GraphConfig = field(default_factory=GraphConfig)
    topic: TopicConfig = field(default_factory=TopicConfig)
    hyperparameters: Hyperparameters = field(default_factory=Hyperparameters)
    service: Optional[ServiceConfig] = None


def _build(cls, section: str, values: Any, base: Optional[Path] = None):
    if values is None:
        values = {}
    if not isinstance(values, dict):
        raise ConfigError(f"section {section!r} must be a mapping")
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError(f"unknown key(s) in {section!r}: {', '.join(unknown)}")
    if base is not None:
        values = {
            k: str((base / v).resolve()) if k in ("kb", "index") and isinstance(v, str) else v
            for k, v in values.items()
        }
    try:
        return cls(**values)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"section {section!r}: {exc}") from exc


def parse_config(data: Any, base: Optional[Path] = None) -> AppConfig:
    """Build an :class:`AppConfig` from parsed YAML; relative service paths resolve against ``base``."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("configuration root must be a mapping")
    sections = {"graph", "topic", "hyperparameters", "service"}
    unknown = sorted(set(data) - sections)
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(unknown)}")
    service = None
    if data.get("service") is not None:
        service = _build(ServiceConfig, "service", data["service"], base)
    return AppConfig(
        graph=_build(GraphConfig, "graph", data.get("graph")),
        topic=_build(TopicConfig, "topic", data.get("topic")),
        hyperparameters=_build(Hyperparameters, "hyperparameters", data.get("hyperparameters")),
        service=service,
    )


def load_config(path: PathLike) -> AppConfig:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML ({exc})") from exc
    return parse_config(data, base=path.parent)
