"""
Configuration loader for the xiprime pipelines.

The on-disk format is a plain ``key = value`` file; command-line flags are
layered on top by :func:`build_config`.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Optional

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .errors import ConfigError

# =========================
# 路径定义
# =========================

PROJECT_ROOT = Path(__file__).resolve().parents[1]

DEFAULT_CACHE_DIR = PROJECT_ROOT / "cache"
DEFAULT_OUT_DIR = PROJECT_ROOT / "out"

CACHE_ENV_VAR = "XIPRIME_CACHE"


# =========================
# 配置结构
# =========================

class AlphaGrid(BaseModel):
    """Uniform alpha grid ``start, start + step, ..., stop``."""

    start: float = 0.0
    stop: float = 1.0
    step: float = 0.01

    @model_validator(mode="after")
    def _check_order(self) -> "AlphaGrid":
        if self.step <= 0:
            raise ValueError("alpha_grid.step must be positive")
        if self.stop < self.start:
            raise ValueError("alpha_grid.stop must not precede alpha_grid.start")
        return self

    def values(self) -> list[float]:
        count = int(round((self.stop - self.start) / self.step))
        # 用整数下标生成，避免累加误差
        return [round(self.start + i * self.step, 12) for i in range(count + 1)]


class AHConfig(BaseModel):
    """Synthetic Alternative-Hypothesis process used by the fig2 pipeline."""

    g_half: float = 0.297
    g_one: float = 0.405
    g_three_halves: float = 0.298
    g_two: float = 0.0
    count: int = 100_000
    start_height: float = 1000.0
    alpha_max: float = 3.0
    alpha_step: float = 0.01
    window: float = 200.0

    def gap_probabilities(self) -> dict[float, float]:
        table = {0.5: self.g_half, 1.0: self.g_one, 1.5: self.g_three_halves, 2.0: self.g_two}
        return {gap: p for gap, p in table.items() if p > 0}


class RunConfig(BaseModel):
    t_max: float = 100_000.0
    n_max: int = 10_000_000
    K: int = 8
    j_max: int = 8
    window: float = 200.0
    alpha_grid: AlphaGrid = Field(default_factory=AlphaGrid)
    cache_dir: Path = DEFAULT_CACHE_DIR
    out_dir: Path = DEFAULT_OUT_DIR
    seed: int = 1
    memory_budget: int = 2 * 1024**3

    workers: int = 1
    zero_tolerance: float = 1e-9
    grid_c: float = 1.0
    rs_crossover: float = 500.0

    ef_window: float = 500.0
    ef_K: int = 5
    ef_epsilon: float = 0.1
    quadrature_node_budget: int = 200_000

    gap_thresholds: list[float] = Field(default_factory=list)
    ah: AHConfig = Field(default_factory=AHConfig)
    table_cache: Optional[Path] = None
    log_level: str = "INFO"

    @field_validator("gap_thresholds", mode="before")
    @classmethod
    def _split_thresholds(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [float(part) for part in value.split(",") if part.strip()]
        return value

    @field_validator("alpha_grid", mode="before")
    @classmethod
    def _split_grid(cls, value: Any) -> Any:
        if isinstance(value, str):
            start, stop, step = (float(part) for part in value.split(","))
            return {"start": start, "stop": stop, "step": step}
        return value

    @model_validator(mode="after")
    def _check_invariants(self) -> "RunConfig":
        if self.t_max <= 0 or self.n_max < 2 or self.j_max < 1:
            raise ValueError("t_max, n_max and j_max must be positive (n_max >= 2)")
        if not 0 <= self.K <= self.j_max:
            raise ValueError(f"K={self.K} must satisfy 0 <= K <= j_max={self.j_max}")
        if not 0 <= self.ef_K <= self.j_max:
            raise ValueError(f"ef_K={self.ef_K} must not exceed j_max={self.j_max}")
        if self.alpha_grid.stop > 1.0:
            raise ValueError("alpha_grid.stop must be <= 1 for F1 theory comparisons")
        if self.window <= 0:
            raise ValueError("window must be positive")
        if self.ef_window < 500:
            raise ValueError("ef_window must be at least 500")
        if not 0 < self.ef_epsilon < 0.125:
            raise ValueError("ef_epsilon must lie in (0, 1/8)")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.rs_crossover < 200:
            raise ValueError("rs_crossover below 200 is outside the Riemann–Siegel error model")
        return self


# =========================
# 工具函数
# =========================

def resolve_path(path: str | Path) -> Path:
    candidate = Path(path)
    return candidate if candidate.is_absolute() else PROJECT_ROOT / candidate


def parse_key_values(text: str, source: str = "<string>") -> dict[str, Any]:
    """Parse ``key = value`` lines into a nested dict.

    Dotted keys address nested models (``alpha_grid.step = 0.02``).
    """
    data: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key", line=lineno)
        node = data
        *parents, leaf = key.split(".")
        for part in parents:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"{source}:{lineno}: '{part}' is not a section", line=lineno)
        node[leaf] = value
    return data


def load_config_data(config_path: str | Path) -> dict[str, Any]:
    config_file = resolve_path(config_path)

    if not config_file.exists():
        logger.warning("Config file {} not found, using defaults", config_file)
        return {}

    try:
        text = config_file.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read config {config_file}: {exc}") from exc

    if config_file.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"Invalid JSON in {config_file}: {exc}") from exc
    else:
        data = parse_key_values(text, source=str(config_file))

    logger.info("Loaded config from {}", config_file)
    return data


def _merge(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def build_config(
    config_path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> RunConfig:
    """defaults < config file < XIPRIME_CACHE < flags."""
    data = load_config_data(config_path) if config_path else {}

    env_cache = os.environ.get(CACHE_ENV_VAR)
    if env_cache:
        data["cache_dir"] = env_cache

    data = _merge(data, {k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        config = RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc.errors(include_url=False)}") from exc

    config.cache_dir = resolve_path(config.cache_dir)
    config.out_dir = resolve_path(config.out_dir)
    return config


def load_config(config_path: str | Path = "config.conf") -> RunConfig:
    return build_config(config_path)


def _flatten(data: dict[str, Any], prefix: str = "") -> list[tuple[str, Any]]:
    rows: list[tuple[str, Any]] = []
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, list):
            rows.append((name, ",".join(str(v) for v in value)))
        else:
            rows.append((name, value))
    return rows


def save_config(config: RunConfig, config_path: str | Path = "config.conf") -> bool:
    """
    将当前配置保存为 key = value 文件
    """
    config_file = resolve_path(config_path)

    try:
        lines = [
            f"{key} = {value}"
            for key, value in _flatten(config.model_dump(mode="json", exclude_none=True))
        ]
        config_file.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info("Saved config to {}", config_file)
        return True

    except OSError as exc:  # pragma: no cover
        logger.error("Failed to save config {}: {}", config_file, exc)
        return False
