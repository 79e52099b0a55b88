import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import toml

from scripts.satisfaction import Budget
from scripts.utils import log_decorator

logger = logging.getLogger(__name__)

CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.toml"
BUDGET_ENV = "WORKBENCH_BUDGET"
OUTPUT_FORMATS = ("text", "json")

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "budget": {"witness_bound": 64, "depth_bound": 16},
    "limits": {"automorphism_size": 10, "max_level": 4, "henkin_depth": 2, "henkin_size_cap": 4,
               "force_bound": 16, "force_node_limit": 65536},
    "suite": {"seed": 0},
    "logging": {"level": "WARNING"},
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str = ""
    inputs: Tuple[str, ...] = ()
    budget: Budget = Budget()
    automorphism_size: int = 10
    max_level: int = 4
    henkin_depth: int = 2
    henkin_size_cap: int = 4
    force_bound: int = 16
    force_node_limit: int = 65536
    seed: int = 0
    output_format: str = "text"
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        for name in ("automorphism_size", "henkin_size_cap", "force_bound", "force_node_limit"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        for name in ("max_level", "henkin_depth", "seed"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be a natural number")
        if logging.getLevelName(self.log_level.upper()) == f"Level {self.log_level.upper()}":
            raise ConfigError(f"unknown logging level {self.log_level!r}")

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Replace the fields given a value other than None."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown settings {sorted(unknown)}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_document(self) -> Dict[str, Any]:
        return {"command": self.command, "inputs": list(self.inputs),
                "budget": {"witness_bound": self.budget.witness_bound,
                           "depth_bound": self.budget.depth_bound},
                "automorphism_size": self.automorphism_size, "max_level": self.max_level,
                "henkin_depth": self.henkin_depth, "henkin_size_cap": self.henkin_size_cap,
                "force_bound": self.force_bound, "force_node_limit": self.force_node_limit,
                "seed": self.seed, "output_format": self.output_format}


def parse_budget(text: str) -> Budget:
    """'<witness_bound>,<depth_bound>' as used by the environment variable and --budget."""
    try:
        witness, depth = (int(part) for part in text.split(","))
        return Budget(witness, depth)
    except ValueError:
        raise ConfigError(f"budget {text!r} is not '<witness_bound>,<depth_bound>' with positive bounds") from None


def _merge(document: Mapping[str, Any]) -> Dict[str, Dict[str, Any]]:
    merged = {section: dict(values) for section, values in DEFAULTS.items()}
    for section, values in document.items():
        if section not in DEFAULTS or not isinstance(values, Mapping):
            raise ConfigError(f"unknown config section [{section}]")
        for key, value in values.items():
            if key not in DEFAULTS[section]:
                raise ConfigError(f"unknown config key {section}.{key}")
            if type(value) is not type(DEFAULTS[section][key]):
                raise ConfigError(f"{section}.{key} must be a {type(DEFAULTS[section][key]).__name__}")
            merged[section][key] = value
    return merged


@log_decorator
def load_config(path: Optional[Union[str, Path]] = None,
                environ: Optional[Mapping[str, str]] = None) -> RunConfig:
    """
    Defaults, overridden by config.toml (or path), overridden by WORKBENCH_BUDGET.
    A missing file at the default location means defaults only.
    """
    source = Path(path) if path is not None else CONFIG_PATH
    document: Mapping[str, Any] = {}
    if source.exists():
        try:
            document = toml.load(source)
        except toml.TomlDecodeError as e:
            raise ConfigError(f"{source}: {e}") from None
    elif path is not None:
        raise ConfigError(f"config file {source} not found")
    merged = _merge(document)
    try:
        budget = Budget(**merged["budget"])
    except ValueError as e:
        raise ConfigError(str(e)) from None
    environ = os.environ if environ is None else environ
    if environ.get(BUDGET_ENV):
        budget = parse_budget(environ[BUDGET_ENV])
        logger.info(f"budget taken from {BUDGET_ENV}: {budget}")
    return RunConfig(budget=budget, seed=merged["suite"]["seed"], log_level=merged["logging"]["level"],
                     **merged["limits"])
