import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np

from goisac.simulation.config import EpisodeConfig
from goisac.utils.exceptions import ConfigError
from goisac.utils.io import read_json

# Sweep variable -> configuration field
SWEEP_FIELDS = {"theta": "theta", "epsilon": "epsilon", "U": "num_ues"}

DEFAULT_SWEEP_VALUES = {
    "theta": [round(v, 2) for v in np.arange(0.0, 1.0 + 1e-9, 0.02)],
    "epsilon": [round(v, 2) for v in np.arange(0.5, 3.0 + 1e-9, 0.25)],
    "U": list(range(20, 101, 10)),
}


@dataclass
class SweepSpec:
    """One-dimensional sweep of `variable` over `values` around `base`"""

    variable: str
    values: List[Union[float, int]]
    base: EpisodeConfig

    def __post_init__(self):
        if self.variable not in SWEEP_FIELDS:
            raise ConfigError(
                "sweep.variable", f"must be one of {sorted(SWEEP_FIELDS)}"
            )
        if len(self.values) == 0:
            raise ConfigError("sweep.values", "must not be empty")
        self.values = sorted(_check_value(self.variable, v) for v in self.values)

    @property
    def field(self) -> str:
        return SWEEP_FIELDS[self.variable]

    def config_for(self, value: Union[float, int]) -> EpisodeConfig:
        return self.base.replace(**{self.field: value})

    def to_dict(self) -> Dict[str, Any]:
        values = ["inf" if math.isinf(v) else v for v in self.values]
        return {"variable": self.variable, "values": values}


def _check_value(variable: str, value: Any) -> Union[float, int]:
    field = f"sweep.values ({variable})"
    if variable == "U":
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ConfigError(field, f"U must be a positive integer, got {value!r}")
        return value
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConfigError(field, f"not a number: {value!r}")
    if variable == "theta" and not 0.0 <= value <= 1.0:
        raise ConfigError(field, f"theta must lie in [0, 1], got {value}")
    if variable == "epsilon" and not value > 0.0:
        raise ConfigError(field, f"epsilon must be positive, got {value}")
    return value


def config_from_dict(data: Dict[str, Any]) -> Union[EpisodeConfig, SweepSpec]:
    """Episode config, or sweep spec if the mapping holds a `sweep` object"""
    data = dict(data)
    sweep = data.pop("sweep", None)
    base = EpisodeConfig.from_dict(data)
    if sweep is None:
        return base
    if not isinstance(sweep, dict) or "variable" not in sweep:
        raise ConfigError("sweep", "expected an object with `variable` and `values`")
    unknown = set(sweep) - {"variable", "values"}
    if unknown:
        raise ConfigError(f"sweep.{sorted(unknown)[0]}", "unknown sweep field")
    variable = sweep["variable"]
    values = sweep.get("values", DEFAULT_SWEEP_VALUES.get(variable, []))
    if not isinstance(values, list):
        raise ConfigError("sweep.values", "must be a list")
    return SweepSpec(variable=variable, values=values, base=base)


def parse_config(path: Union[str, Path]) -> Union[EpisodeConfig, SweepSpec]:
    """Read a JSON configuration file

    Omitted fields take the reference defaults; an empty file gives the
    reference configuration.

    Raises:
        ConfigError: on malformed files, unknown fields or out-of-range values
    """
    try:
        data = read_json(path)
    except ValueError as err:
        raise ConfigError("file", f"{path}: {err}")
    return config_from_dict(data)
