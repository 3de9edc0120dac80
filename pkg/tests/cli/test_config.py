import json

import pytest

from goisac.cli import SweepSpec, parse_config
from goisac.cli.config import DEFAULT_SWEEP_VALUES
from goisac.simulation import EpisodeConfig
from goisac.utils.exceptions import ConfigError


def write_config(tmp_path, data):
    path = tmp_path / "config.json"
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


def test_empty_config_is_reference(tmp_path):
    cfg = parse_config(write_config(tmp_path, ""))

    assert cfg == EpisodeConfig()
    assert (cfg.num_aps, cfg.num_antennas, cfg.num_ues) == (4, 2, 50)
    assert (cfg.grid.num_push_res, cfg.grid.num_pull_res) == (50, 125)
    assert (cfg.theta, cfg.epsilon) == (0.7, 1.0)
    assert cfg.sigma_w2 == pytest.approx(10 ** (-12.5))


def test_more_ues_keep_the_grid(tmp_path):
    cfg = parse_config(write_config(tmp_path, {"num_ues": 100}))

    assert cfg.num_ues == 100
    assert (cfg.grid.num_push_res, cfg.grid.num_pull_res) == (50, 125)


@pytest.mark.parametrize(
    "data, field",
    [
        ({"theta": 1.5}, "theta"),
        ({"users": 10}, "users"),
        ("{not json", "file"),
        ("[1, 2]", "file"),
        ({"sweep": {"variable": "alpha"}}, "sweep.variable"),
        ({"sweep": {"variable": "theta", "values": [0.2, 1.2]}}, "sweep.values (theta)"),
        ({"sweep": {"variable": "U", "values": [10.5]}}, "sweep.values (U)"),
        ({"sweep": {"variable": "theta", "step": 0.1}}, "sweep.step"),
        ({"sweep": "theta"}, "sweep"),
    ],
)
def test_invalid_config(tmp_path, data, field):
    with pytest.raises(ConfigError) as err:
        parse_config(write_config(tmp_path, data))
    assert err.value.field == field


def test_sweep_config(tmp_path):
    spec = parse_config(
        write_config(
            tmp_path, {"num_frames": 5, "sweep": {"variable": "epsilon", "values": [2.8, 1, "inf"]}}
        )
    )

    assert isinstance(spec, SweepSpec)
    assert spec.field == "epsilon"
    assert spec.values == [1.0, 2.8, float("inf")]
    assert spec.config_for(2.8).epsilon == 2.8
    assert spec.config_for(2.8).num_frames == 5
    assert spec.to_dict() == {"variable": "epsilon", "values": [1.0, 2.8, "inf"]}


def test_sweep_defaults(tmp_path):
    spec = parse_config(write_config(tmp_path, {"sweep": {"variable": "U"}}))

    assert spec.field == "num_ues"
    assert spec.values == DEFAULT_SWEEP_VALUES["U"]
    assert len(DEFAULT_SWEEP_VALUES["theta"]) == 51
    assert DEFAULT_SWEEP_VALUES["theta"][26] == 0.52
