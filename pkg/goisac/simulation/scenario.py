import numpy as np

from goisac.phy.scenario import Scenario
from goisac.simulation.config import EpisodeConfig


def build_scenario(cfg: EpisodeConfig) -> Scenario:
    """Symmetric cell-free deployment in the square [0, side]^2

    AP centres sit on a circle around the square centre at angles
    pi/4 + 2 pi l / L, with radius side * sqrt(2) / 4; for L = 4 this gives
    (+-side/4, +-side/4) relative to the centre. Each AP is an M-antenna ULA
    with lambda/2 spacing centred on its AP position. `tangential` and
    `radial` arrays keep all symmetries of the square, `x` aligns every array
    with the x axis.
    """
    wavelength = cfg.carrier_wavelength
    center = np.full(2, cfg.side / 2)
    radius = cfg.side * np.sqrt(2) / 4
    angles = np.pi / 4 + 2 * np.pi * np.arange(cfg.num_aps) / cfg.num_aps
    radial = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
    centers = center + radius * radial

    if cfg.ula_orientation == "tangential":
        axes = np.stack([-radial[:, 1], radial[:, 0]], axis=-1)
    elif cfg.ula_orientation == "radial":
        axes = radial
    else:
        axes = np.tile([1.0, 0.0], (cfg.num_aps, 1))

    offsets = (np.arange(cfg.num_antennas) - (cfg.num_antennas - 1) / 2) * wavelength / 2
    positions = centers[:, None, :] + offsets[None, :, None] * axes[:, None, :]
    return Scenario(
        ap_antenna_positions=positions, carrier_wavelength=wavelength, side=cfg.side
    )
