import numpy as np

from goisac.phy import ChannelRealization, Scenario


def ula_scenario(centers, num_antennas=2, wavelength=0.1, side=200.0, axis=(1.0, 0.0)):
    """Scenario with one lambda/2-spaced ULA per centre, all along `axis`"""
    centers = np.asarray(centers, dtype=float)
    offsets = (np.arange(num_antennas) - (num_antennas - 1) / 2) * wavelength / 2
    positions = centers[:, None, :] + offsets[None, :, None] * np.asarray(axis)
    return Scenario(positions, carrier_wavelength=wavelength, side=side)


def random_realization(scn, rng, position=None):
    if position is None:
        position = rng.uniform(0.0, scn.side, size=2)
    return ChannelRealization(
        beta=rng.uniform(1e-10, 1e-8, size=scn.num_aps),
        psi=rng.uniform(0.0, 2 * np.pi, size=scn.num_aps),
        dtau=rng.uniform(0.0, 5e-7),
        position=position,
    )
