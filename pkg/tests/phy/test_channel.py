import numpy as np
import pytest

from goisac.phy import (
    ChannelRealization,
    FrameGrid,
    channel_vector,
    delay_vector,
    fspl_beta,
    steering_vector,
)
from goisac.simulation import EpisodeConfig, build_scenario
from goisac.utils.exceptions import SingularGeometry

from .utils import random_realization, ula_scenario

GRID = FrameGrid()


def test_steering_unit_modulus():
    rng = np.random.default_rng(47)
    scn = ula_scenario([[100.0, 100.0]], num_antennas=4)

    for _ in range(20):
        a = steering_vector(scn, 0, rng.uniform(0, 200, size=2))
        assert np.allclose(np.abs(a), 1.0, atol=1e-12)


def test_steering_broadside():
    scn = ula_scenario([[100.0, 100.0]], num_antennas=4)

    a = steering_vector(scn, 0, np.array([100.0, 150.0]))

    assert np.allclose(a, 1.0, atol=1e-12)


def test_steering_matches_per_antenna_phase():
    rng = np.random.default_rng(47)
    scn = ula_scenario([[60.0, 80.0]], num_antennas=3, axis=(0.6, 0.8))
    x = rng.uniform(0, 200, size=2)
    b = scn.ap_centers[0]

    expected = [
        np.exp(1j * 2 * np.pi / scn.carrier_wavelength * (bm - b) @ (x - b) / np.linalg.norm(x - b))
        for bm in scn.ap_antenna_positions[0]
    ]

    assert np.allclose(steering_vector(scn, 0, x), expected, atol=1e-12, rtol=0)


def test_steering_singular_geometry():
    scn = ula_scenario([[100.0, 100.0]])

    with pytest.raises(SingularGeometry):
        steering_vector(scn, 0, np.array([100.0, 100.0]))


def test_delay_vector_zero_delay():
    assert np.allclose(delay_vector(GRID, GRID.push_re(0), 0.0), 1.0)


def test_delay_vector_full_wrap():
    f = 5
    tau = 1.0 / (GRID.subcarrier_spacing * f)

    assert delay_vector(GRID, GRID.push_re(0), tau)[f] == pytest.approx(1.0, abs=1e-9)


def test_delay_vector_matches_per_entry():
    re = GRID.pull_re(30)
    tau = 3.21e-7

    expected = [np.exp(-2j * np.pi * f * GRID.subcarrier_spacing * tau) for f in re.subcarrier_indices]

    assert np.allclose(delay_vector(GRID, re, tau), expected, atol=1e-12, rtol=0)


def test_zero_channel():
    scn = ula_scenario([[50.0, 50.0], [150.0, 150.0]])
    ch = ChannelRealization(np.zeros(2), np.zeros(2), 0.0, np.array([10.0, 20.0]))

    assert np.all(channel_vector(scn, GRID, GRID.push_re(3), ch) == 0)


def test_single_ap_channel_norm():
    scn = ula_scenario([[50.0, 50.0]], num_antennas=4)
    ch = ChannelRealization(np.array([2.5]), np.array([1.0]), 1e-7, np.array([10.0, 20.0]))

    h = channel_vector(scn, GRID, GRID.push_re(3), ch)

    assert np.vdot(h, h).real == pytest.approx(2.5 * 12 * 4, rel=1e-12)


def test_channel_matches_naive_loops():
    rng = np.random.default_rng(47)
    scn = ula_scenario([[50.0, 50.0], [150.0, 50.0], [100.0, 170.0]], num_antennas=3)
    re = GRID.pull_re(7)

    for _ in range(10):
        ch = random_realization(scn, rng)
        expected = []
        for ap in range(scn.num_aps):
            b = scn.ap_centers[ap]
            d = np.linalg.norm(ch.position - b)
            tau = d / scn.lightspeed + ch.dtau
            for f in re.subcarrier_indices:
                for bm in scn.ap_antenna_positions[ap]:
                    phase = (
                        ch.psi[ap]
                        - 2 * np.pi * f * GRID.subcarrier_spacing * tau
                        + 2 * np.pi / scn.carrier_wavelength * (bm - b) @ (ch.position - b) / d
                    )
                    expected.append(np.sqrt(ch.beta[ap]) * np.exp(1j * phase))

        h = channel_vector(scn, GRID, re, ch)
        assert np.allclose(h, expected, rtol=1e-12, atol=1e-12 * np.abs(h).max())


def test_fspl_inverse_square():
    scn = ula_scenario([[100.0, 100.0]])

    near = fspl_beta(scn, np.array([110.0, 100.0]), 0)
    far = fspl_beta(scn, np.array([120.0, 100.0]), 0)

    assert near / far == pytest.approx(4.0, rel=1e-12)


def test_fspl_unit_gain_at_reference_distance():
    scn = ula_scenario([[100.0, 100.0]])
    x = np.array([100.0 + scn.carrier_wavelength / (4 * np.pi), 100.0])

    assert fspl_beta(scn, x, 0, gain_dbi=0.0) == pytest.approx(1.0, rel=1e-12)


def test_fspl_reference_link_budget():
    cfg = EpisodeConfig()
    scn = build_scenario(cfg)
    wavelength = 299_792_458.0 / 3.5e9
    distance = 200.0 * np.sqrt(2) / 4
    expected = 10 ** (2.15 / 10) * (wavelength / (4 * np.pi * distance)) ** 2

    for ap in range(4):
        assert fspl_beta(scn, scn.center, ap) == pytest.approx(expected, rel=1e-9)
