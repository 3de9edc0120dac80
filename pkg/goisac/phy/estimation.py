from typing import Optional

import numpy as np

from goisac.phy.channel import channel_vector
from goisac.phy.grid import FrameGrid, ReElement
from goisac.phy.scenario import ChannelRealization, Scenario


def qpsk_pilots(num_subcarriers: int, rng: np.random.Generator) -> np.ndarray:
    """Random unit-modulus QPSK pilot symbols, one per subcarrier"""
    phases = rng.integers(0, 4, size=num_subcarriers) * np.pi / 2 + np.pi / 4
    return np.exp(1j * phases)


def complex_awgn(
    size: int, variance: float, rng: np.random.Generator
) -> np.ndarray:
    """Circularly-symmetric complex Gaussian noise with given per-entry variance"""
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def receive_and_ls_estimate(
    scn: Scenario,
    grid: FrameGrid,
    re: ReElement,
    ch: ChannelRealization,
    p_u: float,
    sigma_w2: float,
    pilots: Optional[np.ndarray] = None,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Receive the pilot symbol of a singleton RE and estimate the channel by LS

    The first OFDM symbol carries one pilot per subcarrier, repeated over all AP
    antennas. The estimate is p_u^{-1/2} Y_{:,1} * conj(s), which equals the
    channel plus CN(0, sigma_w2 / p_u) noise per entry.

    Args:
        p_u: Transmit power in W
        sigma_w2: Noise power per entry in W
        pilots: Unit-modulus pilot per subcarrier (F,); all ones if None
        rng: Random generator for the noise

    Returns:
        Channel estimate of length L*F*M
    """
    if p_u <= 0:
        raise ValueError("transmit power must be positive")
    if sigma_w2 < 0:
        raise ValueError("noise power must be non-negative")
    if pilots is None:
        pilots = np.ones(grid.num_subcarriers, dtype=complex)
    pilots = np.asarray(pilots, dtype=complex)
    if pilots.shape != (grid.num_subcarriers,):
        raise ValueError("expected one pilot per subcarrier")
    if not np.allclose(np.abs(pilots), 1.0):
        raise ValueError("pilots must have unit modulus")

    h = channel_vector(scn, grid, re, ch)
    s = np.kron(np.ones(scn.num_aps), np.kron(pilots, np.ones(scn.num_antennas)))

    y = np.sqrt(p_u) * h * s
    if sigma_w2 > 0:
        rng = np.random.default_rng() if rng is None else rng
        y = y + complex_awgn(h.size, sigma_w2, rng)

    return y * np.conj(s) / np.sqrt(p_u)


def estimate_beta(hhat: np.ndarray, grid: FrameGrid, num_antennas: int) -> np.ndarray:
    """Energy detector for the large-scale fading of each AP

    beta_hat_l = ||block l of hhat||^2 / (F M), from the single pilot symbol of
    the push RE.
    """
    block = grid.num_subcarriers * num_antennas
    hhat = np.asarray(hhat)
    assert hhat.size % block == 0
    return np.sum(np.abs(hhat.reshape(-1, block)) ** 2, axis=1) / block
