import numpy as np

from goisac.phy.grid import FrameGrid, ReElement
from goisac.phy.scenario import ChannelRealization, Scenario

# Dipole gain of a link
DEFAULT_ANTENNA_GAIN_DBI = 2.15


def steering_vector(scn: Scenario, ap: int, x: np.ndarray) -> np.ndarray:
    """ULA response a_{u,l} of AP `ap` towards position `x`

    Entries are exp(j 2pi/lambda (b_{l,m} - b_l)^T (x - b_l) / ||x - b_l||).

    Raises:
        SingularGeometry: if `x` coincides with the AP centre
    """
    d = scn.offset(ap, x)
    direction = d / np.linalg.norm(d)
    offsets = scn.ap_antenna_positions[ap] - scn.ap_centers[ap]
    return np.exp(1j * 2 * np.pi / scn.carrier_wavelength * (offsets @ direction))


def delay_vector(grid: FrameGrid, re: ReElement, tau: float) -> np.ndarray:
    """Delay response f_{u,l,i}: exp(-j 2pi f Delta_F tau) over the RE subcarriers"""
    if not np.isfinite(tau):
        raise ValueError("delay must be finite")
    n_f = np.asarray(re.subcarrier_indices, dtype=float)
    return np.exp(-1j * 2 * np.pi * n_f * grid.subcarrier_spacing * tau)


def propagation_delay(scn: Scenario, ap: int, x: np.ndarray, dtau: float) -> float:
    """tau_{u,l} = ||x - b_l|| / c + delta tau"""
    return scn.distance(ap, x) / scn.lightspeed + dtau


def channel_vector(
    scn: Scenario, grid: FrameGrid, re: ReElement, ch: ChannelRealization
) -> np.ndarray:
    """LOS channel of one UE on one RE, stacked over all APs

    h = sum_l sqrt(beta_l) e^{j psi_l} (e_l kron f_l kron a_l), i.e. AP-major,
    subcarrier-middle, antenna-minor ordering of length L*F*M.
    """
    blocks = []
    for ap in range(scn.num_aps):
        a = steering_vector(scn, ap, ch.position)
        f = delay_vector(grid, re, propagation_delay(scn, ap, ch.position, ch.dtau))
        gain = np.sqrt(ch.beta[ap]) * np.exp(1j * ch.psi[ap])
        blocks.append(gain * np.kron(f, a))
    return np.concatenate(blocks)


def fspl_beta(
    scn: Scenario,
    x: np.ndarray,
    ap: int,
    gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI,
) -> float:
    """Free-space large-scale fading G (lambda / (4 pi d))^2

    Args:
        gain_dbi: Combined antenna gain of the link
    """
    d = scn.distance(ap, x)
    gain = 10.0 ** (gain_dbi / 10.0)
    return float(gain * (scn.carrier_wavelength / (4 * np.pi * d)) ** 2)


def fspl_betas(
    scn: Scenario, x: np.ndarray, gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI
) -> np.ndarray:
    """Large-scale fading towards every AP, the position -> beta model"""
    return np.array([fspl_beta(scn, x, ap, gain_dbi) for ap in range(scn.num_aps)])
