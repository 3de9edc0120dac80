from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from goisac.localization.fim import q_loc as localization_resources
from goisac.phy.estimation import estimate_beta
from goisac.phy.grid import FrameGrid
from goisac.phy.rate import resources_for_rate, uatf_se
from goisac.utils.exceptions import UndeliverableDemand


@dataclass(frozen=True)
class UeDemand:
    """Minimum pull resources of one UE, Q_u = max(Q_u^com, Q_u^loc)"""

    ue: int
    voi: float
    bytes: int
    q_com: int
    q_loc: int

    def __post_init__(self):
        if self.q_com < 1 or self.q_loc < 0:
            raise ValueError("q_com must be positive and q_loc non-negative")

    @property
    def q(self) -> int:
        return max(self.q_com, self.q_loc)

    @property
    def com_dominant(self) -> bool:
        return self.q_com >= self.q_loc


@dataclass(frozen=True)
class PushSuccess:
    """Decoded push packet: announced VoI and size plus the push-RE channel estimate"""

    ue: int
    voi: float
    bytes: int
    hhat: np.ndarray


def q_com(
    bytes: int,
    beta_hat: np.ndarray,
    grid: FrameGrid,
    p_u: float,
    sigma_w2: float,
    num_antennas: int,
    rate_log_base: float = 2.0,
) -> int:
    """REs needed to deliver `bytes` at the UatF rate of the estimated fading

    Raises:
        UndeliverableDemand: if the rate is zero
    """
    beta_hat = np.asarray(beta_hat, dtype=float)
    rate = uatf_se(
        beta_hat, p_u, sigma_w2, num_antennas, beta_hat.size, base=rate_log_base
    )
    if rate <= 0.0:
        raise UndeliverableDemand("zero achievable rate")
    return resources_for_rate(bytes, rate, grid.num_symbols, grid.num_subcarriers)


def build_demands(
    successes: Sequence[PushSuccess],
    grid: FrameGrid,
    p_u: float,
    sigma_w2: float,
    num_antennas: int,
    epsilon: float,
    peb1: Optional[float] = None,
    strict: bool = False,
    rate_log_base: float = 2.0,
) -> List[UeDemand]:
    """Resource demands of all successful push UEs

    Args:
        successes: Decoded push packets
        grid: Frame grid
        p_u: Transmit power in W
        sigma_w2: Noise power in W
        num_antennas: Antennas per AP, M
        epsilon: Target PEB in metres; `inf` drops the localization constraint
        peb1: Single-RE PEB at the worst-case position, required if epsilon is finite
        strict: Raise on undeliverable demands instead of excluding the UE
        rate_log_base: Base of the spectral-efficiency logarithm

    Returns:
        Demands ordered as `successes`, without undeliverable UEs
    """
    if np.isinf(epsilon):
        loc = 0
    elif peb1 is None:
        raise ValueError("finite epsilon requires the worst-case PEB")
    else:
        loc = localization_resources(peb1, epsilon)

    demands = []
    for success in successes:
        beta_hat = estimate_beta(success.hhat, grid, num_antennas)
        try:
            com = q_com(
                success.bytes,
                beta_hat,
                grid,
                p_u,
                sigma_w2,
                num_antennas,
                rate_log_base,
            )
        except UndeliverableDemand:
            if strict:
                raise
            continue
        demands.append(UeDemand(success.ue, success.voi, success.bytes, com, loc))
    return demands
