import math

import numpy as np


def uatf_se(
    beta: np.ndarray,
    p_u: float,
    sigma_w2: float,
    num_antennas: int,
    num_aps: int,
    base: float = 2.0,
) -> float:
    """Use-and-then-forget achievable spectral efficiency with MR combining

    rho = log(1 + (p/sigma^2) M |sum beta|^2 / (2 sum beta + (sigma^2/p) L)),
    per subcarrier and symbol, with the logarithm taken to `base`.
    A noiseless receiver gives an unbounded rate.
    """
    beta = np.asarray(beta, dtype=float)
    if np.any(beta < 0):
        raise ValueError("large-scale fading must be non-negative")
    if sigma_w2 < 0:
        raise ValueError("noise power must be non-negative")
    if not base > 1.0:
        raise ValueError("log base must exceed one")
    total = float(np.sum(beta))
    if total == 0.0:
        return 0.0
    if sigma_w2 == 0.0:
        return math.inf
    snr = p_u / sigma_w2
    sinr = snr * num_antennas * total**2 / (2 * total + num_aps / snr)
    return float(np.log1p(sinr) / np.log(base))


def resources_for_rate(
    num_bytes: int, rate: float, num_symbols: int, num_subcarriers: int
) -> int:
    """REs needed to carry `num_bytes` at spectral efficiency `rate`

    One RE carries rate * (T - 1) * F bits, the first symbol being the pilot.
    """
    if num_bytes < 1:
        raise ValueError("payload must be at least one byte")
    if rate <= 0:
        raise ValueError("rate must be positive")
    ratio = 8 * num_bytes / (rate * (num_symbols - 1) * num_subcarriers)
    nearest = round(ratio)
    if nearest >= 1 and abs(ratio - nearest) <= 1e-9 * ratio:
        return int(nearest)
    return max(1, int(np.ceil(ratio)))
