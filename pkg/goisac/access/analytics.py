import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Tuple

import numpy as np
import torch
from torch.distributions import Binomial, Distribution


def uniform_cdf(v: float) -> float:
    return min(max(float(v), 0.0), 1.0)


@dataclass
class PushConfig:
    """Push subframe under a VoI threshold policy

    Args:
        num_ues: Number of UEs, U
        num_push_res: Number of push REs, P
        theta: VoI threshold; UEs with V_u > theta transmit
        voi_cdf: CDF of the VoI, P_v, mapping [0, 1] onto [0, 1]
    """

    num_ues: int
    num_push_res: int
    theta: float
    voi_cdf: Callable[[float], float] = uniform_cdf

    def __post_init__(self):
        if self.num_ues < 1 or self.num_push_res < 1:
            raise ValueError("number of UEs and push REs must be positive")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta={self.theta} outside [0, 1]")

    @classmethod
    def from_distribution(
        cls, num_ues: int, num_push_res: int, theta: float, dist: Distribution
    ) -> "PushConfig":
        """Build the config from a torch/pyro VoI distribution exposing `cdf`"""

        def voi_cdf(v: float) -> float:
            value = torch.tensor(float(v), dtype=torch.float64)
            return float(dist.cdf(value).clamp(0.0, 1.0))

        return cls(num_ues, num_push_res, theta, voi_cdf)

    @property
    def transmit_probability(self) -> float:
        """1 - P_v(theta), the probability that a UE exceeds the threshold"""
        return min(max(1.0 - float(self.voi_cdf(self.theta)), 0.0), 1.0)


@dataclass(frozen=True)
class OutcomeCount:
    """Singleton REs `s`, collided REs `c` and transmitters `n` of one push frame"""

    s: int
    c: int
    n: int

    def is_feasible(self, num_push_res: int) -> bool:
        if min(self.s, self.c, self.n) < 0 or self.s + self.c > num_push_res:
            return False
        if self.c == 0:
            return self.s == self.n
        return self.n >= self.s + 2 * self.c


@lru_cache(maxsize=16)
def _log_factorials(n_max: int) -> np.ndarray:
    out = np.array([math.lgamma(k + 1) for k in range(n_max + 1)])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=16)
def _log_associated_stirling(m_max: int) -> np.ndarray:
    """log of the 2-associated Stirling numbers S(m, c), m <= m_max

    S(m, c) counts partitions of m labelled items into c blocks of size >= 2,
    with S(m, c) = c S(m-1, c) + (m-1) S(m-2, c-1) and S(0, 0) = 1.
    """
    c_max = m_max // 2
    table = np.full((m_max + 1, c_max + 1), -np.inf)
    table[0, 0] = 0.0
    for m in range(2, m_max + 1):
        for c in range(1, min(m // 2, c_max) + 1):
            grow = math.log(c) + table[m - 1, c]
            pair = math.log(m - 1) + table[m - 2, c - 1]
            table[m, c] = np.logaddexp(grow, pair)
    table.setflags(write=False)
    return table


def compositions(total: int, parts: int, min_part: int = 2) -> Iterator[Tuple[int, ...]]:
    """Ordered compositions of `total` into `parts` summands, each >= `min_part`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min_part, total - min_part * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, min_part):
            yield (first,) + rest


def _outcome_count_enumerate(P: int, n: int, s: int, c: int) -> Fraction:
    """Exact probability by summing multinomials over the collision compositions"""
    ways = 0
    for parts in compositions(n - s, c):
        multinomial = math.factorial(n - s)
        for k in parts:
            multinomial //= math.factorial(k)
        ways += multinomial
    ways *= math.comb(n, s) * math.perm(P, s) * math.comb(P - s, c)
    return Fraction(ways, P**n)


def outcome_pmf(P: int, n: int, s: int, c: int, implementation: str = "log") -> float:
    """Probability of `s` singleton and `c` collided REs given `n` transmitters

    Each of the `n` transmitters picks one of `P` REs uniformly at random.

    Args:
        P: Number of push REs
        n: Number of transmitters
        s: Number of REs carrying exactly one transmitter
        c: Number of REs carrying two or more transmitters
        implementation: `log` evaluates the closed form in log space via
            associated Stirling numbers, `enumerate` sums multinomial
            coefficients over all compositions of the colliding transmitters
            in exact rational arithmetic

    Returns:
        p_o(s, c | n), zero for infeasible combinations
    """
    if P < 1 or min(n, s, c) < 0:
        raise ValueError("P must be positive and n, s, c non-negative")
    if not OutcomeCount(s, c, n).is_feasible(P):
        return 0.0

    if implementation == "enumerate":
        return float(_outcome_count_enumerate(P, n, s, c))
    elif implementation == "log":
        lf = _log_factorials(max(n, P))
        s2 = _log_associated_stirling(n - s)
        log_ways = (lf[n] - lf[s] - lf[n - s]) + s2[n - s, c] + lf[P] - lf[P - s - c]
        return float(np.exp(log_ways - n * math.log(P)))
    else:
        raise NotImplementedError(f"Implementation {implementation} not available")


def tx_count_distribution(cfg: PushConfig) -> np.ndarray:
    """Binomial(U, 1 - P_v(theta)) pmf of the number of transmitters, n = 0..U"""
    p = cfg.transmit_probability
    U = cfg.num_ues
    if p == 0.0 or p == 1.0:
        pmf = np.zeros(U + 1)
        pmf[0 if p == 0.0 else U] = 1.0
        return pmf

    dist = Binomial(
        total_count=torch.tensor(float(U), dtype=torch.float64),
        probs=torch.tensor(p, dtype=torch.float64),
    )
    counts = torch.arange(U + 1, dtype=torch.float64)
    return dist.log_prob(counts).exp().numpy()


def tx_count_pmf(cfg: PushConfig, n: int) -> float:
    """Probability that exactly `n` UEs exceed the threshold"""
    if not 0 <= n <= cfg.num_ues:
        raise ValueError(f"n={n} outside 0..{cfg.num_ues}")
    return float(tx_count_distribution(cfg)[n])


def success_count_distribution(cfg: PushConfig) -> np.ndarray:
    """p(s | theta) for s = 0..min(P, U) by the law of total probability

    Sums p_o(s, c | n) p_tx(n | theta) over n and over
    c <= min((n - s) / 2, P - s), all in log space.
    """
    U, P = cfg.num_ues, cfg.num_push_res
    p_tx = tx_count_distribution(cfg)
    lf = _log_factorials(max(U, P))
    s2 = _log_associated_stirling(U)
    pmf = np.zeros(min(P, U) + 1)

    for n in np.flatnonzero(p_tx > 0.0):
        s = np.arange(min(n, P) + 1)[:, None]
        c = np.arange(n // 2 + 1)[None, :]
        m = n - s
        feasible = (s + c <= P) & (2 * c <= m)
        # masked entries are clipped to valid indices and discarded below
        log_ways = (
            lf[n]
            - lf[s]
            - lf[m]
            + s2[m, np.minimum(c, m // 2)]
            + lf[P]
            - lf[np.clip(P - s - c, 0, None)]
        )
        terms = np.where(feasible, np.exp(log_ways - n * math.log(P)), 0.0)
        pmf[: s.shape[0]] += p_tx[n] * terms.sum(axis=1)

    return pmf


def success_count_pmf(cfg: PushConfig, s: int) -> float:
    """Probability of `s` successful push transmissions"""
    if not 0 <= s <= min(cfg.num_push_res, cfg.num_ues):
        raise ValueError(f"s={s} outside 0..{min(cfg.num_push_res, cfg.num_ues)}")
    return float(success_count_distribution(cfg)[s])


def expected_successes(cfg: PushConfig) -> float:
    pmf = success_count_distribution(cfg)
    return float(np.arange(pmf.size) @ pmf)
