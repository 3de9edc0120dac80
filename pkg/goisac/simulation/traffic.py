from typing import Tuple

import numpy as np
import pyro
import pyro.distributions as pdist
import torch

from goisac.access.analytics import PushConfig


class TrafficModel:
    def __init__(self, mean_bytes: float = 1024.0):
        """VoI and observation-size model of the UEs

        VoI is i.i.d. uniform on [0, 1]; the observation size in bytes is
        geometric on {1, 2, ...} with success probability 1 / mean_bytes.
        Draws go through `pyro.sample` and the global torch RNG, seeded per
        episode with `pyro.set_rng_seed`.

        Args:
            mean_bytes: Mean observation size in bytes
        """
        if mean_bytes < 1.0:
            raise ValueError("mean observation size must be at least one byte")
        self.mean_bytes = mean_bytes
        self.voi_dist = pdist.Uniform(
            torch.tensor(0.0, dtype=torch.float64), torch.tensor(1.0, dtype=torch.float64)
        )
        self.bytes_dist = pdist.Geometric(
            probs=torch.tensor(1.0 / mean_bytes, dtype=torch.float64)
        )

    def sample(self, num_ues: int) -> Tuple[np.ndarray, np.ndarray]:
        """Fresh VoI and size of every UE for one frame"""
        voi = pyro.sample("voi", self.voi_dist.expand([num_ues]))
        # torch counts failures before the first success
        size = pyro.sample("bytes", self.bytes_dist.expand([num_ues])) + 1
        return voi.numpy(), size.numpy().astype(int)

    def push_config(self, num_ues: int, num_push_res: int, theta: float) -> PushConfig:
        return PushConfig.from_distribution(num_ues, num_push_res, theta, self.voi_dist)
