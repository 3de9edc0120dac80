import numpy as np

from goisac.access.simulation import contend
from goisac.allocation.schedule import schedule_voi_blind
from goisac.policies.policy import Policy


class VIBA(Policy):
    def __init__(self):
        """VoI-blind access: every UE contends and scheduling treats all VoI as one"""
        super().__init__(name="viba")

    def push(self, voi, theta, num_push_res, rng):
        return contend(np.arange(len(voi)), num_push_res, rng)

    def schedule(self, demands, capacity):
        return schedule_voi_blind(demands, capacity)
