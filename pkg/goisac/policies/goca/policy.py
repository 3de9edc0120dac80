import math

from goisac.policies.policy import ThresholdPolicy


class GOCA(ThresholdPolicy):
    def __init__(self):
        """Goal-oriented communication-only access: GOIA without localization"""
        super().__init__(name="goca")

    def effective_epsilon(self, epsilon: float) -> float:
        return math.inf
