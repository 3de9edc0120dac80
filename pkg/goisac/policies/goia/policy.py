from goisac.policies.policy import ThresholdPolicy


class GOIA(ThresholdPolicy):
    def __init__(self):
        """Goal-oriented ISAC access

        Threshold push, demands sized for both the payload and the PEB
        constraint, knapsack scheduling by VoI.
        """
        super().__init__(name="goia")
