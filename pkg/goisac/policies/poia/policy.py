import numpy as np

from goisac.access.simulation import PushOutcome
from goisac.policies.policy import Policy


class POIA(Policy):
    def __init__(self):
        """Push-oracle ISAC access

        The first P UEs with V_u >= theta, by decreasing VoI, get a
        collision-free push RE each; the pull subframe is handled as in GOIA.
        """
        super().__init__(name="poia")

    def push(self, voi, theta, num_push_res, rng):
        voi = np.asarray(voi)
        eligible = np.flatnonzero(voi >= theta)
        # stable sort keeps the lower UE index first among equal VoI
        ranked = eligible[np.argsort(-voi[eligible], kind="stable")][:num_push_res]
        return PushOutcome(
            singletons={int(ue): re for re, ue in enumerate(ranked)},
            collided=frozenset(),
            attempts=tuple(int(ue) for ue in ranked),
        )
