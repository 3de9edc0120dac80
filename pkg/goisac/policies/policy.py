from abc import abstractmethod
from typing import Optional, Sequence

import numpy as np

from goisac.access.simulation import PushOutcome, contend
from goisac.allocation.demands import UeDemand
from goisac.allocation.schedule import Schedule, schedule_heuristic


class Policy:
    def __init__(self, name: str, name_display: Optional[str] = None):
        """Base class for access policies

        A policy decides who transmits in the push subframe, whether the
        localization constraint is enforced and how the pull subframe is
        scheduled.

        Args:
            name: Name of policy. Should be the name of the folder in which
                the policy is stored. Used with `goisac.get_policy(name)`.
            name_display: Display name of policy, defaults to upper-case `name`
        """
        self.name = name
        self.name_display = name_display if name_display is not None else name.upper()

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

    @abstractmethod
    def push(
        self,
        voi: np.ndarray,
        theta: float,
        num_push_res: int,
        rng: np.random.Generator,
    ) -> PushOutcome:
        """Run the push subframe for the VoI draws of all UEs"""
        raise NotImplementedError

    def effective_epsilon(self, epsilon: float) -> float:
        """PEB constraint enforced when sizing demands"""
        return epsilon

    def schedule(self, demands: Sequence[UeDemand], capacity: int) -> Schedule:
        return schedule_heuristic(demands, capacity)


class ThresholdPolicy(Policy):
    """Framed slotted ALOHA among the UEs whose VoI exceeds the threshold"""

    def push(self, voi, theta, num_push_res, rng):
        transmitters = np.flatnonzero(np.asarray(voi) > theta)
        return contend(transmitters, num_push_res, rng)
