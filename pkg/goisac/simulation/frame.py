from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from goisac.allocation.demands import PushSuccess, build_demands
from goisac.phy.channel import fspl_betas
from goisac.phy.estimation import receive_and_ls_estimate
from goisac.phy.grid import FrameGrid
from goisac.phy.scenario import ChannelRealization, Scenario
from goisac.policies.policy import Policy
from goisac.simulation.config import EpisodeConfig
from goisac.simulation.mobility import UeState


@dataclass(frozen=True)
class FrameMetrics:
    """Outcome counters of one frame

    Args:
        voi_total: Total VoI of the UEs served in the pull subframe
        n_attempt: UEs transmitting in the push subframe
        n_success: UEs decoded in the push subframe, |S|
        n_served: UEs receiving their full pull demand
        n_demands: Successful UEs with a deliverable demand
        n_com_dominant: Demands whose communication need covers localization
    """

    voi_total: float = 0.0
    n_attempt: int = 0
    n_success: int = 0
    n_served: int = 0
    n_demands: int = 0
    n_com_dominant: int = 0

    @property
    def push_success_rate(self) -> float:
        """|S| / n, NaN without transmitters"""
        return self.n_success / self.n_attempt if self.n_attempt else float("nan")

    @property
    def pull_access_rate(self) -> float:
        """n_served / |S|, NaN without successes"""
        return self.n_served / self.n_success if self.n_success else float("nan")

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["push_success_rate"] = self.push_success_rate
        data["pull_access_rate"] = self.pull_access_rate
        return data


def run_frame(
    policy: Policy,
    states: Sequence[UeState],
    scn: Scenario,
    grid: FrameGrid,
    cfg: EpisodeConfig,
    peb1: Optional[float],
    rng_access: np.random.Generator,
    rng_channel: np.random.Generator,
) -> FrameMetrics:
    """Push subframe, demand sizing and pull scheduling of one frame

    Args:
        policy: Access policy
        states: UEs with the VoI and size of this frame
        scn: Scenario
        grid: Frame grid
        cfg: Episode configuration (threshold, PEB constraint, radio powers)
        peb1: Single-RE PEB at the worst-case position, unused if the policy
            does not enforce localization
        rng_access: Generator of the random RE choices
        rng_channel: Generator of the phase offsets and receiver noise

    Returns:
        Frame metrics
    """
    voi = np.array([ue.voi for ue in states])
    # one phase per UE and AP every frame, drawn whether or not the UE succeeds
    psi = rng_channel.uniform(0.0, 2 * np.pi, size=(len(states), scn.num_aps))

    outcome = policy.push(voi, cfg.theta, grid.num_push_res, rng_access)

    successes: List[PushSuccess] = []
    for ue, re in sorted(outcome.singletons.items()):
        state = states[ue]
        ch = ChannelRealization(
            beta=fspl_betas(scn, state.position, cfg.antenna_gain_dbi),
            psi=psi[ue],
            dtau=state.clock_offset,
            position=state.position,
        )
        hhat = receive_and_ls_estimate(
            scn, grid, grid.push_re(re), ch, cfg.p_u, cfg.sigma_w2, rng=rng_channel
        )
        successes.append(PushSuccess(ue, state.voi, state.bytes, hhat))

    demands = build_demands(
        successes,
        grid,
        cfg.p_u,
        cfg.sigma_w2,
        scn.num_antennas,
        policy.effective_epsilon(cfg.epsilon),
        peb1,
        rate_log_base=cfg.rate_log_base,
    )
    schedule = policy.schedule(demands, grid.num_pull_res)

    return FrameMetrics(
        voi_total=schedule.value,
        n_attempt=outcome.num_attempts,
        n_success=outcome.num_successes,
        n_served=schedule.num_served,
        n_demands=len(demands),
        n_com_dominant=sum(d.com_dominant for d in demands),
    )
