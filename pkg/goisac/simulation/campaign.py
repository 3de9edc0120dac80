import math
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd
import pyro
from joblib import Parallel, delayed
from tqdm.auto import tqdm

from goisac.localization.fim import q_loc
from goisac.localization.search import PebMap
from goisac.metrics.statistics import standard_error
from goisac.policies import get_policy
from goisac.simulation.config import EpisodeConfig
from goisac.simulation.frame import run_frame
from goisac.simulation.mobility import initial_states, step_mobility
from goisac.simulation.scenario import build_scenario
from goisac.simulation.traffic import TrafficModel
from goisac.utils.logging import get_logger, log_elapsed


def episode_seed(master_seed: int, episode: int) -> int:
    """Seed of one episode, independent of the order episodes run in"""
    return int(np.random.SeedSequence([master_seed, episode]).generate_state(1)[0])


def worst_case_peb(cfg: EpisodeConfig, n_jobs: int = 1) -> float:
    """Single-RE PEB at the worst-case position of the configured scenario"""
    peb_map = PebMap(
        build_scenario(cfg),
        cfg.grid,
        cfg.p_u,
        cfg.sigma_w2,
        resolution=cfg.peb_resolution,
        gain_dbi=cfg.antenna_gain_dbi,
        n_jobs=n_jobs,
    )
    return peb_map.worst_case_peb


def run_episode(
    cfg: EpisodeConfig, episode: int, peb1: Optional[float]
) -> pd.DataFrame:
    """Run all frames of one episode

    Returns:
        One row per frame with the `FrameMetrics` counters and rates
    """
    seed = episode_seed(cfg.seed, episode)
    pyro.set_rng_seed(seed)
    rng_mobility, rng_access, rng_channel = [
        np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(3)
    ]

    policy = get_policy(cfg.policy)
    scn = build_scenario(cfg)
    grid = cfg.grid
    traffic = TrafficModel(cfg.mean_bytes)
    states = initial_states(
        cfg.num_ues, cfg.side, cfg.max_speed, grid.cp_duration / 4, rng_mobility
    )

    rows = []
    for frame in range(cfg.num_frames):
        voi, size = traffic.sample(cfg.num_ues)
        states = [
            replace(s, voi=float(v), bytes=int(b))
            for s, v, b in zip(states, voi, size)
        ]
        metrics = run_frame(policy, states, scn, grid, cfg, peb1, rng_access, rng_channel)
        rows.append({"episode": episode, "frame": frame, **metrics.to_dict()})
        states = [
            step_mobility(s, grid.frame_duration, rng_mobility, cfg.side) for s in states
        ]

    return pd.DataFrame(rows)


@dataclass
class CampaignResult:
    """Per-frame records of a campaign and their summary"""

    frames: pd.DataFrame
    summary: Dict[str, Any]


def summarize(frames: pd.DataFrame) -> Dict[str, Any]:
    """Averages over frames and episodes, standard errors across episode means

    Undefined rates (no transmitter, no success) are left out of their
    averages; the VoI average includes every frame.
    """
    per_episode = frames.groupby("episode").agg(
        voi_total=("voi_total", "mean"),
        pull_access_rate=("pull_access_rate", "mean"),
    )
    n_attempt = frames["n_attempt"].sum()
    n_demands = frames["n_demands"].sum()
    return {
        "avg_voi_tot": float(frames["voi_total"].mean()),
        "avg_pull_access_rate": float(frames["pull_access_rate"].mean()),
        "avg_push_success_rate": float(frames["push_success_rate"].mean()),
        "stderr_voi": standard_error(per_episode["voi_total"]),
        "stderr_pull_access_rate": standard_error(per_episode["pull_access_rate"]),
        "push_success_ratio": (
            float(frames["n_success"].sum() / n_attempt) if n_attempt else math.nan
        ),
        "avg_attempts": float(frames["n_attempt"].mean()),
        "avg_successes": float(frames["n_success"].mean()),
        "avg_served": float(frames["n_served"].mean()),
        "com_dominant_share": (
            float(frames["n_com_dominant"].sum() / n_demands) if n_demands else math.nan
        ),
        "episodes": int(frames["episode"].nunique()),
        "frames": int(len(frames)),
    }


def run_campaign(
    cfg: EpisodeConfig,
    episodes: int,
    n_jobs: int = 1,
    peb1: Optional[float] = None,
) -> CampaignResult:
    """Run independent episodes of one configuration

    Args:
        cfg: Episode configuration, including the master seed
        episodes: Number of episodes
        n_jobs: Number of joblib workers
        peb1: Worst-case single-RE PEB; searched once here if the policy
            enforces localization and none is given

    Returns:
        Per-frame records sorted by episode and frame, and their summary
    """
    if episodes < 1:
        raise ValueError("at least one episode is required")
    log = get_logger(__name__)

    grid = cfg.grid
    log.info(
        f"P={grid.num_push_res} push REs, Q={grid.num_pull_res} pull REs, "
        f"frame duration {grid.frame_duration * 1e3:.3f} ms"
    )

    epsilon = get_policy(cfg.policy).effective_epsilon(cfg.epsilon)
    if not math.isinf(epsilon):
        if peb1 is None:
            peb1 = worst_case_peb(cfg, n_jobs=n_jobs)
        log.info(
            f"Worst-case PEB {peb1:.4f} m, "
            f"Q_loc={q_loc(peb1, epsilon)} at epsilon={epsilon} m"
        )

    with log_elapsed(log, f"{cfg.policy}: {episodes} episodes of {cfg.num_frames} frames"):
        if n_jobs == 1:
            results = [
                run_episode(cfg, episode, peb1)
                for episode in tqdm(range(episodes), leave=False)
            ]
        else:
            results = Parallel(n_jobs=n_jobs, backend="loky")(
                delayed(run_episode)(cfg, episode, peb1) for episode in range(episodes)
            )

    frames = pd.concat(results, ignore_index=True).sort_values(["episode", "frame"])
    frames = frames.reset_index(drop=True)
    summary = summarize(frames)
    log.info(f"Average total VoI {summary['avg_voi_tot']:.4f}")
    return CampaignResult(frames=frames, summary=summary)
