import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from goisac.__version__ import __version__
from goisac.access.analytics import success_count_distribution
from goisac.cli.config import SweepSpec
from goisac.localization.search import PebMap
from goisac.policies import get_policy
from goisac.simulation.campaign import run_campaign, worst_case_peb
from goisac.simulation.config import EpisodeConfig
from goisac.simulation.scenario import build_scenario
from goisac.simulation.traffic import TrafficModel
from goisac.utils.git import provenance
from goisac.utils.io import save_frame_to_csv, write_json
from goisac.utils.logging import get_logger, log_elapsed

SWEEP_COLUMNS = [
    "sweep_value",
    "avg_voi_tot",
    "avg_pull_access_rate",
    "avg_push_success_rate",
    "stderr_voi",
]
EXTRA_COLUMNS = [
    "push_success_ratio",
    "stderr_pull_access_rate",
    "avg_attempts",
    "avg_successes",
    "avg_served",
    "com_dominant_share",
]


def _needs_localization(
    configs: Sequence[EpisodeConfig], policies: Sequence[str]
) -> bool:
    return any(
        not math.isinf(get_policy(p).effective_epsilon(cfg.epsilon))
        for p in policies
        for cfg in configs
    )


def _manifest(
    cfg: EpisodeConfig,
    policies: Sequence[str],
    episodes: int,
    peb1: Optional[float],
    sweep: Optional[SweepSpec] = None,
) -> Dict[str, Any]:
    return {
        "seed": cfg.seed,
        "episodes": episodes,
        "frames": cfg.num_frames,
        "policies": list(policies),
        "sweep": sweep.to_dict() if sweep is not None else None,
        "config": cfg.to_dict(),
        "worst_case_peb": peb1,
        "version": __version__,
        **provenance(),
    }


def analytic_success_pmf(spec: SweepSpec) -> pd.DataFrame:
    """p(s | theta) of the push subframe at every sweep point, long format"""
    rows = []
    for value in spec.values:
        cfg = spec.config_for(value)
        push = TrafficModel(cfg.mean_bytes).push_config(
            cfg.num_ues, cfg.grid.num_push_res, cfg.theta
        )
        pmf = success_count_distribution(push)
        rows.extend(
            {"sweep_value": value, "theta": cfg.theta, "s": s, "pmf": p}
            for s, p in enumerate(pmf)
        )
    return pd.DataFrame(rows, columns=["sweep_value", "theta", "s", "pmf"])


def run_sweep(
    spec: SweepSpec,
    policies: Sequence[str],
    episodes: int,
    output: Union[str, Path],
    n_jobs: int = 1,
) -> List[Path]:
    """Simulate every policy at every sweep point and write the figure data

    Writes `{policy}_vs_{variable}.csv` per policy, `analytic_vs_{variable}.csv`
    with the push success pmf and `manifest.json`.

    Returns:
        Paths of the written files
    """
    log = get_logger(__name__)
    output = Path(output)
    paths = []

    peb1 = None
    if _needs_localization([spec.config_for(v) for v in spec.values], policies):
        peb1 = worst_case_peb(spec.base, n_jobs=n_jobs)
        log.info(f"Worst-case single-RE PEB {peb1:.4f} m")

    for policy in policies:
        with log_elapsed(log, f"Sweep of {spec.variable} for {policy}"):
            rows = []
            for value in spec.values:
                cfg = spec.config_for(value).replace(policy=policy)
                summary = run_campaign(cfg, episodes, n_jobs=n_jobs, peb1=peb1).summary
                rows.append({"sweep_value": value, **summary})
        df = pd.DataFrame(rows).sort_values("sweep_value")
        path = output / f"{policy}_vs_{spec.variable}.csv"
        save_frame_to_csv(path, df[SWEEP_COLUMNS + EXTRA_COLUMNS])
        paths.append(path)

    path = output / f"analytic_vs_{spec.variable}.csv"
    save_frame_to_csv(path, analytic_success_pmf(spec))
    paths.append(path)

    path = output / "manifest.json"
    write_json(path, _manifest(spec.base, policies, episodes, peb1, sweep=spec))
    paths.append(path)
    return paths


def run_policies(
    cfg: EpisodeConfig,
    policies: Sequence[str],
    episodes: int,
    output: Union[str, Path],
    n_jobs: int = 1,
) -> List[Path]:
    """Simulate every policy at a single configuration

    Writes `summary.csv` with one row per policy, `{policy}_frames.csv` with
    the per-frame records and `manifest.json`.
    """
    output = Path(output)
    peb1 = None
    if _needs_localization([cfg], policies):
        peb1 = worst_case_peb(cfg, n_jobs=n_jobs)
        get_logger(__name__).info(f"Worst-case single-RE PEB {peb1:.4f} m")

    paths, rows = [], []
    for policy in policies:
        result = run_campaign(
            cfg.replace(policy=policy), episodes, n_jobs=n_jobs, peb1=peb1
        )
        rows.append({"policy": policy, **result.summary})
        path = output / f"{policy}_frames.csv"
        save_frame_to_csv(path, result.frames)
        paths.append(path)

    path = output / "summary.csv"
    columns = ["policy"] + SWEEP_COLUMNS[1:] + EXTRA_COLUMNS
    save_frame_to_csv(path, pd.DataFrame(rows)[columns])
    paths.append(path)

    path = output / "manifest.json"
    write_json(path, _manifest(cfg, policies, episodes, peb1))
    paths.append(path)
    return paths


def emit_peb_map(
    cfg: EpisodeConfig,
    resolution: float,
    output: Union[str, Path],
    n_jobs: int = 1,
) -> Path:
    """Write the single-RE PEB map of the configured scenario as `peb_map.csv`"""
    log = get_logger(__name__)
    peb_map = PebMap(
        build_scenario(cfg),
        cfg.grid,
        cfg.p_u,
        cfg.sigma_w2,
        resolution=resolution,
        gain_dbi=cfg.antenna_gain_dbi,
        n_jobs=n_jobs,
    )
    path = Path(output) / "peb_map.csv"
    save_frame_to_csv(path, peb_map.table)
    position, peb1 = peb_map.worst_case
    log.info(
        f"Wrote {len(peb_map.table)} points to {path}, worst case {position} "
        f"with PEB {peb1:.4f} m"
    )
    return path
