from functools import lru_cache

from goisac.simulation import EpisodeConfig, run_campaign, worst_case_peb


@lru_cache(maxsize=None)
def reference_peb() -> float:
    """Worst-case single-RE PEB of the reference deployment, searched once per session"""
    return worst_case_peb(EpisodeConfig(), n_jobs=-1)


@lru_cache(maxsize=None)
def campaign_summary(episodes=100, **changes):
    """Summary of a desk-scale campaign around the reference configuration"""
    cfg = EpisodeConfig(**changes)
    return run_campaign(cfg, episodes, n_jobs=-1, peb1=reference_peb()).summary
