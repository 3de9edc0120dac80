from goisac.simulation.campaign import (  # noqa: F401
    CampaignResult,
    run_campaign,
    run_episode,
    worst_case_peb,
)
from goisac.simulation.config import EpisodeConfig  # noqa: F401
from goisac.simulation.frame import FrameMetrics, run_frame  # noqa: F401
from goisac.simulation.mobility import UeState, step_mobility  # noqa: F401
from goisac.simulation.scenario import build_scenario  # noqa: F401
from goisac.simulation.traffic import TrafficModel  # noqa: F401
