from goisac.allocation.demands import (  # noqa: F401
    PushSuccess,
    UeDemand,
    build_demands,
    q_com,
)
from goisac.allocation.schedule import (  # noqa: F401
    Schedule,
    schedule_exact,
    schedule_heuristic,
    schedule_voi_blind,
)
