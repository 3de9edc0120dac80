from goisac.access.analytics import (  # noqa: F401
    OutcomeCount,
    PushConfig,
    expected_successes,
    outcome_pmf,
    success_count_distribution,
    success_count_pmf,
    tx_count_distribution,
    tx_count_pmf,
)
from goisac.access.simulation import (  # noqa: F401
    PushOutcome,
    contend,
    simulate_push,
    simulate_success_counts,
)
