from goisac.cli.config import SweepSpec, parse_config  # noqa: F401
from goisac.cli.sweep import emit_peb_map, run_policies, run_sweep  # noqa: F401
