import argparse
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from goisac.cli.config import (
    DEFAULT_SWEEP_VALUES,
    SWEEP_FIELDS,
    SweepSpec,
    parse_config,
)
from goisac.cli.sweep import emit_peb_map, run_policies, run_sweep
from goisac.policies import get_available_policies
from goisac.simulation.config import EpisodeConfig
from goisac.utils.exceptions import ConfigError
from goisac.utils.logging import get_logger


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON configuration file")
    common.add_argument(
        "--output", type=Path, default=Path("results"), help="Output directory"
    )
    common.add_argument("--seed", type=int, help="Master seed, overrides the config")
    common.add_argument("--n-jobs", type=int, default=1, help="Joblib workers")

    simulate = argparse.ArgumentParser(add_help=False)
    simulate.add_argument(
        "--episodes", type=int, default=100, help="Episodes per configuration"
    )
    simulate.add_argument(
        "--policies",
        nargs="+",
        choices=get_available_policies(),
        default=get_available_policies(),
        help="Policies to simulate",
    )

    parser = argparse.ArgumentParser(
        prog="goisac",
        description="Goal-oriented push/pull access over a cell-free ISAC network",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(
        "run", parents=[common, simulate], help="Simulate policies at one configuration"
    )
    sweep = commands.add_parser(
        "sweep", parents=[common, simulate], help="Sweep theta, epsilon or U"
    )
    sweep.add_argument(
        "--sweep",
        choices=sorted(SWEEP_FIELDS),
        help="Sweep variable, overrides the config; default values if none given",
    )
    peb = commands.add_parser("peb-map", parents=[common], help="Write the PEB map")
    peb.add_argument("--resolution", type=float, help="Grid spacing in metres")
    return parser


def _load(args: argparse.Namespace) -> Tuple[EpisodeConfig, Optional[SweepSpec]]:
    """Base configuration and the sweep it may define, with command-line overrides"""
    cfg = parse_config(args.config) if args.config is not None else EpisodeConfig()
    sweep = cfg if isinstance(cfg, SweepSpec) else None
    base = sweep.base if sweep is not None else cfg
    if args.seed is not None:
        base = base.replace(seed=args.seed)

    if getattr(args, "sweep", None) is not None:
        same = sweep is not None and sweep.variable == args.sweep
        values = sweep.values if same else DEFAULT_SWEEP_VALUES[args.sweep]
        sweep = SweepSpec(args.sweep, values, base)
    elif sweep is not None:
        sweep = SweepSpec(sweep.variable, sweep.values, base)
    return base, sweep


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    log = get_logger("goisac")

    try:
        base, sweep = _load(args)
        if getattr(args, "episodes", 1) < 1:
            raise ConfigError("episodes", "must be a positive integer")
        if args.command == "peb-map":
            resolution = args.resolution
            if resolution is None:
                resolution = base.peb_resolution
            if resolution <= 0:
                raise ConfigError("resolution", "must be positive")
            emit_peb_map(base, resolution, args.output, n_jobs=args.n_jobs)
        elif args.command == "sweep":
            if sweep is None:
                raise ConfigError("sweep", "give --sweep or a `sweep` object")
            run_sweep(sweep, args.policies, args.episodes, args.output, args.n_jobs)
        else:
            run_policies(base, args.policies, args.episodes, args.output, args.n_jobs)
    except ConfigError as err:
        log.error(f"Invalid configuration: {err}")
        return 2
    except OSError as err:
        log.error(f"I/O error: {err}")
        return 1

    return 0


if __name__ == "__main__":
    sys.exit(main())
