from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

import numpy as np

from goisac.access.analytics import PushConfig

Seed = Union[None, int, np.random.Generator]


@dataclass(frozen=True)
class PushOutcome:
    """Result of one push subframe

    Args:
        singletons: UE index -> push RE index for every successful UE
        collided: Push RE indices carrying two or more transmitters
        attempts: UE indices that transmitted
    """

    singletons: Dict[int, int] = field(default_factory=dict)
    collided: FrozenSet[int] = frozenset()
    attempts: Tuple[int, ...] = ()

    @property
    def num_attempts(self) -> int:
        return len(self.attempts)

    @property
    def num_successes(self) -> int:
        return len(self.singletons)


def contend(
    transmitters: Sequence[int], num_push_res: int, rng: np.random.Generator
) -> PushOutcome:
    """Framed slotted ALOHA over `num_push_res` REs

    Every transmitter picks an RE uniformly at random; REs with exactly one
    transmitter are decoded, all packets on other occupied REs are lost.
    """
    transmitters = tuple(int(ue) for ue in transmitters)
    if len(transmitters) == 0:
        return PushOutcome()

    choices = rng.integers(0, num_push_res, size=len(transmitters))
    occupancy = np.bincount(choices, minlength=num_push_res)
    singletons = {
        ue: int(re) for ue, re in zip(transmitters, choices) if occupancy[re] == 1
    }
    collided = frozenset(int(re) for re in np.flatnonzero(occupancy >= 2))
    return PushOutcome(singletons=singletons, collided=collided, attempts=transmitters)


def simulate_push(
    cfg: PushConfig, voi_draws: Sequence[float], rng_seed: Seed = None
) -> PushOutcome:
    """One push subframe under the threshold policy

    Args:
        cfg: Push configuration
        voi_draws: VoI of each of the U UEs
        rng_seed: Seed or generator for the RE choices

    Returns:
        Outcome; only UEs with V_u strictly above theta transmit
    """
    voi = np.asarray(voi_draws, dtype=float)
    if voi.shape != (cfg.num_ues,):
        raise ValueError(f"expected {cfg.num_ues} VoI draws, got {voi.size}")
    rng = np.random.default_rng(rng_seed)
    return contend(np.flatnonzero(voi > cfg.theta), cfg.num_push_res, rng)


def simulate_success_counts(
    cfg: PushConfig,
    num_frames: int,
    seed: Optional[int] = None,
    chunk_size: int = 10_000,
) -> np.ndarray:
    """Number of singleton REs in each of `num_frames` independent push frames

    The transmitter count is binomial with the threshold exceedance
    probability; RE choices are drawn per frame and occupancy is counted with
    a single `bincount` per chunk.
    """
    rng = np.random.default_rng(seed)
    U, P = cfg.num_ues, cfg.num_push_res
    p_tx = cfg.transmit_probability
    out = np.empty(num_frames, dtype=int)

    for start in range(0, num_frames, chunk_size):
        rows = min(chunk_size, num_frames - start)
        n = rng.binomial(U, p_tx, size=rows)
        choices = rng.integers(0, P, size=(rows, U))
        active = np.arange(U)[None, :] < n[:, None]
        flat = (np.arange(rows)[:, None] * P + choices)[active]
        occupancy = np.bincount(flat, minlength=rows * P).reshape(rows, P)
        out[start : start + rows] = np.sum(occupancy == 1, axis=1)

    return out
