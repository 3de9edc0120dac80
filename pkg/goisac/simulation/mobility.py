from dataclasses import dataclass, replace
from typing import List

import numpy as np


@dataclass(frozen=True)
class UeState:
    """Position and per-frame traffic of one UE

    Args:
        position: x_u in metres
        v_max: Maximum speed in m/s
        voi: VoI of the current observation
        bytes: Size of the current observation
        clock_offset: Residual clock time offset delta tau_u in seconds
    """

    position: np.ndarray
    v_max: float
    voi: float = 0.0
    bytes: int = 1
    clock_offset: float = 0.0


def reflect(x: np.ndarray, side: float) -> np.ndarray:
    """Fold coordinates back into [0, side] by mirror reflection at the borders"""
    folded = np.mod(x, 2 * side)
    return np.where(folded > side, 2 * side - folded, folded)


def step_mobility(
    ue: UeState, frame_duration: float, rng: np.random.Generator, side: float
) -> UeState:
    """Brownian step capped at the maximum speed

    Per-axis Gaussian increment with std v_max * dt / 3, clipped in norm to
    v_max * dt and reflected at the borders of the square.
    """
    if frame_duration <= 0:
        raise ValueError("frame duration must be positive")
    reach = ue.v_max * frame_duration
    if reach == 0.0:
        return ue
    step = rng.normal(0.0, reach / 3, size=2)
    norm = np.linalg.norm(step)
    if norm > reach:
        step *= reach / norm
    return replace(ue, position=reflect(ue.position + step, side))


def initial_states(
    num_ues: int,
    side: float,
    v_max: float,
    max_clock_offset: float,
    rng: np.random.Generator,
) -> List[UeState]:
    """UEs placed uniformly in the square with uniform residual clock offsets"""
    positions = rng.uniform(0.0, side, size=(num_ues, 2))
    offsets = rng.uniform(0.0, max_clock_offset, size=num_ues)
    return [
        UeState(position=p, v_max=v_max, clock_offset=float(o))
        for p, o in zip(positions, offsets)
    ]
