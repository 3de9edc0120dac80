from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from goisac.allocation.demands import UeDemand
from goisac.utils.exceptions import CapacityTooLarge

UNASSIGNED = -1

# Largest pull capacity accepted by the dynamic program
MAX_EXACT_CAPACITY = 100_000


@dataclass(frozen=True)
class Schedule:
    """Pull-subframe allocation

    Args:
        assignment: UE index per pull RE, `UNASSIGNED` for idle REs
        served: UEs that received their full demand, ascending
        value: Total VoI of the served UEs
    """

    assignment: np.ndarray
    served: Tuple[int, ...]
    value: float

    @property
    def num_served(self) -> int:
        return len(self.served)

    def allocation(self, ue: int) -> int:
        return int(np.sum(self.assignment == ue))


def _density_order(demand: UeDemand, weight: float) -> Tuple[float, float, int]:
    return (-weight / demand.q, -weight, demand.ue)


def _greedy(
    candidates: Sequence[int],
    demands: Sequence[UeDemand],
    weights: np.ndarray,
    budget: int,
) -> List[int]:
    """Admit candidates by decreasing weight density while they fit"""
    admitted = []
    for k in sorted(candidates, key=lambda k: _density_order(demands[k], weights[k])):
        if demands[k].q <= budget:
            admitted.append(k)
            budget -= demands[k].q
    return admitted


def _remove_one(
    admitted: List[int],
    demands: Sequence[UeDemand],
    weights: np.ndarray,
    capacity: int,
) -> List[int]:
    """Remove-one local search with greedy refill from the excluded UEs"""
    improved = True
    while improved:
        improved = False
        value = weights[admitted].sum()
        excluded = [k for k in range(len(demands)) if k not in admitted]
        for removed in admitted:
            kept = [k for k in admitted if k != removed]
            budget = capacity - sum(demands[k].q for k in kept)
            candidate = kept + _greedy(excluded, demands, weights, budget)
            if weights[candidate].sum() > value + 1e-12:
                admitted = candidate
                improved = True
                break
    return admitted


def _build(
    chosen: Sequence[int], demands: Sequence[UeDemand], capacity: int
) -> Schedule:
    """Contiguous RE blocks in ascending UE order, exactly Q_u REs per served UE"""
    served = sorted((demands[k] for k in chosen), key=lambda d: d.ue)
    assignment = np.full(capacity, UNASSIGNED, dtype=int)
    start = 0
    for demand in served:
        assignment[start : start + demand.q] = demand.ue
        start += demand.q
    schedule = Schedule(
        assignment=assignment,
        served=tuple(d.ue for d in served),
        value=float(sum(d.voi for d in served)),
    )
    _check_feasible(schedule, demands, capacity)
    return schedule


def _check_feasible(schedule: Schedule, demands: Sequence[UeDemand], capacity: int):
    assert schedule.assignment.shape == (capacity,)
    by_ue = {d.ue: d for d in demands}
    assert len(by_ue) == len(demands), "duplicate UE in demands"
    assert np.sum(schedule.assignment != UNASSIGNED) <= capacity
    for ue in schedule.served:
        assert schedule.allocation(ue) >= by_ue[ue].q


def _check_inputs(demands: Sequence[UeDemand], capacity: int):
    if capacity < 0:
        raise ValueError("capacity must be non-negative")
    if not all(np.isfinite(d.voi) for d in demands):
        raise ValueError("VoI must be finite")


def schedule_heuristic(
    demands: Sequence[UeDemand], capacity: int, local_search: bool = True
) -> Schedule:
    """Knapsack scheduling of the pull subframe

    Greedy admission by VoI density V_u / Q_u (ties: higher VoI, then lower
    UE index), followed by a remove-one local search that drops one admitted
    UE, refills greedily from the UEs excluded so far and keeps the change if
    the total VoI strictly increases.

    Args:
        demands: Per-UE demands
        capacity: Pull REs available, Q
        local_search: Run the remove-one phase after the greedy admission

    Returns:
        Feasible schedule
    """
    _check_inputs(demands, capacity)
    weights = np.array([d.voi for d in demands], dtype=float)
    admitted = _greedy(range(len(demands)), demands, weights, capacity)
    if local_search:
        admitted = _remove_one(admitted, demands, weights, capacity)
    return _build(admitted, demands, capacity)


def schedule_voi_blind(demands: Sequence[UeDemand], capacity: int) -> Schedule:
    """Heuristic with every VoI set to one, which maximises the number of served UEs

    The returned value still sums the true VoI of the served UEs.
    """
    _check_inputs(demands, capacity)
    weights = np.ones(len(demands))
    admitted = _greedy(range(len(demands)), demands, weights, capacity)
    admitted = _remove_one(admitted, demands, weights, capacity)
    return _build(admitted, demands, capacity)


def schedule_exact(demands: Sequence[UeDemand], capacity: int) -> Schedule:
    """Optimal schedule by 0/1-knapsack dynamic programming over the capacity

    Raises:
        CapacityTooLarge: if capacity exceeds `MAX_EXACT_CAPACITY`
    """
    _check_inputs(demands, capacity)
    if capacity > MAX_EXACT_CAPACITY:
        raise CapacityTooLarge(f"capacity {capacity} above {MAX_EXACT_CAPACITY}")

    best = np.zeros(capacity + 1)
    keep = np.zeros((len(demands), capacity + 1), dtype=bool)
    for k, demand in enumerate(demands):
        q = demand.q
        if q > capacity:
            continue
        candidate = best[: capacity + 1 - q] + demand.voi
        better = candidate > best[q:]
        keep[k, q:] = better
        best[q:] = np.where(better, candidate, best[q:])

    chosen = []
    budget = capacity
    for k in reversed(range(len(demands))):
        if keep[k, budget]:
            chosen.append(k)
            budget -= demands[k].q
    return _build(chosen, demands, capacity)
