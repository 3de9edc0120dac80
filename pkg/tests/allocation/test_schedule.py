import itertools

import numpy as np
import pytest

from goisac.allocation import schedule_exact, schedule_heuristic, schedule_voi_blind
from goisac.allocation.schedule import UNASSIGNED
from goisac.metrics import optimality_gap
from goisac.utils.exceptions import CapacityTooLarge

from .utils import make_demands, random_demands

SCHEDULERS = [schedule_heuristic, schedule_exact, schedule_voi_blind]


def exhaustive_value(demands, capacity):
    best = 0.0
    for size in range(len(demands) + 1):
        for subset in itertools.combinations(demands, size):
            if sum(d.q for d in subset) <= capacity:
                best = max(best, sum(d.voi for d in subset))
    return best


def assert_feasible(schedule, demands, capacity):
    by_ue = {d.ue: d for d in demands}
    assert schedule.assignment.shape == (capacity,)
    assert np.sum(schedule.assignment != UNASSIGNED) == sum(by_ue[ue].q for ue in schedule.served)
    for ue in schedule.served:
        assert schedule.allocation(ue) == by_ue[ue].q
    assert schedule.value == pytest.approx(sum(by_ue[ue].voi for ue in schedule.served))


@pytest.mark.parametrize("scheduler", SCHEDULERS)
def test_empty_demands(scheduler):
    schedule = scheduler([], 125)

    assert schedule.served == ()
    assert schedule.value == 0.0
    assert np.all(schedule.assignment == UNASSIGNED)


@pytest.mark.parametrize("scheduler", SCHEDULERS)
def test_single_demand(scheduler):
    demands = make_demands([0.8], [30])

    schedule = scheduler(demands, 125)

    assert schedule.served == (0,)
    assert schedule.value == pytest.approx(0.8)
    assert np.array_equal(schedule.assignment[:30], np.zeros(30))
    assert np.all(schedule.assignment[30:] == UNASSIGNED)


@pytest.mark.parametrize("scheduler", SCHEDULERS)
def test_oversized_demand_is_not_served(scheduler):
    schedule = scheduler(make_demands([0.9], [126]), 125)

    assert schedule.num_served == 0


@pytest.mark.parametrize("scheduler", [schedule_heuristic, schedule_exact])
def test_full_capacity_demands(scheduler):
    assert scheduler(make_demands([0.4, 0.9], [125, 125]), 125).served == (1,)
    assert scheduler(make_demands([0.6, 0.6], [125, 125]), 125).served[0] in (0, 1)
    assert schedule_heuristic(make_demands([0.6, 0.6], [125, 125]), 125).served == (0,)


@pytest.mark.parametrize("scheduler", SCHEDULERS)
def test_everything_fits(scheduler):
    demands = make_demands([0.1, 0.5, 0.3], [10, 20, 30])

    schedule = scheduler(demands, 125)

    assert schedule.served == (0, 1, 2)
    assert_feasible(schedule, demands, 125)


def test_heuristic_gap_case():
    demands = make_demands([0.5, 0.5, 0.7], [6, 6, 10])

    heuristic = schedule_heuristic(demands, 10)
    exact = schedule_exact(demands, 10)

    assert heuristic.value == pytest.approx(0.5)
    assert heuristic.served == (0,)
    assert exact.value == pytest.approx(0.7)
    assert exact.served == (2,)


def test_local_search_improves_greedy():
    # greedy takes the dense small item and blocks the valuable pair
    demands = make_demands([0.3, 0.55, 0.55], [2, 5, 5])

    greedy = schedule_heuristic(demands, 10, local_search=False)
    improved = schedule_heuristic(demands, 10)

    assert greedy.value == pytest.approx(0.85)
    assert improved.value == pytest.approx(1.1)
    assert improved.served == (1, 2)


@pytest.mark.parametrize("seed", range(10))
def test_exact_matches_exhaustive_search(seed):
    rng = np.random.default_rng(seed)
    demands = random_demands(rng, 12)

    schedule = schedule_exact(demands, 125)

    assert schedule.value == pytest.approx(exhaustive_value(demands, 125), abs=1e-12)
    assert_feasible(schedule, demands, 125)


@pytest.mark.parametrize("seed", range(20))
def test_heuristic_is_bounded(seed):
    rng = np.random.default_rng(seed)
    demands = random_demands(rng, int(rng.integers(1, 26)))

    greedy = schedule_heuristic(demands, 125, local_search=False)
    heuristic = schedule_heuristic(demands, 125)
    exact = schedule_exact(demands, 125)

    assert greedy.value <= heuristic.value + 1e-12
    assert heuristic.value <= exact.value + 1e-12
    assert_feasible(heuristic, demands, 125)


@pytest.mark.slow
def test_optimality_gap_is_small(record_property):
    rng = np.random.default_rng(47)
    gaps = []
    for _ in range(10_000):
        num_ues = int(rng.integers(1, 26))
        sizes = np.ceil(8 * (rng.geometric(1 / 1024, num_ues)) / (rng.uniform(4, 12, num_ues) * 72))
        demands = make_demands(rng.uniform(0.0, 1.0, num_ues), sizes)
        heuristic = schedule_heuristic(demands, 125)
        assert_feasible(heuristic, demands, 125)
        gaps.append(optimality_gap(heuristic.value, schedule_exact(demands, 125).value))

    record_property("max_gap", max(gaps))
    record_property("mean_gap", float(np.mean(gaps)))
    assert np.all(np.array(gaps) >= -1e-12)
    assert np.mean(gaps) < 0.02


def test_voi_blind_serves_identical_demands():
    demands = make_demands(np.linspace(0.1, 0.9, 8), [30] * 8)

    schedule = schedule_voi_blind(demands, 125)

    assert schedule.num_served == 125 // 30
    assert schedule.served == (0, 1, 2, 3)


def test_voi_blind_prefers_small_demands():
    demands = make_demands([0.9, 0.1, 0.2, 0.05], [100, 20, 30, 40])

    schedule = schedule_voi_blind(demands, 125)

    assert schedule.served == (1, 2, 3)
    assert schedule.value == pytest.approx(0.35)


@pytest.mark.parametrize("seed", range(10))
def test_voi_blind_is_heuristic_with_unit_voi(seed):
    rng = np.random.default_rng(seed)
    demands = random_demands(rng, 20)
    unit = make_demands(np.ones(len(demands)), [d.q for d in demands])

    assert schedule_voi_blind(demands, 125).served == schedule_heuristic(unit, 125).served


def test_exact_capacity_limit():
    with pytest.raises(CapacityTooLarge):
        schedule_exact(make_demands([1.0], [1]), 100_001)


@pytest.mark.parametrize("scheduler", SCHEDULERS)
def test_invalid_inputs(scheduler):
    with pytest.raises(ValueError):
        scheduler(make_demands([0.5], [1]), -1)
    with pytest.raises(ValueError):
        scheduler(make_demands([np.nan], [1]), 10)
