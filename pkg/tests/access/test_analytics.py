import math

import numpy as np
import pyro.distributions as pdist
import pytest

from goisac.access import (
    PushConfig,
    expected_successes,
    outcome_pmf,
    simulate_success_counts,
    success_count_distribution,
    success_count_pmf,
    tx_count_distribution,
    tx_count_pmf,
)
from goisac.metrics import empirical_pmf, total_variation


def enumerate_outcomes(P, n):
    """Frequencies of (s, c) over all P^n assignments of transmitters to REs"""
    if n == 0:
        return {(0, 0): 1.0}
    assignments = np.stack(np.unravel_index(np.arange(P**n), (P,) * n), axis=1)
    occupancy = np.stack([(assignments == re).sum(axis=1) for re in range(P)], axis=1)
    s = (occupancy == 1).sum(axis=1)
    c = (occupancy >= 2).sum(axis=1)
    keys, counts = np.unique(np.stack([s, c], axis=1), axis=0, return_counts=True)
    return {(int(k[0]), int(k[1])): cnt / P**n for k, cnt in zip(keys, counts)}


def test_tx_count_threshold_one():
    cfg = PushConfig(num_ues=50, num_push_res=50, theta=1.0)

    assert tx_count_pmf(cfg, 0) == 1.0


def test_tx_count_symmetric_binomial():
    cfg = PushConfig(num_ues=2, num_push_res=2, theta=0.5)

    assert tx_count_pmf(cfg, 1) == pytest.approx(0.5, abs=1e-12)


def test_tx_count_matches_log_gamma():
    cfg = PushConfig(num_ues=50, num_push_res=50, theta=0.7)
    p = 1 - 0.7
    log_pmf = (
        math.lgamma(51)
        - math.lgamma(16)
        - math.lgamma(36)
        + 15 * math.log(p)
        + 35 * math.log(1 - p)
    )

    assert tx_count_pmf(cfg, 15) == pytest.approx(math.exp(log_pmf), rel=1e-10)
    assert tx_count_distribution(cfg).sum() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", [-1, 51])
def test_tx_count_domain(n):
    cfg = PushConfig(num_ues=50, num_push_res=50, theta=0.7)

    with pytest.raises(ValueError):
        tx_count_pmf(cfg, n)


def test_push_config_from_distribution():
    cfg = PushConfig.from_distribution(50, 50, 0.7, pdist.Uniform(0.0, 1.0))

    assert cfg.transmit_probability == pytest.approx(0.3, abs=1e-6)


@pytest.mark.parametrize(
    "P,n,s,c,expected",
    [(2, 0, 0, 0, 1.0), (2, 2, 2, 0, 0.5), (2, 2, 0, 1, 0.5), (2, 2, 1, 0, 0.0)],
)
def test_outcome_pmf_examples(P, n, s, c, expected):
    assert outcome_pmf(P, n, s, c) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("implementation", ["log", "enumerate"])
@pytest.mark.parametrize("P", [1, 2, 3, 4, 5])
def test_outcome_pmf_matches_enumeration(P, implementation):
    for n in range(9):
        reference = enumerate_outcomes(P, n)
        total = 0.0
        for s in range(P + 1):
            for c in range(P + 1):
                value = outcome_pmf(P, n, s, c, implementation=implementation)
                assert abs(value - reference.get((s, c), 0.0)) < 1e-12
                total += value
        assert total == pytest.approx(1.0, abs=1e-12)


def test_outcome_pmf_rejects_negative():
    with pytest.raises(ValueError):
        outcome_pmf(2, -1, 0, 0)


def test_success_count_threshold_one():
    cfg = PushConfig(num_ues=50, num_push_res=50, theta=1.0)

    assert success_count_pmf(cfg, 0) == pytest.approx(1.0, abs=1e-12)


def test_success_count_hand_computed():
    cfg = PushConfig(num_ues=2, num_push_res=2, theta=0.5)

    assert success_count_pmf(cfg, 2) == pytest.approx(0.125, abs=1e-12)


@pytest.mark.parametrize(
    "U,P,theta",
    [(2, 2, 0.5), (50, 50, 0.7), (100, 50, 0.3), (200, 200, 0.5), (200, 200, 0.0)],
)
def test_success_count_normalized(U, P, theta):
    pmf = success_count_distribution(PushConfig(U, P, theta))

    assert np.all(np.isfinite(pmf))
    assert np.all(pmf >= 0.0)
    assert pmf.sum() == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("U,P", [(100, 50), (50, 50), (30, 10)])
def test_expected_successes_closed_form(U, P):
    for theta in np.linspace(0.0, 1.0, 11):
        cfg = PushConfig(U, P, theta)
        p = cfg.transmit_probability
        closed_form = U * p * (1 - p / P) ** (U - 1)

        assert expected_successes(cfg) == pytest.approx(closed_form, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("U,P,changes", [(100, 50, 1), (50, 50, 0)])
def test_expected_successes_unimodal_in_theta(U, P, changes):
    values = [expected_successes(PushConfig(U, P, t)) for t in np.linspace(0, 1, 51)]
    signs = np.sign(np.diff(values))

    assert np.sum(signs[1:] != signs[:-1]) == changes


@pytest.mark.parametrize("U, P", [(20, 50), (50, 50), (80, 50)])
def test_success_count_support(U, P):
    pmf = success_count_distribution(PushConfig(num_ues=U, num_push_res=P, theta=0.3))

    assert pmf.size == min(P, U) + 1
    assert pmf.sum() == pytest.approx(1.0, abs=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize("theta", [0.3, 0.52, 0.7])
def test_success_count_matches_simulation(theta):
    cfg = PushConfig(num_ues=50, num_push_res=50, theta=theta)
    analytic = success_count_distribution(cfg)

    counts = simulate_success_counts(cfg, num_frames=200_000, seed=47)

    assert total_variation(analytic, empirical_pmf(counts, analytic.size)) < 0.01
