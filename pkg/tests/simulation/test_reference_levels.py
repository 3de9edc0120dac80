"""Desk-scale levels of the reference configuration (100 episodes of 100 frames)"""
import numpy as np
import pytest

from .utils import campaign_summary, reference_peb

THETAS = np.round(np.arange(0.30, 0.75, 0.04), 2)


def fitted_peak(x, y):
    curvature, slope, _ = np.polyfit(x, y, 2)
    assert curvature < 0
    return -slope / (2 * curvature)


@pytest.mark.slow
@pytest.mark.parametrize(
    "policy",
    [
        "goca",
        pytest.param(
            "goia",
            marks=pytest.mark.xfail(
                reason="worst-case Q_loc caps the served UEs near 9, moving the peak towards 0.65",
                strict=False,
            ),
        ),
    ],
)
def test_total_voi_peaks_at_moderate_threshold(policy, record_property):
    levels = [campaign_summary(episodes=20, policy=policy, theta=t)["avg_voi_tot"] for t in THETAS]
    edges = [campaign_summary(episodes=20, policy=policy, theta=t)["avg_voi_tot"] for t in (0.0, 0.98)]

    peak = fitted_peak(THETAS, levels)
    record_property("peak_theta", peak)

    assert 0.42 <= peak <= 0.62
    assert max(edges) < max(levels)


@pytest.mark.slow
def test_voi_blind_reference_level(record_property):
    summary = campaign_summary(policy="viba")
    record_property("viba", summary)

    assert campaign_summary(episodes=5, policy="viba", theta=0.2) == campaign_summary(
        episodes=5, policy="viba", theta=0.9
    )
    assert 3.60 <= summary["avg_voi_tot"] <= 4.87
    assert 0.397 <= summary["avg_pull_access_rate"] <= 0.537


@pytest.mark.slow
def test_communication_only_reference_level(record_property):
    summary = campaign_summary(policy="goca")
    record_property("goca", summary)

    assert 6.31 <= summary["avg_voi_tot"] <= 8.53
    assert 0.675 <= summary["avg_pull_access_rate"] <= 0.913


@pytest.mark.slow
def test_loose_constraint_matches_communication_only(record_property):
    goia = campaign_summary(policy="goia", epsilon=2.8)
    goca = campaign_summary(policy="goca")
    record_property("worst_case_peb", reference_peb())
    record_property("goia_2.8", goia)

    assert abs(goia["avg_voi_tot"] - goca["avg_voi_tot"]) < 0.05 * goca["avg_voi_tot"]
    assert 0.80 <= goia["com_dominant_share"] <= 1.0


@pytest.mark.slow
def test_tight_constraint_share(record_property):
    goia = campaign_summary(policy="goia", epsilon=1.0)
    record_property("goia_1.0", goia)

    assert 0.41 <= goia["com_dominant_share"] <= 0.61
    # localization only removes feasible schedules
    assert goia["avg_voi_tot"] <= campaign_summary(policy="goca")["avg_voi_tot"]


@pytest.mark.slow
@pytest.mark.parametrize(
    "num_ues",
    [
        pytest.param(
            20,
            marks=pytest.mark.xfail(
                reason="few push attempts against a near-full VoI-blind schedule", strict=False
            ),
        ),
        40,
        60,
        80,
        100,
    ],
)
def test_goal_oriented_access_beats_voi_blind(num_ues):
    goia = campaign_summary(episodes=20, policy="goia", num_ues=num_ues)
    viba = campaign_summary(episodes=20, policy="viba", num_ues=num_ues)

    assert goia["avg_voi_tot"] > viba["avg_voi_tot"]
