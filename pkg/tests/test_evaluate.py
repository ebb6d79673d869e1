"""Quality curves and the fixed-vs-estimated configuration comparison."""

from __future__ import annotations

import pytest

from evimax.evaluate import (
    EvaluationError,
    compare_configs,
    default_configs,
    quality_curve,
)
from evimax.fusion import ReliabilityConfig
from evimax.graph import SocialGraph, UserActivity
from evimax.maximize import SeedChoice, SeedSelection
from evimax.synthetic import generate_synthetic


def selection_of(*users: str) -> SeedSelection:
    return SeedSelection(
        [SeedChoice(i + 1, u, 1.0, float(i + 1)) for i, u in enumerate(users)]
    )


class TestQualityCurve:
    def test_prefix_sums_follow_ranking(self):
        activities = {
            "u1": UserActivity("u1", tweets=1, followers=10),
            "u2": UserActivity("u2", tweets=2, followers=5),
        }
        curve = quality_curve(selection_of("u1", "u2"), activities)
        assert curve.follows == [10, 15]
        assert curve.tweets == [1, 3]

    def test_zero_activity_gives_zero_curves(self):
        activities = {"u1": UserActivity("u1"), "u2": UserActivity("u2")}
        curve = quality_curve(selection_of("u1", "u2"), activities)
        assert curve.follows == [0, 0]
        assert curve.mentions == [0, 0]
        assert curve.retweets == [0, 0]
        assert curve.tweets == [0, 0]

    def test_single_seed_criteria_order(self):
        activities = {
            "u1": UserActivity(
                "u1", tweets=3, followers=7, mentions_received=2, retweets_received=1
            )
        }
        curve = quality_curve(selection_of("u1"), activities)
        assert (curve.follows, curve.mentions, curve.retweets, curve.tweets) == (
            [7], [2], [1], [3]
        )

    def test_missing_activity_counts_zero(self):
        curve = quality_curve(selection_of("ghost"), {})
        assert curve.follows == [0]

    def test_truncated_selection_is_a_prefix(self):
        activities = {
            f"u{i}": UserActivity(f"u{i}", tweets=i, followers=2 * i) for i in range(6)
        }
        users = [f"u{i}" for i in range(6)]
        full = quality_curve(selection_of(*users), activities)
        half = quality_curve(selection_of(*users[:3]), activities)
        assert half.follows == full.follows[:3]
        assert half.tweets == full.tweets[:3]

    def test_curves_are_monotone(self):
        g, activities = generate_synthetic(seed=21, n_users=40, n_edges=100)
        report = compare_configs(g, activities, default_configs(), k=10)
        for entry in report.entries:
            for series in (
                entry.curve.follows,
                entry.curve.mentions,
                entry.curve.retweets,
                entry.curve.tweets,
            ):
                assert all(a <= b for a, b in zip(series, series[1:]))


class TestCompareConfigs:
    def test_fixed_zero_alpha_selects_in_id_order(self):
        # Zero reliability zeroes every influence value, so every candidate
        # gains exactly 1 and the tie-break picks ids in ascending order.
        g, activities = generate_synthetic(seed=22, n_users=30, n_edges=80)
        report = compare_configs(
            g, activities, [ReliabilityConfig.fixed(0.0)], k=5
        )
        expected = sorted(g.users)[:5]
        assert report.entries[0].selection.users() == expected
        follows = [activities[u].followers for u in expected]
        assert report.entries[0].curve.follows == [
            sum(follows[: i + 1]) for i in range(5)
        ]

    def test_identical_configs_give_identical_curves(self):
        g, activities = generate_synthetic(seed=23, n_users=40, n_edges=110)
        cfgs = [ReliabilityConfig.estimated(), ReliabilityConfig.estimated()]
        report = compare_configs(g, activities, cfgs, k=8)
        first, second = report.entries
        assert first.selection.users() == second.selection.users()
        assert first.curve == second.curve

    def test_k_is_honored(self):
        g, activities = generate_synthetic(seed=24, n_users=60, n_edges=150)
        report = compare_configs(g, activities, default_configs(), k=12)
        assert report.k == 12
        for entry in report.entries:
            assert len(entry.selection) == 12
            assert len(entry.curve) == 12

    def test_rejects_bad_k_and_empty_sweep(self):
        g, activities = generate_synthetic(seed=25, n_users=10, n_edges=20)
        with pytest.raises(ValueError):
            compare_configs(g, activities, default_configs(), k=0)
        with pytest.raises(ValueError):
            compare_configs(g, activities, [], k=5)

    def test_pipeline_errors_name_the_config(self):
        g = SocialGraph()
        g.add_edge("a", "b")
        g.add_edge("c", "d")
        g.add_mentions("a", "b", 5)
        g.add_retweets("c", "d", 3)
        with pytest.raises(EvaluationError) as err:
            compare_configs(
                g, {}, [ReliabilityConfig.fixed(1.0)], k=2
            )
        assert "fixed:1" in str(err.value)

    def test_deterministic(self):
        g, activities = generate_synthetic(seed=26, n_users=40, n_edges=100)
        r1 = compare_configs(g, activities, default_configs(), k=6)
        r2 = compare_configs(g, activities, default_configs(), k=6)
        assert [e.selection.users() for e in r1.entries] == [
            e.selection.users() for e in r2.entries
        ]
        assert [e.curve for e in r1.entries] == [e.curve for e in r2.entries]
