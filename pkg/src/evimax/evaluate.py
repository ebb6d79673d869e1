"""Seed-quality curves and side-by-side configuration comparison.

A selection is judged by four accumulated statistics along its ranking:
followers, mentions received, retweets received, and tweets authored.  The
comparison runner executes the full pipeline (fusion, influence field, CELF)
once per reliability configuration on the same graph and aligns the
resulting curves, mirroring the fixed-alpha versus estimated-alpha protocol.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fusion import ReliabilityConfig, fuse_all
from .graph import SocialGraph, UserActivity
from .maximize import SeedSelection, select_celf
from .spread import InfluenceField


class EvaluationError(RuntimeError):
    """A pipeline failure while evaluating one named configuration."""


@dataclass
class QualityCurve:
    """Prefix sums of the four per-user statistics along a seed ranking."""

    follows: list[int]
    mentions: list[int]
    retweets: list[int]
    tweets: list[int]

    def __len__(self) -> int:
        return len(self.follows)


@dataclass
class ReportEntry:
    name: str
    config: ReliabilityConfig
    selection: SeedSelection
    curve: QualityCurve


@dataclass
class ComparisonReport:
    k: int
    entries: list[ReportEntry]


def quality_curve(
    selection: SeedSelection, activities: dict[str, UserActivity]
) -> QualityCurve:
    """Accumulate the four statistics over the ranking; missing users count zero."""
    curve = QualityCurve([], [], [], [])
    follows = mentions = retweets = tweets = 0
    for choice in selection.choices:
        record = activities.get(choice.user)
        if record is not None:
            follows += record.followers
            mentions += record.mentions_received
            retweets += record.retweets_received
            tweets += record.tweets
        curve.follows.append(follows)
        curve.mentions.append(mentions)
        curve.retweets.append(retweets)
        curve.tweets.append(tweets)
    return curve


def default_configs(lam: float = 5.0) -> list[ReliabilityConfig]:
    """The standard sweep: fixed alpha 0, fixed alpha 0.2, estimated."""
    return [
        ReliabilityConfig.fixed(0.0, lam=lam),
        ReliabilityConfig.fixed(0.2, lam=lam),
        ReliabilityConfig.estimated(lam=lam),
    ]


def compare_configs(
    g: SocialGraph,
    activities: dict[str, UserActivity],
    configs: list[ReliabilityConfig],
    k: int,
) -> ComparisonReport:
    """Run the full pipeline once per configuration and align the curves."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not configs:
        raise ValueError("at least one configuration is required")
    entries: list[ReportEntry] = []
    for cfg in configs:
        try:
            influences = fuse_all(g, cfg)
            influence_field = InfluenceField.from_graph(g, influences)
            selection = select_celf(influence_field, k)
        except Exception as exc:
            raise EvaluationError(f"config {cfg.name}: {exc}") from exc
        entries.append(
            ReportEntry(cfg.name, cfg, selection, quality_curve(selection, activities))
        )
    return ComparisonReport(min(k, g.num_users()), entries)
