"""Turn raw edge indicators into a single evidential influence score.

Pipeline, per edge: min-max normalize each indicator over the whole edge set
and read the result as a BBA (normalized value as mass on {influencer}, the
complement on {passive}); estimate each indicator's reliability from its
average Jousselme distance to the other indicators on the same edge; discount
each BBA by its own reliability; combine everything with Dempster's rule.
The influence of u over v is then the combined mass on {influencer}.

Reliability estimation follows "the farther from the others, the less
reliable": with ``c`` the average distance, reliability is
``(1 - c**lam) ** (1/lam)``, a decreasing map of c for any ``lam > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .belief import (
    MassFunction,
    TotalConflictError,
    combine_dempster,
    discount,
    jousselme_distance,
)
from .graph import INDICATOR_NAMES, SocialGraph, raw_indicators


class OutOfRangeError(ValueError):
    """An indicator value fell outside the normalization bounds."""


class TooFewIndicatorsError(ValueError):
    """Distance-based reliability needs at least two indicators."""


class FusionError(RuntimeError):
    """A per-edge fusion failure, annotated with the offending edge."""


@dataclass(frozen=True)
class NormalizationStats:
    """Per-indicator minima and maxima over the full edge set."""

    lows: tuple[float, ...]
    highs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.lows) != len(self.highs):
            raise ValueError("lows and highs must have equal length")
        for j, (low, high) in enumerate(zip(self.lows, self.highs)):
            if low > high:
                raise ValueError(f"indicator {j}: min {low} exceeds max {high}")

    @classmethod
    def from_values(
        cls, values: dict[tuple[str, str], tuple[float, ...]]
    ) -> "NormalizationStats":
        vectors = list(values.values())
        if not vectors:
            return cls((), ())
        n = len(vectors[0])
        lows = tuple(min(vec[j] for vec in vectors) for j in range(n))
        highs = tuple(max(vec[j] for vec in vectors) for j in range(n))
        return cls(lows, highs)


@dataclass(frozen=True)
class ReliabilityConfig:
    """How per-indicator reliabilities are obtained.

    ``estimated`` mode derives one reliability per indicator per edge from
    pairwise BBA distances; ``fixed`` mode applies the same constant alpha
    everywhere.  ``lam`` shapes the distance-to-reliability map (best results
    around 5).  ``global_reliability`` switches the estimated mode to average
    distances over all edges before mapping, yielding one alpha per indicator
    for the whole graph.
    """

    mode: str = "estimated"
    alpha: float | None = None
    lam: float = 5.0
    global_reliability: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("estimated", "fixed"):
            raise ValueError(f"mode must be 'estimated' or 'fixed', got {self.mode!r}")
        if self.lam <= 0:
            raise ValueError(f"lambda must be positive, got {self.lam!r}")
        if self.mode == "fixed":
            if self.alpha is None:
                raise ValueError("fixed mode requires an alpha")
            if not 0.0 <= self.alpha <= 1.0:
                raise ValueError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        elif self.alpha is not None:
            raise ValueError("estimated mode takes no alpha")

    @classmethod
    def fixed(cls, alpha: float, lam: float = 5.0) -> "ReliabilityConfig":
        return cls(mode="fixed", alpha=alpha, lam=lam)

    @classmethod
    def estimated(cls, lam: float = 5.0, global_reliability: bool = False) -> "ReliabilityConfig":
        return cls(mode="estimated", lam=lam, global_reliability=global_reliability)

    @classmethod
    def parse(cls, text: str, lam: float = 5.0) -> "ReliabilityConfig":
        """Parse a config token: ``estimated`` or ``fixed:<alpha>``."""
        token = text.strip()
        if token == "estimated":
            return cls.estimated(lam=lam)
        if token.startswith("fixed:"):
            try:
                alpha = float(token[len("fixed:"):])
            except ValueError:
                raise ValueError(f"bad fixed alpha in config token {text!r}") from None
            return cls.fixed(alpha, lam=lam)
        raise ValueError(f"bad config token {text!r}, expected 'estimated' or 'fixed:<alpha>'")

    @property
    def name(self) -> str:
        if self.mode == "fixed":
            return f"fixed:{self.alpha:g}"
        return "estimated" if not self.global_reliability else "estimated-global"


@dataclass(frozen=True)
class EdgeBBASet:
    """One edge's normalized indicator values, their BBAs, and reliabilities."""

    edge: tuple[str, str]
    weights: tuple[float, ...]
    bbas: tuple[MassFunction, ...]
    reliabilities: tuple[float, ...]


@dataclass(frozen=True)
class EdgeInfluence:
    """The fused belief state of one edge and its scalar influence value."""

    edge: tuple[str, str]
    fused: MassFunction
    inf: float


def indicator_bba(value: float, low: float, high: float) -> MassFunction:
    """BBA for one indicator value under min-max normalization over the edges.

    The normalized value becomes the mass on {influencer}, its complement the
    mass on {passive}.  A degenerate indicator (constant over all edges, so
    ``low == high``) carries no discriminating evidence and yields the
    vacuous BBA.
    """
    if not low <= value <= high:
        raise OutOfRangeError(
            f"value {value!r} outside normalization range [{low!r}, {high!r}]"
        )
    if high == low:
        return MassFunction.vacuous()
    span = high - low
    return MassFunction((value - low) / span, (high - value) / span, 0.0)


def average_distances(bbas: tuple[MassFunction, ...]) -> tuple[float, ...]:
    """Average Jousselme distance from each BBA to all the others.

    The zero self-distance is included in the numerator while the divisor
    stays at n - 1, matching the distance-averaging operator this module
    implements.
    """
    n = len(bbas)
    if n < 2:
        raise TooFewIndicatorsError(
            f"need at least 2 indicators to estimate reliability, got {n}"
        )
    averages = []
    for j, mj in enumerate(bbas):
        total = 0.0
        for i, mi in enumerate(bbas):
            if i != j:
                total += jousselme_distance(mj, mi)
        averages.append(total / (n - 1))
    return tuple(averages)


def reliability_from_distance(c: float, lam: float) -> float:
    """Map an average distance in [0, 1] to a reliability in [0, 1].

    Endpoints return exactly; sub-epsilon excursions outside [0, 1] (the
    distance can overshoot 1 by rounding) are clamped so the fractional
    power never sees a negative base.
    """
    if c <= 0.0:
        return 1.0
    if c >= 1.0:
        return 0.0
    return (1.0 - c**lam) ** (1.0 / lam)


def estimate_reliabilities(
    bbas: tuple[MassFunction, ...], cfg: ReliabilityConfig
) -> tuple[float, ...]:
    """Per-indicator reliabilities for one edge's BBA set."""
    if cfg.mode == "fixed":
        return tuple(cfg.alpha for _ in bbas)
    return tuple(
        reliability_from_distance(c, cfg.lam) for c in average_distances(bbas)
    )


def fuse_edge(ebs: EdgeBBASet) -> EdgeInfluence:
    """Discount each indicator BBA by its reliability and fuse them all.

    Raises:
        TotalConflictError: only reachable when every reliability is 1 and
            the indicators fully contradict each other.
    """
    discounted = [
        discount(m, alpha) for m, alpha in zip(ebs.bbas, ebs.reliabilities)
    ]
    fused = reduce(combine_dempster, discounted)
    return EdgeInfluence(ebs.edge, fused, fused.influencer)


def edge_bba_sets(
    g: SocialGraph, cfg: ReliabilityConfig
) -> dict[tuple[str, str], EdgeBBASet]:
    """Normalized weights, BBAs, and reliabilities for every edge."""
    values = raw_indicators(g)
    stats = NormalizationStats.from_values(values)
    n = len(INDICATOR_NAMES)

    raw_sets: dict[tuple[str, str], tuple[tuple[float, ...], tuple[MassFunction, ...]]] = {}
    for edge, vec in values.items():
        bbas = tuple(
            indicator_bba(vec[j], stats.lows[j], stats.highs[j]) for j in range(n)
        )
        weights = tuple(
            (vec[j] - stats.lows[j]) / (stats.highs[j] - stats.lows[j])
            if stats.highs[j] > stats.lows[j]
            else 0.0
            for j in range(n)
        )
        raw_sets[edge] = (weights, bbas)

    if cfg.mode == "estimated" and cfg.global_reliability and raw_sets:
        sums = [0.0] * n
        for _, bbas in raw_sets.values():
            for j, c in enumerate(average_distances(bbas)):
                sums[j] += c
        shared = tuple(
            reliability_from_distance(s / len(raw_sets), cfg.lam) for s in sums
        )
        return {
            edge: EdgeBBASet(edge, weights, bbas, shared)
            for edge, (weights, bbas) in raw_sets.items()
        }

    return {
        edge: EdgeBBASet(edge, weights, bbas, estimate_reliabilities(bbas, cfg))
        for edge, (weights, bbas) in raw_sets.items()
    }


def fuse_all(
    g: SocialGraph, cfg: ReliabilityConfig
) -> dict[tuple[str, str], EdgeInfluence]:
    """Fused influence for every edge of the graph; deterministic."""
    out: dict[tuple[str, str], EdgeInfluence] = {}
    for edge, ebs in edge_bba_sets(g, cfg).items():
        try:
            out[edge] = fuse_edge(ebs)
        except TotalConflictError as exc:
            raise FusionError(f"edge {edge[0]!r} -> {edge[1]!r}: {exc}") from exc
    return out
