"""Top-k seed selection by lazy-greedy (CELF) maximization of the spread.

The spread objective has diminishing marginal returns: a gain computed
against an earlier, smaller seed set upper-bounds the gain against any later
superset.  CELF exploits this by keeping every candidate's last known gain in
a max-heap with the round it was computed in; a popped entry whose gain is
stale is recomputed and pushed back, and an entry popped with a current-round
stamp is committed.  Under the shared deterministic tie-break (larger gain
first, then smaller user id) this selects exactly the same seeds as the
naive full-rescan greedy, while evaluating far fewer gains.

``select_greedy_naive`` (full rescan) and ``select_exhaustive`` (true argmax
over all size-k subsets) exist as oracles for testing the lazy machinery.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

from .spread import InfluenceField, sigma


class InvalidKError(ValueError):
    """Requested seed count is not a positive integer."""


class TooLargeError(ValueError):
    """Exhaustive search was asked to enumerate too many subsets."""


@dataclass(frozen=True)
class SeedChoice:
    rank: int
    user: str
    gain: float
    cumulative_sigma: float


@dataclass
class SeedSelection:
    """Ranked seed list with per-rank gains and cumulative spread values."""

    choices: list[SeedChoice]
    gain_evaluations: int = 0

    def __post_init__(self) -> None:
        users = [c.user for c in self.choices]
        if len(set(users)) != len(users):
            raise ValueError("selected users must be distinct")
        for i, choice in enumerate(self.choices):
            if choice.rank != i + 1:
                raise ValueError(f"ranks must run 1..k, got {choice.rank} at {i}")

    def users(self) -> list[str]:
        return [c.user for c in self.choices]

    @property
    def final_sigma(self) -> float:
        return self.choices[-1].cumulative_sigma if self.choices else 0.0

    def __len__(self) -> int:
        return len(self.choices)


class _SelectionState:
    """Incremental spread bookkeeping shared by both greedy variants.

    Maintains, for the current seed set, the accumulated per-user influence
    field and the current spread, so a candidate's gain costs one
    two-hop-frontier expansion instead of a full spread evaluation.
    """

    def __init__(self, influence_field: InfluenceField) -> None:
        self.field = influence_field
        self.seeds: set[str] = set()
        self.acc: dict[str, float] = {}
        self.sigma_value = 0.0
        self.evaluations = 0

    def gain(self, w: str) -> float:
        """Fresh marginal gain of w against the current seed set."""
        self.evaluations += 1
        spread_gain = 0.0
        for v, c in self.field.seed_contributions(w).items():
            if v != w and v not in self.seeds:
                spread_gain += c
        # Adding w turns its own influence-received term into membership.
        return 1.0 - self.acc.get(w, 0.0) + spread_gain

    def commit(self, w: str) -> float:
        """Add w to the seed set and return the new spread value."""
        for v, c in self.field.seed_contributions(w).items():
            self.acc[v] = self.acc.get(v, 0.0) + c
        self.seeds.add(w)
        total = float(len(self.seeds))
        for v, value in self.acc.items():
            if v not in self.seeds:
                total += value
        self.sigma_value = total
        return total


def _effective_k(influence_field: InfluenceField, k: int) -> int:
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    return min(k, influence_field.num_users())


def select_celf(influence_field: InfluenceField, k: int) -> SeedSelection:
    """Lazy-greedy selection of min(k, number of users) seeds."""
    k_eff = _effective_k(influence_field, k)
    state = _SelectionState(influence_field)

    heap: list[tuple[float, str, int]] = []
    for u in influence_field.users:
        heap.append((-state.gain(u), u, 0))
    heapq.heapify(heap)

    choices: list[SeedChoice] = []
    while len(choices) < k_eff:
        neg_gain, u, stamp = heapq.heappop(heap)
        if stamp == len(state.seeds):
            cumulative = state.commit(u)
            choices.append(SeedChoice(len(choices) + 1, u, -neg_gain, cumulative))
        else:
            heapq.heappush(heap, (-state.gain(u), u, len(state.seeds)))
    return SeedSelection(choices, gain_evaluations=state.evaluations)


def select_greedy_naive(influence_field: InfluenceField, k: int) -> SeedSelection:
    """Plain greedy: every round rescans every remaining candidate."""
    k_eff = _effective_k(influence_field, k)
    state = _SelectionState(influence_field)

    choices: list[SeedChoice] = []
    while len(choices) < k_eff:
        best: tuple[float, str] | None = None
        for u in influence_field.users:
            if u in state.seeds:
                continue
            entry = (-state.gain(u), u)
            if best is None or entry < best:
                best = entry
        assert best is not None
        neg_gain, u = best
        cumulative = state.commit(u)
        choices.append(SeedChoice(len(choices) + 1, u, -neg_gain, cumulative))
    return SeedSelection(choices, gain_evaluations=state.evaluations)


def select_exhaustive(influence_field: InfluenceField, k: int) -> set[str]:
    """True spread-optimal size-k subset, for small instances only.

    Ties resolve to the lexicographically first subset in user-id order.
    """
    k_eff = _effective_k(influence_field, k)
    n = influence_field.num_users()
    if math.comb(n, k_eff) > 10**6:
        raise TooLargeError(
            f"C({n}, {k_eff}) subsets exceed the exhaustive-search budget"
        )
    ordered = sorted(influence_field.users)
    best_set: tuple[str, ...] | None = None
    best_sigma = -math.inf
    for combo in itertools.combinations(ordered, k_eff):
        value = sigma(influence_field, set(combo))
        if value > best_sigma:
            best_sigma = value
            best_set = combo
    assert best_set is not None
    return set(best_set)
