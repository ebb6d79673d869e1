"""Set-to-user influence and the global spread objective.

The influence of a seed set S on a user v is 1 when v belongs to S, and
otherwise the sum over seeds u and over v's in-neighborhood (plus v itself)
of two-hop products Inf(u, x) * Inf(x, v), with self-influence fixed at 1 and
non-adjacent distinct pairs at 0.  The spread of S is that quantity summed
over every user.  No clamping is applied: for v outside S the value can
exceed 1, and the objective is maximized exactly as defined.

``sigma`` evaluates the double sum by accumulating each seed's contribution
field over its two-hop out-frontier, which is an exact restructuring (all
terms outside the frontier are zero).  ``influence_on`` keeps the literal
per-user form so the two routes can check each other.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graph import SocialGraph, UnknownUserError


class AlreadyInSetError(ValueError):
    """Marginal gain was requested for a user already in the seed set."""


class InfluenceField:
    """Immutable per-edge influence values over a fixed user set.

    Stores weighted out- and in-adjacency in insertion order.  Construction
    validates that every weight lies in [0, 1] and that edges connect known,
    distinct users; after that the field is read-only and safe to share.
    """

    def __init__(
        self,
        users: Iterable[str],
        weights: Mapping[tuple[str, str], float],
    ) -> None:
        self._users: dict[str, None] = dict.fromkeys(users)
        self._out: dict[str, list[tuple[str, float]]] = {u: [] for u in self._users}
        self._in: dict[str, list[tuple[str, float]]] = {u: [] for u in self._users}
        self._weights: dict[tuple[str, str], float] = {}
        for (u, v), w in weights.items():
            if u not in self._users or v not in self._users:
                raise UnknownUserError(f"edge ({u!r}, {v!r}) references unknown user")
            if u == v:
                raise ValueError(f"self-loop weight for {u!r}")
            if not 0.0 <= w <= 1.0:
                raise ValueError(f"influence weight must lie in [0, 1], got {w!r}")
            if (u, v) in self._weights:
                raise ValueError(f"duplicate edge ({u!r}, {v!r})")
            self._weights[(u, v)] = w
            self._out[u].append((v, w))
            self._in[v].append((u, w))

    @classmethod
    def from_graph(
        cls, g: SocialGraph, influences: Mapping[tuple[str, str], object]
    ) -> "InfluenceField":
        """Build a field from a graph and fuse_all-style results.

        ``influences`` maps each edge either to a plain float or to any
        object with an ``inf`` attribute (such as EdgeInfluence).
        """
        weights = {
            edge: (value.inf if hasattr(value, "inf") else float(value))
            for edge, value in influences.items()
        }
        return cls(g.users, weights)

    @property
    def users(self) -> Iterable[str]:
        return self._users.keys()

    def num_users(self) -> int:
        return len(self._users)

    def has_user(self, user: str) -> bool:
        return user in self._users

    def influence(self, a: str, b: str) -> float:
        """Pairwise influence: 1 on the diagonal, edge weight or 0 elsewhere."""
        if a == b:
            return 1.0
        return self._weights.get((a, b), 0.0)

    def out_edges(self, user: str) -> list[tuple[str, float]]:
        self._require(user)
        return self._out[user]

    def in_edges(self, user: str) -> list[tuple[str, float]]:
        self._require(user)
        return self._in[user]

    def seed_contributions(self, u: str) -> dict[str, float]:
        """Influence of the single seed u on every reachable other user.

        Returns the additive per-seed field g(u, .): a direct edge counts
        twice (once through the x = v term, once through x = u as an
        in-neighbor of v), and each two-hop path u -> x -> v contributes the
        product of its weights.  Influence of a set on a non-member is the
        sum of its members' fields.
        """
        self._require(u)
        con: dict[str, float] = {}
        for x, w_ux in self._out[u]:
            con[x] = con.get(x, 0.0) + 2.0 * w_ux
            for v, w_xv in self._out[x]:
                if v != u:
                    con[v] = con.get(v, 0.0) + w_ux * w_xv
        return con

    def _require(self, user: str) -> None:
        if user not in self._users:
            raise UnknownUserError(f"unknown user: {user!r}")

    def _require_seeds(self, seeds: Iterable[str]) -> None:
        for u in seeds:
            self._require(u)


def influence_on(field: InfluenceField, seeds: set[str], v: str) -> float:
    """Influence of the seed set on one user, evaluated literally."""
    field._require_seeds(seeds)
    field._require(v)
    if v in seeds:
        return 1.0
    total = 0.0
    # Sorted seed order keeps float accumulation reproducible across
    # processes (set iteration order is hash-randomized).
    for u in sorted(seeds):
        for x, w_xv in field.in_edges(v):
            total += field.influence(u, x) * w_xv
        total += field.influence(u, v)  # x = v term, self-influence is 1
    return total


def sigma(field: InfluenceField, seeds: set[str]) -> float:
    """Total influence of the seed set over the whole network."""
    field._require_seeds(seeds)
    acc: dict[str, float] = {}
    for u in sorted(seeds):
        for v, c in field.seed_contributions(u).items():
            acc[v] = acc.get(v, 0.0) + c
    total = float(len(seeds))
    for v, value in acc.items():
        if v not in seeds:
            total += value
    return total


def marginal_gain(field: InfluenceField, seeds: set[str], w: str) -> float:
    """Spread increase from adding w to the seed set."""
    field._require(w)
    if w in seeds:
        raise AlreadyInSetError(f"user {w!r} is already a seed")
    return sigma(field, seeds | {w}) - sigma(field, seeds)
