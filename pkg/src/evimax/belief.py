"""Belief-function arithmetic on the two-hypothesis frame {influencer, passive}.

A mass function (basic belief assignment) distributes one unit of belief over
the four subsets of the frame: the empty set, {influencer}, {passive}, and the
whole frame.  The empty set always carries zero mass; combination renormalizes
conflict away.  Three primitives are provided:

* :func:`combine_dempster` -- conjunctive, conflict-renormalized combination,
* :func:`discount` -- scaling toward total ignorance by a source reliability,
* :func:`jousselme_distance` -- subset-similarity-weighted distance in [0, 1].

Everything here is a pure function over immutable values, so instances can be
shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

# Subset bitmasks of the frame; bit 0 = influencer, bit 1 = passive.
EMPTY = 0
INFLUENCER = 1
PASSIVE = 2
OMEGA = 3

SUBSETS = (EMPTY, INFLUENCER, PASSIVE, OMEGA)

SUM_TOLERANCE = 1e-9
_NEGATIVE_TOLERANCE = -1e-12
_CONFLICT_EPSILON = 1e-12


class TotalConflictError(ValueError):
    """Raised when two fully committed, contradictory BBAs are combined."""


@dataclass(frozen=True, slots=True)
class MassFunction:
    """A normalized BBA over the fixed two-hypothesis frame.

    The three stored components are the masses on {influencer}, {passive} and
    the whole frame; the empty set implicitly carries zero.  Components must
    be nonnegative and sum to one (tolerance ``SUM_TOLERANCE``); sub-tolerance
    negative noise is clamped to zero on construction.
    """

    influencer: float
    passive: float
    omega: float

    def __post_init__(self) -> None:
        for name in ("influencer", "passive", "omega"):
            value = getattr(self, name)
            if value < _NEGATIVE_TOLERANCE:
                raise ValueError(f"mass on {name!r} is negative: {value!r}")
            if value < 0.0:
                object.__setattr__(self, name, 0.0)
        total = self.influencer + self.passive + self.omega
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"masses must sum to 1, got {total!r}")

    @classmethod
    def vacuous(cls) -> "MassFunction":
        """The total-ignorance BBA: all mass on the whole frame."""
        return cls(0.0, 0.0, 1.0)

    def mass(self, subset: int) -> float:
        """Mass on a subset given as a bitmask (``EMPTY`` .. ``OMEGA``)."""
        if subset == INFLUENCER:
            return self.influencer
        if subset == PASSIVE:
            return self.passive
        if subset == OMEGA:
            return self.omega
        if subset == EMPTY:
            return 0.0
        raise ValueError(f"not a subset of the frame: {subset!r}")

    def as_vector(self) -> tuple[float, float, float, float]:
        """Dense 4-slot vector indexed by subset bitmask."""
        return (0.0, self.influencer, self.passive, self.omega)

    def is_vacuous(self, tolerance: float = 0.0) -> bool:
        return self.omega >= 1.0 - tolerance


def combine_dempster(a: MassFunction, b: MassFunction) -> MassFunction:
    """Combine two BBAs with Dempster's rule.

    The product mass of every pair of focal sets flows to their intersection;
    mass landing on the empty set (the conflict ``K``) is renormalized away.

    Raises:
        TotalConflictError: if the sources are fully committed to disjoint
            hypotheses (``K`` indistinguishable from 1), in which case no
            combined belief state exists and the caller must not proceed.
    """
    conflict = a.influencer * b.passive + a.passive * b.influencer
    if conflict >= 1.0 - _CONFLICT_EPSILON:
        raise TotalConflictError(
            f"total conflict between sources (K={conflict!r})"
        )
    norm = 1.0 - conflict
    return MassFunction(
        (a.influencer * b.influencer
         + a.influencer * b.omega
         + a.omega * b.influencer) / norm,
        (a.passive * b.passive
         + a.passive * b.omega
         + a.omega * b.passive) / norm,
        (a.omega * b.omega) / norm,
    )


def discount(m: MassFunction, alpha: float) -> MassFunction:
    """Discount a BBA by the reliability ``alpha`` of its source.

    Every proper subset keeps ``alpha`` times its mass, the remainder moving
    to the whole frame: full reliability (1) keeps the BBA, zero reliability
    yields the vacuous BBA.  The endpoints are returned exactly.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"reliability must lie in [0, 1], got {alpha!r}")
    if alpha == 1.0:
        return m
    if alpha == 0.0:
        return MassFunction.vacuous()
    return MassFunction(
        alpha * m.influencer,
        alpha * m.passive,
        1.0 - alpha * (1.0 - m.omega),
    )


# Jaccard similarity of subset pairs over the 4-slot index space, with the
# empty-set rows fixed by convention (D(empty, empty) = 1, D(empty, X) = 0)
# so that the quadratic form is total even though empty mass is always zero.
_JACCARD = (
    (1.0, 0.0, 0.0, 0.0),
    (0.0, 1.0, 0.0, 0.5),
    (0.0, 0.0, 1.0, 0.5),
    (0.0, 0.5, 0.5, 1.0),
)


def jousselme_distance(a: MassFunction, b: MassFunction) -> float:
    """Jousselme distance between two BBAs: sqrt(0.5 * d^T J d).

    ``J`` weights each subset pair by its Jaccard similarity, so disagreement
    between overlapping subsets counts less than disagreement between
    disjoint ones.  The result is a metric bounded in [0, 1].
    """
    di = a.influencer - b.influencer
    dp = a.passive - b.passive
    do = a.omega - b.omega
    # Quadratic form with the similarity matrix above; the empty slot of the
    # difference vector is identically zero, and J(influencer, passive) = 0.
    quad = di * di + dp * dp + do * do + di * do + dp * do
    if quad < 0.0:  # numeric noise around zero
        quad = 0.0
    return (0.5 * quad) ** 0.5
