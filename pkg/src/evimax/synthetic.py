"""Seed-reproducible synthetic social graphs with realistic activity volume.

The generator grows a directed preferential-attachment graph in which each
newcomer follows an already-popular account (edge: followee -> follower), so
follower counts develop the usual heavy tail.  Mention and retweet totals are
sized relative to the number of follow edges using the ratios observed on a
real Twitter crawl of comparable scale (follows : mentions : retweets close
to 71027 : 20300 : 9789), scaled by ``activity_intensity``.
"""

from __future__ import annotations

import random

from .graph import SocialGraph, UserActivity

MENTIONS_PER_FOLLOW = 20300 / 71027
RETWEETS_PER_FOLLOW = 9789 / 71027
TWEETS_PER_USER = 251329 / 36274


class InvalidParametersError(ValueError):
    """Synthetic-graph parameters outside the valid domain."""


def generate_synthetic(
    seed: int,
    n_users: int,
    n_edges: int,
    activity_intensity: float = 1.0,
) -> tuple[SocialGraph, dict[str, UserActivity]]:
    """Build a deterministic random graph plus matching per-user activity.

    The same seed always produces the same graph, byte for byte.  Follower
    counts in the activity records equal each user's out-degree (its number
    of followers under the followee -> follower edge convention).
    """
    if n_users < 1:
        raise InvalidParametersError(f"n_users must be >= 1, got {n_users}")
    if n_edges < 0:
        raise InvalidParametersError(f"n_edges must be >= 0, got {n_edges}")
    if n_edges > n_users * (n_users - 1):
        raise InvalidParametersError(
            f"{n_edges} edges do not fit in a simple digraph on {n_users} users"
        )
    if activity_intensity < 0:
        raise InvalidParametersError(
            f"activity_intensity must be >= 0, got {activity_intensity}"
        )

    rng = random.Random(seed)
    width = max(4, len(str(n_users - 1)))
    ids = [f"u{i:0{width}d}" for i in range(n_users)]
    # Decouple label order from join order: ids carry no age information,
    # so lexicographically early users are not systematically hubs.
    join_order = ids[:]
    rng.shuffle(join_order)

    g = SocialGraph()
    for user in ids:
        g.add_user(user)

    # Growth phase: each newcomer follows one preferentially chosen earlier
    # account.  The repeated-targets list implements degree-biased sampling.
    targets = [join_order[0]]
    made = 0
    for i in range(1, n_users):
        if made >= n_edges:
            break
        followee = targets[rng.randrange(len(targets))]
        g.add_edge(followee, join_order[i])
        targets.append(followee)
        targets.append(join_order[i])
        made += 1

    # Densification: extra follows from random users to popular accounts.
    attempts = 0
    max_attempts = 50 * max(n_edges - made, 1) + 1000
    while made < n_edges and attempts < max_attempts:
        attempts += 1
        follower = ids[rng.randrange(n_users)]
        followee = targets[rng.randrange(len(targets))]
        if followee == follower or g.has_edge(followee, follower):
            continue
        g.add_edge(followee, follower)
        targets.append(followee)
        made += 1
    if made < n_edges:
        # Dense corner: fill deterministically from the ordered pair grid.
        for src in ids:
            for dst in ids:
                if made >= n_edges:
                    break
                if src != dst and not g.has_edge(src, dst):
                    g.add_edge(src, dst)
                    made += 1
            if made >= n_edges:
                break

    edge_list = list(g.edges())
    if edge_list:
        mention_total = round(n_edges * MENTIONS_PER_FOLLOW * activity_intensity)
        for _ in range(mention_total):
            g.add_mentions(*edge_list[rng.randrange(len(edge_list))], 1)
        retweet_total = round(n_edges * RETWEETS_PER_FOLLOW * activity_intensity)
        for _ in range(retweet_total):
            g.add_retweets(*edge_list[rng.randrange(len(edge_list))], 1)

    mean_tweets = TWEETS_PER_USER * activity_intensity
    activities: dict[str, UserActivity] = {}
    for user in ids:
        tweets = int(rng.expovariate(1.0 / mean_tweets)) if mean_tweets > 0 else 0
        activities[user] = UserActivity(
            user, tweets=tweets, followers=g.out_degree(user)
        )
    for (u, _), count in g.mentions.items():
        activities[u].mentions_received += count
    for (u, _), count in g.retweets.items():
        activities[u].retweets_received += count
    return g, activities
