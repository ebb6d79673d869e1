"""Directed influence graph, raw activity counters, and CSV ingestion.

An edge ``(u, v)`` means "u can influence v" (v follows u).  Each edge may
carry two activity counters: how often v mentions u and how often v retweets
from u.  Activity observed on pairs that are not follow edges still creates
the edge, so no interaction evidence is dropped during normalization.

File formats (UTF-8 CSV, exact headers, blank lines ignored):

* edges      -- ``src,dst``                        (src influences dst)
* mentions   -- ``mentioner,mentioned,count``      (edge: mentioned -> mentioner)
* retweets   -- ``retweeter,original_author,count``(edge: author -> retweeter)
* activity   -- ``user,tweets,followers``

Graph construction is single-writer; after loading, instances are treated as
immutable and may be shared read-only across workers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator


class ParseError(ValueError):
    """A malformed input row, reported with its file and line number."""

    def __init__(self, path: str | Path, line: int, message: str) -> None:
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line


class UnknownUserError(ValueError):
    """An operation referenced a user that is not in the graph."""


@dataclass
class UserActivity:
    """Per-user statistics feeding the seed-quality criteria."""

    user: str
    tweets: int = 0
    followers: int = 0
    mentions_received: int = 0
    retweets_received: int = 0


class SocialGraph:
    """Directed graph with per-edge mention/retweet counters.

    Users and edges keep insertion order so that derived outputs are
    byte-stable across runs.  No self-loops, no duplicate edges.
    """

    def __init__(self) -> None:
        self._users: dict[str, None] = {}
        self._edges: dict[tuple[str, str], None] = {}
        self._out: dict[str, dict[str, None]] = {}
        self._in: dict[str, dict[str, None]] = {}
        self.mentions: dict[tuple[str, str], int] = {}
        self.retweets: dict[tuple[str, str], int] = {}

    # -- construction ------------------------------------------------------

    def add_user(self, user: str) -> None:
        if user not in self._users:
            self._users[user] = None
            self._out[user] = {}
            self._in[user] = {}

    def add_edge(self, src: str, dst: str) -> None:
        """Insert the edge src -> dst, creating endpoints; duplicates are no-ops."""
        if src == dst:
            raise ValueError(f"self-loop rejected: {src!r}")
        self.add_user(src)
        self.add_user(dst)
        if (src, dst) not in self._edges:
            self._edges[(src, dst)] = None
            self._out[src][dst] = None
            self._in[dst][src] = None

    def add_mentions(self, src: str, dst: str, count: int) -> None:
        """Record that dst mentioned src ``count`` more times on edge (src, dst)."""
        self.add_edge(src, dst)
        if count:
            self.mentions[(src, dst)] = self.mentions.get((src, dst), 0) + count

    def add_retweets(self, src: str, dst: str, count: int) -> None:
        """Record that dst retweeted src ``count`` more times on edge (src, dst)."""
        self.add_edge(src, dst)
        if count:
            self.retweets[(src, dst)] = self.retweets.get((src, dst), 0) + count

    # -- queries -----------------------------------------------------------

    @property
    def users(self) -> Iterable[str]:
        return self._users.keys()

    def has_user(self, user: str) -> bool:
        return user in self._users

    def edges(self) -> Iterator[tuple[str, str]]:
        return iter(self._edges)

    def has_edge(self, src: str, dst: str) -> bool:
        return (src, dst) in self._edges

    def out_neighbors(self, user: str) -> Iterable[str]:
        self._require(user)
        return self._out[user].keys()

    def in_neighbors(self, user: str) -> Iterable[str]:
        self._require(user)
        return self._in[user].keys()

    def num_users(self) -> int:
        return len(self._users)

    def num_edges(self) -> int:
        return len(self._edges)

    def out_degree(self, user: str) -> int:
        self._require(user)
        return len(self._out[user])

    def _require(self, user: str) -> None:
        if user not in self._users:
            raise UnknownUserError(f"unknown user: {user!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SocialGraph):
            return NotImplemented
        return (
            set(self._users) == set(other._users)
            and set(self._edges) == set(other._edges)
            and self.mentions == other.mentions
            and self.retweets == other.retweets
        )


def common_neighbors(g: SocialGraph, u: str, v: str) -> int:
    """Number of users adjacent (in either direction) to both u and v."""
    g._require(u)
    g._require(v)
    nu = set(g._out[u]) | set(g._in[u])
    nv = set(g._out[v]) | set(g._in[v])
    return len(nu & nv)


INDICATOR_NAMES = ("common_neighbors", "mentions", "retweets")


def raw_indicators(g: SocialGraph) -> dict[tuple[str, str], tuple[float, float, float]]:
    """Raw per-edge indicator values, one triple for every edge.

    For edge (u, v): common neighbors of u and v, mentions of u by v, and
    retweets of u's content by v.
    """
    neighborhoods = {
        user: set(g._out[user]) | set(g._in[user]) for user in g._users
    }
    out: dict[tuple[str, str], tuple[float, float, float]] = {}
    for (u, v) in g.edges():
        nu, nv = neighborhoods[u], neighborhoods[v]
        if len(nv) < len(nu):
            nu, nv = nv, nu
        out[(u, v)] = (
            float(len(nu & nv)),
            float(g.mentions.get((u, v), 0)),
            float(g.retweets.get((u, v), 0)),
        )
    return out


# -- CSV ingestion ---------------------------------------------------------


def _rows(path: str | Path, header: tuple[str, ...]) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_number, fields) for every non-blank data row."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            first = next(reader)
        except StopIteration:
            raise ParseError(path, 1, f"missing header, expected {','.join(header)}")
        if tuple(cell.strip() for cell in first) != header:
            raise ParseError(
                path, 1, f"bad header {first!r}, expected {','.join(header)}"
            )
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(
                    path, reader.line_num, f"expected {len(header)} columns, got {len(row)}"
                )
            yield reader.line_num, [cell.strip() for cell in row]


def _count(path: str | Path, line: int, text: str, column: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(path, line, f"{column} must be an integer, got {text!r}") from None
    if value < 0:
        raise ParseError(path, line, f"{column} must be nonnegative, got {value}")
    return value


def load_graph(
    edges_path: str | Path,
    mentions_path: str | Path | None = None,
    retweets_path: str | Path | None = None,
    activity_path: str | Path | None = None,
) -> tuple[SocialGraph, dict[str, UserActivity]]:
    """Load a graph and per-user activity from the four CSV sources.

    Only the edges file is required.  Mention/retweet rows naming pairs that
    are not follow edges create the edge; users appearing anywhere are added
    to the graph, with zero activity unless the activity file says otherwise.
    """
    g = SocialGraph()
    for line, (src, dst) in _rows(edges_path, ("src", "dst")):
        if src == dst:
            raise ParseError(edges_path, line, f"self-loop edge {src!r}")
        if not src or not dst:
            raise ParseError(edges_path, line, "empty user id")
        g.add_edge(src, dst)

    if mentions_path is not None:
        for line, (mentioner, mentioned, count) in _rows(
            mentions_path, ("mentioner", "mentioned", "count")
        ):
            if mentioner == mentioned:
                raise ParseError(mentions_path, line, f"self-mention by {mentioner!r}")
            if not mentioner or not mentioned:
                raise ParseError(mentions_path, line, "empty user id")
            g.add_mentions(mentioned, mentioner, _count(mentions_path, line, count, "count"))

    if retweets_path is not None:
        for line, (retweeter, author, count) in _rows(
            retweets_path, ("retweeter", "original_author", "count")
        ):
            if retweeter == author:
                raise ParseError(retweets_path, line, f"self-retweet by {retweeter!r}")
            if not retweeter or not author:
                raise ParseError(retweets_path, line, "empty user id")
            g.add_retweets(author, retweeter, _count(retweets_path, line, count, "count"))

    activities = {user: UserActivity(user) for user in g.users}
    if activity_path is not None:
        for line, (user, tweets, followers) in _rows(
            activity_path, ("user", "tweets", "followers")
        ):
            if not user:
                raise ParseError(activity_path, line, "empty user id")
            g.add_user(user)
            record = activities.setdefault(user, UserActivity(user))
            record.tweets = _count(activity_path, line, tweets, "tweets")
            record.followers = _count(activity_path, line, followers, "followers")

    for (u, v), count in g.mentions.items():
        activities[u].mentions_received += count
    for (u, v), count in g.retweets.items():
        activities[u].retweets_received += count
    return g, activities


def write_graph(
    g: SocialGraph,
    activities: dict[str, UserActivity],
    edges_path: str | Path,
    mentions_path: str | Path,
    retweets_path: str | Path,
    activity_path: str | Path,
) -> None:
    """Write a graph back to the four CSV formats accepted by load_graph."""
    with open(edges_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("src", "dst"))
        writer.writerows(g.edges())

    with open(mentions_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("mentioner", "mentioned", "count"))
        for (u, v), count in g.mentions.items():
            if count > 0:
                writer.writerow((v, u, count))

    with open(retweets_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("retweeter", "original_author", "count"))
        for (u, v), count in g.retweets.items():
            if count > 0:
                writer.writerow((v, u, count))

    with open(activity_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("user", "tweets", "followers"))
        for user in g.users:
            record = activities.get(user, UserActivity(user))
            writer.writerow((user, record.tweets, record.followers))
