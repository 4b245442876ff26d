"""Ranked extra-factorial-sum profiles: the per-edge curve of a graph.

Sorting a graph's edges by extra-factorial sum gives a curve that summarizes
how cycle length mass distributes over edges. The curve's shape is invariant
under positive rescaling of the weights, which makes it a qualitative
fingerprint for comparing graphs: two graphs that differ only by a positive
factor produce the same edge ranking and strictly proportional values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .efs import efs_all
from .errors import GraphSyntaxError, OrderMismatch
from .graph import CompleteWeightedGraph, EdgeKey, format_weight

#: Relative tolerance for accepting a fitted scale factor between profiles.
SCALE_TOLERANCE = 1e-9


class ProfileEntry(NamedTuple):
    rank: int
    edge: EdgeKey
    efs: float


@dataclass(frozen=True)
class RankedProfile:
    """All edges of one graph ranked by ascending extra-factorial sum.

    Ranks run 1..n(n-1)/2; ties are ordered by (u, v) lexicographically.
    """

    n: int
    entries: tuple[ProfileEntry, ...]

    def edge_sequence(self) -> tuple[EdgeKey, ...]:
        return tuple(entry.edge for entry in self.entries)


@dataclass(frozen=True)
class ProfileComparison:
    """Outcome of comparing two same-order profiles.

    `scale_factor` is the constant c with efs2 = c * efs1 across all edges,
    when one exists within SCALE_TOLERANCE; `max_relative_deviation` measures
    how far the best candidate c is from exact proportionality (0 for a
    perfect match, inf when no candidate can be fitted).
    """

    same_ranking: bool
    scale_factor: float | None
    max_relative_deviation: float


def ranked_profile(g: CompleteWeightedGraph) -> RankedProfile:
    """Edges of `g` sorted ascending by extra-factorial sum."""
    breakdowns = efs_all(g)
    ordered = sorted((bd.efs, e) for e, bd in breakdowns.items())
    entries = tuple(
        ProfileEntry(rank, e, value)
        for rank, (value, e) in enumerate(ordered, start=1)
    )
    return RankedProfile(g.n, entries)


def compare_profiles(p1: RankedProfile, p2: RankedProfile) -> ProfileComparison:
    """Rank-order equality and exact-scale detection between two profiles."""
    if p1.n != p2.n:
        raise OrderMismatch(f"profile orders differ: {p1.n} != {p2.n}")
    same_ranking = p1.edge_sequence() == p2.edge_sequence()
    by_edge_1 = {entry.edge: entry.efs for entry in p1.entries}
    by_edge_2 = {entry.edge: entry.efs for entry in p2.entries}
    pivot = max(by_edge_1, key=lambda e: abs(by_edge_1[e]))
    if by_edge_1[pivot] == 0.0:
        # every efs of p1 vanishes: either both profiles are flat zero or no
        # finite scale can relate them
        if all(v == 0.0 for v in by_edge_2.values()):
            return ProfileComparison(same_ranking, 1.0, 0.0)
        return ProfileComparison(same_ranking, None, math.inf)
    c = by_edge_2[pivot] / by_edge_1[pivot]
    worst = 0.0
    for e, v1 in by_edge_1.items():
        predicted = c * v1
        actual = by_edge_2[e]
        denom = max(abs(predicted), abs(actual))
        if denom > 0.0:
            worst = max(worst, abs(actual - predicted) / denom)
    scale = c if worst <= SCALE_TOLERANCE else None
    return ProfileComparison(same_ranking, scale, worst)


def export_profile_csv(p: RankedProfile) -> str:
    """CSV text "rank,u,v,efs" in rank order, full-precision values."""
    lines = ["rank,u,v,efs"]
    for rank, (u, v), value in p.entries:
        lines.append(f"{rank},{u},{v},{format_weight(value)}")
    return "\n".join(lines) + "\n"


def parse_profile_csv(text: str) -> RankedProfile:
    """Inverse of :func:`export_profile_csv`."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0].strip() != "rank,u,v,efs":
        raise GraphSyntaxError("expected header 'rank,u,v,efs'", 1)
    entries: list[ProfileEntry] = []
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.strip().split(",")
        if len(parts) != 4:
            raise GraphSyntaxError(f"expected 4 fields, got {len(parts)}", line_no)
        try:
            rank, u, v = int(parts[0]), int(parts[1]), int(parts[2])
            value = float(parts[3])
        except ValueError:
            raise GraphSyntaxError(f"bad row {line!r}", line_no) from None
        entries.append(ProfileEntry(rank, EdgeKey(u, v), value))
    count = len(entries)
    # count = n(n-1)/2 determines the order
    n = (1 + math.isqrt(1 + 8 * count)) // 2
    if n * (n - 1) // 2 != count or n < 3:
        raise GraphSyntaxError(f"{count} rows is not a complete edge set", 1)
    edges = {entry.edge for entry in entries}
    if edges != {EdgeKey(u, v) for u in range(n) for v in range(u + 1, n)}:
        raise GraphSyntaxError(f"rows do not cover all pairs of 0..{n - 1}", 1)
    if [entry.rank for entry in entries] != list(range(1, count + 1)):
        raise GraphSyntaxError("ranks must be consecutive from 1", 1)
    return RankedProfile(n, tuple(entries))
