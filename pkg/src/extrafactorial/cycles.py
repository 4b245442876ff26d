"""Lazy enumeration and exact counting of Hamiltonian cycles of complete graphs.

Cycles are produced by repeated vertex insertion: a cycle of order L yields L
children of order L+1 by breaking each edge in turn and relinking its two
endpoints through the new vertex. Seeding with the triangle [0, 1, 2] and
inserting the remaining vertices in ascending order visits every dihedral
equivalence class exactly once, because deleting the last-inserted vertex
recovers a unique parent. Constrained variants protect one or two edges from
breaking, which restricts the output to the cycles traversing them.

Streams are generated depth-first, so memory stays O(n^2) regardless of the
factorial number of cycles produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    DegenerateAdjacentPair,
    EnumerationCapExceeded,
    NotAPermutation,
    OrderMismatch,
    OrderTooSmall,
    SameEdge,
    TooShort,
    VertexAlreadyPresent,
    VertexOutOfRange,
)
from .graph import CompleteWeightedGraph, EdgeKey, edge_key

#: Orders above this raise EnumerationCapExceeded unless overridden
#: (11!/2 is about 2.0e7 cycles; counting functions are never capped).
DEFAULT_ENUMERATION_CAP = 12


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    # rotate the smallest vertex to the front, then orient so the second
    # vertex is smaller than the last
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + rot[:0:-1]
    return rot


@dataclass(frozen=True)
class HamiltonianCycle:
    """One closed walk over distinct vertices, held in canonical form.

    Canonical form: the smallest vertex first and the second vertex smaller
    than the last, which fixes rotation and reflection so each of the
    (n-1)!/2 cycles of a complete graph has exactly one representation.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = self.vertices
        if len(v) < 3:
            raise TooShort(f"cycles need at least 3 vertices, got {len(v)}")
        if len(set(v)) != len(v):
            raise NotAPermutation(f"repeated vertex in {v}")
        if v[0] != min(v) or v[1] > v[-1]:
            raise ValueError(f"{v} is not in canonical rotation/reflection")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def generation(self) -> int:
        """Insertion depth below the seed triangle: order minus 3."""
        return len(self.vertices) - 3

    def edges(self) -> Iterator[EdgeKey]:
        v = self.vertices
        prev = v[-1]
        for x in v:
            yield EdgeKey(prev, x) if prev < x else EdgeKey(x, prev)
            prev = x

    def contains_edge(self, u: int, v: int) -> bool:
        e = edge_key(u, v)
        return e in self.edges()

    def __str__(self) -> str:
        # closed-walk rendering, e.g. "0-2-1-3-0"
        return "-".join(str(v) for v in self.vertices + self.vertices[:1])


def canonicalize(raw: Iterable[int]) -> HamiltonianCycle:
    """Canonical representative of the cycle visiting `raw` in order.

    `raw` must be a permutation of 0..len-1 with at least three entries.
    Idempotent: canonicalizing a canonical sequence returns an equal cycle.
    """
    seq = tuple(raw)
    if len(seq) < 3:
        raise TooShort(f"cycles need at least 3 vertices, got {len(seq)}")
    if sorted(seq) != list(range(len(seq))):
        raise NotAPermutation(f"{seq} is not a permutation of 0..{len(seq) - 1}")
    return HamiltonianCycle(_canonical(seq))


def siva_insert(cycle: HamiltonianCycle, x: int) -> list[HamiltonianCycle]:
    """All children of `cycle` obtained by inserting vertex `x`.

    Child i breaks the i-th edge of the parent and relinks both endpoints
    through x, giving exactly `cycle.order` pairwise-distinct canonical
    children, each one vertex longer and one generation deeper. The parent
    itself is never among the results.
    """
    if x < 0:
        raise VertexOutOfRange(f"vertex ids must be non-negative, got {x}")
    verts = cycle.vertices
    if x in verts:
        raise VertexAlreadyPresent(f"vertex {x} already on cycle {verts}")
    return [
        HamiltonianCycle(_canonical(verts[: i + 1] + (x,) + verts[i + 1 :]))
        for i in range(len(verts))
    ]


def _expand(
    verts: tuple[int, ...],
    pending: tuple[int, ...],
    protected: frozenset[EdgeKey],
) -> Iterator[HamiltonianCycle]:
    # depth-first insertion of `pending` (in order) into the cycle `verts`,
    # never breaking a protected edge
    if not pending:
        yield HamiltonianCycle(verts)
        return
    x = pending[0]
    rest = pending[1:]
    last = len(verts) - 1
    for i, a in enumerate(verts):
        b = verts[i + 1] if i < last else verts[0]
        if protected and ((a, b) if a < b else (b, a)) in protected:
            continue
        child = _canonical(verts[: i + 1] + (x,) + verts[i + 1 :])
        yield from _expand(child, rest, protected)


def _check_order(n: int, max_order: int | None) -> None:
    if n < 3:
        raise OrderTooSmall(f"enumeration needs order >= 3, got {n}")
    cap = DEFAULT_ENUMERATION_CAP if max_order is None else max_order
    if n > cap:
        raise EnumerationCapExceeded(
            f"order {n} exceeds the enumeration cap {cap}; "
            f"raise max_order to override"
        )


def enumerate_all(n: int, *, max_order: int | None = None) -> Iterator[HamiltonianCycle]:
    """All (n-1)!/2 Hamiltonian cycles of the order-n complete graph.

    Deterministic: seeded with the triangle [0, 1, 2], vertices 3..n-1
    inserted in ascending order, children visited in parent-edge order.
    """
    _check_order(n, max_order)
    return _expand((0, 1, 2), tuple(range(3, n)), frozenset())


def enumerate_through_edge(
    n: int, e: tuple[int, int], *, max_order: int | None = None
) -> Iterator[HamiltonianCycle]:
    """The (n-2)! cycles of order n that traverse edge `e`.

    Seeds with the triangle on e's endpoints plus the smallest other vertex
    and inserts the rest in ascending order, never breaking `e`.
    """
    key = edge_key(*e)
    if key.v >= n:
        raise VertexOutOfRange(f"vertex {key.v} not in [0, {n})")
    _check_order(n, max_order)
    rest = [v for v in range(n) if v not in key]
    seed = _canonical((key.u, key.v, rest[0]))
    return _expand(seed, tuple(rest[1:]), frozenset((key,)))


class EdgePairKind(Enum):
    """Whether two distinct edges share a vertex."""

    ADJACENT = "adjacent"
    NON_ADJACENT = "non-adjacent"


def edge_pair_kind(e1: tuple[int, int], e2: tuple[int, int]) -> EdgePairKind:
    """Classify a pair of distinct edges; raises SameEdge if they coincide."""
    a, b = edge_key(*e1), edge_key(*e2)
    if a == b:
        raise SameEdge(f"edge pair must differ, got {tuple(a)} twice")
    return EdgePairKind.ADJACENT if set(a) & set(b) else EdgePairKind.NON_ADJACENT


def enumerate_through_pair(
    n: int,
    e1: tuple[int, int],
    e2: tuple[int, int],
    *,
    max_order: int | None = None,
) -> tuple[EdgePairKind, Iterator[HamiltonianCycle]]:
    """The cycles of order n traversing both edges, with the pair's kind.

    Yields (n-3)! cycles for an adjacent pair and 2(n-3)! for a non-adjacent
    one. Adjacent pairs seed with the triangle on their three vertices;
    non-adjacent pairs seed with the two 4-cycles that traverse both edges.
    Neither protected edge ever breaks.
    """
    a, b = edge_key(*e1), edge_key(*e2)
    kind = edge_pair_kind(a, b)
    if max(a.v, b.v) >= n:
        raise VertexOutOfRange(f"vertex {max(a.v, b.v)} not in [0, {n})")
    _check_order(n, max_order)
    protected = frozenset((a, b))
    if kind is EdgePairKind.ADJACENT:
        (shared,) = set(a) & set(b)
        outer = [v for v in (*a, *b) if v != shared]
        if outer[0] == outer[1]:
            raise DegenerateAdjacentPair(
                f"outer endpoints of {tuple(a)} and {tuple(b)} coincide"
            )
        seeds = [_canonical((outer[0], shared, outer[1]))]
        used = {shared, *outer}
    else:
        seeds = sorted(
            {
                _canonical((a.u, a.v, b.u, b.v)),
                _canonical((a.u, a.v, b.v, b.u)),
            }
        )
        used = {*a, *b}
    pending = tuple(v for v in range(n) if v not in used)

    def stream() -> Iterator[HamiltonianCycle]:
        for seed in seeds:
            yield from _expand(seed, pending, protected)

    return kind, stream()


def count_all(n: int) -> int:
    """(n-1)!/2, the number of Hamiltonian cycles of the order-n complete graph."""
    if n < 3:
        raise OrderTooSmall(f"counting needs order >= 3, got {n}")
    return math.factorial(n - 1) // 2


def count_through_edge(n: int) -> int:
    """(n-2)!, the number of order-n cycles traversing any fixed edge."""
    if n < 3:
        raise OrderTooSmall(f"counting needs order >= 3, got {n}")
    return math.factorial(n - 2)


def count_through_pair(n: int, kind: EdgePairKind) -> int:
    """Cycles through an edge pair: (n-3)! if adjacent, 2(n-3)! otherwise."""
    minimum = 3 if kind is EdgePairKind.ADJACENT else 4
    if n < minimum:
        raise OrderTooSmall(f"{kind.value} pairs need order >= {minimum}, got {n}")
    base = math.factorial(n - 3)
    return base if kind is EdgePairKind.ADJACENT else 2 * base


def cycle_length(g: CompleteWeightedGraph, cycle: HamiltonianCycle) -> float:
    """Sum of the n edge weights along the closed walk."""
    verts = cycle.vertices
    n = g.n
    if len(verts) != n:
        raise OrderMismatch(f"cycle order {len(verts)} != graph order {n}")
    w = g.weights
    total = 0.0
    prev = verts[-1]
    for v in verts:
        u, x = (prev, v) if prev < v else (v, prev)
        total += w[u * (2 * n - u - 1) // 2 + (x - u - 1)]
        prev = v
    return total


def brute_force_sum_through(
    g: CompleteWeightedGraph, e: tuple[int, int], *, max_order: int | None = None
) -> float:
    """Summed lengths of all (n-2)! cycles through `e`, by enumeration.

    This is the expensive quantity the closed form replaces; it serves as
    the verification oracle for the statistics module.
    """
    return math.fsum(
        cycle_length(g, c)
        for c in enumerate_through_edge(g.n, e, max_order=max_order)
    )
