"""Simple undirected graphs on vertices 0..n-1 and the generators used here.

A graph stores one adjacency bitmask per vertex; at the orders of interest
(n <= 64 or so) that keeps edge tests and neighbourhood unions cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (InvalidInputError, InvalidPartitionError, InvalidSpecError,
                     RejectedMoveError)
from .exactla import IntMatrix


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.order:
            raise ValueError("one adjacency mask per vertex required")
        for v, mask in enumerate(self.rows):
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask >> self.order:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.order - 1}")
        for v, mask in enumerate(self.rows):
            for w in _bits(mask):
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(order, tuple(full & ~(1 << v) for v in range(order)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, mask in enumerate(self.rows):
            for v in _bits(mask >> (u + 1) << (u + 1)):
                yield u, v

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(self.order, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        if self.n < 3:
            raise InvalidSpecError(f"circulant order must be >= 3, got {self.n}")
        if not self.jumps:
            raise InvalidSpecError("jump set must be nonempty")
        if any(b <= a for a, b in zip(self.jumps, self.jumps[1:])):
            raise InvalidSpecError(f"jumps must be strictly increasing: {self.jumps}")
        if self.jumps[0] < 1 or 2 * self.jumps[-1] > self.n:
            raise InvalidSpecError(f"jumps must lie in 1..{self.n // 2}: {self.jumps}")

    @property
    def degree(self) -> int:
        t = len(self.jumps)
        return 2 * t - 1 if 2 * self.jumps[-1] == self.n else 2 * t

    def __str__(self):
        return f"C({self.n},{{{','.join(map(str, self.jumps))}}})"


def circulant(spec: CirculantSpec) -> Graph:
    """Vertices i, j adjacent iff (i - j) mod n is a jump or its negative."""
    n = spec.n
    base = 0
    for a in spec.jumps:
        base |= 1 << a | 1 << (n - a)
    full = (1 << n) - 1
    rows = tuple(((base << i) | (base >> (n - i))) & full for i in range(n))
    return Graph(n, rows)


def adjacency_matrix(g: Graph) -> IntMatrix:
    n = g.order
    return IntMatrix(n, n, tuple(m >> j & 1 for m in g.rows for j in range(n)))


@dataclass(frozen=True)
class RewireMove:
    """Swap edges u1v1, u2v2 for u1v2, u2v1."""

    e1: tuple[int, int]
    e2: tuple[int, int]

    def inverse(self) -> RewireMove:
        (u1, v1), (u2, v2) = self.e1, self.e2
        return RewireMove((u1, v2), (u2, v1))


def rewire(g: Graph, move: RewireMove) -> Graph:
    (u1, v1), (u2, v2) = move.e1, move.e2
    if len({u1, v1, u2, v2}) != 4:
        raise RejectedMoveError(f"vertices of {move.e1} and {move.e2} are not distinct",
                                pair=(move.e1, move.e2))
    for u, v in ((u1, v1), (u2, v2)):
        if not g.has_edge(u, v):
            raise RejectedMoveError(f"({u}, {v}) is not an edge", pair=(u, v))
    for u, v in ((u1, v2), (u2, v1)):
        if g.has_edge(u, v):
            raise RejectedMoveError(f"({u}, {v}) is already an edge", pair=(u, v))
    rows = list(g.rows)
    for u, v in ((u1, v1), (u2, v2)):
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    for u, v in ((u1, v2), (u2, v1)):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.order, tuple(rows))


def cycles_complement(parts: Sequence[int], n: int | None = None) -> Graph:
    """Complement of the disjoint union of cycles with the given lengths."""
    parts = list(parts)
    if not parts or any(p < 3 for p in parts):
        raise InvalidPartitionError(f"every cycle needs length >= 3: {parts}")
    total = sum(parts)
    if n is not None and total != n:
        raise InvalidPartitionError(f"parts {parts} sum to {total}, not {n}")
    edges = []
    start = 0
    for p in parts:
        edges.extend((start + i, start + (i + 1) % p) for i in range(p))
        start += p
    return Graph.from_edges(total, edges).complement()


def perfect_matching_complement(n: int) -> Graph:
    """K_n minus the matching {2i, 2i+1}; n must be even."""
    if n % 2:
        raise InvalidInputError(f"no perfect matching on {n} vertices")
    return Graph.from_edges(n, ((2 * i, 2 * i + 1) for i in range(n // 2))).complement()


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


@dataclass(frozen=True)
class DegreeProfile:
    is_regular: bool
    degree: int | None
    is_connected: bool


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def degree_profile(g: Graph) -> DegreeProfile:
    degs = set(g.degrees())
    if len(degs) > 1:
        return DegreeProfile(False, None, is_connected(g))
    return DegreeProfile(True, degs.pop() if degs else 0, is_connected(g))

