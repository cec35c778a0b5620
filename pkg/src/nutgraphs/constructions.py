"""Constructive results: the Fowler extension, the consecutive-jump circulant
criterion with its two null-vector witnesses, and the published examples."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import PreconditionError
from .exactla import IntVector
from .graphcore import CirculantSpec, Graph, RewireMove, circulant, rewire


@dataclass(frozen=True)
class FowlerResult:
    graph: Graph
    vertex: int
    new_vertices: tuple[int, ...]
    predicted_kernel: IntVector | None


def fowler_extend(g: Graph, u: int, c: Sequence[int] | None = None) -> FowlerResult:
    """Grow ``g`` by 2d vertices around ``u`` (of degree d), keeping every degree.

    With N(u) = v_1 < ... < v_d: drop u-v_i, add x_i (index n+i-1) and y_i
    (index n+d+i-1), and join u-x_i, x_i-y_j for i != j, and y_i-v_i.
    If a kernel vector ``c`` of g is supplied, the matching kernel vector of
    the result is returned too: x_i gets c[v_i], y_i gets c[u], and u gets
    -(d-1)*c[u].
    """
    if not 0 <= u < g.order:
        raise PreconditionError(f"vertex {u} not in graph of order {g.order}")
    nbrs = g.neighbors(u)
    d = len(nbrs)
    if d < 2:
        raise PreconditionError(f"vertex {u} has degree {d}; the extension needs degree >= 2")
    n = g.order
    xs = [n + i for i in range(d)]
    ys = [n + d + i for i in range(d)]
    edges = [(a, b) for a, b in g.edges() if u not in (a, b)]
    edges += [(u, x) for x in xs]
    edges += [(xs[i], ys[j]) for i in range(d) for j in range(d) if i != j]
    edges += [(ys[i], nbrs[i]) for i in range(d)]
    h = Graph.from_edges(n + 2 * d, edges)

    predicted = None
    if c is not None:
        if len(c) != n:
            raise PreconditionError(f"kernel vector length {len(c)} != order {n}")
        vec = list(c)
        vec[u] = -(d - 1) * c[u]
        vec += [c[v] for v in nbrs]
        vec += [c[u]] * d
        predicted = tuple(vec)
    return FowlerResult(h, u, tuple(xs + ys), predicted)


def consecutive_circulant(n: int, t: int) -> Graph:
    return circulant(CirculantSpec(n, tuple(range(1, t + 1))))


@dataclass(frozen=True)
class Thm6Case:
    """Verdict of the gcd criterion for C(n, {1..d/2}) with d = 0 mod 4, n even."""

    n: int
    d: int
    shift_gcd: int
    block_gcd: int

    @property
    def t(self) -> int:
        return self.d // 2

    @property
    def is_nut(self) -> bool:
        return self.shift_gcd == 1 and self.block_gcd == 1

    @property
    def shift_fails(self) -> bool:
        return self.shift_gcd > 1

    @property
    def block_fails(self) -> bool:
        return self.block_gcd > 1

    @property
    def block_k(self) -> int | None:
        return self.block_gcd if self.block_fails else None


def thm6_classify(n: int, d: int) -> Thm6Case:
    """C(n, {1..d/2}) is a nut iff gcd(d/2 + 1, n) = 1 and gcd(d/4, n/2) = 1."""
    if d <= 0 or d % 4:
        raise PreconditionError(f"degree must be a positive multiple of 4, got {d}")
    if n % 2:
        raise PreconditionError(f"order must be even, got {n}")
    if n <= d:
        raise PreconditionError(f"order must exceed the degree: n={n}, d={d}")
    t = d // 2
    return Thm6Case(n, d, gcd(t + 1, n), gcd(t // 2, n // 2))


def null_witness_shift(n: int, t: int) -> IntVector:
    """Kernel vector of C(n, {1..t}) with zeros, when gcd(t+1, n) > 1.

    Places alternating +1/-1 at 0, t+1, 2(t+1), ... (mod n) until the walk
    closes after k = n / gcd(t+1, n) steps.
    """
    if t % 2 or n % 2:
        raise PreconditionError(f"need t and n even, got n={n}, t={t}")
    if gcd(t + 1, n) == 1:
        raise PreconditionError(f"gcd(t+1, n) = 1 for n={n}, t={t}; no shift witness")
    if not 1 <= t < n // 2:
        raise PreconditionError(f"jumps 1..{t} are not valid for order {n}")
    k = n // gcd(t + 1, n)
    b = [0] * n
    for j in range(k):
        b[j * (t + 1) % n] = (-1) ** j
    return tuple(b)


def null_witness_blocks(n: int, t: int, k: int) -> IntVector:
    """Kernel vector of C(n, {1..t}) vanishing on odd indices, when k | t/2 and k | n/2.

    Even indices carry the block (1, ..., 1, -(k-1)) of length k, repeated.
    """
    if k <= 1 or t % 2 or n % 2 or (t // 2) % k or (n // 2) % k:
        raise PreconditionError(f"need k > 1 dividing t/2 and n/2: n={n}, t={t}, k={k}")
    if not 1 <= t < n // 2:
        raise PreconditionError(f"jumps 1..{t} are not valid for order {n}")
    block = [1] * (k - 1) + [-(k - 1)]
    b = [0] * n
    for i in range(n // 2):
        b[2 * i] = block[i % k]
    return tuple(b)


CONSECUTIVE_ORDERS = (16, 20, 22, 26, 32, 34, 38)
ALTERNATIVE_SPECS = (
    (18, (1, 2, 3, 4, 5, 8)),
    (24, (1, 2, 3, 4, 5, 8)),
    (28, (1, 2, 3, 4, 5, 10)),
    (30, (1, 2, 3, 4, 5, 8)),
    (36, (1, 2, 3, 4, 5, 8)),
)


def paper_circulant_catalog() -> list[CirculantSpec]:
    """The twelve published 12-regular circulant nuts on 16..38 vertices."""
    specs = [CirculantSpec(n, (1, 2, 3, 4, 5, 6)) for n in CONSECUTIVE_ORDERS]
    specs += [CirculantSpec(n, jumps) for n, jumps in ALTERNATIVE_SPECS]
    return specs


REWIRED_21_MOVE = RewireMove((0, 16), (2, 7))


def paper_rewired_21() -> Graph:
    """C(21, {1..6}) with edges (0,16), (2,7) swapped for (0,7), (2,16)."""
    return rewire(circulant(CirculantSpec(21, (1, 2, 3, 4, 5, 6))), REWIRED_21_MOVE)
