"""Deciding whether a graph is a nut graph, plus a few structural checks on its kernel."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DimensionError, PreconditionError
from .exactla import IntVector, kernel_basis, mat_vec_mul, normalize_primitive
from .graphcore import Graph, adjacency_matrix, degree_profile


class Reason(enum.Enum):
    NONSINGULAR = "nonsingular"
    NULLITY_AT_LEAST_TWO = "nullity"
    KERNEL_HAS_ZERO_ENTRY = "zeros"


@dataclass(frozen=True)
class NutVerdict:
    """Either a nut with its canonical kernel generator, or the reason it is not."""

    nullity: int
    kernel: IntVector | None = None
    reason: Reason | None = None
    zero_positions: tuple[int, ...] = ()

    @property
    def is_nut(self) -> bool:
        return self.reason is None

    def line(self) -> str:
        if self.is_nut:
            return "NUT kernel=" + ",".join(map(str, self.kernel))
        if self.reason is Reason.NONSINGULAR:
            return "NOT_NUT reason=nonsingular"
        if self.reason is Reason.NULLITY_AT_LEAST_TWO:
            return f"NOT_NUT reason=nullity nullity={self.nullity}"
        return "NOT_NUT reason=zeros zeros=" + ",".join(map(str, self.zero_positions))


def is_nut(g: Graph) -> NutVerdict:
    if g.order == 0:
        return NutVerdict(0, reason=Reason.NONSINGULAR)
    kd = kernel_basis(adjacency_matrix(g))
    if kd.nullity == 0:
        return NutVerdict(0, reason=Reason.NONSINGULAR)
    if kd.nullity >= 2:
        return NutVerdict(kd.nullity, reason=Reason.NULLITY_AT_LEAST_TWO)
    (c,) = kd.basis
    zeros = tuple(i for i, x in enumerate(c) if x == 0)
    if zeros:
        return NutVerdict(1, kernel=c, reason=Reason.KERNEL_HAS_ZERO_ENTRY, zero_positions=zeros)
    return NutVerdict(1, kernel=c)


def verify_stated_kernel(g: Graph, c: Sequence[int]) -> bool:
    """True iff g is a nut and c is (up to scale and sign) its kernel generator."""
    if len(c) != g.order:
        raise DimensionError(f"vector length {len(c)} != order {g.order}")
    verdict = is_nut(g)
    return verdict.is_nut and normalize_primitive(c) == verdict.kernel


@dataclass(frozen=True)
class VTFeasibility:
    n: int
    d: int
    clause1: bool
    clause2: bool

    @property
    def feasible(self) -> bool:
        return self.clause1 or self.clause2

    @property
    def branch(self) -> str:
        if self.clause1 and self.clause2:
            return "both"
        return "1" if self.clause1 else "2" if self.clause2 else "none"


def vt_feasible(n: int, d: int) -> VTFeasibility:
    """Necessary (n, d) conditions for a vertex-transitive nut graph."""
    if n < 1 or d < 1:
        raise PreconditionError(f"need n, d >= 1, got n={n}, d={d}")
    c1 = d % 4 == 0 and n % 2 == 0 and n >= d + 4
    c2 = d % 2 == 0 and n % 4 == 0 and n >= d + 6
    return VTFeasibility(n, d, c1, c2)


def kernel_sum_check(g: Graph, c: Sequence[int]) -> bool:
    """Entries of a kernel vector of a regular graph of positive degree sum to zero."""
    if len(c) != g.order:
        raise DimensionError(f"vector length {len(c)} != order {g.order}")
    prof = degree_profile(g)
    if not prof.is_regular or not prof.degree:
        raise PreconditionError("graph is not regular of positive degree")
    if any(mat_vec_mul(adjacency_matrix(g), c)):
        raise PreconditionError("vector is not in the adjacency kernel")
    return sum(c) == 0


def alternating_vector(n: int) -> IntVector:
    if n % 2:
        raise PreconditionError(f"alternating kernel vector needs even order, got {n}")
    return tuple(1 - 2 * (i % 2) for i in range(n))


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1
