"""Exact circulant nullity through cyclotomic divisibility.

The eigenvalues of C(n, S) are P(w^j) with P(x) = sum of x^s over the
symmetric connection set and w a primitive n-th root of unity. P(w^j) = 0
exactly when Phi_m divides P, m = n / gcd(j, n), and then all phi(m)
primitive m-th roots vanish together. So the nullity is the sum of phi(m)
over the divisors m of n with Phi_m | P, all in integer arithmetic.
"""
from __future__ import annotations

from functools import lru_cache

from .graphcore import CirculantSpec


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(m for m in range(1, n + 1) if n % m == 0)


def _vanishes(support: tuple[int, ...], m: int) -> bool:
    """Whether Phi_m divides sum(x^s for s in support)."""
    q = [0] * m
    for s in support:
        q[s % m] += 1
    phi = cyclotomic_coeffs(m)
    deg = len(phi) - 1
    # phi is monic, so the long division stays integral
    for top in range(m - 1, deg - 1, -1):
        c = q[top]
        if c:
            shift = top - deg
            for i, a in enumerate(phi):
                q[shift + i] -= c * a
    return not any(q[:deg])


def symbol_support(spec: CirculantSpec) -> tuple[int, ...]:
    return tuple(sorted({a % spec.n for a in spec.jumps} | {-a % spec.n for a in spec.jumps}))


def vanishing_orders(spec: CirculantSpec) -> tuple[int, ...]:
    support = symbol_support(spec)
    return tuple(m for m in divisors(spec.n) if _vanishes(support, m))


def circulant_nullity(spec: CirculantSpec) -> int:
    from sympy import totient

    return sum(int(totient(m)) for m in vanishing_orders(spec))


def circulant_is_nut(spec: CirculantSpec) -> bool:
    """Nut iff the only vanishing eigenvalue is the one at w^(n/2).

    That eigenspace is spanned by (1, -1, 1, -1, ...), which has full support.
    """
    n = spec.n
    if n % 2:
        return False
    support = symbol_support(spec)
    if not _vanishes(support, 2):
        return False
    return not any(_vanishes(support, m) for m in divisors(n) if m > 2)
