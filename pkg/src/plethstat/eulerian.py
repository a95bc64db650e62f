"""Eulerian polynomials A_n and type B Eulerian polynomials B_n.

Both are read off their defining series:

    A_n(t) / (1-t)^(n+1) = sum_k k^n t^k
    B_n(t) / (1-t)^(n+1) = sum_k (2k+1)^n t^k

Multiplying a truncation of the right side by (1-t)^(n+1) gives the
polynomial exactly in degrees <= n, and the next few coefficients must
vanish, which is asserted.
"""
from __future__ import annotations

from functools import lru_cache

from .exactalg import MultiPoly

_GUARD = 10


def _from_series(n: int, term) -> MultiPoly:
    if n < 0:
        raise ValueError("n must be non-negative")
    t = MultiPoly.var("t")
    k_max = n + _GUARD
    series = sum((MultiPoly.monomial(term(k), t=k) for k in range(k_max + 1)), MultiPoly.constant(0))
    product = (series * (1 - t) ** (n + 1)).truncated("t", k_max + 1)
    poly = product.truncated("t", n + 1)
    tail = product - poly
    if not tail.is_zero():
        raise ArithmeticError("defining series did not terminate; Eulerian data is wrong")
    return poly


@lru_cache(maxsize=None)
def eulerian_A(n: int) -> MultiPoly:
    """A_n(t) = sum over permutations of t^(des+1); A_0 = 1."""
    if n == 0:
        # the series identity starts at k=1 here, so 0**0 must not count
        return MultiPoly.constant(1)
    return _from_series(n, lambda k: k ** n)


@lru_cache(maxsize=None)
def eulerian_B(n: int) -> MultiPoly:
    """B_n(t), defined by sum_k (2k+1)^n t^k = B_n(t)/(1-t)^(n+1); B_0 = 1."""
    return _from_series(n, lambda k: (2 * k + 1) ** n)


def at(p: MultiPoly, value, var: str = "t") -> MultiPoly:
    """p with var replaced by a polynomial (for instance A_n(t^2))."""
    return p.subs({var: value})
