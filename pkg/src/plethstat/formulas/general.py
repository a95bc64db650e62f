"""Identities that hold for every family closed under conjugation.

Given the symmetric function Q of a family (possibly weighted by fixed
points or cycle type) and a way to fetch the family's distributions from
the oracle, each check below compares the substituted distribution with
the rational function built from Q, and that rational function with the
sequence of Theta specializations of Q.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List

from ..exactalg import MultiPoly, TruncSeries, ZERO
from ..symfunc import SymFunc, p_substitute, shift_X_plus_1, theta
from .transforms import (by_length, by_odd_parts, check_poly, check_rational, check_series,
                         des_side, eulerian_sum, lpk_side, lpkdes_side, lpkdes_via_uv,
                         pk_side, pkdes_side, pkdes_via_uv, t, theta_rhs, theta_sequence,
                         udr_side, wk_coefficients)

W = MultiPoly.var("w")


def a_coefficients(Q: SymFunc) -> Dict[int, MultiPoly]:
    """Q with p_odd -> w, p_even -> 0, by powers of w."""
    return wk_coefficients(p_substitute(Q, lambda m: W if m % 2 else 0))


def b_coefficients(Q: SymFunc) -> Dict[int, MultiPoly]:
    """Q with every p_m -> w."""
    return wk_coefficients(p_substitute(Q, lambda m: W))


def d_coefficients(Q: SymFunc) -> Dict[int, MultiPoly]:
    """Q with p_odd -> w, p_even -> 1."""
    return wk_coefficients(p_substitute(Q, lambda m: W if m % 2 else 1))


def pk_rhs(coeffs: Dict[int, MultiPoly]) -> object:
    return eulerian_sum(coeffs, "A", scale2=True)


def lpk_rhs(coeffs: Dict[int, MultiPoly]) -> object:
    return eulerian_sum(coeffs, "B")


def udr_rhs(a: Dict[int, MultiPoly], d: Dict[int, MultiPoly]) -> object:
    return (eulerian_sum(a, "A", scale2=True, squared=True)
            + eulerian_sum(d, "B", squared=True) * t)


def udr_theta_sequence(Q: SymFunc, Q1: SymFunc, k_max: int) -> TruncSeries:
    """sum_k Theta_{1,k}(Q) t^(2k) + Theta_{1,k}(Q[X+1]) t^(2k+1)."""
    prec = 2 * k_max + 2
    coeffs = [ZERO] * prec
    for k in range(k_max + 1):
        coeffs[2 * k] = theta(Q, k, y=1, x=None)
        coeffs[2 * k + 1] = theta(Q1, k, y=1, x=None)
    return TruncSeries("t", coeffs, prec)


@dataclass
class GeneralPkdes:
    """The pieces of the general (pk, des) identity for one symmetric function."""
    Q: SymFunc
    k_max: int
    theta_seq: TruncSeries = field(init=False)
    rhs: object = field(init=False)
    a: Dict[int, MultiPoly] = field(init=False)
    b: Dict[int, MultiPoly] = field(init=False)
    d: Dict[int, MultiPoly] = field(init=False)

    def __post_init__(self):
        self.theta_seq = theta_sequence(self.Q, self.k_max)
        self.rhs = theta_rhs(self.Q)
        self.a = a_coefficients(self.Q)
        self.b = b_coefficients(self.Q)
        self.d = d_coefficients(self.Q)


def general_pkdes(Q: SymFunc, k_max: int) -> GeneralPkdes:
    return GeneralPkdes(Q, k_max)


Fetch = Callable[[str], MultiPoly]


def general_checks(tag: str, n: int, k_max: int, Q: SymFunc, fetch: Fetch,
                   weight: str | None = None) -> List[tuple]:
    """(id, n, k_max, body) for every general identity applied to one family.

    ``fetch(base)`` returns the oracle distribution for a base profile;
    ``weight`` ('fix' or 'cycletype') is appended to the profile.
    """
    suffix = "" if weight is None else "," + weight
    st = "" if weight is None else "st"
    Q1_cache: list = []

    def Q1() -> SymFunc:
        if not Q1_cache:
            Q1_cache.append(shift_X_plus_1(Q))
        return Q1_cache[0]

    def dist(base: str) -> MultiPoly:
        return fetch(base + suffix)

    def pkdes_a():
        rhs = theta_rhs(Q)
        check_rational(pkdes_side(dist("pkdes"), n), rhs, "substituted (pk,des) distribution")
        check_series(rhs, theta_sequence(Q, k_max), "Theta_{y,k}(Q) sequence")

    def pkdes_b():
        lhs = pk_side(dist("pk"), n)
        check_rational(lhs, eulerian_sum(by_length(Q, 1)), "odd-partition sum")
        check_rational(lhs, pk_rhs(a_coefficients(Q)), "a_k expansion")
        check_series(lhs, theta_sequence(Q, k_max, yy=1), "Theta_{1,k}(Q) sequence")

    def pkdes_c():
        lhs = des_side(dist("des"), n)
        check_rational(lhs, eulerian_sum(by_length(Q, 0)), "partition sum")
        check_rational(lhs, eulerian_sum(b_coefficients(Q)), "b_k expansion")
        check_series(lhs, theta_sequence(Q, k_max, yy=0), "Theta_{0,k}(Q) sequence")

    def lpkdes_a():
        rhs = theta_rhs(Q1())
        check_rational(lpkdes_side(dist("lpkdes"), n), rhs, "substituted (lpk,des) distribution")
        check_series(rhs, theta_sequence(Q1(), k_max), "Theta_{y,k}(Q[X+1]) sequence")

    def lpkdes_b():
        lhs = lpk_side(dist("lpk"), n)
        check_rational(lhs, lpk_rhs(by_odd_parts(Q)), "odd-part sum")
        check_rational(lhs, lpk_rhs(d_coefficients(Q)), "d_k expansion")
        check_series(lhs, theta_sequence(Q1(), k_max, yy=1), "Theta_{1,k}(Q[X+1]) sequence")

    def udr():
        lhs = udr_side(dist("udr"), n)
        check_rational(lhs, udr_rhs(a_coefficients(Q), d_coefficients(Q)), "a_k, d_k expansion")
        check_series(lhs, udr_theta_sequence(Q, Q1(), k_max), "interleaved Theta sequence")

    def inversions():
        check_poly(dist("pkdes"), pkdes_via_uv(Q, n), "(pk,des) by series inversion")
        check_poly(dist("lpkdes"), lpkdes_via_uv(Q, n), "(lpk,des) by series inversion")

    return [
        (f"thm:pkdes{st}-a/{tag}", n, k_max, pkdes_a),
        (f"thm:pkdes{st}-b/{tag}", n, k_max, pkdes_b),
        (f"thm:pkdes{st}-c/{tag}", n, k_max, pkdes_c),
        (f"thm:lpkdes{st}-a/{tag}", n, k_max, lpkdes_a),
        (f"thm:lpkdes{st}-b/{tag}", n, k_max, lpkdes_b),
        (f"thm:udr{st}/{tag}", n, k_max, udr),
        (f"inv:pkdes{st}/{tag}", n, None, inversions),
    ]
