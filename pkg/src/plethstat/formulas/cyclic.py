"""Descent statistics over cyclic permutations (single n-cycles).

Every identity here comes from Q(C_n) = L_n = (1/n) sum_{d|n} mu(d) p_d^{n/d}.
The ``*_poly`` functions compute distributions from the closed forms
alone; the checks compare them, and the rational identities behind them,
with oracle enumeration.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List

from ..eulerian import eulerian_A, eulerian_B
from ..exactalg import MultiPoly, RatFunc, TruncSeries, ZERO, eval_at_series, rational_subs
from ..permstat import CYCLIC, family_symfunc
from ..symfunc import divisors, is_power_of_two, mobius
from .common import P_lpk, P_pk, at_t2, check_nonnegative_integers, dist, fetcher, reflect_t
from .general import general_checks
from .report import CheckFailed
from .symmetry import compsym1_checks
from .transforms import (PK_MAP, UDR_MAP, Y_MAP, T_MAP, check_poly, check_rational, lpk_inverse,
                         over, pk_inverse, series_to_poly, t, udr_inverse, uv_series, y)


def _odd_divisors(n: int) -> list[int]:
    return [d for d in divisors(n) if d % 2 and mobius(d)]


def even_mobius_sum(n: int) -> int:
    """sum of mu(d) over even divisors d of n: -1 when n is 2^j with j > 0, else 0."""
    return sum(mobius(d) for d in divisors(n) if d % 2 == 0)


# -- (pk, des) ------------------------------------------------------------------

def _cycpkdes_sum(n: int, yy, tt):
    """sum_{d|n} mu(d) (1-(-y)^d)^(n/d) (1-t)^(n-n/d) A_{n/d}(t), for polynomials or series."""
    total = None
    for d in divisors(n):
        mu = mobius(d)
        if not mu:
            continue
        m = n // d
        A = eulerian_A(m)
        if isinstance(tt, TruncSeries):
            one = TruncSeries.constant(1, "t", tt.prec)
            term = (one - (-yy) ** d) ** m * (one - tt) ** (n - m) * eval_at_series(A, {"t": tt})
        else:
            term = (1 - (-yy) ** d) ** m * (1 - tt) ** (n - m) * A
        term = term * mu
        total = term if total is None else total + term
    return total


def cycpkdes_poly(n: int) -> MultiPoly:
    """C_n(y, t) in y^(pk+1) t^(des+1), from the closed form evaluated at (u, v)."""
    prec = n + 4
    u, v = uv_series(prec)
    one = TruncSeries.constant(1, "t", prec)
    body = _cycpkdes_sum(n, u, v)
    series = (one + u) * (one + u * v).inverse() ** (n + 1) * body * Fraction(1, n)
    return series_to_poly(series, n, "(pk,des) from u,v")


def cycpkdes_rational(n: int) -> RatFunc:
    """(1+y) / (n (1+yt)^(n+1)) times the divisor sum, the value of C_n(Y, T)."""
    return over((1 + y) * _cycpkdes_sum(n, y, t) * Fraction(1, n), {1 + y * t: n + 1})


# -- pk and des -----------------------------------------------------------------

def cycpk_a_rational(n: int) -> RatFunc:
    """C^pk_n(4t/(1+t)^2) = 1/(n(1+t)^(n+1)) sum_{d odd} mu(d) 2^(n/d+1) (1-t)^(n-n/d) A_{n/d}."""
    num = ZERO
    for d in _odd_divisors(n):
        m = n // d
        num = num + (1 - t) ** (n - m) * eulerian_A(m) * (mobius(d) * 2 ** (m + 1))
    return over(num * Fraction(1, n), {1 + t: n + 1})


def cycpk_a_poly(n: int) -> MultiPoly:
    """C^pk_n(t) by inverting the 4t/(1+t)^2 substitution of the closed form."""
    R = cycpk_a_rational(n) * over((1 + t) ** (n + 1) * Fraction(1, 2), {1 - t: n + 1})
    return pk_inverse(R, n)


def cycpk_b_poly(n: int) -> MultiPoly:
    """C_n(t) = (1/n) sum_{d|n} mu(d) (1-t)^(n-n/d) A_{n/d}(t)."""
    total = ZERO
    for d in divisors(n):
        m = n // d
        total = total + (1 - t) ** (n - m) * eulerian_A(m) * mobius(d)
    return total * Fraction(1, n)


def peak_from_eulerian(k: int) -> MultiPoly:
    """P^pk_k recovered from A_k = ((1+t)/2)^(k+1) P^pk_k(4t/(1+t)^2)."""
    return pk_inverse(over(eulerian_A(k) * 2 ** k, {1 - t: k + 1}), k)


def left_peak_from_eulerian(k: int) -> MultiPoly:
    """P^lpk_k recovered from B_k = (1+t)^k P^lpk_k(4t/(1+t)^2)."""
    if k == 0:
        return MultiPoly.constant(1)
    return lpk_inverse(over(eulerian_B(k), {1 - t: k + 1}), k)


def cpk_from_peaks(n: int, peak=P_pk) -> MultiPoly:
    """C^pk_n = (1/n) sum_{d odd} mu(d) (1-t)^((n-n/d)/2) P^pk_{n/d}(t)."""
    total = ZERO
    for d in _odd_divisors(n):
        m = n // d
        total = total + (1 - t) ** ((n - m) // 2) * peak(m) * mobius(d)
    return total * Fraction(1, n)


def _branch(n: int, branch: str | None) -> str:
    if branch is None:
        return "pow2" if is_power_of_two(n) else "odd"
    if branch not in ("pow2", "odd", "unified"):
        raise ValueError(f"unknown branch {branch!r}")
    return branch


# -- lpk --------------------------------------------------------------------------

def cyclpk_rational(n: int, branch: str | None = None) -> RatFunc:
    """C^lpk_n(4t/(1+t)^2) by the branch for n (or the one named: 'pow2', 'odd', 'unified')."""
    branch = _branch(n, branch)
    if branch == "pow2":
        num = eulerian_B(n) - (1 - t) ** n
    else:
        num = ZERO
        for d in _odd_divisors(n):
            m = n // d
            num = num + (1 - t) ** (n - m) * eulerian_B(m) * mobius(d)
        if branch == "unified":
            num = num + (1 - t) ** n * even_mobius_sum(n)
    return over(num * Fraction(1, n), {1 + t: n})


def cyclpk_poly(n: int) -> MultiPoly:
    R = cyclpk_rational(n) * over((1 + t) ** n, {1 - t: n + 1})
    return lpk_inverse(R, n)


def clpk_from_left_peaks(n: int, left_peak=P_lpk) -> MultiPoly:
    """(1/n)(P^lpk_n - (1-t)^(n/2)) for n a power of 2, else the odd-divisor sum."""
    if is_power_of_two(n):
        return (left_peak(n) - (1 - t) ** (n // 2)) * Fraction(1, n)
    total = ZERO
    for d in _odd_divisors(n):
        m = n // d
        total = total + (1 - t) ** ((n - m) // 2) * left_peak(m) * mobius(d)
    return total * Fraction(1, n)


# -- udr ----------------------------------------------------------------------------

def cycudr_rational(n: int, branch: str | None = None) -> RatFunc:
    """C^udr_n(2t/(1+t^2)) by the branch for n (or 'pow2', 'odd', 'unified')."""
    branch = _branch(n, branch)
    s = t * t

    def flag(m: int) -> MultiPoly:
        return at_t2(eulerian_A(m)) * 2 ** m + t * at_t2(eulerian_B(m))

    if branch == "pow2":
        num = flag(n) - t * (1 - s) ** n
    else:
        num = ZERO
        for d in _odd_divisors(n):
            m = n // d
            num = num + (1 - s) ** (n - m) * flag(m) * mobius(d)
        if branch == "unified":
            num = num + t * (1 - s) ** n * even_mobius_sum(n)
    return over(num * Fraction(2, n), {1 + s: n, 1 + t: 2})


def cycudr_poly(n: int) -> MultiPoly:
    fac = {1 - t: 2}
    if n > 1:
        fac[1 - t * t] = n - 1
    R = cycudr_rational(n) * over((1 + t * t) ** n * Fraction(1, 2), fac)
    return udr_inverse(R, n)


# -- checks ---------------------------------------------------------------------------

def _subs_pk(P) -> RatFunc:
    return rational_subs(MultiPoly.coerce(P), {"t": PK_MAP})


def cyclic_checks(n: int, k_max: int) -> List[tuple]:
    family = "cyclic"
    out: List[tuple] = []

    def cycpkdes():
        oracle = dist(n, family, "pkdes")
        got = cycpkdes_poly(n)
        check_poly(oracle, got, "u,v inversion against enumeration")
        check_nonnegative_integers(got, "(pk,des) coefficients")
        total = got.evaluate({"y": 1, "t": 1})
        if total != factorial(n - 1):
            raise CheckFailed(f"coefficients sum to {total}, expected {factorial(n - 1)}")
        if n % 4 != 2:
            check_poly(got, reflect_t(got, n + 1), "t^(k+1) <-> t^(n-k) symmetry")
        lhs = rational_subs(oracle, {"y": Y_MAP, "t": T_MAP})
        check_rational(lhs, cycpkdes_rational(n), "C_n(Y, T) closed form")

    def cycpk_a():
        check_rational(_subs_pk(dist(n, family, "pk")), cycpk_a_rational(n), "C^pk(4t/(1+t)^2)")
        check_poly(dist(n, family, "pk"), cycpk_a_poly(n), "C^pk by inversion")

    def cycpk_b():
        check_poly(dist(n, family, "des"), cycpk_b_poly(n), "C_n(t)")

    def cpk_ppk():
        check_poly(dist(n, family, "pk"), cpk_from_peaks(n), "C^pk from P^pk")
        check_poly(dist(n, family, "pk"), cpk_from_peaks(n, peak_from_eulerian),
                   "C^pk from P^pk recovered out of A_k")

    def cyclpk():
        check_rational(_subs_pk(dist(n, family, "lpk")), cyclpk_rational(n), "C^lpk(4t/(1+t)^2)")
        check_poly(dist(n, family, "lpk"), cyclpk_poly(n), "C^lpk by inversion")

    def cyclpk_unified():
        check_rational(_subs_pk(dist(n, family, "lpk")), cyclpk_rational(n, "unified"),
                       "odd-divisor sum plus the even-divisor Mobius correction")

    def clpk_plpk():
        check_poly(dist(n, family, "lpk"), clpk_from_left_peaks(n), "C^lpk from P^lpk")
        check_poly(dist(n, family, "lpk"), clpk_from_left_peaks(n, left_peak_from_eulerian),
                   "C^lpk from P^lpk recovered out of B_k")

    def cycudr():
        lhs = rational_subs(dist(n, family, "udr"), {"t": UDR_MAP})
        check_rational(lhs, cycudr_rational(n), "C^udr(2t/(1+t^2))")
        check_rational(lhs, cycudr_rational(n, "unified"), "unified udr form")
        check_poly(dist(n, family, "udr"), cycudr_poly(n), "C^udr by inversion")

    out += [
        ("thm:cycpkdes", n, None, cycpkdes),
        ("cor:cycpk-a", n, None, cycpk_a),
        ("cor:cycpk-b", n, None, cycpk_b),
        ("cor:CpkdesPpkdes", n, None, cpk_ppk),
        ("thm:cyclpk", n, None, cyclpk),
        ("thm:cyclpk-unified", n, None, cyclpk_unified),
        ("cor:ClpkPlpk", n, None, clpk_plpk),
        ("thm:cycudr", n, None, cycudr),
    ]
    out += general_checks(family, n, k_max, family_symfunc(n, CYCLIC), fetcher(n, family))
    out += compsym1_checks(n)
    return out


def branch_discrepancy(n: int) -> RatFunc:
    """Odd-divisor branch minus C^lpk_n(4t/(1+t)^2); zero unless n is a power of 2."""
    return cyclpk_rational(n, "odd") - _subs_pk(dist(n, "cyclic", "lpk"))


def suite(n_max: int, k_max: int) -> List[tuple]:
    out: List[tuple] = []
    for n in range(2, n_max + 1):
        out += cyclic_checks(n, k_max)
    return out
