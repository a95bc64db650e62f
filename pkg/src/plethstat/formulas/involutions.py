"""Involutions, refined by fixed points.

The generating function of Q^fix over all involution sizes is
Q_I = H[z x e_1 + x^2 e_2]; Theta_{y,k} of it factors into a finite
product, so each k gives a closed form in x whose x^n coefficient must
equal Theta_{y,k}(Q^fix(I_n)).  The Eulerian-type expansions use
coefficients a_{n,k}(z), b_{n,k}(z), d_{n,k}(z) read off generating
functions with fractional exponents, computed as exp(e * log(base)).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List

from ..exactalg import MultiPoly, TruncSeries, ZERO
from ..permstat import INVOLUTIONS, family_symfunc, square_table
from ..symfunc import (H_series, SymFunc, cycle_type_square, e_in_p, partitions_of, plethysm,
                       shift_X_plus_1, theta, z_of)
from .common import P_lpk, P_pk, dist, fetcher
from .general import (a_coefficients, b_coefficients, d_coefficients, general_checks, lpk_rhs,
                      pk_rhs, udr_rhs)
from .report import CheckFailed
from .symmetry import compsym2_checks
from .transforms import (by_length, check_poly, check_rational, des_side, eulerian_sum,
                         lpk_side, pk_side, pkdes_side, t, udr_side, y)

x = MultiPoly.var("x")
z = MultiPoly.var("z")
w = MultiPoly.var("w")


def xs(p, prec: int) -> TruncSeries:
    return TruncSeries.from_poly(p, "x", prec)


def product(factors, prec: int) -> TruncSeries:
    """prod base^e over (base, e) pairs; integer e uses powers, anything else exp(e log base)."""
    out = TruncSeries.constant(1, "x", prec)
    for base, e in factors:
        s = xs(base, prec)
        if isinstance(e, int):
            out = out * (s ** e if e >= 0 else s.inverse() ** (-e))
        else:
            out = out * (s.log() * e).exp()
    return out


# -- Q^fix of involutions -------------------------------------------------------------

@lru_cache(maxsize=None)
def qi_plethystic(N: int) -> SymFunc:
    """H[z x e_1 + x^2 e_2] truncated at degree N (z is raised by plethysm)."""
    g = SymFunc.p(1).scale(z) + e_in_p(2)
    return plethysm(H_series(N), g, plethystic_vars=("z",), max_degree=N)


@lru_cache(maxsize=None)
def qi_exponential(N: int) -> SymFunc:
    """exp of sum_odd z^m p_m/m + sum_even (z^m - 1) p_m/m + sum p_m^2/(2m)."""
    terms: Dict[tuple, object] = {}
    for m in range(1, N + 1):
        c = z ** m if m % 2 else z ** m - 1
        terms[(m,)] = c * Fraction(1, m)
    for m in range(1, N // 2 + 1):
        terms[(m, m)] = Fraction(1, 2 * m)
    return SymFunc(terms, max_degree=N, bounded=False).exp(N)


def q_squares(n: int) -> SymFunc:
    """sum over lambda of n of p_{lambda^2} / z_lambda."""
    total = SymFunc.zero()
    for lam in partitions_of(n):
        total = total + SymFunc.p(*cycle_type_square(lam), coeff=Fraction(1, z_of(lam)))
    return total


# -- closed forms per k ------------------------------------------------------------------

@lru_cache(maxsize=None)
def ipkdesfix_form(k: int, prec: int, yy=y) -> TruncSeries:
    return product([(1 + z * x * yy, k), (1 + x * x * yy, k * k), (1 - z * x, -k),
                    (1 - x * x, -comb(k, 2)), (1 - x * x * yy * yy, -comb(k + 1, 2))], prec)


@lru_cache(maxsize=None)
def ilpkdesfix_form(k: int, prec: int, yy=y) -> TruncSeries:
    return product([(1 + z * x * yy, k), (1 + x * x * yy, k * k + k), (1 - z * x, -(k + 1)),
                    (1 - x * x, -comb(k + 1, 2)), (1 - x * x * yy * yy, -comb(k + 1, 2))], prec)


@lru_cache(maxsize=None)
def iudrfix_forms(k: int, prec: int):
    """(even part, odd part) of the up-down run summand, without the powers of t."""
    even = product([(1 + z * x, k), (1 + x * x, k * k), (1 - z * x, -k), (1 - x * x, -k * k)], prec)
    odd = even * product([(1 + x * x, k), (1 - z * x, -1), (1 - x * x, -k)], prec)
    return even, odd


@lru_cache(maxsize=None)
def idesfix_form(k: int, prec: int) -> TruncSeries:
    return product([(1 - z * x, -k), (1 - x * x, -comb(k, 2))], prec)


# -- coefficient generating functions ------------------------------------------------------

@lru_cache(maxsize=None)
def a_gf(prec: int) -> TruncSeries:
    """((1+zx)/(1-zx))^(w/2) ((1+x^2)/(1-x^2))^(w^2/4)."""
    return product([(1 + z * x, w * Fraction(1, 2)), (1 - z * x, -w * Fraction(1, 2)),
                    (1 + x * x, w * w * Fraction(1, 4)), (1 - x * x, -w * w * Fraction(1, 4))], prec)


@lru_cache(maxsize=None)
def b_gf(prec: int) -> TruncSeries:
    """1 / ((1-zx)^w (1-x^2)^(w choose 2))."""
    return product([(1 - z * x, -w), (1 - x * x, -(w * (w - 1)) * Fraction(1, 2))], prec)


@lru_cache(maxsize=None)
def d_gf(prec: int) -> TruncSeries:
    """(1-x^4)^(-1/4) ((1+x^2)/(1-x^2))^(w^2/4) ((1+zx)/(1-zx))^(w/2) ((1-x^2)/(1-z^2x^2))^(1/2)."""
    half = Fraction(1, 2)
    return product([(1 - x ** 4, Fraction(-1, 4)),
                    (1 + x * x, w * w * Fraction(1, 4)), (1 - x * x, -w * w * Fraction(1, 4)),
                    (1 + z * x, w * half), (1 - z * x, -w * half),
                    (1 - x * x, half), (1 - z * z * x * x, -half)], prec)


def coefficients_at(gf: TruncSeries, n: int, zval=None) -> Dict[int, MultiPoly]:
    """k -> [x^n w^k] of a generating function, optionally with z set to a number."""
    c = gf.coeffs[n]
    if zval is not None:
        c = c.subs({"z": zval})
    return {k: v for k, v in c.expand_in("w").items() if not v.is_zero()} if not c.is_zero() else {}


def _check_coeffs(expected: Dict[int, MultiPoly], got: Dict[int, MultiPoly], what: str) -> None:
    for k in sorted(set(expected) | set(got)):
        check_poly(expected.get(k, ZERO), got.get(k, ZERO), f"{what}, k={k}")


def _check_parity(coeffs: Dict[int, MultiPoly], n: int, what: str) -> None:
    for k, c in coeffs.items():
        if (n - k) % 2 and not c.is_zero():
            raise CheckFailed(f"{what}: coefficient for k={k} is nonzero but n-k is odd")


def peak_expansion(coeffs: Dict[int, MultiPoly], n: int, peak) -> MultiPoly:
    """sum_k c_k (1-t)^((n-k)/2) P_k(t) over k of the same parity as n."""
    total = ZERO
    for k, c in coeffs.items():
        total = total + c * (1 - t) ** ((n - k) // 2) * peak(k)
    return total


def square_counts(n: int, which: str) -> Dict[int, int]:
    """Counts of permutations of [n] keyed by the statistic behind a, b or d at z=1."""
    out: Dict[int, int] = {}
    for (lam, ncyc, nodd), c in square_table(n).items():
        if which == "a":
            if any(p % 4 == 0 for p in lam):
                continue
            key = ncyc
        elif which == "b":
            key = ncyc
        else:
            key = nodd
        out[key] = out.get(key, 0) + c
    return out


# -- checks --------------------------------------------------------------------------------

def involution_checks(n: int, k_max: int, prec: int) -> List[tuple]:
    family = "involutions"
    Q = family_symfunc(n, INVOLUTIONS, "fix")

    def qi_two_ways():
        a = qi_plethystic(prec - 1).slice(n)
        b = qi_exponential(prec - 1).slice(n)
        for name, f in (("plethystic form", a), ("exponential form", b)):
            if not (f == Q):
                raise CheckFailed(f"{name} differs from the sum of weighted Lyndon functions")

    def theta_forms(form, shifted: bool, label: str):
        def body():
            f = shift_X_plus_1(Q) if shifted else Q
            for k in range(k_max + 1):
                check_poly(form(k, prec).coeffs[n], theta(f, k, x=None), f"{label}, k={k}")
        return body

    def udr_forms():
        Q1 = shift_X_plus_1(Q)
        for k in range(k_max + 1):
            even, odd = iudrfix_forms(k, prec)
            check_poly(even.coeffs[n], theta(Q, k, y=1, x=None), f"t^(2k) part, k={k}")
            check_poly(odd.coeffs[n], theta(Q1, k, y=1, x=None), f"t^(2k+1) part, k={k}")

    def idesfix():
        lhs = des_side(dist(n, family, "des,fix"), n).series("t", k_max + 1)
        for k in range(k_max + 1):
            check_poly(idesfix_form(k, prec).coeffs[n], lhs.coeffs[k], f"t^{k}")

    def eul_inv_a():
        a = coefficients_at(a_gf(prec), n)
        _check_coeffs(a_coefficients(Q), a, "a_{n,k}(z) against p-substitution")
        _check_parity(a, n, "a_{n,k}(z)")
        check_rational(pk_side(dist(n, family, "pk,fix"), n), pk_rhs(a), "peak expansion")

    def eul_inv_b():
        b = coefficients_at(b_gf(prec), n)
        _check_coeffs(b_coefficients(Q), b, "b_{n,k}(z) against p-substitution")
        check_rational(des_side(dist(n, family, "des,fix"), n), eulerian_sum(b), "descent expansion")

    def lpk_fix_b():
        d = coefficients_at(d_gf(prec), n)
        _check_coeffs(d_coefficients(Q), d, "d_{n,k}(z) against p-substitution")
        _check_parity(d, n, "d_{n,k}(z)")
        check_rational(lpk_side(dist(n, family, "lpk,fix"), n), lpk_rhs(d), "left peak expansion")

    def ipka():
        a1 = coefficients_at(a_gf(prec), n, 1)
        b1 = coefficients_at(b_gf(prec), n, 1)
        check_rational(pk_side(dist(n, family, "pk"), n), pk_rhs(a1), "peaks at z=1")
        check_rational(des_side(dist(n, family, "des"), n), eulerian_sum(b1), "descents at z=1")

    def ilpka():
        d1 = coefficients_at(d_gf(prec), n, 1)
        check_rational(lpk_side(dist(n, family, "lpk"), n), lpk_rhs(d1), "left peaks at z=1")

    def counts(which: str, gf):
        def body():
            coeffs = coefficients_at(gf(prec), n, 1)
            expected = square_counts(n, which)
            for k in sorted(set(coeffs) | set(expected)):
                got = coeffs.get(k, ZERO) * factorial(n)
                if got != expected.get(k, 0):
                    raise CheckFailed(f"k={k}: n! times the coefficient is {got}, "
                                      f"enumeration gives {expected.get(k, 0)}")
        return body

    def iudra():
        a1 = coefficients_at(a_gf(prec), n, 1)
        d1 = coefficients_at(d_gf(prec), n, 1)
        check_rational(udr_side(dist(n, family, "udr"), n), udr_rhs(a1, d1), "up-down runs")

    def ipkdes_ax():
        Qplain = family_symfunc(n, INVOLUTIONS)
        if not (Qplain == q_squares(n)):
            raise CheckFailed("Q(I_n) differs from sum of p_{lambda^2}/z_lambda")
        check_rational(_pkdes_lhs(n), _ax_rhs(n), "Eulerian sum over lambda^2")

    def ipk_ppk():
        a1 = coefficients_at(a_gf(prec), n, 1)
        _check_parity(a1, n, "a_{n,k}(1)")
        check_poly(dist(n, family, "pk"), peak_expansion(a1, n, P_pk), "I^pk from P^pk")

    def ilpk_plpk():
        d1 = coefficients_at(d_gf(prec), n, 1)
        _check_parity(d1, n, "d_{n,k}(1)")
        check_poly(dist(n, family, "lpk"), peak_expansion(d1, n, P_lpk), "I^lpk from P^lpk")

    out = [
        ("lem:Qinvalt", n, None, qi_two_ways),
        ("thm:Ipkdesfix", n, k_max, theta_forms(ipkdesfix_form, False, "Theta_{y,k}(Q)")),
        ("thm:Ilpkdesfix", n, k_max, theta_forms(ilpkdesfix_form, True, "Theta_{y,k}(Q[X+1])")),
        ("thm:Iudrfix", n, k_max, udr_forms),
        ("cor:Idesfix", n, k_max, idesfix),
        ("thm:eul-inv-a", n, None, eul_inv_a),
        ("thm:eul-inv-b", n, None, eul_inv_b),
        ("thm:lpk-fix-B", n, None, lpk_fix_b),
        ("cor:IpkA", n, None, ipka),
        ("cor:IlpkA", n, None, ilpka),
        ("cor:IpkA-count-a", n, None, counts("a", a_gf)),
        ("cor:IpkA-count-b", n, None, counts("b", b_gf)),
        ("cor:IlpkA-count-d", n, None, counts("d", d_gf)),
        ("thm:IudrA", n, None, iudra),
        ("thm:IpkdesAx", n, None, ipkdes_ax),
        ("cor:IpkPpk", n, None, ipk_ppk),
        ("cor:IlpkPlpk", n, None, ilpk_plpk),
    ]
    out += general_checks(family, n, k_max, Q, fetcher(n, family), "fix")
    out += compsym2_checks(n)
    return out


def _pkdes_lhs(n: int):
    return pkdes_side(dist(n, "involutions", "pkdes"), n)


def _ax_rhs(n: int):
    """sum_lambda A_{l(lambda^2)}(t) / (z_lambda (1-t)^(l+1)) prod (1 - (-y)^{lambda^2_k})."""
    return eulerian_sum(by_length(q_squares(n)))


def suite(n_max: int, k_max: int) -> List[tuple]:
    prec = n_max + 1
    out: List[tuple] = []
    for n in range(1, n_max + 1):
        out += involution_checks(n, k_max, prec)
    return out
