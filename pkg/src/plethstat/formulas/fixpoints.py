"""All permutations refined by fixed points, derangements, and the z=1 collapses.

Q^fix over all sizes is H(zx) / (H(x) (1 - p_1 x)).  Its Theta images
are again finite products in x for each k, and z=0 picks out derangements.
At z=1 the coefficient generating functions collapse to 1/(1-wx), which
recovers the classical relations between A_n, B_n and the peak, left peak
and up-down run polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List

from ..eulerian import eulerian_A, eulerian_B
from ..exactalg import MultiPoly, RatFunc, TruncSeries, rational_subs
from ..permstat import ALL, DERANGEMENTS, ENUMERATION_CAP, family_symfunc
from ..symfunc import H_series, SymFunc, shift_X_plus_1, theta
from .common import P_lpk, P_pk, at_t2, dist, fetcher
from .general import (a_coefficients, b_coefficients, d_coefficients, general_checks, lpk_rhs,
                      pk_rhs, udr_rhs)
from .involutions import _check_coeffs, _check_parity, coefficients_at, peak_expansion, product
from .report import CheckFailed
from .transforms import (PK_MAP, UDR_MAP, check_poly, check_rational, des_side, eulerian_sum,
                         lpk_side, pk_side, pkdes_side, lpkdes_side, t, udr_side, y)

x = MultiPoly.var("x")
z = MultiPoly.var("z")
w = MultiPoly.var("w")
HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def q_fix_series(N: int) -> SymFunc:
    """H(zx) H(x)^(-1) (1 - p_1 x)^(-1) truncated at degree N."""
    H = H_series(N)
    return H_series(N, var="z") * H.inverse(N) * (1 - SymFunc.p(1)).inverse(N)


# -- closed forms per k (zz is z, or 0 for derangements) --------------------------------

@lru_cache(maxsize=None)
def pkdesfix_form(k: int, prec: int, zz=z, yy=y) -> TruncSeries:
    return product([(1 + zz * x * yy, k), (1 - x, k), (1 - zz * x, -k), (1 + x * yy, -k),
                    (1 - (1 + yy) * x * k, -1)], prec)


@lru_cache(maxsize=None)
def desfix_form(k: int, prec: int, zz=z) -> TruncSeries:
    return product([(1 - x, k), (1 - zz * x, -k), (1 - x * k, -1)], prec)


@lru_cache(maxsize=None)
def lpkdesfix_form(k: int, prec: int, zz=z, yy=y) -> TruncSeries:
    return product([(1 + zz * x * yy, k), (1 - zz * x, -(k + 1)), (1 - x, k + 1), (1 + x * yy, -k),
                    (1 - ((1 + yy) * k + 1) * x, -1)], prec)


@lru_cache(maxsize=None)
def udrfix_forms(k: int, prec: int, zz=z):
    """(t^(2k) part, t^(2k+1) part) of the up-down run summand."""
    common = product([(1 + zz * x, k), (1 - zz * x, -k), (1 - x, k), (1 + x, -k)], prec)
    even = common * product([(1 - 2 * k * x, -1)], prec)
    odd = common * product([(1 - x, 1), (1 - zz * x, -1), (1 - (2 * k + 1) * x, -1)], prec)
    return even, odd


# -- coefficient generating functions -------------------------------------------------------

@lru_cache(maxsize=None)
def a_gf(prec: int) -> TruncSeries:
    """1/(1-wx) ((1+zx)/(1-zx))^(w/2) ((1-x)/(1+x))^(w/2)."""
    return product([(1 - w * x, -1), (1 + z * x, w * HALF), (1 - z * x, -w * HALF),
                    (1 - x, w * HALF), (1 + x, -w * HALF)], prec)


@lru_cache(maxsize=None)
def b_gf(prec: int) -> TruncSeries:
    """1/(1-wx) ((1-x)/(1-zx))^w."""
    return product([(1 - w * x, -1), (1 - x, w), (1 - z * x, -w)], prec)


@lru_cache(maxsize=None)
def d_gf(prec: int) -> TruncSeries:
    """1/(1-xw) ((1-x^2)/(1-z^2x^2))^(1/2) ((1+zx)/(1-zx))^(w/2) ((1-x)/(1+x))^(w/2)."""
    return product([(1 - w * x, -1), (1 - x * x, HALF), (1 - z * z * x * x, -HALF),
                    (1 + z * x, w * HALF), (1 - z * x, -w * HALF),
                    (1 - x, w * HALF), (1 + x, -w * HALF)], prec)


def _series_against_forms(lhs: RatFunc, forms, n: int, k_max: int, what: str) -> None:
    # cross-multiplied, so denominators such as y+t need not be units
    expected = TruncSeries("t", [forms(k).coeffs[n] for k in range(k_max + 1)], k_max + 1)
    j = lhs.series_witness(expected)
    if j is not None:
        raise CheckFailed(f"{what}, t^{j}")


def _udr_series_against_forms(lhs: RatFunc, forms, n: int, k_max: int, what: str) -> None:
    s = lhs.series("t", 2 * k_max + 2)
    for k in range(k_max + 1):
        even, odd = forms(k)
        check_poly(even.coeffs[n], s.coeffs[2 * k], f"{what}, t^{2 * k}")
        check_poly(odd.coeffs[n], s.coeffs[2 * k + 1], f"{what}, t^{2 * k + 1}")


def fixpoint_checks(n: int, k_max: int, prec: int) -> List[tuple]:
    Q = family_symfunc(n, ALL, "fix")
    D = family_symfunc(n, DERANGEMENTS)
    fix = lambda profile: dist(n, "all", profile + ",fix")
    der = lambda profile: dist(n, "derangements", profile)

    def q_fix():
        if not (q_fix_series(prec - 1).slice(n) == Q):
            raise CheckFailed("x^n slice differs from the sum of fixed-point weighted Lyndon functions")

    def pkdesfix_a():
        for k in range(k_max + 1):
            check_poly(pkdesfix_form(k, prec).coeffs[n], theta(Q, k, x=None), f"Theta_{{y,k}}(Q), k={k}")
        _series_against_forms(pkdes_side(fix("pkdes"), n), lambda k: pkdesfix_form(k, prec), n, k_max,
                              "substituted (pk,des,fix)")

    def pkdesfix_b():
        for k in range(k_max + 1):
            check_poly(pkdesfix_form(k, prec, 0).coeffs[n], theta(D, k, x=None), f"derangements, k={k}")
        _series_against_forms(pkdes_side(der("pkdes"), n), lambda k: pkdesfix_form(k, prec, 0), n,
                              k_max, "substituted derangement (pk,des)")

    def pkfixdesfix(part: str):
        def body():
            if part == "a":
                _series_against_forms(pk_side(fix("pk"), n), lambda k: pkdesfix_form(k, prec, z, 1),
                                      n, k_max, "peaks with z")
            elif part == "b":
                _series_against_forms(pk_side(der("pk"), n), lambda k: pkdesfix_form(k, prec, 0, 1),
                                      n, k_max, "derangement peaks")
            elif part == "c":
                _series_against_forms(des_side(fix("des"), n), lambda k: desfix_form(k, prec),
                                      n, k_max, "descents with z")
            else:
                _series_against_forms(des_side(der("des"), n), lambda k: desfix_form(k, prec, 0),
                                      n, k_max, "derangement descents")
        return body

    def pkdesfixA_a():
        a = coefficients_at(a_gf(prec), n)
        _check_coeffs(a_coefficients(Q), a, "a_{n,k}(z) against p-substitution")
        check_rational(pk_side(fix("pk"), n), pk_rhs(a), "peak expansion")

    def pkdesfixA_b():
        b = coefficients_at(b_gf(prec), n)
        _check_coeffs(b_coefficients(Q), b, "b_{n,k}(z) against p-substitution")
        check_rational(des_side(fix("des"), n), eulerian_sum(b), "descent expansion")

    def pkfix_ppk():
        a = coefficients_at(a_gf(prec), n)
        _check_parity(a, n, "a_{n,k}(z)")
        check_poly(fix("pk"), peak_expansion(a, n, P_pk), "P^{pk,fix} from P^pk")

    def lpkdesfix_a():
        Q1 = shift_X_plus_1(Q)
        for k in range(k_max + 1):
            check_poly(lpkdesfix_form(k, prec).coeffs[n], theta(Q1, k, x=None), f"Theta_{{y,k}}(Q[X+1]), k={k}")
        _series_against_forms(lpkdes_side(fix("lpkdes"), n), lambda k: lpkdesfix_form(k, prec), n,
                              k_max, "substituted (lpk,des,fix)")

    def lpkdesfix_b():
        D1 = shift_X_plus_1(D)
        for k in range(k_max + 1):
            check_poly(lpkdesfix_form(k, prec, 0).coeffs[n], theta(D1, k, x=None), f"derangements, k={k}")
        _series_against_forms(lpkdes_side(der("lpkdes"), n), lambda k: lpkdesfix_form(k, prec, 0), n,
                              k_max, "substituted derangement (lpk,des)")

    def lpkfixdesfix():
        _series_against_forms(lpk_side(fix("lpk"), n), lambda k: lpkdesfix_form(k, prec, z, 1), n,
                              k_max, "left peaks with z")

    def lpkfixB():
        d = coefficients_at(d_gf(prec), n)
        _check_coeffs(d_coefficients(Q), d, "d_{n,k}(z) against p-substitution")
        check_rational(lpk_side(fix("lpk"), n), lpk_rhs(d), "left peak expansion")

    def lpkfix_plpk():
        d = coefficients_at(d_gf(prec), n)
        _check_parity(d, n, "d_{n,k}(z)")
        check_poly(fix("lpk"), peak_expansion(d, n, P_lpk), "P^{lpk,fix} from P^lpk")

    def udrfix(zz):
        def body():
            f = Q if zz is z else D
            f1 = shift_X_plus_1(f)
            for k in range(k_max + 1):
                even, odd = udrfix_forms(k, prec, zz)
                check_poly(even.coeffs[n], theta(f, k, y=1, x=None), f"t^(2k) part, k={k}")
                check_poly(odd.coeffs[n], theta(f1, k, y=1, x=None), f"t^(2k+1) part, k={k}")
            lhs = udr_side(fix("udr") if zz is z else der("udr"), n)
            _udr_series_against_forms(lhs, lambda k: udrfix_forms(k, prec, zz), n, k_max,
                                      "substituted up-down runs")
        return body

    def udrfixAB():
        a = coefficients_at(a_gf(prec), n)
        d = coefficients_at(d_gf(prec), n)
        check_rational(udr_side(fix("udr"), n), udr_rhs(a, d), "up-down run expansion")

    out = [
        ("lem:Qfix", n, None, q_fix),
        ("thm:pkdesfix-a", n, k_max, pkdesfix_a),
        ("thm:pkdesfix-b", n, k_max, pkdesfix_b),
        ("cor:pkfixdesfix-a", n, k_max, pkfixdesfix("a")),
        ("cor:pkfixdesfix-b", n, k_max, pkfixdesfix("b")),
        ("cor:pkfixdesfix-c", n, k_max, pkfixdesfix("c")),
        ("cor:pkfixdesfix-d", n, k_max, pkfixdesfix("d")),
        ("thm:pkdesfixA-a", n, None, pkdesfixA_a),
        ("thm:pkdesfixA-b", n, None, pkdesfixA_b),
        ("cor:pkfixPpk", n, None, pkfix_ppk),
        ("thm:lpkdesfix-a", n, k_max, lpkdesfix_a),
        ("thm:lpkdesfix-b", n, k_max, lpkdesfix_b),
        ("cor:lpkfixdesfix", n, k_max, lpkfixdesfix),
        ("thm:lpkfixB", n, None, lpkfixB),
        ("cor:lpkfixPlpk", n, None, lpkfix_plpk),
        ("thm:udrfix-a", n, k_max, udrfix(z)),
        ("thm:udrfix-b", n, k_max, udrfix(0)),
        ("thm:udrfixAB", n, None, udrfixAB),
    ]
    out += general_checks("all", n, k_max, Q, fetcher(n, "all"), "fix")
    out += general_checks("derangements", n, k_max, D, fetcher(n, "derangements"))
    out += classical_checks(n, prec)
    return out


def classical_checks(n: int, prec: int | None = None) -> List[tuple]:
    """z=1 collapses: Stembridge, Petersen and the flag-descent relation, plus A^fix(t,1) = A_n."""
    prec = n + 1 if prec is None else prec

    def delta(gf, what):
        coeffs = coefficients_at(gf(prec), n, 1)
        if coeffs != {n: MultiPoly.constant(1)}:
            raise CheckFailed(f"{what}(1) is not the indicator of k = n: {coeffs}")

    def stembridge():
        delta(a_gf, "a_{n,k}")
        lhs = rational_subs(P_pk(n), {"t": PK_MAP}) * ((1 + t) * HALF) ** (n + 1)
        check_rational(lhs, eulerian_A(n), "A_n = ((1+t)/2)^(n+1) P^pk_n(4t/(1+t)^2)")

    def petersen():
        delta(d_gf, "d_{n,k}")
        lhs = rational_subs(P_lpk(n), {"t": PK_MAP}) * (1 + t) ** n
        check_rational(lhs, eulerian_B(n), "B_n = (1+t)^n P^lpk_n(4t/(1+t)^2)")

    def flag():
        lhs = at_t2(eulerian_A(n)) * 2 ** n + t * at_t2(eulerian_B(n))
        rhs = rational_subs(dist(n, "all", "udr"), {"t": UDR_MAP}) * ((1 + t) ** 2 * (1 + t * t) ** n * HALF)
        check_rational(lhs, rhs, "2^n A_n(t^2) + t B_n(t^2)")

    def afix_collapse():
        delta(b_gf, "b_{n,k}")
        check_poly(eulerian_A(n), dist(n, "all", "des,fix").subs({"z": 1}), "A^fix_n(t, 1)")

    return [
        ("z1:Afix", n, None, afix_collapse),
        ("e:Apk", n, None, stembridge),
        ("e:Petersen", n, None, petersen),
        ("e:flag-udr", n, None, flag),
    ]


def suite(n_max: int, k_max: int) -> List[tuple]:
    prec = n_max + 1
    out: List[tuple] = []
    for n in range(1, n_max + 1):
        out += fixpoint_checks(n, k_max, prec)
    # the z = 1 collapses need only one enumeration, so they reach one size further
    if n_max + 1 <= ENUMERATION_CAP:
        out += classical_checks(n_max + 1)
    return out
