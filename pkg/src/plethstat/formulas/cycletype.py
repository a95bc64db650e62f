"""Descent statistics refined by the full cycle type, with one variable z_i per cycle length.

P = sum over all n and all lambda of n of L_lambda prod_i z_i^{N_i(lambda)}
  = prod_i sum_m h_m[L_i] (z_i x^i)^m.

Theta_{y,k}(P) is an exp of a sum indexed by cycle lengths; at y=1 and
y=0 it becomes a product of powers of (1 +- z_i x^i) whose exponents
count primitive necklaces.  For a fixed n only z_1, ..., z_n can occur.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as words
from typing import Dict, List

from ..exactalg import MultiPoly, RatFunc, TruncSeries, ZERO
from ..permstat import ALL, family_symfunc
from ..symfunc import (SymFunc, divisors, h_in_p, is_power_of_two, lyndon, mobius, plethysm,
                       shift_X_plus_1, theta)
from .common import dist, fetcher
from .general import general_checks
from .involutions import product
from .report import CheckFailed
from .transforms import (check_poly, des_side, lpk_side, lpkdes_side, pk_side, pkdes_side,
                         udr_side, y)

x = MultiPoly.var("x")


def zv(i: int) -> MultiPoly:
    return MultiPoly.var(f"z{i}")


# -- necklace counts --------------------------------------------------------------------

def f_count(i: int, k: int) -> Fraction:
    """(1/i) sum_{d|i} mu(d) k^(i/d): primitive necklaces of length i on k letters."""
    return Fraction(sum(mobius(d) * k ** (i // d) for d in divisors(i)), i)


def g_count(i: int, k: int) -> Fraction:
    """(1/(2i)) sum_{d|i, d odd} mu(d) (2k)^(i/d)."""
    return Fraction(sum(mobius(d) * (2 * k) ** (i // d) for d in divisors(i) if d % 2), 2 * i)


def h_count(i: int, k: int) -> Fraction:
    """((1+2k)^i - 1)/(2i) when i is a power of 2, else (1/(2i)) sum_{d odd} mu(d) (1+2k)^(i/d)."""
    if is_power_of_two(i):
        return Fraction((1 + 2 * k) ** i - 1, 2 * i)
    return Fraction(sum(mobius(d) * (1 + 2 * k) ** (i // d) for d in divisors(i) if d % 2), 2 * i)


def primitive_necklaces(i: int, k: int) -> int:
    """Brute force: aperiodic words of length i on k letters, divided by i."""
    count = 0
    for word in words(range(k), repeat=i):
        if all(word != word[p:] + word[:p] for p in divisors(i) if p < i):
            count += 1
    return count // i


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1 or q < 0:
        raise CheckFailed(f"{what} = {q} is not a non-negative integer")
    return int(q)


# -- the series P ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def p_series(N: int) -> SymFunc:
    """prod_{i <= N} sum_m h_m[L_i] z_i^m, truncated at degree N."""
    out = SymFunc._raw({(): MultiPoly.constant(1)}, N, False)
    for i in range(1, N + 1):
        factor: Dict[tuple, object] = {(): MultiPoly.constant(1)}
        for m in range(1, N // i + 1):
            for lam, c in plethysm(h_in_p(m), lyndon(i)).terms.items():
                factor[lam] = factor.get(lam, ZERO) + c * zv(i) ** m
        out = (out * SymFunc(factor, max_degree=N, bounded=False)).truncate(N)
    return out


# -- closed forms per k -----------------------------------------------------------------

def _exp_form(k: int, prec: int, shifted: bool) -> TruncSeries:
    N = prec - 1
    yv = MultiPoly.coerce(y)
    coeffs = [ZERO] * prec
    for i in range(1, N + 1):
        for m in range(1, N // i + 1):
            inner = ZERO
            for d in divisors(i):
                mu = mobius(d)
                if mu:
                    base = (1 - (-yv) ** (d * m)) * k
                    if shifted:
                        base = base + 1
                    inner = inner + base ** (i // d) * mu
            coeffs[i * m] = coeffs[i * m] + zv(i) ** m * inner * Fraction(1, i * m)
    return TruncSeries("x", coeffs, prec).exp()


@lru_cache(maxsize=None)
def pkdesct_form(k: int, prec: int) -> TruncSeries:
    return _exp_form(k, prec, False)


@lru_cache(maxsize=None)
def lpkdesct_form(k: int, prec: int) -> TruncSeries:
    return _exp_form(k, prec, True)


@lru_cache(maxsize=None)
def dfh_form(k: int, prec: int) -> TruncSeries:
    """prod_i ((1 + z_i x^i)/(1 - z_i x^i))^(g_{i,k})."""
    fs = []
    for i in range(1, prec):
        g = int(g_count(i, k))
        fs += [(1 + zv(i) * x ** i, g), (1 - zv(i) * x ** i, -g)]
    return product(fs, prec)


@lru_cache(maxsize=None)
def fulman_form(k: int, prec: int) -> TruncSeries:
    """prod_i (1 - z_i x^i)^(-f_{i,k})."""
    return product([(1 - zv(i) * x ** i, -int(f_count(i, k))) for i in range(1, prec)], prec)


@lru_cache(maxsize=None)
def blinking_form(k: int, prec: int) -> TruncSeries:
    """1/(1 - z_1 x) prod_i ((1 + z_i x^i)/(1 - z_i x^i))^(h_{i,k})."""
    fs = [(1 - zv(1) * x, -1)]
    for i in range(1, prec):
        h = int(h_count(i, k))
        fs += [(1 + zv(i) * x ** i, h), (1 - zv(i) * x ** i, -h)]
    return product(fs, prec)


def _against(lhs: RatFunc, coeffs, what: str) -> None:
    expected = TruncSeries("t", coeffs, len(coeffs))
    j = RatFunc.coerce(lhs).series_witness(expected)
    if j is not None:
        raise CheckFailed(f"{what}, t^{j}")


# -- checks ------------------------------------------------------------------------------

def cycletype_checks(n: int, k_max: int, prec: int) -> List[tuple]:
    Q = family_symfunc(n, ALL, "cycletype")
    F = lambda profile: dist(n, "all", profile + ",cycletype")

    def p_two_ways():
        if not (p_series(prec - 1).slice(n) == Q):
            raise CheckFailed("product over i of sum_m h_m[L_i] z_i^m differs at this degree")

    def pkdesct_a():
        for k in range(k_max + 1):
            check_poly(pkdesct_form(k, prec).coeffs[n], theta(Q, k, x=None), f"Theta_{{y,k}}(P), k={k}")
        _against(pkdes_side(F("pkdes"), n), [pkdesct_form(k, prec).coeffs[n] for k in range(k_max + 1)],
                 "substituted (pk,des) by cycle type")

    def pkdesct_b():
        for k in range(k_max + 1):
            check_poly(dfh_form(k, prec).coeffs[n], theta(Q, k, y=1, x=None), f"Theta_{{1,k}}(P), k={k}")
        _against(pk_side(F("pk"), n), [dfh_form(k, prec).coeffs[n] for k in range(k_max + 1)],
                 "substituted peaks by cycle type")

    def pkdesct_c():
        for k in range(k_max + 1):
            check_poly(fulman_form(k, prec).coeffs[n], theta(Q, k, y=0, x=None), f"Theta_{{0,k}}(P), k={k}")
        _against(des_side(F("des"), n), [fulman_form(k, prec).coeffs[n] for k in range(k_max + 1)],
                 "descents by cycle type")

    def lpkdesct_a():
        Q1 = shift_X_plus_1(Q)
        for k in range(k_max + 1):
            check_poly(lpkdesct_form(k, prec).coeffs[n], theta(Q1, k, x=None),
                       f"Theta_{{y,k}}(P[X+1]), k={k}")
        _against(lpkdes_side(F("lpkdes"), n), [lpkdesct_form(k, prec).coeffs[n] for k in range(k_max + 1)],
                 "substituted (lpk,des) by cycle type")

    def lpkdesct_b():
        Q1 = shift_X_plus_1(Q)
        for k in range(k_max + 1):
            check_poly(blinking_form(k, prec).coeffs[n], theta(Q1, k, y=1, x=None),
                       f"Theta_{{1,k}}(P[X+1]), k={k}")
        _against(lpk_side(F("lpk"), n), [blinking_form(k, prec).coeffs[n] for k in range(k_max + 1)],
                 "substituted left peaks by cycle type")

    def udrct():
        coeffs = []
        for k in range(k_max + 1):
            coeffs += [dfh_form(k, prec).coeffs[n], blinking_form(k, prec).coeffs[n]]
        _against(udr_side(F("udr"), n), coeffs, "substituted up-down runs by cycle type")

    out = [
        ("lem:Pproduct", n, None, p_two_ways),
        ("thm:pkdesct-a", n, k_max, pkdesct_a),
        ("thm:pkdesct-b", n, k_max, pkdesct_b),
        ("thm:pkdesct-c", n, k_max, pkdesct_c),
        ("thm:lpkdesct-a", n, k_max, lpkdesct_a),
        ("thm:lpkdesct-b", n, k_max, lpkdesct_b),
        ("thm:udrct", n, k_max, udrct),
    ]
    out += general_checks("all", n, k_max, Q, fetcher(n, "all"), "cycletype")
    return out


def necklace_checks(i_max: int = 12, k_max: int = 5) -> List[tuple]:
    def integrality():
        for i in range(1, i_max + 1):
            for k in range(k_max + 1):
                for name, fn in (("f", f_count), ("g", g_count), ("h", h_count)):
                    _as_int(fn(i, k), f"{name}_{{{i},{k}}}")
        for k in range(k_max + 1):
            if not f_count(1, k) == g_count(1, k) == h_count(1, k) == k:
                raise CheckFailed(f"length-one counts differ from k={k}")

    def brute_force():
        for i in range(1, i_max + 1):
            for k in range(k_max + 1):
                if k ** i > 100_000:
                    continue
                if primitive_necklaces(i, k) != f_count(i, k):
                    raise CheckFailed(f"f_{{{i},{k}}} = {f_count(i, k)} but enumeration gives "
                                      f"{primitive_necklaces(i, k)}")

    def products():
        prec = i_max + 1
        one = MultiPoly.constant(1)
        for k in range(k_max + 1):
            fs = [(1 - x ** i, -int(f_count(i, k))) for i in range(1, prec)]
            check_poly(product([(1 - k * x, -1)], prec).to_poly(), product(fs, prec).to_poly(),
                       f"prod (1-x^i)^(-f) = 1/(1-kx), k={k}")
            gs = []
            hs = [(1 - x, -1)]
            for i in range(1, prec):
                g, h = int(g_count(i, k)), int(h_count(i, k))
                gs += [(one + x ** i, g), (one - x ** i, -g)]
                hs += [(one + x ** i, h), (one - x ** i, -h)]
            check_poly(product([(1 - 2 * k * x, -1)], prec).to_poly(), product(gs, prec).to_poly(),
                       f"g product = 1/(1-2kx), k={k}")
            check_poly(product([(1 - (2 * k + 1) * x, -1)], prec).to_poly(), product(hs, prec).to_poly(),
                       f"h product = 1/(1-(2k+1)x), k={k}")

    return [
        ("necklace:integrality", i_max, k_max, integrality),
        ("necklace:enumeration", i_max, k_max, brute_force),
        ("necklace:products", i_max, k_max, products),
    ]


def suite(n_max: int, k_max: int) -> List[tuple]:
    n_max = min(n_max, 7)
    prec = n_max + 1
    out: List[tuple] = []
    for n in range(1, n_max + 1):
        out += cycletype_checks(n, k_max, prec)
    out += necklace_checks()
    return out
