"""Variable changes linking descent-statistic polynomials to Theta sequences.

For a permutation family with symmetric function Q = sum c_lambda p_lambda
of degree n, the distributions of (pk, des), (lpk, des), pk, lpk, des and
udr become, after the substitutions below, rational functions in t whose
t^k coefficients are specializations of Q.  This module builds both sides
of those identities and inverts the substitutions as power series.

    Y = (1+y)^2 t / ((y+t)(1+yt)),   T = (y+t)/(1+yt)
    s = 4t/(1+t)^2                   (peaks, left peaks)
    s = 2t/(1+t^2)                   (up-down runs)

The (Y, T) change is undone by the series u, v in t with
Y(u, v) = y and T(u, v) = t; see ``uv_series``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping

from ..eulerian import eulerian_A, eulerian_B
from ..exactalg import (MultiPoly, ZERO, RatFunc, TruncSeries, eval_at_series, ratfunc_equal,
                        rational_subs, rational_str)
from ..symfunc import SymFunc, shift_X_plus_1, theta
from .report import CheckFailed

t = MultiPoly.var("t")
y = MultiPoly.var("y")

Y_MAP = RatFunc.from_factors((1 + y) ** 2 * t, {y + t: 1, 1 + y * t: 1})
T_MAP = RatFunc.from_factors(y + t, {1 + y * t: 1})
PK_MAP = RatFunc.from_factors(4 * t, {1 + t: 2})
UDR_MAP = RatFunc.from_factors(2 * t, {1 + t * t: 1})


def over(num, factors: Mapping[MultiPoly, int]) -> RatFunc:
    return RatFunc.from_factors(num, factors)


# -- witnesses ----------------------------------------------------------------

def _mono_str(exps, names) -> str:
    parts = [f"{v}^{e}" if e > 1 else v for v, e in zip(names, exps) if e]
    return "*".join(parts) or "1"


def poly_witness(expected, actual) -> str | None:
    """Describe the first monomial where two polynomials differ, or None."""
    expected = MultiPoly.coerce(expected)
    actual = MultiPoly.coerce(actual)
    diff = expected - actual
    if diff.is_zero():
        return None
    names = sorted(set(expected.variables()) | set(actual.variables()))
    exps, _ = sorted(diff.terms(names))[0]
    a = expected.coefficient(**dict(zip(names, exps)))
    b = actual.coefficient(**dict(zip(names, exps)))
    return f"coefficient of {_mono_str(exps, names)}: expected {rational_str(a)}, got {rational_str(b)}"


def check_poly(expected, actual, what: str) -> None:
    w = poly_witness(expected, actual)
    if w:
        raise CheckFailed(f"{what}: {w}")


def check_rational(lhs, rhs, what: str) -> None:
    lhs, rhs = RatFunc.coerce(lhs), RatFunc.coerce(rhs)
    if ratfunc_equal(lhs, rhs):
        return
    fa, fb = lhs.factors, rhs.factors
    lcm = {f: max(fa.get(f, 0), fb.get(f, 0)) for f in set(fa) | set(fb)}
    left = lhs.num
    for f, e in lcm.items():
        left = left * f ** (e - fa.get(f, 0))
    right = rhs.num
    for f, e in lcm.items():
        right = right * f ** (e - fb.get(f, 0))
    raise CheckFailed(f"{what}: cross-multiplied numerators differ, {poly_witness(left, right)}")


def check_series(rat: RatFunc, seq: TruncSeries, what: str) -> None:
    j = RatFunc.coerce(rat).series_witness(seq)
    if j is not None:
        raise CheckFailed(f"{what}: {seq.var}^{j}")


def check_series_equal(a: TruncSeries, b: TruncSeries, what: str) -> None:
    j = a.witness(b)
    if j is not None:
        raise CheckFailed(f"{what}: {a.var}^{j}")


def series_to_poly(s: TruncSeries, degree: int, what: str) -> MultiPoly:
    """Collect coefficients up to ``degree``; the rest of the window must vanish."""
    for j in range(degree + 1, s.prec):
        if not s.coeffs[j].is_zero():
            raise CheckFailed(f"{what}: nonzero trailing coefficient at {s.var}^{j}")
    v = MultiPoly.var(s.var)
    out = ZERO
    for j in range(min(degree + 1, s.prec)):
        c = s.coeffs[j]
        if isinstance(c, RatFunc):
            p = c.to_poly()
            if p is None:
                raise CheckFailed(f"{what}: coefficient of {s.var}^{j} is not a polynomial")
            c = p
        out = out + c * v ** j
    return out


# -- the substituted distribution side ------------------------------------------

def pkdes_side(P, n: int) -> RatFunc:
    """(1/(1+y)) ((1+yt)/(1-t))^(n+1) P(Y, T) for P in y^(pk+1) t^(des+1)."""
    body = rational_subs(MultiPoly.coerce(P), {"y": Y_MAP, "t": T_MAP})
    return body * over((1 + y * t) ** (n + 1), {1 + y: 1, 1 - t: n + 1})


def lpkdes_side(P, n: int) -> RatFunc:
    """(1+yt)^n / (1-t)^(n+1) P(Y, T) for P in y^lpk t^des."""
    body = rational_subs(MultiPoly.coerce(P), {"y": Y_MAP, "t": T_MAP})
    return body * over((1 + y * t) ** n, {1 - t: n + 1})


def pk_side(P, n: int) -> RatFunc:
    """(1/2) ((1+t)/(1-t))^(n+1) P(4t/(1+t)^2) for P in t^(pk+1)."""
    body = rational_subs(MultiPoly.coerce(P), {"t": PK_MAP})
    return body * over((1 + t) ** (n + 1) * Fraction(1, 2), {1 - t: n + 1})


def lpk_side(P, n: int) -> RatFunc:
    """(1+t)^n / (1-t)^(n+1) P(4t/(1+t)^2) for P in t^lpk."""
    body = rational_subs(MultiPoly.coerce(P), {"t": PK_MAP})
    return body * over((1 + t) ** n, {1 - t: n + 1})


def des_side(P, n: int) -> RatFunc:
    """P(t) / (1-t)^(n+1) for P in t^(des+1)."""
    return over(MultiPoly.coerce(P), {1 - t: n + 1})


def udr_side(P, n: int) -> RatFunc:
    """(1+t^2)^n / (2 (1-t)^2 (1-t^2)^(n-1)) P(2t/(1+t^2)) for P in t^udr."""
    body = rational_subs(MultiPoly.coerce(P), {"t": UDR_MAP})
    fac = {1 - t: 2}
    if n > 1:
        fac[1 - t * t] = n - 1
    return body * over((1 + t * t) ** n * Fraction(1, 2), fac)


# -- Eulerian sums ------------------------------------------------------------

def eulerian_sum(coeffs: Mapping[int, object], kind: str = "A", scale2: bool = False,
                 squared: bool = False) -> RatFunc:
    """sum_k c_k X_k(s) / (1-s)^(k+1), X = A or B, s = t or t^2.

    With ``scale2`` each term carries an extra 2^k.
    """
    s = t * t if squared else t
    items = [(k, MultiPoly.coerce(c)) for k, c in coeffs.items() if not MultiPoly.coerce(c).is_zero()]
    if not items:
        return RatFunc.coerce(0)
    top = max(k for k, _ in items)
    poly = eulerian_A if kind == "A" else eulerian_B
    num = ZERO
    for k, c in items:
        term = poly(k).subs({"t": s}) if squared else poly(k)
        if scale2:
            term = term * 2 ** k
        num = num + c * term * (1 - s) ** (top - k)
    return over(num, {1 - s: top + 1})


def _factor(m: int, yy) -> MultiPoly:
    return 1 - (-MultiPoly.coerce(yy)) ** m


def by_length(Q: SymFunc, yy="y") -> Dict[int, MultiPoly]:
    """l -> sum over lambda of length l of c_lambda prod_i (1 - (-y)^lambda_i)."""
    yv = MultiPoly.var(yy) if isinstance(yy, str) else MultiPoly.coerce(yy)
    out: Dict[int, MultiPoly] = {}
    for lam, c in Q.terms.items():
        w = MultiPoly.coerce(c) if not isinstance(c, RatFunc) else c.to_poly()
        for part in lam:
            w = w * _factor(part, yv)
        out[len(lam)] = out.get(len(lam), ZERO) + w
    return {l: c for l, c in out.items() if not c.is_zero()}


def by_odd_parts(Q: SymFunc) -> Dict[int, MultiPoly]:
    """o -> sum of c_lambda over lambda with o odd parts."""
    out: Dict[int, MultiPoly] = {}
    for lam, c in Q.terms.items():
        o = sum(1 for part in lam if part % 2)
        out[o] = out.get(o, ZERO) + MultiPoly.coerce(c)
    return {o: c for o, c in out.items() if not c.is_zero()}


def theta_rhs(Q: SymFunc, yy="y") -> RatFunc:
    """sum_k Theta_{y,k}(Q) t^k as a rational function in t."""
    return eulerian_sum(by_length(Q, yy))


def theta_sequence(Q: SymFunc, k_max: int, yy="y", squared: bool = False,
                   offset: int = 0) -> TruncSeries:
    """sum_{k <= k_max} Theta_{y,k}(Q) t^k as a series, or in t^2 when ``squared``."""
    step = 2 if squared else 1
    prec = step * k_max + offset + 1
    coeffs = [ZERO] * prec
    for k in range(k_max + 1):
        coeffs[step * k + offset] = theta(Q, k, y=yy, x=None)
    return TruncSeries("t", coeffs, prec)


def wk_coefficients(F) -> Dict[int, MultiPoly]:
    """Coefficients of w^k in a polynomial in w."""
    F = MultiPoly.coerce(F)
    return F.expand_in("w") if not F.is_zero() else {}


# -- inversion of the substitutions --------------------------------------------

@lru_cache(maxsize=None)
def pq_series(prec: int):
    """P = 2/(1+t+S) and Q = 2/(1-t+S) with S = sqrt((1+t)^2 - 4yt), to O(t^prec)."""
    one = TruncSeries.constant(1, "t", prec)
    tt = TruncSeries.variable("t", prec)
    disc = TruncSeries.from_poly((1 + t) ** 2 - 4 * y * t, "t", prec)
    S = disc.sqrt()
    return (one + tt + S).inverse() * 2, (one - tt + S).inverse() * 2


@lru_cache(maxsize=None)
def uv_series(prec: int):
    """(u, v) with Y(u, v) = y and T(u, v) = t, to O(t^prec).

    v = y t P^2 and u = (1-y) t Q^2, with P and Q from ``pq_series``.
    """
    tt = TruncSeries.variable("t", prec)
    P, Q = pq_series(prec)
    v = tt * P * P * y
    u = tt * Q * Q * (1 - y)
    return u, v


def uv_round_trip(prec: int) -> None:
    """Assert Y(u, v) = y and T(u, v) = t in cross-multiplied form, plus the P relation."""
    u, v = uv_series(prec)
    one = TruncSeries.constant(1, "t", prec)
    tt = TruncSeries.variable("t", prec)
    uv1 = one + u * v
    check_series_equal((u + v) * uv1 * y, (one + u) * (one + u) * v, "Y(u,v) = y")
    check_series_equal(u + v, tt * uv1, "T(u,v) = t")
    P, Q = pq_series(prec)
    check_series_equal(P, one - tt * P + tt * P * P * y, "P = 1 - tP + ytP^2")
    check_series_equal(Q * (one - tt * P), P, "Q = P/(1-tP)")


def _length_numerator(Q: SymFunc, n: int) -> MultiPoly:
    """sum_lambda c_lambda prod(1-(-y)^lambda_i) A_l(t) (1-t)^(n-l)."""
    num = ZERO
    for l, c in by_length(Q).items():
        num = num + c * eulerian_A(l) * (1 - t) ** (n - l)
    return num


def pkdes_via_uv(Q: SymFunc, n: int) -> MultiPoly:
    """The (pk, des) distribution of a family from its symmetric function."""
    prec = n + 4
    u, v = uv_series(prec)
    R = eval_at_series(_length_numerator(Q, n), {"y": u, "t": v})
    one = TruncSeries.constant(1, "t", prec)
    lead = (one + u) * (one + u * v).inverse() ** (n + 1)
    return series_to_poly(lead * R, n, "pkdes inversion")


def lpkdes_via_uv(Q: SymFunc, n: int) -> MultiPoly:
    """The (lpk, des) distribution of a family from its symmetric function."""
    prec = n + 4
    u, v = uv_series(prec)
    R = eval_at_series(_length_numerator(shift_X_plus_1(Q), n), {"y": u, "t": v})
    one = TruncSeries.constant(1, "t", prec)
    return series_to_poly((one + u * v).inverse() ** n * R, n, "lpkdes inversion")


@lru_cache(maxsize=None)
def _pk_inverse(prec: int) -> TruncSeries:
    # T with 4T/(1+T)^2 = t, i.e. T = (t/4)(1+T)^2
    tt = TruncSeries.variable("t", prec)
    one = TruncSeries.constant(1, "t", prec)
    T = TruncSeries("t", [], prec)
    for _ in range(prec):
        T = tt * (one + T) * (one + T) * Fraction(1, 4)
    return T


@lru_cache(maxsize=None)
def _udr_inverse(prec: int) -> TruncSeries:
    # T with 2T/(1+T^2) = t, i.e. T = (t/2)(1+T^2)
    tt = TruncSeries.variable("t", prec)
    one = TruncSeries.constant(1, "t", prec)
    T = TruncSeries("t", [], prec)
    for _ in range(prec):
        T = tt * (one + T * T) * Fraction(1, 2)
    return T


def _compose(R, T: TruncSeries) -> TruncSeries:
    return eval_at_series(RatFunc.coerce(R), {"t": T})


def pk_inverse(R, n: int, degree: int | None = None) -> MultiPoly:
    """P with (1/2)((1+t)/(1-t))^(n+1) P(4t/(1+t)^2) = R(t)."""
    prec = n + 4
    T = _pk_inverse(prec)
    one = TruncSeries.constant(1, "t", prec)
    pre = ((one - T) * (one + T).inverse()) ** (n + 1) * 2
    return series_to_poly(pre * _compose(R, T), n if degree is None else degree, "pk inversion")


def lpk_inverse(R, n: int) -> MultiPoly:
    """P with (1+t)^n/(1-t)^(n+1) P(4t/(1+t)^2) = R(t)."""
    prec = n + 4
    T = _pk_inverse(prec)
    one = TruncSeries.constant(1, "t", prec)
    pre = (one - T) ** (n + 1) * (one + T).inverse() ** n
    return series_to_poly(pre * _compose(R, T), n, "lpk inversion")


def udr_inverse(R, n: int) -> MultiPoly:
    """P with (1+t^2)^n/(2(1-t)^2(1-t^2)^(n-1)) P(2t/(1+t^2)) = R(t)."""
    prec = n + 4
    T = _udr_inverse(prec)
    one = TruncSeries.constant(1, "t", prec)
    pre = (one - T) ** 2 * (one - T * T) ** (n - 1) * (one + T * T).inverse() ** n * 2
    return series_to_poly(pre * _compose(R, T), n, "udr inversion")


def des_inverse(R, n: int) -> MultiPoly:
    prec = n + 4
    s = RatFunc.coerce(R).series("t", prec) * TruncSeries.from_poly((1 - t) ** (n + 1), "t", prec)
    return series_to_poly(s, n, "des inversion")
