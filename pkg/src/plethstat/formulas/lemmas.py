"""Checks of the symmetric-function identities everything else rests on.

Three groups:

* ribbon and power-sum expansions of 1/(1 - tE(yx)H(x)) and its
  relatives, compared coefficient by coefficient in the p-basis;
* the algebraic series P, Q, u, v behind the (pk, des) inversion;
* plethysm rules (H of sums, monic terms, scalar products), tested on
  seeded random symmetric functions.

The grading variable x is implicit: the degree-n slice is the x^n term.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import factorial
from typing import Callable, List

from ..eulerian import eulerian_A, eulerian_B
from ..exactalg import MultiPoly, RatFunc, TruncSeries, ZERO
from ..permstat import class_sizes, class_table, comp_stats
from ..symfunc import (E_series, H_series, SymFunc, compositions_of, descent_mask, e_in_p,
                       evaluate_at, h_in_p, lyndon_of, odd_parts, partitions_of,
                       partitions_up_to, plethysm, ribbon_in_p, scalar_product,
                       shift_X_plus_1, symfunc_witness, theta, z_of)
from .cyclic import even_mobius_sum
from .report import CheckFailed
from .transforms import check_poly, check_rational, over, pq_series, t, uv_round_trip, y

q = MultiPoly.var("q")
z = MultiPoly.var("z")
alpha = MultiPoly.var("alpha")
ONE = MultiPoly.constant(1)


def _compare(lhs: SymFunc, rhs: SymFunc, what: str, degree: int) -> None:
    """Exact comparison of every p_lambda coefficient with |lambda| <= degree."""
    for lam in partitions_up_to(degree):
        a, b = lhs[lam], rhs[lam]
        if isinstance(a, RatFunc) or isinstance(b, RatFunc):
            check_rational(a, b, f"{what}, coefficient of p{list(lam)}")
        else:
            check_poly(a, b, f"{what}, coefficient of p{list(lam)}")


def geometric(c: MultiPoly, F: SymFunc, N: int) -> SymFunc:
    """1/(1 - cF) for F with constant term 1, as sum_m c^m (F-1)^m / (1-c)^(m+1)."""
    G = (F - 1).truncate(N)
    total = SymFunc.zero().truncate(N)
    power = SymFunc.constant(1).truncate(N)
    for m in range(N + 1):
        total = total + power.map_coeffs(lambda a, m=m: over(a * c ** m, {1 - c: m + 1}))
        power = (power * G).truncate(N)
    return total


def ribbon_sum(N: int, coeff: Callable[[tuple], object], start: int = 1) -> SymFunc:
    """sum over compositions L of n, start <= n <= N, of coeff(L) r_L."""
    total = SymFunc.zero().truncate(N)
    for n in range(start, N + 1):
        for L in compositions_of(n):
            total = total + ribbon_in_p(L).scale(coeff(L))
    return total


def power_sum(N: int, coeff: Callable[[tuple], object], odd_only: bool = False) -> SymFunc:
    """sum over partitions lambda with |lambda| <= N of coeff(lambda) p_lambda / z_lambda."""
    terms = {}
    for lam in partitions_up_to(N):
        if odd_only and any(p % 2 == 0 for p in lam):
            continue
        terms[lam] = RatFunc.coerce(coeff(lam)) * Fraction(1, z_of(lam))
    return SymFunc._raw({l: c for l, c in terms.items() if not c.is_zero()}, N, False)


# -- the three generating functions ----------------------------------------------

def ribexp_lhs(part: str, N: int) -> SymFunc:
    H = H_series(N)
    if part == "a":
        return geometric(t, E_series(N, var="y") * H, N)
    if part == "b":
        return (H * geometric(t, E_series(N, var="y") * H, N)).truncate(N)
    G = geometric(t * t, E_series(N) * H, N)
    return (G + (H * G).scale(t)).truncate(N)


def ribexp_a_coeff(L: tuple) -> RatFunc:
    n, s = sum(L), comp_stats(L)
    pk, des = s.pk, s.des
    e_yt = (n + 1) - (pk + 1) - (des + 1)
    # the 1/(1+y) prefactor cancels one power of (1+y)^2
    num = (1 + y) ** (2 * pk + 1) * t ** (pk + 1) * (y + t) ** (des - pk)
    fac = {1 - t: n + 1}
    if e_yt >= 0:
        num = num * (1 + y * t) ** e_yt
    else:
        fac[1 + y * t] = -e_yt
    return over(num, fac)


def ribexp_b_coeff(L: tuple) -> RatFunc:
    n, s = sum(L), comp_stats(L)
    lpk, des = s.lpk, s.des
    e_yt = n - lpk - des
    num = (1 + y) ** (2 * lpk) * t ** lpk * (y + t) ** (des - lpk)
    fac = {1 - t: n + 1}
    if e_yt >= 0:
        num = num * (1 + y * t) ** e_yt
    else:
        fac[1 + y * t] = -e_yt
    return over(num, fac)


def ribexp_c_coeff(L: tuple) -> RatFunc:
    n, udr = sum(L), comp_stats(L).udr
    num = (1 + t * t) ** (n - udr) * (2 * t) ** udr
    fac = {1 - t: 2}
    if n > 1:
        fac[1 - t * t] = n - 1
    return over(num * Fraction(1, 2), fac)


def ribexp_rhs(part: str, N: int) -> SymFunc:
    coeff = {"a": ribexp_a_coeff, "b": ribexp_b_coeff, "c": ribexp_c_coeff}[part]
    return ribbon_sum(N, coeff) + over(ONE, {1 - t: 1})


def psexp_rhs(part: str, N: int) -> SymFunc:
    def a_coeff(lam):
        l = len(lam)
        prod = ONE
        for p in lam:
            prod = prod * (1 - (-y) ** p)
        return over(eulerian_A(l) * prod, {1 - t: l + 1})

    def b_coeff(lam, s=t):
        o = odd_parts(lam)
        return over(eulerian_B(o).subs({"t": s}), {1 - s: o + 1})

    if part == "a":
        return power_sum(N, a_coeff)
    if part == "b":
        return power_sum(N, b_coeff)
    s = t * t
    odd = power_sum(N, lambda lam: over(eulerian_A(len(lam)).subs({"t": s}) * 2 ** len(lam),
                                        {1 - s: len(lam) + 1}), odd_only=True)
    return odd + power_sum(N, lambda lam: b_coeff(lam, s)).scale(t)


def psexp_lhs(part: str, N: int) -> SymFunc:
    H = H_series(N)
    if part == "a":
        return ribexp_lhs("a", N)
    if part == "b":
        return (H * geometric(t, E_series(N) * H, N)).truncate(N)
    return ribexp_lhs("c", N)


def peaks_rhs(N: int) -> SymFunc:
    return power_sum(N, lambda lam: over(eulerian_A(len(lam)) * 2 ** len(lam),
                                         {1 - t: len(lam) + 1}), odd_only=True)


def dd_sides(N: int) -> tuple:
    Ht = H_series(N, var="t")
    lhs = (Ht * geometric(t * t, E_series(N) * Ht, N)).truncate(N)

    def coeff(L):
        n, dd = sum(L), comp_stats(L).ddes
        return over((t * t - t + 1) ** dd * t ** (n - dd), {1 - t: n, 1 - t * t: 1})

    rhs = ribbon_sum(N, coeff) + over(ONE, {1 - t * t: 1})
    return lhs, rhs


def biruns_sides(N: int) -> tuple:
    H, E = H_series(N), E_series(N)
    G = geometric(t * t, E * H, N)
    lhs = ((H.scale(t) + E.scale(t) + 2) * G).truncate(N)

    def coeff(L):
        n, br = sum(L), comp_stats(L).br
        num = (1 + t) ** 3 * (1 + t * t) ** (n - 1 - br) * (2 * t) ** br * Fraction(1, 2)
        return over(num, {1 - t: 1, 1 - t * t: n})

    rhs = ribbon_sum(N, coeff, start=2)
    rhs = rhs + h_in_p(1).scale(over(2 * t, {1 - t: 2})) + over(2 * ONE, {1 - t: 1})
    return lhs, rhs.truncate(N)


# -- P^a Q^b by Lagrange inversion ------------------------------------------------------

def binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer n; zero when k < 0."""
    if k < 0:
        return 0
    out = Fraction(1)
    for j in range(k):
        out = out * (n - j) / (j + 1)
    return int(out)


def lagrange_PQ(a: int, b: int, prec: int) -> TruncSeries:
    coeffs = []
    for j in range(prec):
        c = ZERO
        for i in range(j + 1):
            m = a + b + i + j - 1
            v = binom(m, i) * binom(a + j - 1, j - i) - binom(m, i - 1) * binom(a + j, j - i)
            c = c + y ** i * ((-1) ** (j - i) * v)
        coeffs.append(c)
    return TruncSeries("t", coeffs, prec)


def lagrange_check(a: int, b: int, prec: int) -> None:
    P, Q = pq_series(prec)
    lhs = TruncSeries.constant(1, "t", prec)
    for _ in range(a):
        lhs = lhs * P
    for _ in range(b):
        lhs = lhs * Q
    j = lhs.witness(lagrange_PQ(a, b, prec))
    if j is not None:
        raise CheckFailed(f"P^{a} Q^{b}: coefficient of t^{j} differs from the binomial sum")


# -- random symmetric functions ---------------------------------------------------------

def random_coeff(rng: random.Random) -> MultiPoly:
    c = MultiPoly.constant(Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3])))
    if rng.random() < 0.4:
        c = c * q ** rng.randint(1, 2)
    if rng.random() < 0.2:
        c = c * z
    return c


def random_symfunc(rng: random.Random, degree: int, constant: bool = False,
                   terms: int = 6) -> SymFunc:
    """A bounded f with a few random p_lambda terms of degree 1..degree."""
    pool = [lam for lam in partitions_up_to(degree) if lam]
    out = {lam: random_coeff(rng) for lam in rng.sample(pool, min(terms, len(pool)))}
    if constant:
        out[()] = MultiPoly.constant(rng.randint(1, 3))
    return SymFunc(out)


def random_monic(rng: random.Random) -> MultiPoly:
    return rng.choice([q, z, q * z, q ** 2, q * z ** 2])


def _same(lhs: SymFunc, rhs: SymFunc, what: str) -> None:
    lam = symfunc_witness(lhs, rhs)
    if lam is not None:
        raise CheckFailed(f"{what}: coefficients of p{list(lam)} differ")


def _series_of(expr: RatFunc, var: str, N: int) -> MultiPoly:
    return RatFunc.coerce(expr).series(var, N + 1).to_poly()


def property_checks(deg_max: int, seed: int = 0, trials: int = 3) -> List[tuple]:
    N = deg_max

    def Hps():
        rng = random.Random(seed)
        H = H_series(N)
        for _ in range(trials):
            f, g = random_symfunc(rng, N), random_symfunc(rng, N)
            m = random_monic(rng)
            _same(plethysm(H, f + g), (plethysm(H, f) * plethysm(H, g)).truncate(N), "H[f+g] = H[f]H[g]")
            Hm = H_series(N, var="q").map_coeffs(lambda c: c.subs({"q": m}))
            _same(plethysm(H, f * m), plethysm(Hm, f), f"H[mf] = H(m)[f], m = {m}")
            for k in range(-3, 4):
                _same(plethysm(H, f.scale(k)), plethysm(H, f) ** k if k >= 0 else
                      plethysm(H, f).inverse(N) ** (-k), f"H[kf] = H[f]^k, k = {k}")

    def HE():
        H = H_series(N)
        X = SymFunc.p(1)
        for m in (q, z, q * z ** 2):
            Hm = H_series(N, var="q").map_coeffs(lambda c: c.subs({"q": m}))
            _same(plethysm(H, X * m), Hm, f"H[mX] = H(m), m = {m}")
            Em = E_series(N, var="q", negate=True).map_coeffs(lambda c: c.subs({"q": m}))
            _same(plethysm(H, X * (-m)), Em, f"H[-mX] = E(-m), m = {m}")
            geometric_part = ZERO
            for n in range(N + 1):
                hn = plethysm(h_in_p(n), m)
                check_poly(m ** n, hn, f"h_{n}[m] = m^{n}")
                geometric_part = geometric_part + hn
            check_poly(_series_of(over(ONE, {1 - q: 1}), "q", N).subs({"q": m}), geometric_part,
                       "H[m] = 1/(1-m) up to degree N")
        Hz = H_series(N, var="z")
        for k in range(-3, 4):
            lhs = plethysm(Hz, (1 - alpha) * k, plethystic_vars=["alpha"])
            rhs = (TruncSeries.from_poly(1 - z * alpha, "z", N + 1).power(k)
                   * TruncSeries.from_poly(1 - z, "z", N + 1).power(-k)).to_poly()
            check_poly(rhs, lhs, f"H(z)[k(1-alpha)], k = {k}")

    def plethHsp():
        rng = random.Random(seed + 2)
        H = H_series(N)
        X = SymFunc.p(1)
        for _ in range(trials):
            f = random_symfunc(rng, N)
            g = random_coeff(rng) + random_monic(rng) + rng.randint(-2, 2)
            check_poly(plethysm(f, g), scalar_product(f, plethysm(H, X * g)), f"f[g], g = {g}")

    def spconst():
        rng = random.Random(seed + 3)
        H = H_series(N)
        X = SymFunc.p(1)
        for _ in range(trials):
            f, g = random_symfunc(rng, N, constant=True), random_symfunc(rng, N, constant=True)
            for m in (ONE, random_monic(rng)):
                shifted = plethysm(f, X + m, plethystic_vars=sorted(set(m.variables())))
                rhs = scalar_product(f, (plethysm(H, X * m) * g).truncate(N))
                check_poly(rhs, scalar_product(shifted, g), f"<f[X+m], g>, m = {m}")
            check_poly(scalar_product(f, (H * g).truncate(N)), scalar_product(shift_X_plus_1(f), g),
                       "<f[X+1], g> = <f, Hg>")

    def scalprodh():
        rng = random.Random(seed + 4)
        H = H_series(N)
        Ea = E_series(N, var="alpha", negate=True)
        Ey = E_series(N, var="y")
        for _ in range(trials):
            f = random_symfunc(rng, N, constant=True)
            for k in range(-3, 4):
                Hk = H ** k if k >= 0 else H.inverse(N) ** (-k)
                Ek = Ea ** k if k >= 0 else Ea.inverse(N) ** (-k)
                lhs = plethysm(f, (1 - alpha) * k, plethystic_vars=["alpha"])
                check_poly(scalar_product(f, (Hk * Ek).truncate(N)), lhs,
                           f"f[k(1-alpha)] = <f, H^k E(-alpha)^k>, k = {k}")
                if k >= 0:
                    check_poly(scalar_product(f, (H ** k * Ey ** k).truncate(N)), theta(f, k, x=None),
                               f"Theta_(y,k)(f) = <f, H^k E(y)^k>, k = {k}")

    def expsum():
        # with a_k = p_k the identity is generic; it is also checked on random numbers
        gen = SymFunc._raw({(k,): MultiPoly.constant(Fraction(1, k)) for k in range(1, N + 1)},
                           N, False)
        _same(gen.exp(N), power_sum(N, lambda lam: ONE), "exp(sum p_k/k) = sum p_lambda/z_lambda")
        rng = random.Random(seed + 5)
        for _ in range(trials):
            a = [rng.randint(-5, 5) for _ in range(N + 1)]
            lhs = TruncSeries("x", [0] + [Fraction(a[k], k) for k in range(1, N + 1)], N + 1).exp()
            rhs = [Fraction(0)] * (N + 1)
            for lam in partitions_up_to(N):
                prod = Fraction(1, z_of(lam))
                for p in lam:
                    prod *= a[p]
                rhs[sum(lam)] += prod
            j = lhs.witness(TruncSeries("x", rhs, N + 1))
            if j is not None:
                raise CheckFailed(f"exp sum with a = {a}: coefficient of x^{j}")

    def HEXplus1():
        Hz = H_series(N, var="z")
        Ez = E_series(N, var="z")
        for name, F, factor in (("H", Hz, over(ONE, {1 - z: 1})), ("E", Ez, 1 + z)):
            lhs = shift_X_plus_1(F)
            expected = F.map_coeffs(lambda c: _series_of(RatFunc.coerce(c) * factor, "z", N))
            for lam in partitions_up_to(N):
                check_poly(expected[lam].truncated("z", N + 1), lhs[lam].truncated("z", N + 1),
                           f"{name}(z)[X+1], coefficient of p{list(lam)}")

    def monic():
        rng = random.Random(seed + 6)
        for _ in range(trials):
            f = random_symfunc(rng, N, constant=True)
            ms = [random_monic(rng) for _ in range(rng.randint(1, 3))] + [ONE] * rng.randint(0, 2)
            check_poly(evaluate_at(f, ms), plethysm(f, sum(ms, ZERO)), f"f[m1 + ...] at {ms}")
            k = rng.randint(1, 4)
            check_poly(evaluate_at(f, [1] * k), theta(f, k, y=0, x=None), f"f[{k}] = f(1,...,1)")

    return [
        ("lem:Hps", N, None, Hps),
        ("lem:HE", N, None, HE),
        ("lem:plethHsp", N, None, plethHsp),
        ("lem:spconst", N, None, spconst),
        ("lem:scalprodh", N, 3, scalprodh),
        ("lem:expsum", N, None, expsum),
        ("lem:HEXplus1", N, None, HEXplus1),
        ("thm:monic", N, None, monic),
    ]


# -- combinatorial consistency -------------------------------------------------------

def mobius_check(n_max: int) -> None:
    for n in range(1, n_max + 1):
        expected = -1 if n > 1 and n & (n - 1) == 0 else 0
        if even_mobius_sum(n) != expected:
            raise CheckFailed(f"n = {n}: even-divisor Mobius sum is {even_mobius_sum(n)}")


def lyndon_ribbon_check(n: int) -> None:
    """<L_lambda, r_M> against the number of permutations with that cycle type and descent set."""
    table = class_table(n)
    for lam in partitions_of(n):
        L = lyndon_of(lam)
        for M in compositions_of(n):
            got = scalar_product(L, ribbon_in_p(M))
            want = table.get((descent_mask(M), lam), 0)
            if got != want:
                raise CheckFailed(f"<L{list(lam)}, r{list(M)}> = {got}, enumeration gives {want}")


def ribbon_monomial(comp: tuple, values: list) -> Fraction:
    """The defining sum of r_L: weakly increasing within a run, strict descent between runs."""
    n = sum(comp)
    strict = set()
    pos = 0
    for part in comp[:-1]:
        pos += part
        strict.add(pos)
    r = len(values)
    # dp over positions: weight of sequences ending at variable index i
    ways = [Fraction(values[i]) for i in range(r)]
    for pos in range(1, n):
        nxt = [Fraction(0)] * r
        for i in range(r):
            if pos in strict:
                acc = sum(ways[i + 1:], Fraction(0))
            else:
                acc = sum(ways[:i + 1], Fraction(0))
            nxt[i] = acc * values[i]
        ways = nxt
    return sum(ways, Fraction(0))


def ribbon_values_check(n_max: int, seed: int = 0, points: int = 3) -> None:
    rng = random.Random(seed)
    for _ in range(points):
        values = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(6)]
        for n in range(1, n_max + 1):
            for L in compositions_of(n):
                got = evaluate_at(ribbon_in_p(L), values).constant_term()
                want = ribbon_monomial(L, values)
                if got != want:
                    raise CheckFailed(f"r{list(L)} at {values}: p-basis gives {got}, defining sum {want}")


def classical_symfunc_checks(N: int) -> None:
    H, E = H_series(N, var="z"), E_series(N, var="z", negate=True)
    _same((H * E).truncate(N), SymFunc.constant(1).truncate(N), "H(z) E(-z) = 1")
    for n in range(1, min(N, 6) + 1):
        total = SymFunc.zero()
        for lam in partitions_of(n):
            total = total + lyndon_of(lam)
        _same(total, SymFunc.p(*([1] * n)), f"sum of L_lambda over lambda of {n} = p_1^{n}")
        _same(e_in_p(n), plethysm(h_in_p(n), SymFunc.p(1).scale(-1)).scale((-1) ** n),
              f"e_{n} = (-1)^n h_{n}[-X]")
    for n in range(1, min(N, 7) + 1):
        for lam, count in class_sizes(n).items():
            if factorial(n) != count * z_of(lam):
                raise CheckFailed(f"{count} permutations of type {lam}, but n!/z = {factorial(n) // z_of(lam)}")


# -- suite --------------------------------------------------------------------------------

def expansion_checks(N: int) -> List[tuple]:
    N = min(N, 6)
    out = []
    for part in "abc":
        out.append((f"lem:ribexp-{part}", N, None,
                    lambda part=part: _compare(ribexp_lhs(part, N), ribexp_rhs(part, N),
                                               f"ribbon expansion ({part})", N)))
    for part in "abc":
        out.append((f"lem:psexp-{part}", N, None,
                    lambda part=part: _compare(psexp_lhs(part, N), psexp_rhs(part, N),
                                               f"power sum expansion ({part})", N)))

    def p_peaks():
        lhs = geometric(t, E_series(N) * H_series(N), N)
        _compare(lhs, peaks_rhs(N), "odd power sum expansion at y = 1", N)

    def dd():
        _compare(*dd_sides(N), "double descents", N)

    def br():
        _compare(*biruns_sides(N), "biruns", N)

    out += [("e:p-peaks", N, None, p_peaks), ("e:dd", N, None, dd), ("e:biruns", N, None, br)]
    return out


def series_checks(prec: int = 8) -> List[tuple]:
    def lagrange():
        for a in range(4):
            for b in range(4):
                lagrange_check(a, b, prec + 1)

    return [("lem:lagrange-PQ", prec, 3, lagrange),
            ("lem:uv-round-trip", prec, None, lambda: uv_round_trip(prec + 1))]


def suite(deg_max: int, n_max: int = 7) -> List[tuple]:
    n_max = min(n_max, 7)
    out = expansion_checks(deg_max)
    out += series_checks()
    out += property_checks(deg_max)
    out += [
        ("lem:mu", 10_000, None, lambda: mobius_check(10_000)),
        ("thm:QrL", n_max, None, lambda: [lyndon_ribbon_check(n) for n in range(1, n_max + 1)]),
        ("sym:ribbon-monomial", min(deg_max, 5), None, lambda: ribbon_values_check(min(deg_max, 5))),
        ("sym:classical", deg_max, None, lambda: classical_symfunc_checks(deg_max)),
    ]
    return out
