"""Plethysm, the Hall scalar product and the specializations built on them."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable

from ..exactalg import MultiPoly, ONE, ZERO
from .core import SymFunc, _coeff, _degree, h_in_p, lyndon
from .partitions import Partition, multiplicities, z_of


def _vars_of(g: SymFunc) -> list[str]:
    return g.coefficient_variables()


def adams(g: SymFunc, i: int, names: Iterable[str] | None = None,
          max_degree: int | None = None) -> SymFunc:
    """psi_i(g): p_m -> p_{im}, and each listed variable v -> v^i."""
    names = list(_vars_of(g) if names is None else names)
    out = {}
    for lam, c in g.terms.items():
        mu = tuple(i * p for p in lam)
        if max_degree is not None and _degree(mu) > max_degree:
            continue
        out[mu] = c.psi(i, names) if names else c
    if g.bounded:
        return SymFunc._raw(out, None, True)
    # psi_i(g) is exact below degree i*(max_degree(g)+1); keeping g's own
    # cap is enough for every caller.
    cap = g.max_degree if max_degree is None else min(max_degree, g.max_degree)
    out = {l: c for l, c in out.items() if _degree(l) <= cap}
    return SymFunc._raw(out, cap, False, None)


def plethysm(f: SymFunc, g, plethystic_vars: Iterable[str] | None = None,
             max_degree: int | None = None):
    """f[g] with p_i[g] = psi_i(g).

    ``g`` may be a SymFunc or a plain coefficient (polynomial, rational
    function, number); in the latter case the result is a coefficient.
    Coefficients of ``f`` are left untouched; variables of ``g`` listed in
    ``plethystic_vars`` (default: all of them) are raised by psi_i.
    """
    scalar_input = not isinstance(g, SymFunc)
    if scalar_input:
        g = SymFunc.constant(g)
    names = list(_vars_of(g) if plethystic_vars is None else plethystic_vars)
    has_constant = not g.constant_term().is_zero()
    if not f.bounded and has_constant and f.grade_var is None:
        raise ValueError("divergent plethysm")
    caps = []
    if not f.bounded:
        caps.append(f.max_degree)
    if not g.bounded:
        caps.append(g.max_degree)
    if max_degree is not None:
        caps.append(max_degree)
    cap = min(caps) if caps else None

    psi_cache: Dict[int, SymFunc] = {}

    def psi(i: int) -> SymFunc:
        if i not in psi_cache:
            psi_cache[i] = adams(g, i, names, cap)
        return psi_cache[i]

    prod_cache: Dict[Partition, SymFunc] = {(): SymFunc.constant(1)}

    def product(lam: Partition) -> SymFunc:
        hit = prod_cache.get(lam)
        if hit is None:
            hit = product(lam[:-1]) * psi(lam[-1])
            if cap is not None:
                hit = hit.truncate(cap)
            prod_cache[lam] = hit
        return hit

    total: Dict[Partition, object] = {}
    for lam, c in sorted(f.terms.items()):
        for mu, v in product(lam).terms.items():
            w = c * v
            prev = total.get(mu)
            total[mu] = w if prev is None else prev + w
    total = {l: v for l, v in total.items() if not v.is_zero()}
    if scalar_input:
        return total.get((), ZERO)
    if cap is None:
        return SymFunc._raw(total, None, True)
    out = {l: v for l, v in total.items() if _degree(l) <= cap}
    return SymFunc._raw(out, cap, False, f.grade_var if not f.bounded else None)


def scalar_product(f: SymFunc, g: SymFunc):
    """<f, g> with <p_lambda, p_mu> = z_lambda when lambda = mu, else 0."""
    if not f.bounded and not g.bounded:
        raise ValueError("undefined scalar product")
    a, b = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = ZERO
    for lam, c in a.terms.items():
        d = b.terms.get(lam)
        if d is not None:
            total = total + c * d * z_of(lam)
    return total


def shift_X_plus_1(f: SymFunc) -> SymFunc:
    """f[X+1]: every p_m becomes p_m + 1."""
    return plethysm(f, SymFunc.p(1) + 1, plethystic_vars=())


@lru_cache(maxsize=None)
def _theta_factor(m: int, k: int, y) -> MultiPoly:
    yy = MultiPoly.var(y) if isinstance(y, str) else MultiPoly.coerce(y)
    return (1 - (-yy) ** m) * k


def theta(f: SymFunc, k: int, y="y", x: str | None = "x", x_power: int | None = None):
    """Theta_{y,k}(f) = f[k(1 - alpha)] at alpha = -y.

    p_m -> k(1 - (-y)^m); coefficients of f stay as they are.  Each
    degree-n slice is multiplied by x^n, unless ``x`` is None; with
    ``x_power`` the whole result is multiplied by x^x_power instead.
    ``y`` may be a variable name or a number.
    """
    if not isinstance(y, str):
        y = Fraction(y) if not isinstance(y, MultiPoly) else y
        y = y if isinstance(y, MultiPoly) else (y.numerator if y.denominator == 1 else y)
    cache: Dict[Partition, MultiPoly] = {(): ONE}

    def image(lam: Partition) -> MultiPoly:
        hit = cache.get(lam)
        if hit is None:
            hit = image(lam[:-1]) * _theta_factor(lam[-1], k, y)
            cache[lam] = hit
        return hit

    xv = MultiPoly.var(x) if x else None
    total = ZERO
    for lam, c in f.terms.items():
        term = c * image(lam)
        if xv is not None and x_power is None:
            term = term * xv ** _degree(lam)
        total = total + term
    if xv is not None and x_power is not None:
        total = total * xv ** x_power
    return total


def p_substitute(f: SymFunc, rule) -> object:
    """Replace each p_m by rule(m) (rule is a callable or a mapping)."""
    get: Callable[[int], object] = rule if callable(rule) else rule.__getitem__
    images: Dict[int, object] = {}
    total = ZERO
    for lam, c in f.terms.items():
        term = c
        for m in lam:
            if m not in images:
                images[m] = _coeff(get(m))
            term = term * images[m]
        total = total + term
    return total


def principal_spec(f: SymFunc, k: int, q: str = "q") -> MultiPoly:
    """phi_k(f) = f(q^{k-1}, ..., q, 1): p_m -> 1 + q^m + ... + q^{(k-1)m}."""
    if not f.bounded:
        raise ValueError("principal specialization needs a bounded symmetric function")
    qq = MultiPoly.var(q)
    return p_substitute(f, lambda m: sum((qq ** (j * m) for j in range(k)), ZERO))


@lru_cache(maxsize=None)
def lyndon_of(lam: Partition) -> SymFunc:
    """L_lambda = prod_i h_{m_i}[L_i]."""
    out = SymFunc.constant(1)
    for i, m in sorted(multiplicities(tuple(lam)).items()):
        out = out * plethysm(h_in_p(m), lyndon(i))
    return out


def evaluate_at(f: SymFunc, values: Iterable[object]):
    """f(a_1, ..., a_r): p_m -> sum_j a_j^m for concrete or polynomial a_j."""
    vals = [_coeff(v) for v in values]
    return p_substitute(f, lambda m: sum((v ** m for v in vals), ZERO))
