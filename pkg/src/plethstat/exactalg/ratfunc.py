"""Rational functions over the rationals without multivariate gcd.

A RatFunc keeps its numerator expanded and its denominator as a product of
normalized factors with multiplicities.  Sums use the least common multiple
of the two factor lists (factors are compared as polynomials, never
factored further), which keeps denominators such as ``(1-t)^(n+1)`` from
growing under repeated addition.  Two rational functions are equal when the
cross products agree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from .poly import MultiPoly, ONE, ZERO, Scalar, is_scalar

_NORMAL: Dict[MultiPoly, Tuple[Fraction, MultiPoly]] = {}


def _normalize(p: MultiPoly) -> Tuple[Fraction, MultiPoly]:
    """Write p = c * q with q primitive and its leading coefficient positive."""
    hit = _NORMAL.get(p)
    if hit is not None:
        return hit
    c = p.content()
    if p.leading()[1] < 0:
        c = -c
    q = p.scale(1 / c)
    _NORMAL[p] = (c, q)
    return c, q


@lru_cache(maxsize=None)
def _factor_key(f: MultiPoly):
    return (tuple(f.variables()), tuple(f.terms()))


@lru_cache(maxsize=4096)
def _factor_power(f: MultiPoly, e: int) -> MultiPoly:
    return f ** e


def _expand(factors: Mapping[MultiPoly, int]) -> MultiPoly:
    out = ONE
    for f, e in factors.items():
        if e:
            out = out * _factor_power(f, e)
    return out


class RatFunc:
    """num / (product of factors**exponents)."""

    __slots__ = ("num", "_fac", "_den")
    __hash__ = None  # equality is semantic

    def __init__(self, num: object = 0, den: object = 1):
        num = MultiPoly.coerce(num)
        den = MultiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if den.is_constant():
            self.num = num.scale(Fraction(1) / den.constant_term())
            self._fac = ()
        else:
            c, q = _normalize(den)
            self.num = num.scale(1 / c)
            self._fac = ((q, 1),) if num else ()
        self._den = None

    @classmethod
    def _make(cls, num: MultiPoly, factors: Mapping[MultiPoly, int]) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        if num.is_zero():
            r._fac = ()
        else:
            r._fac = tuple(sorted(((f, e) for f, e in factors.items() if e),
                                  key=lambda fe: _factor_key(fe[0])))
        r._den = None
        return r

    @classmethod
    def from_factors(cls, num: object, factors: Mapping[MultiPoly, int]) -> "RatFunc":
        """Build num / prod(f**e), normalizing each factor."""
        num = MultiPoly.coerce(num)
        fac: Dict[MultiPoly, int] = {}
        for f, e in factors.items():
            if e < 0:
                raise ValueError("negative factor multiplicity")
            f = MultiPoly.coerce(f)
            if f.is_zero():
                raise ZeroDivisionError("zero factor in denominator")
            if f.is_constant():
                num = num.scale(Fraction(1) / Fraction(f.constant_term()) ** e)
                continue
            c, q = _normalize(f)
            num = num.scale(1 / c ** e)
            fac[q] = fac.get(q, 0) + e
        return cls._make(num, fac)

    @staticmethod
    def coerce(obj: object) -> "RatFunc":
        if isinstance(obj, RatFunc):
            return obj
        if isinstance(obj, MultiPoly):
            return RatFunc._make(obj, {})
        if is_scalar(obj):
            return RatFunc._make(MultiPoly.constant(obj), {})
        raise TypeError(f"cannot convert {type(obj).__name__} to RatFunc")

    # -- inspection -----------------------------------------------------
    @property
    def factors(self) -> Dict[MultiPoly, int]:
        return dict(self._fac)

    @property
    def den(self) -> MultiPoly:
        if self._den is None:
            self._den = _expand(dict(self._fac))
        return self._den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self._fac

    def variables(self) -> list[str]:
        names = set(self.num.variables())
        for f, _ in self._fac:
            names.update(f.variables())
        return sorted(names)

    def to_poly(self) -> MultiPoly | None:
        """The polynomial equal to self, or None if the division is not exact."""
        if not self._fac:
            return self.num
        return self.num.divexact(self.den)

    def simplify(self) -> "RatFunc":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.num
        fac = dict(self._fac)
        for f in list(fac):
            while fac[f]:
                q = num.divexact(f)
                if q is None:
                    break
                num = q
                fac[f] -= 1
        return RatFunc._make(num, fac)

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self.num, dict(self._fac))

    def __add__(self, other: object) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self._fac == other._fac:
            return RatFunc._make(self.num + other.num, dict(self._fac))
        fa, fb = dict(self._fac), dict(other._fac)
        lcm = {f: max(fa.get(f, 0), fb.get(f, 0)) for f in set(fa) | set(fb)}
        na = self.num * _expand({f: e - fa.get(f, 0) for f, e in lcm.items()})
        nb = other.num * _expand({f: e - fb.get(f, 0) for f, e in lcm.items()})
        return RatFunc._make(na + nb, lcm)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other: object) -> "RatFunc":
        if is_scalar(other):
            return RatFunc._make(self.num.scale(other), dict(self._fac))
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        fac = dict(self._fac)
        for f, e in other._fac:
            fac[f] = fac.get(f, 0) + e
        return RatFunc._make(self.num * other.num, fac)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc.from_factors(_expand(dict(self._fac)), {self.num: 1})

    def __truediv__(self, other: object) -> "RatFunc":
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFunc.coerce(1)
        return RatFunc._make(self.num ** k, {f: e * k for f, e in self._fac})

    def __eq__(self, other: object) -> bool:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return ratfunc_equal(self, other)

    # -- transformations ------------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "RatFunc":
        if any(isinstance(v, RatFunc) for v in mapping.values()):
            out = rational_subs(self.num, mapping)
            for f, e in self._fac:
                out = out / rational_subs(f, mapping) ** e
            return out
        num = self.num.subs(mapping)
        return RatFunc.from_factors(num, {f.subs(mapping): e for f, e in self._fac})

    def psi(self, i: int, names=None) -> "RatFunc":
        return RatFunc.from_factors(self.num.psi(i, names),
                                    {f.psi(i, names): e for f, e in self._fac})

    def series(self, var: str, prec: int):
        """Expansion as a TruncSeries in ``var``; each factor must be a unit at var=0."""
        from .series import TruncSeries
        s = TruncSeries.from_poly(self.num, var, prec)
        for f, e in self._fac:
            fs = TruncSeries.from_poly(f, var, prec)
            c0 = fs[0]
            if not c0.is_constant() or c0.is_zero():
                raise ValueError("non-unit series")
            s = s * fs.inverse() ** e
        return s

    def series_witness(self, s) -> int | None:
        """First exponent j < s.prec where self and series s differ, else None.

        Decided by num == den * s (mod var^prec), which does not need the
        denominator to be a unit in the coefficient ring.
        """
        from .series import TruncSeries
        lhs = TruncSeries.from_poly(self.num, s.var, s.prec)
        rhs = TruncSeries.from_poly(self.den, s.var, s.prec) * s
        return lhs.witness(rhs)

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def __str__(self) -> str:
        if not self._fac:
            return str(self.num)
        den = " * ".join(f"({f})" if e == 1 else f"({f})^{e}" for f, e in self._fac)
        return f"({self.num}) / ({den})"


def ratfunc_equal(a: object, b: object) -> bool:
    """a == b decided by cross-multiplication (after dropping shared factors)."""
    a = RatFunc.coerce(a)
    b = RatFunc.coerce(b)
    fa, fb = dict(a._fac), dict(b._fac)
    lcm = {f: max(fa.get(f, 0), fb.get(f, 0)) for f in set(fa) | set(fb)}
    left = a.num * _expand({f: e - fa.get(f, 0) for f, e in lcm.items()})
    right = b.num * _expand({f: e - fb.get(f, 0) for f, e in lcm.items()})
    return left == right


def rational_subs(p: MultiPoly, mapping: Mapping[str, object]) -> RatFunc:
    """Substitute rational functions for variables of a polynomial.

    All terms are brought over one common denominator (the lcm of the
    per-term factor lists) before the numerator is summed.
    """
    from .poly import REGISTRY, _field, _WIDTH
    vals = [(REGISTRY.slot(v), RatFunc.coerce(r)) for v, r in mapping.items()]
    if p.is_zero():
        return RatFunc.coerce(0)
    slots = [s for s, _ in vals]
    groups: Dict[Tuple[int, ...], Dict[int, Scalar]] = {}
    for m, c in p._t.items():
        key = tuple(_field(m, s) for s in slots)
        rest = m
        for s, e in zip(slots, key):
            rest -= e << (_WIDTH * s)
        groups.setdefault(key, {})[rest] = c

    def need(key) -> Dict[MultiPoly, int]:
        out: Dict[MultiPoly, int] = {}
        for (_, r), e in zip(vals, key):
            for f, m in r._fac:
                out[f] = out.get(f, 0) + m * e
        return out

    lcm: Dict[MultiPoly, int] = {}
    needs = {}
    for key in groups:
        nk = needs[key] = need(key)
        for f, e in nk.items():
            if e > lcm.get(f, 0):
                lcm[f] = e
    pow_cache: Dict[Tuple[int, int], MultiPoly] = {}

    def num_power(i: int, e: int) -> MultiPoly:
        k = (i, e)
        if k not in pow_cache:
            pow_cache[k] = ONE if e == 0 else num_power(i, e - 1) * vals[i][1].num
        return pow_cache[k]

    total = ZERO
    for key, rest in groups.items():
        term = MultiPoly._raw(rest)
        for i, e in enumerate(key):
            if e:
                term = term * num_power(i, e)
        nk = needs[key]
        term = term * _expand({f: e - nk.get(f, 0) for f, e in lcm.items()})
        total = total + term
    return RatFunc._make(total, lcm)
