"""Truncated power series in one variable over polynomial or rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .poly import MultiPoly, ONE, ZERO, REGISTRY, is_scalar, _field, _WIDTH
from .ratfunc import RatFunc

Coeff = MultiPoly | RatFunc


def _coeff(c: object) -> Coeff:
    if isinstance(c, (MultiPoly, RatFunc)):
        return c
    return MultiPoly.coerce(c)


def _is_zero(c: Coeff) -> bool:
    return c.is_zero()


def _unit_inverse(c: Coeff):
    if isinstance(c, RatFunc):
        if c.is_zero():
            raise ValueError("non-unit series")
        return c.inverse()
    if not c.is_constant() or c.is_zero():
        raise ValueError("non-unit series")
    return Fraction(1) / c.constant_term()


def _is_one(c: Coeff) -> bool:
    if isinstance(c, RatFunc):
        return c == 1
    return c == 1


class TruncSeries:
    """sum_{j < prec} coeffs[j] * var**j + O(var**prec)."""

    __slots__ = ("var", "prec", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[object], prec: int):
        if prec < 0:
            raise ValueError("precision must be non-negative")
        cs = [_coeff(c) for c in coeffs][:prec]
        cs.extend(ZERO for _ in range(prec - len(cs)))
        REGISTRY.slot(var)
        self.var = var
        self.prec = prec
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: object, var: str, prec: int) -> "TruncSeries":
        if isinstance(p, RatFunc):
            if p.is_polynomial():
                p = p.num
            else:
                return p.series(var, prec)
        p = MultiPoly.coerce(p)
        parts = p.expand_in(var)
        return cls(var, [parts.get(j, ZERO) for j in range(prec)], prec)

    @classmethod
    def constant(cls, c: object, var: str, prec: int) -> "TruncSeries":
        return cls(var, [c], prec)

    @classmethod
    def variable(cls, var: str, prec: int) -> "TruncSeries":
        return cls(var, [0, 1], prec)

    def to_poly(self) -> Coeff:
        x = MultiPoly.var(self.var)
        total: Coeff = ZERO
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                total = total + c * x ** j
        return total

    def __getitem__(self, j: int) -> Coeff:
        if j < 0:
            raise IndexError(j)
        if j >= self.prec:
            raise IndexError(f"coefficient {j} is beyond the precision {self.prec}")
        return self.coeffs[j]

    def __len__(self) -> int:
        return self.prec

    def _check(self, other: "TruncSeries") -> None:
        if other.var != self.var:
            raise ValueError(f"series in {self.var} and {other.var} cannot be combined")

    def truncate(self, prec: int) -> "TruncSeries":
        return TruncSeries(self.var, self.coeffs[:prec], min(prec, self.prec))

    # -- ring operations ------------------------------------------------
    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.var, [-c for c in self.coeffs], self.prec)

    def __add__(self, other: object) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            p = min(self.prec, other.prec)
            return TruncSeries(self.var, [self.coeffs[j] + other.coeffs[j] for j in range(p)], p)
        if is_scalar(other) or isinstance(other, (MultiPoly, RatFunc)):
            if self.prec == 0:
                return self
            return TruncSeries(self.var, (self.coeffs[0] + other,) + self.coeffs[1:], self.prec)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "TruncSeries":
        if isinstance(other, (TruncSeries, MultiPoly, RatFunc)) or is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: object) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other: object) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            p = min(self.prec, other.prec)
            a, b = self.coeffs, other.coeffs
            nz_b = [(j, c) for j, c in enumerate(b[:p]) if not c.is_zero()]
            out: list = [ZERO] * p
            for i in range(p):
                ai = a[i]
                if ai.is_zero():
                    continue
                for j, bj in nz_b:
                    if i + j >= p:
                        break
                    out[i + j] = out[i + j] + ai * bj
            return TruncSeries(self.var, out, p)
        if is_scalar(other) or isinstance(other, (MultiPoly, RatFunc)):
            return TruncSeries(self.var, [c * other for c in self.coeffs], self.prec)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "TruncSeries":
        if is_scalar(other):
            return self * (Fraction(1) / other)
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        if isinstance(other, (MultiPoly, RatFunc)):
            return self * _unit_inverse(other)
        return NotImplemented

    def __rtruediv__(self, other: object) -> "TruncSeries":
        return self.inverse() * other

    def __pow__(self, k: int) -> "TruncSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncSeries(self.var, [ONE], self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by var**k (k may be negative when the low coefficients vanish)."""
        if k >= 0:
            return TruncSeries(self.var, [ZERO] * k + list(self.coeffs), self.prec + k)
        k = -k
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise ValueError("series is not divisible by that power of the variable")
        return TruncSeries(self.var, self.coeffs[k:], self.prec - k)

    def map_coeffs(self, fn) -> "TruncSeries":
        return TruncSeries(self.var, [fn(c) for c in self.coeffs], self.prec)

    # -- analytic operations --------------------------------------------
    def inverse(self) -> "TruncSeries":
        if self.prec == 0:
            return self
        inv0 = _unit_inverse(self.coeffs[0])
        a = self.coeffs
        b: list = [MultiPoly.coerce(inv0) if is_scalar(inv0) else inv0]
        for n in range(1, self.prec):
            acc = ZERO
            for k in range(1, n + 1):
                if not a[k].is_zero() and not b[n - k].is_zero():
                    acc = acc + a[k] * b[n - k]
            b.append(-(acc * inv0))
        return TruncSeries(self.var, b, self.prec)

    def exp(self) -> "TruncSeries":
        if self.prec and not self.coeffs[0].is_zero():
            raise ValueError("exp needs a series with zero constant term")
        f = self.coeffs
        g: list = [ONE]
        for n in range(1, self.prec):
            acc = ZERO
            for k in range(1, n + 1):
                if not f[k].is_zero() and not g[n - k].is_zero():
                    acc = acc + f[k] * g[n - k] * k
            g.append(acc * Fraction(1, n))
        return TruncSeries(self.var, g, self.prec)

    def log(self) -> "TruncSeries":
        if self.prec and not _is_one(self.coeffs[0]):
            raise ValueError("log needs a series with constant term 1")
        g = self.coeffs
        f: list = [ZERO]
        for n in range(1, self.prec):
            acc = ZERO
            for k in range(1, n):
                if not f[k].is_zero() and not g[n - k].is_zero():
                    acc = acc + f[k] * g[n - k] * k
            f.append(g[n] - acc * Fraction(1, n))
        return TruncSeries(self.var, f, self.prec)

    def sqrt(self) -> "TruncSeries":
        if self.prec and not _is_one(self.coeffs[0]):
            raise ValueError("sqrt needs a series with constant term 1")
        a = self.coeffs
        b: list = [ONE]
        for n in range(1, self.prec):
            acc = ZERO
            for k in range(1, n):
                acc = acc + b[k] * b[n - k]
            b.append((a[n] - acc) * Fraction(1, 2))
        return TruncSeries(self.var, b, self.prec)

    def power(self, exponent: object) -> "TruncSeries":
        """self**exponent for a series with constant term 1, via exp(exponent*log)."""
        if isinstance(exponent, int) and exponent >= 0:
            return self ** exponent
        return (self.log() * exponent).exp()

    # -- comparison -----------------------------------------------------
    def witness(self, other: "TruncSeries") -> int | None:
        """First index below the shared precision where the coefficients differ."""
        self._check(other)
        for j in range(min(self.prec, other.prec)):
            if not (self.coeffs[j] - other.coeffs[j]).is_zero():
                return j
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.var == other.var and self.witness(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{self.var}^{j}" for j, c in enumerate(self.coeffs)
                          if not c.is_zero())
        return f"TruncSeries({body or '0'} + O({self.var}^{self.prec}))"


def series_inverse(s: TruncSeries) -> TruncSeries:
    return s.inverse()


def series_exp_log(s: TruncSeries, op: str) -> TruncSeries:
    if op == "exp":
        return s.exp()
    if op == "log":
        return s.log()
    raise ValueError(f"unknown series operation {op!r}")


def series_sqrt(s: TruncSeries) -> TruncSeries:
    return s.sqrt()


def geometric(c: object, var: str, prec: int) -> TruncSeries:
    """1/(1 - c*var) to the given precision."""
    c = _coeff(c)
    return TruncSeries(var, [c ** j for j in range(prec)], prec)


def eval_at_series(p: object, mapping: Mapping[str, TruncSeries]) -> TruncSeries:
    """Substitute series (all in one variable) for variables of a polynomial.

    Variables not in ``mapping`` are treated as coefficients; the series
    variable itself must not occur freely in ``p``.
    """
    if isinstance(p, RatFunc):
        out = eval_at_series(p.num, mapping)
        for f, e in p.factors.items():
            out = out * eval_at_series(f, mapping).inverse() ** e
        return out
    p = MultiPoly.coerce(p)
    series = list(mapping.values())
    svar = series[0].var
    prec = min(s.prec for s in series)
    if svar not in mapping and svar in p.variables():
        raise ValueError(f"{svar} occurs freely in the polynomial")
    items = [(REGISTRY.slot(v), s) for v, s in mapping.items()]
    slots = [s for s, _ in items]
    groups: dict = {}
    for m, c in p._t.items():
        key = tuple(_field(m, s) for s in slots)
        rest = m
        for s, e in zip(slots, key):
            rest -= e << (_WIDTH * s)
        groups.setdefault(key, {})[rest] = c
    cache: dict = {}

    def power(i: int, e: int) -> TruncSeries:
        k = (i, e)
        if k not in cache:
            if e == 0:
                cache[k] = TruncSeries(svar, [ONE], prec)
            else:
                cache[k] = power(i, e - 1) * items[i][1]
        return cache[k]

    total = TruncSeries(svar, [], prec)
    for key, rest in sorted(groups.items()):
        coeff = MultiPoly._raw(rest)
        term = None
        for i, e in enumerate(key):
            if e:
                term = power(i, e) if term is None else term * power(i, e)
        if term is None:
            term = TruncSeries(svar, [coeff], prec)
        else:
            term = term * coeff
        total = total + term
    return total
