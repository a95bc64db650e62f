"""Symmetric functions in the power-sum basis.

A SymFunc maps partitions to coefficients (MultiPoly or RatFunc).  The
degree of p_lambda is |lambda|, and it doubles as the exponent of the
implicit grading variable x: H(zx) is stored as sum_n z^n h_n.

Two kinds of values are distinguished.  A *bounded* SymFunc is an exact
finite object (for instance h_3 or L_(2,1)).  An *unbounded* one is a
series such as H that has been cut off at ``max_degree``; its terms above
that degree are unknown, not zero.  Unbounded series may record a
``grade_var``: a variable whose exponent equals the degree of every term
(H(z) has grade_var "z"), which is what makes plethysm with a constant
convergent.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Mapping, Optional

from ..exactalg import MultiPoly, RatFunc, ONE, ZERO, is_scalar
from .partitions import (Partition, coarsenings, is_partition, merge, mobius,
                         divisors, partitions_of, z_of)

DEFAULT_MAX_DEGREE = 8

Coeff = MultiPoly | RatFunc


def _coeff(c) -> Coeff:
    if isinstance(c, (MultiPoly, RatFunc)):
        return c
    return MultiPoly.coerce(c)


def _cap(*fs: "SymFunc") -> Optional[int]:
    caps = [f.max_degree for f in fs if not f.bounded]
    return min(caps) if caps else None


def _grade(*fs: "SymFunc") -> Optional[str]:
    grades = {f.grade_var for f in fs if not f.bounded}
    return grades.pop() if len(grades) == 1 else None


def _degree(lam: Partition) -> int:
    return sum(lam)


class SymFunc:
    __slots__ = ("terms", "max_degree", "bounded", "grade_var")

    def __init__(self, terms: Mapping[Partition, object] | None = None,
                 max_degree: int | None = None, bounded: bool = True,
                 grade_var: str | None = None):
        clean: Dict[Partition, Coeff] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if not is_partition(lam):
                raise ValueError(f"{lam} is not a partition")
            c = _coeff(c)
            if c.is_zero():
                continue
            if not bounded and max_degree is not None and _degree(lam) > max_degree:
                continue
            clean[lam] = c
        top = max((_degree(l) for l in clean), default=0)
        if bounded:
            max_degree = max(top, max_degree or 0)
        elif max_degree is None:
            max_degree = DEFAULT_MAX_DEGREE
        self.terms = clean
        self.max_degree = max_degree
        self.bounded = bounded
        self.grade_var = grade_var if not bounded else None

    @classmethod
    def _raw(cls, terms, max_degree, bounded, grade_var=None) -> "SymFunc":
        f = object.__new__(cls)
        f.terms = terms
        f.max_degree = max_degree if not bounded else max(
            max((_degree(l) for l in terms), default=0), max_degree or 0)
        f.bounded = bounded
        f.grade_var = grade_var if not bounded else None
        return f

    # -- constructors ---------------------------------------------------
    @classmethod
    def p(cls, *parts: int, coeff: object = 1) -> "SymFunc":
        return cls({tuple(sorted(parts, reverse=True)): coeff})

    @classmethod
    def constant(cls, c: object) -> "SymFunc":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls({})

    # -- inspection -----------------------------------------------------
    def __getitem__(self, lam) -> Coeff:
        return self.terms.get(tuple(lam), ZERO)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        """(partition, coefficient) pairs by ascending degree, reverse-lex within a degree."""
        return sorted(self.terms.items(), key=lambda kv: (_degree(kv[0]), tuple(-p for p in kv[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((_degree(l) for l in self.terms), default=-1)

    def constant_term(self) -> Coeff:
        return self.terms.get((), ZERO)

    def slice(self, n: int) -> "SymFunc":
        """The homogeneous degree-n part, as a bounded SymFunc."""
        if not self.bounded and n > self.max_degree:
            raise ValueError(f"degree {n} exceeds the precision {self.max_degree}")
        return SymFunc._raw({l: c for l, c in self.terms.items() if _degree(l) == n}, n, True)

    def is_homogeneous(self, n: int) -> bool:
        return all(_degree(l) == n for l in self.terms)

    def truncate(self, d: int) -> "SymFunc":
        return SymFunc._raw({l: c for l, c in self.terms.items() if _degree(l) <= d},
                            d, False, self.grade_var if not self.bounded else None)

    def as_bounded(self) -> "SymFunc":
        """Forget truncation: treat the stored terms as the whole function."""
        return SymFunc._raw(dict(self.terms), None, True)

    def map_coeffs(self, fn: Callable[[Coeff], object]) -> "SymFunc":
        out = {}
        for l, c in self.terms.items():
            v = _coeff(fn(c))
            if not v.is_zero():
                out[l] = v
        return SymFunc._raw(out, self.max_degree, self.bounded, self.grade_var)

    def coefficient_variables(self) -> list[str]:
        names = set()
        for c in self.terms.values():
            names.update(c.variables())
        return sorted(names)

    # -- ring operations ------------------------------------------------
    @staticmethod
    def coerce(obj) -> "SymFunc":
        if isinstance(obj, SymFunc):
            return obj
        return SymFunc.constant(obj)

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({l: -c for l, c in self.terms.items()},
                            self.max_degree, self.bounded, self.grade_var)

    def __add__(self, other) -> "SymFunc":
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        cap = _cap(self, other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            if l in out:
                v = out[l] + c
                if v.is_zero():
                    del out[l]
                else:
                    out[l] = v
            else:
                out[l] = c
        if cap is not None:
            out = {l: c for l, c in out.items() if _degree(l) <= cap}
            return SymFunc._raw(out, cap, False, _grade(self, other))
        return SymFunc._raw(out, max(self.max_degree, other.max_degree), True)

    __radd__ = __add__

    def __sub__(self, other) -> "SymFunc":
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymFunc":
        return (-self) + other

    def scale(self, c) -> "SymFunc":
        if is_scalar(c) and c == 1:
            return self
        out = {}
        for l, v in self.terms.items():
            w = v * c
            if not w.is_zero():
                out[l] = w
        return SymFunc._raw(out, self.max_degree, self.bounded, self.grade_var)

    def __mul__(self, other) -> "SymFunc":
        if is_scalar(other) or isinstance(other, (MultiPoly, RatFunc)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        cap = _cap(self, other)
        out = _mul_terms(self.terms, other.terms, cap)
        if cap is None:
            return SymFunc._raw(out, self.max_degree + other.max_degree, True)
        return SymFunc._raw(out, cap, False, _grade(self, other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SymFunc":
        if is_scalar(other):
            return self.scale(Fraction(1) / other)
        if isinstance(other, (MultiPoly, RatFunc)):
            return self.scale(RatFunc.coerce(1) / other)
        if isinstance(other, SymFunc):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int) -> "SymFunc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = SymFunc.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self, max_degree: int | None = None) -> "SymFunc":
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.constant_term()
        if c0.is_zero():
            raise ValueError("non-unit symmetric function")
        if _unit_scalar(c0):
            inv0: object = Fraction(1) / c0.constant_term()
        else:
            inv0 = RatFunc.coerce(1) / c0
        rest = self - SymFunc.constant(c0)
        if rest.is_zero():
            return SymFunc.constant(inv0)
        cap = self._default_cap(max_degree)
        term = SymFunc._raw({(): _coeff(inv0)}, cap, False, self.grade_var)
        r = rest.truncate(cap).scale(-1).scale(inv0)
        total = term
        for _ in range(cap):
            term = term * r
            if term.is_zero():
                break
            total = total + term
        return SymFunc._raw(total.terms, cap, False, self.grade_var)

    def _default_cap(self, max_degree: int | None) -> int:
        if max_degree is not None:
            return max_degree
        return self.max_degree if not self.bounded else DEFAULT_MAX_DEGREE

    def exp(self, max_degree: int | None = None) -> "SymFunc":
        """exp(f) for f without constant term, as sum_j f^j / j!."""
        if not self.constant_term().is_zero():
            raise ValueError("exp needs a symmetric function without constant term")
        cap = self._default_cap(max_degree)
        f = self.truncate(cap)
        total = SymFunc._raw({(): ONE}, cap, False, self.grade_var)
        term = total
        for j in range(1, cap + 1):
            term = (term * f).scale(Fraction(1, j))
            if term.is_zero():
                break
            total = total + term
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            try:
                other = SymFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return symfunc_witness(self, other) is None

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        body = " + ".join(f"({c})*p{list(l)}" for l, c in self.sorted_terms())
        tail = "" if self.bounded else f" + O(deg {self.max_degree + 1})"
        return f"SymFunc({body}{tail})"


def _unit_scalar(c: Coeff) -> bool:
    return isinstance(c, MultiPoly) and c.is_constant()


def _mul_terms(a: Mapping, b: Mapping, cap: Optional[int]) -> Dict[Partition, Coeff]:
    if not a or not b:
        return {}
    bl = sorted(((l, _degree(l), c) for l, c in b.items()), key=lambda r: r[1])
    out: Dict[Partition, Coeff] = {}
    for la, ca in a.items():
        da = _degree(la)
        for lb, db, cb in bl:
            if cap is not None and da + db > cap:
                break
            key = merge(la, lb)
            v = ca * cb
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return {l: c for l, c in out.items() if not c.is_zero()}


def symfunc_witness(f: SymFunc, g: SymFunc, max_degree: int | None = None) -> Optional[Partition]:
    """First partition (in degree order) where f and g differ, within the shared precision."""
    limit = max_degree
    for h in (f, g):
        if not h.bounded:
            limit = h.max_degree if limit is None else min(limit, h.max_degree)
    keys = set(f.terms) | set(g.terms)
    for lam in sorted(keys, key=lambda l: (_degree(l), tuple(-p for p in l))):
        if limit is not None and _degree(lam) > limit:
            continue
        a, b = f.terms.get(lam, ZERO), g.terms.get(lam, ZERO)
        if not (a - b).is_zero():
            return lam
    return None


# -- classical families -------------------------------------------------------

@lru_cache(maxsize=None)
def h_in_p(n: int) -> SymFunc:
    """h_n = sum over partitions of n of p_lambda / z_lambda."""
    return SymFunc({lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def e_in_p(n: int) -> SymFunc:
    """e_n = sum of (-1)^(n - l(lambda)) p_lambda / z_lambda."""
    return SymFunc({lam: Fraction((-1) ** (n - len(lam)), z_of(lam)) for lam in partitions_of(n)})


def p1() -> SymFunc:
    return SymFunc.p(1)


def _graded_series(piece: Callable[[int], SymFunc], max_degree, var, sign=1) -> SymFunc:
    if max_degree is None:
        max_degree = DEFAULT_MAX_DEGREE
    terms: Dict[Partition, Coeff] = {}
    x = MultiPoly.var(var) if var else None
    for n in range(max_degree + 1):
        w = ONE if x is None else x ** n
        if sign == -1 and n % 2:
            w = -w
        for lam, c in piece(n).terms.items():
            terms[lam] = c * w
    return SymFunc._raw(terms, max_degree, False, var)


def H_series(max_degree: int | None = None, var: str | None = None, negate: bool = False) -> SymFunc:
    """H(var) = sum_n h_n var^n (var=None gives H itself), or H(-var) when negate."""
    return _graded_series(h_in_p, max_degree, var, -1 if negate else 1)


def E_series(max_degree: int | None = None, var: str | None = None, negate: bool = False) -> SymFunc:
    """E(var) = sum_n e_n var^n, or E(-var) when negate."""
    return _graded_series(e_in_p, max_degree, var, -1 if negate else 1)


@lru_cache(maxsize=None)
def h_product(parts: tuple) -> SymFunc:
    """h_M for a multiset of part sizes (given sorted)."""
    if not parts:
        return SymFunc.constant(1)
    return h_product(parts[:-1]) * h_in_p(parts[-1])


@lru_cache(maxsize=None)
def ribbon_in_p(comp: tuple) -> SymFunc:
    """Ribbon Schur function r_L = sum over coarsenings M of (-1)^(l(L)-l(M)) h_M."""
    comp = tuple(comp)
    if not comp:
        raise ValueError("ribbon of the empty composition")
    if any(p <= 0 for p in comp):
        raise ValueError(f"{comp} is not a composition")
    total = SymFunc.zero()
    for m in coarsenings(comp):
        sign = (-1) ** (len(comp) - len(m))
        total = total + h_product(tuple(sorted(m, reverse=True))).scale(sign)
    return total


@lru_cache(maxsize=None)
def lyndon(n: int) -> SymFunc:
    """L_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}."""
    if n < 1:
        raise ValueError("lyndon symmetric functions start at n = 1")
    terms = {}
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            terms[(d,) * (n // d)] = Fraction(mu, n)
    return SymFunc(terms)
