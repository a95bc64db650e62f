"""Sparse multivariate polynomials with exact rational coefficients.

Variable names live in one process-wide, append-only registry.  Each name
owns a 16-bit slot, and a monomial is stored as a single Python integer with
the exponent of slot ``i`` in bits ``16*i .. 16*i+15``.  Multiplying two
monomials is then one integer addition.  The packing is an internal detail:
everything that leaves this module (strings, JSON, comparisons of term order)
uses variable names sorted lexicographically.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, Fraction]

_WIDTH = 16
_FIELD = (1 << _WIDTH) - 1
MAX_EXPONENT = (1 << (_WIDTH - 1)) - 1


class VarRegistry:
    """Append-only map between variable names and monomial slots."""

    def __init__(self) -> None:
        self._slot: Dict[str, int] = {}
        self._names: list[str] = []

    def slot(self, name: str) -> int:
        s = self._slot.get(name)
        if s is None:
            if not name or not (name[0].isalpha()) or not name.replace("_", "").isalnum():
                raise ValueError(f"invalid variable name {name!r}")
            s = len(self._names)
            self._slot[name] = s
            self._names.append(name)
        return s

    def name(self, slot: int) -> str:
        return self._names[slot]

    def known(self) -> list[str]:
        return sorted(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._slot


REGISTRY = VarRegistry()


def _clean(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def is_scalar(obj: object) -> bool:
    return isinstance(obj, (int, Fraction)) and not isinstance(obj, bool)


def _unpack(m: int) -> Dict[int, int]:
    out = {}
    slot = 0
    while m:
        e = m & _FIELD
        if e:
            out[slot] = e
        m >>= _WIDTH
        slot += 1
    return out


def _pack(exps: Mapping[int, int]) -> int:
    m = 0
    for slot, e in exps.items():
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_EXPONENT:
            raise OverflowError("exponent too large for monomial packing")
        m |= e << (_WIDTH * slot)
    return m


def _field(m: int, slot: int) -> int:
    return (m >> (_WIDTH * slot)) & _FIELD


def _divides(a: int, b: int) -> bool:
    """True if monomial ``a`` divides monomial ``b``."""
    while a:
        if (a & _FIELD) > (b & _FIELD):
            return False
        a >>= _WIDTH
        b >>= _WIDTH
    return True


def _mono_slots(m: int) -> Iterator[int]:
    slot = 0
    while m:
        if m & _FIELD:
            yield slot
        m >>= _WIDTH
        slot += 1


class MultiPoly:
    """Immutable sparse polynomial; terms map packed monomials to coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = _clean(c)
        self._t: Dict[int, Scalar] = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Scalar]) -> "MultiPoly":
        p = object.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    # -- construction ---------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        return cls._raw({0: _clean(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        slot = REGISTRY.slot(name)
        return cls._raw({_pack({slot: power}): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exps: int) -> "MultiPoly":
        m = _pack({REGISTRY.slot(v): e for v, e in exps.items() if e})
        return cls._raw({m: _clean(coeff)} if coeff else {})

    @classmethod
    def from_exponents(cls, names: Iterable[str],
                       terms: Mapping[Tuple[int, ...], Scalar]) -> "MultiPoly":
        slots = [REGISTRY.slot(v) for v in names]
        out: Dict[int, Scalar] = {}
        for exps, c in terms.items():
            if len(exps) != len(slots):
                raise ValueError("exponent tuple arity does not match variables")
            m = _pack(dict(zip(slots, exps)))
            out[m] = out.get(m, 0) + c
        return cls(out)

    @staticmethod
    def coerce(obj: object) -> "MultiPoly":
        if isinstance(obj, MultiPoly):
            return obj
        if is_scalar(obj):
            return MultiPoly.constant(obj)
        raise TypeError(f"cannot convert {type(obj).__name__} to MultiPoly")

    # -- inspection -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> Scalar:
        return self._t.get(0, 0)

    def variables(self) -> list[str]:
        acc = 0
        for m in self._t:
            acc |= m
        return sorted(REGISTRY.name(s) for s in _mono_slots(acc))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``; the zero polynomial has degree -1."""
        if not self._t:
            return -1
        if var is None:
            return max(sum(_unpack(m).values()) for m in self._t)
        if var not in REGISTRY:
            return 0
        slot = REGISTRY.slot(var)
        return max(_field(m, slot) for m in self._t)

    def min_degree(self, var: str) -> int:
        if not self._t:
            return -1
        if var not in REGISTRY:
            return 0
        slot = REGISTRY.slot(var)
        return min(_field(m, slot) for m in self._t)

    def terms(self, names: list[str] | None = None) -> list[Tuple[Tuple[int, ...], Scalar]]:
        """Terms as (exponent tuple over ``names``, coefficient), ascending lexicographically."""
        if names is None:
            names = self.variables()
        slots = [REGISTRY.slot(v) for v in names]
        rows = []
        for m, c in self._t.items():
            exps = tuple(_field(m, s) for s in slots)
            rows.append((exps, c))
        rows.sort(key=lambda r: r[0])
        return rows

    def coefficient(self, **exps: int) -> Scalar:
        m = _pack({REGISTRY.slot(v): e for v, e in exps.items() if e})
        return self._t.get(m, 0)

    def coefficients(self) -> list[Scalar]:
        return list(self._t.values())

    def expand_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Split into {j: coefficient of var^j}, each free of ``var``."""
        slot = REGISTRY.slot(var)
        shift = _WIDTH * slot
        parts: Dict[int, Dict[int, Scalar]] = {}
        for m, c in self._t.items():
            j = (m >> shift) & _FIELD
            parts.setdefault(j, {})[m - (j << shift)] = c
        return {j: MultiPoly._raw(d) for j, d in parts.items()}

    def coeff_of(self, var: str, j: int) -> "MultiPoly":
        slot = REGISTRY.slot(var)
        shift = _WIDTH * slot
        d = {}
        for m, c in self._t.items():
            if (m >> shift) & _FIELD == j:
                d[m - (j << shift)] = c
        return MultiPoly._raw(d)

    def truncated(self, var: str, prec: int) -> "MultiPoly":
        """Drop every term whose ``var`` exponent is at least ``prec``."""
        slot = REGISTRY.slot(var)
        return MultiPoly._raw({m: c for m, c in self._t.items() if _field(m, slot) < prec})

    # -- hashing / equality ---------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if is_scalar(other):
            if not other:
                return not self._t
            return len(self._t) == 1 and self._t.get(0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self._t.items()})

    def __pos__(self) -> "MultiPoly":
        return self

    def __add__(self, other: object) -> "MultiPoly":
        if is_scalar(other):
            if not other:
                return self
            t = dict(self._t)
            c = t.get(0, 0) + other
            if c:
                t[0] = _clean(c)
            else:
                t.pop(0, None)
            return MultiPoly._raw(t)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if len(self._t) < len(other._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        t = dict(big)
        for m, c in small.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v += c
                if v:
                    t[m] = _clean(v)
                else:
                    del t[m]
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __sub__(self, other: object) -> "MultiPoly":
        if is_scalar(other):
            return self + (-other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "MultiPoly":
        if is_scalar(other):
            return (-self) + other
        return NotImplemented

    def scale(self, c: Scalar) -> "MultiPoly":
        if not c:
            return MultiPoly._raw({})
        if c == 1:
            return self
        return MultiPoly._raw({m: _clean(v * c) for m, v in self._t.items()})

    def __mul__(self, other: object) -> "MultiPoly":
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if cb == 1:
                return MultiPoly._raw({ma + mb: ca for ma, ca in a.items()})
            return MultiPoly._raw({ma + mb: _clean(ca * cb) for ma, ca in a.items()})
        out: Dict[int, Scalar] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        return MultiPoly._raw({m: _clean(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MultiPoly":
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        if k == 0:
            return ONE
        if len(self._t) == 1:
            (m, c), = self._t.items()
            if self.degree() * k > MAX_EXPONENT:
                raise OverflowError("exponent too large for monomial packing")
            return MultiPoly._raw({m * k: _clean(Fraction(c) ** k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- transformations ------------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Simultaneous substitution var -> polynomial (or scalar)."""
        items = [(REGISTRY.slot(v), MultiPoly.coerce(p)) for v, p in mapping.items()]
        if not items or not self._t:
            return self
        slots = [s for s, _ in items]
        groups: Dict[Tuple[int, ...], Dict[int, Scalar]] = {}
        for m, c in self._t.items():
            key = tuple(_field(m, s) for s in slots)
            rest = m
            for s, e in zip(slots, key):
                rest -= e << (_WIDTH * s)
            groups.setdefault(key, {})[rest] = c
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = items[i][1] ** e if e < 2 else power(i, e - 1) * items[i][1]
            return powers[key]

        total = ZERO
        for key, rest in groups.items():
            term = MultiPoly._raw(rest)
            for i, e in enumerate(key):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def psi(self, i: int, names: Iterable[str] | None = None) -> "MultiPoly":
        """Adams operation: raise the listed variables (default: all) to the i-th power."""
        if i == 1 or not self._t:
            return self
        if names is None:
            return MultiPoly._raw({m * i: c for m, c in self._t.items()})
        shifts = [_WIDTH * REGISTRY.slot(v) for v in names]
        out = {}
        for m, c in self._t.items():
            n = m
            for sh in shifts:
                e = (m >> sh) & _FIELD
                if e:
                    if e * i > MAX_EXPONENT:
                        raise OverflowError("exponent too large for monomial packing")
                    n += (e * (i - 1)) << sh
            out[n] = c
        return MultiPoly._raw(out)

    def evaluate(self, values: Mapping[str, Scalar]) -> Scalar:
        """Numeric value with every variable assigned."""
        total: Scalar = 0
        slots = {REGISTRY.slot(v): Fraction(x) for v, x in values.items()}
        for m, c in self._t.items():
            term = Fraction(c)
            for s, e in _unpack(m).items():
                if s not in slots:
                    raise ValueError(f"no value for variable {REGISTRY.name(s)}")
                term *= slots[s] ** e
            total += term
        return _clean(Fraction(total))

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly({m: fn(c) for m, c in self._t.items()})

    def divexact(self, other: "MultiPoly") -> "MultiPoly | None":
        """Quotient self/other if it is a polynomial, else None."""
        other = MultiPoly.coerce(other)
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return ZERO
        g = other._t
        lg = max(g)
        cg = Fraction(g[lg])
        r = dict(self._t)
        q: Dict[int, Scalar] = {}
        while r:
            lr = max(r)
            if not _divides(lg, lr):
                return None
            d = lr - lg
            c = _clean(r[lr] / cg)
            q[d] = c
            for mg, c2 in g.items():
                m = mg + d
                v = r.get(m, 0) - c * c2
                if v:
                    r[m] = _clean(v)
                else:
                    r.pop(m, None)
        return MultiPoly._raw(q)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        from math import gcd
        num = 0
        den = 1
        for c in self._t.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def leading(self) -> Tuple[Tuple[int, ...], Scalar]:
        """Lexicographically largest term over the sorted variable names."""
        rows = self.terms()
        return rows[-1]

    # -- display --------------------------------------------------------
    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        names = self.variables()
        pieces = []
        for exps, c in self.terms(names):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e)
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


ZERO = MultiPoly._raw({})
ONE = MultiPoly._raw({0: 1})


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def variables(names: str) -> tuple[MultiPoly, ...]:
    """``t, y = variables("t y")``."""
    return tuple(MultiPoly.var(v) for v in names.split())


def poly_arith(a: MultiPoly, b, op: str):
    """Dispatcher kept for callers that name the operation as data."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    if op == "substitute":
        return a.subs(b)
    raise ValueError(f"unknown polynomial operation {op!r}")
