"""JSON encoding of polynomials and rational functions.

Polynomial: ``{"vars": [...], "terms": [{"c": "num/den", "e": [...]}, ...]}``
with variables sorted by name and terms sorted lexicographically by
exponent tuple.  Rational function: ``{"num": <poly>, "den": <poly>}``.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly
from .ratfunc import RatFunc


def rational_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def poly_to_json(p: MultiPoly, names: list[str] | None = None) -> dict:
    if names is None:
        names = p.variables()
    return {
        "vars": list(names),
        "terms": [{"c": rational_str(c), "e": list(e)} for e, c in p.terms(names)],
    }


def poly_from_json(obj: dict) -> MultiPoly:
    names = obj["vars"]
    terms = {}
    for row in obj["terms"]:
        e = tuple(row["e"])
        terms[e] = terms.get(e, 0) + parse_rational(row["c"])
    return MultiPoly.from_exponents(names, terms)


def ratfunc_to_json(r) -> dict:
    r = RatFunc.coerce(r)
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(obj: dict) -> RatFunc:
    return RatFunc(poly_from_json(obj["num"]), poly_from_json(obj["den"]))
