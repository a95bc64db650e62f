"""Shared helpers for the verification suites: cached oracle data and small polynomial tools."""
from __future__ import annotations

from functools import lru_cache

from ..exactalg import MultiPoly, ZERO
from ..permstat import FamilySpec, oracle_dist
from .report import CheckFailed
from .transforms import t


@lru_cache(maxsize=None)
def dist(n: int, family: str, profile: str) -> MultiPoly:
    """Oracle distribution polynomial, cached per (n, family, profile)."""
    return oracle_dist(n, FamilySpec.parse(family), profile).poly


def fetcher(n: int, family: str):
    return lambda profile: dist(n, family, profile)


def P_pk(k: int) -> MultiPoly:
    """Peak polynomial of S_k in t^(pk+1); P_0 = 1."""
    return MultiPoly.constant(1) if k == 0 else dist(k, "all", "pk")


def P_lpk(k: int) -> MultiPoly:
    """Left peak polynomial of S_k in t^lpk; P_0 = 1."""
    return MultiPoly.constant(1) if k == 0 else dist(k, "all", "lpk")


def at_t2(p) -> MultiPoly:
    return MultiPoly.coerce(p).subs({"t": t * t})


def reflect_t(p, top: int) -> MultiPoly:
    """Replace t^e by t^(top - e) in every monomial."""
    p = MultiPoly.coerce(p)
    parts = p.expand_in("t")
    return sum((c * t ** (top - e) for e, c in parts.items()), ZERO)


def check_nonnegative_integers(p, what: str) -> None:
    for _, c in MultiPoly.coerce(p).terms():
        if c < 0 or getattr(c, "denominator", 1) != 1:
            raise CheckFailed(f"{what}: coefficient {c} is not a non-negative integer")
