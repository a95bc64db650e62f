"""Joint (des, maj) distributions from principal specializations.

For a family with symmetric Q of degree n,

    A(q, t) / prod_{i=0}^{n} (1 - t q^i) = sum_k phi_k(Q) t^k,

where A(q, t) = sum q^maj t^(des+1) and phi_k(f) = f(q^(k-1), ..., q, 1).
Both sides are compared term by term in t; each t^k coefficient is a
polynomial in q, so the comparison is exact in q as well.
"""
from __future__ import annotations

from typing import List

from ..exactalg import MultiPoly
from ..permstat import FamilySpec, family_symfunc
from ..symfunc import principal_spec
from .common import dist
from .transforms import check_poly, over, t

q = MultiPoly.var("q")

FAMILIES = ("all", "cyclic", "involutions", "derangements")


def q_integer(k: int) -> MultiPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return sum((q ** j for j in range(k)), MultiPoly.constant(0))


def desmaj_lhs(n: int, family: str, k_max: int) -> list:
    """t^0..t^k_max coefficients of A(q, t) / prod_{i<=n} (1 - t q^i)."""
    R = over(dist(n, family, "desmaj"), {1 - t * q ** i: 1 for i in range(n + 1)})
    return list(R.series("t", k_max + 1).coeffs)


def desmaj_checks(n: int, k_max: int, family: str) -> List[tuple]:
    def body():
        Q = family_symfunc(n, FamilySpec.parse(family))
        lhs = desmaj_lhs(n, family, k_max)
        for k in range(k_max + 1):
            check_poly(lhs[k], principal_spec(Q, k), f"{family}, coefficient of t^{k}")

    out = [(f"e:desmaj/{family}", n, k_max, body)]
    if family == "all":
        def qeulerian():
            lhs = desmaj_lhs(n, family, k_max)
            for k in range(k_max + 1):
                check_poly(lhs[k], q_integer(k) ** n, f"[k]_q^n at k={k}")
        out.append(("e:qeulerian", n, k_max, qeulerian))
    return out


def suite(n_max: int, k_max: int) -> List[tuple]:
    out: List[tuple] = []
    for family in FAMILIES:
        for n in range(1, min(n_max, 6) + 1):
            out += desmaj_checks(n, k_max, family)
    return out
