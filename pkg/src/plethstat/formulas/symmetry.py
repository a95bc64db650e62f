"""Complementation symmetry of descent sets and of the (pk, des) distribution."""
from __future__ import annotations

from typing import List

from ..permstat import FamilySpec, descent_table
from ..symfunc import complement, compositions_of, lyndon_of, partitions_of, ribbon_in_p, scalar_product
from .common import dist, reflect_t
from .report import CheckFailed
from .transforms import check_poly


def qualifies(lam: tuple) -> bool:
    """No part congruent to 2 mod 4, and each odd part at most once."""
    odd = [p for p in lam if p % 2]
    return all(p % 4 != 2 for p in lam) and len(odd) == len(set(odd))


def qualifying_types(n: int) -> list[tuple]:
    return [lam for lam in partitions_of(n) if qualifies(lam)]


def _family(lam: tuple) -> str:
    return "cycle_type:" + ",".join(map(str, lam))


def check_pkdes_symmetric(n: int, family: str) -> None:
    """#(pk=j, des=k) = #(pk=j, des=n-1-k), i.e. t^e <-> t^(n+1-e) in y^(pk+1) t^(des+1)."""
    P = dist(n, family, "pkdes")
    check_poly(P, reflect_t(P, n + 1), f"(pk,des) symmetry over {family}")


def check_table_complement(n: int, family: str) -> None:
    table = descent_table(n, FamilySpec.parse(family))
    for comp in compositions_of(n):
        a, b = table.get(comp, 0), table.get(complement(comp), 0)
        if a != b:
            raise CheckFailed(f"{family}: composition {comp} has {a}, its complement has {b}")


def check_ribbon_complement(n: int, lam: tuple) -> None:
    """<L_lambda, r_L> = <L_lambda, r_{L^c}> on the symmetric function side."""
    L = lyndon_of(lam)
    for comp in compositions_of(n):
        a = scalar_product(L, ribbon_in_p(comp))
        b = scalar_product(L, ribbon_in_p(complement(comp)))
        if a != b:
            raise CheckFailed(f"type {lam}: <L, r_{comp}> = {a} but the complement gives {b}")


def compsym1_checks(n: int) -> List[tuple]:
    def thm():
        for lam in qualifying_types(n):
            check_pkdes_symmetric(n, _family(lam))

    def lem():
        for lam in qualifying_types(n):
            check_table_complement(n, _family(lam))
            check_ribbon_complement(n, lam)

    return [("thm:compsym1", n, None, thm), ("lem:compsym1", n, None, lem)]


def compsym2_checks(n: int) -> List[tuple]:
    def thm():
        check_pkdes_symmetric(n, "involutions")

    def lem():
        check_table_complement(n, "involutions")

    return [("thm:compsym2", n, None, thm), ("lem:compsym2", n, None, lem)]
