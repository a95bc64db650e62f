"""Permutation families that are unions of conjugacy classes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exactalg import MultiPoly, ONE
from ..symfunc import SymFunc, lyndon_of, multiplicities, partitions_of

KINDS = ("all", "cyclic", "involutions", "derangements", "cycle_type", "fix_count")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    cycle_type: Optional[tuple] = None
    fix_count: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind == "cycle_type" and not self.cycle_type:
            raise ValueError("family cycle_type needs a partition")
        if self.kind == "fix_count" and (self.fix_count is None or self.fix_count < 0):
            raise ValueError("family fix_count needs a number of fixed points")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """'all', 'cyclic', 'involutions', 'derangements', 'cycle_type:3,1', 'fix_count:2'."""
        kind, _, arg = text.strip().partition(":")
        kind = kind.replace("-", "_")
        if kind == "cycle_type":
            parts = tuple(sorted((int(a) for a in arg.split(",") if a), reverse=True))
            return cls(kind, cycle_type=parts)
        if kind == "fix_count":
            if not arg:
                raise ValueError("family fix_count needs a number, e.g. fix_count:2")
            return cls(kind, fix_count=int(arg))
        if arg:
            raise ValueError(f"family {kind!r} takes no argument")
        return cls(kind)

    def label(self) -> str:
        if self.kind == "cycle_type":
            return "cycle_type:" + ",".join(map(str, self.cycle_type))
        if self.kind == "fix_count":
            return f"fix_count:{self.fix_count}"
        return self.kind

    def contains(self, ctype: tuple, n: int) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "cyclic":
            return ctype == (n,)
        if self.kind == "involutions":
            return all(p <= 2 for p in ctype)
        if self.kind == "derangements":
            return 1 not in ctype
        if self.kind == "cycle_type":
            return ctype == self.cycle_type
        return ctype.count(1) == self.fix_count

    def classes(self, n: int) -> list[tuple]:
        if self.kind == "cycle_type" and sum(self.cycle_type) != n:
            raise ValueError(f"cycle type {self.cycle_type} is not a partition of {n}")
        return [lam for lam in partitions_of(n) if self.contains(lam, n)]


ALL = FamilySpec("all")
CYCLIC = FamilySpec("cyclic")
INVOLUTIONS = FamilySpec("involutions")
DERANGEMENTS = FamilySpec("derangements")


def class_weight(lam: tuple, weight: Optional[str]) -> MultiPoly:
    """1, z^{fix}, or prod z_i^{N_i} for a cycle type."""
    if weight is None:
        return ONE
    if weight == "fix":
        return MultiPoly.monomial(z=lam.count(1))
    if weight == "cycletype":
        return MultiPoly.monomial(**{f"z{i}": m for i, m in multiplicities(lam).items()})
    raise ValueError(f"unknown class weight {weight!r}")


def family_symfunc(n: int, family: FamilySpec, weight: Optional[str] = None) -> SymFunc:
    """Q(family) = sum of L_lambda over the included cycle types, optionally weighted."""
    if not isinstance(family, FamilySpec):
        raise ValueError("Q not symmetric: family must be a union of conjugacy classes")
    total = SymFunc.zero()
    for lam in family.classes(n):
        total = total + lyndon_of(lam).scale(class_weight(lam, weight))
    return total
