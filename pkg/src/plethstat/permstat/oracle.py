"""Joint distributions of descent statistics over permutation families."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict

from ..exactalg import MultiPoly, ZERO, poly_to_json, rational_str
from ..symfunc import compositions_of, multiplicities
from .enumerate import class_table, check_cap
from .families import FamilySpec
from .stats import StatRecord, mask_stats

BASES = ("pkdes", "pk", "des", "lpkdes", "lpk", "udr", "desmaj")
MODIFIERS = ("fix", "cycletype")
_ALIASES = {("pk", "des"): "pkdes", ("lpk", "des"): "lpkdes", ("des", "maj"): "desmaj"}


@dataclass(frozen=True)
class Profile:
    base: str | None
    fix: bool = False
    cycletype: bool = False

    @classmethod
    def parse(cls, text: str) -> "Profile":
        tokens = [t.strip().lower() for t in text.replace("+", ",").split(",") if t.strip()]
        if not tokens:
            raise ValueError("empty statistic profile")
        mods = [t for t in tokens if t in MODIFIERS]
        rest = [t for t in tokens if t not in MODIFIERS]
        base = None
        if len(rest) == 1:
            base = rest[0]
        elif len(rest) == 2:
            base = _ALIASES.get(tuple(rest)) or _ALIASES.get(tuple(reversed(rest)))
            if base is None:
                raise ValueError(f"statistics {rest} cannot be combined into one profile")
        elif len(rest) > 2:
            raise ValueError(f"too many statistics in profile {text!r}")
        if base is not None and base not in BASES:
            raise ValueError(f"unknown statistic {base!r}; expected one of {', '.join(BASES)}")
        if len(set(mods)) != len(mods):
            raise ValueError(f"repeated modifier in profile {text!r}")
        return cls(base, "fix" in mods, "cycletype" in mods)

    @property
    def name(self) -> str:
        parts = [self.base] if self.base else []
        if self.fix:
            parts.append("fix")
        if self.cycletype:
            parts.append("cycletype")
        return ",".join(parts)

    def exponents(self, s: StatRecord) -> Dict[str, int]:
        b = self.base
        if b is None:
            return {}
        if b == "pkdes":
            return {"y": s.pk + 1, "t": s.des + 1}
        if b == "pk":
            return {"t": s.pk + 1}
        if b == "des":
            return {"t": s.des + 1}
        if b == "lpkdes":
            return {"y": s.lpk, "t": s.des}
        if b == "lpk":
            return {"t": s.lpk}
        if b == "udr":
            return {"t": s.udr}
        return {"q": s.maj, "t": s.des + 1}

    def monomial(self, s: StatRecord, ctype: tuple, coeff: int = 1) -> MultiPoly:
        exps = self.exponents(s)
        if self.fix:
            exps["z"] = ctype.count(1)
        if self.cycletype:
            for i, m in multiplicities(ctype).items():
                exps[f"z{i}"] = m
        return MultiPoly.monomial(coeff, **exps)


@dataclass(frozen=True)
class DistPoly:
    profile: str
    poly: MultiPoly

    def to_json(self) -> dict:
        out = {"profile": self.profile}
        out.update(poly_to_json(self.poly))
        return out

    def csv_rows(self) -> list[list[str]]:
        names = self.poly.variables()
        rows = [names + ["coeff"]]
        for exps, c in self.poly.terms(names):
            rows.append([str(e) for e in exps] + [rational_str(c)])
        return rows


def _as_family(family) -> FamilySpec:
    return family if isinstance(family, FamilySpec) else FamilySpec.parse(family)


def _as_profile(profile) -> Profile:
    return profile if isinstance(profile, Profile) else Profile.parse(profile)


def oracle_dist(n: int, family="all", profile="des", unsafe: bool = False) -> DistPoly:
    """Exact sum of profile monomials over the permutations of the family."""
    family = _as_family(family)
    prof = _as_profile(profile)
    check_cap(n, unsafe)
    grouped: Counter = Counter()
    for (mask, ctype), count in class_table(n, unsafe).items():
        if family.contains(ctype, n):
            grouped[(mask, ctype)] += count
    total = ZERO
    for (mask, ctype), count in sorted(grouped.items()):
        total = total + prof.monomial(mask_stats(mask, n), ctype, count)
    return DistPoly(prof.name, total)


def descent_table(n: int, family="all", unsafe: bool = False) -> Dict[tuple, int]:
    """Number of family members with each descent composition (nonzero entries only)."""
    family = _as_family(family)
    check_cap(n, unsafe)
    by_mask: Counter = Counter()
    for (mask, ctype), count in class_table(n, unsafe).items():
        if family.contains(ctype, n):
            by_mask[mask] += count
    out = {}
    for mask, comp in enumerate(compositions_of(n)):
        if by_mask.get(mask):
            out[comp] = by_mask[mask]
    return out


def class_sizes(n: int, unsafe: bool = False) -> Dict[tuple, int]:
    sizes: Counter = Counter()
    for (_, ctype), count in class_table(n, unsafe).items():
        sizes[ctype] += count
    return dict(sizes)


def family_size(n: int, family="all", unsafe: bool = False) -> int:
    family = _as_family(family)
    return sum(c for t, c in class_sizes(n, unsafe).items() if family.contains(t, n))
