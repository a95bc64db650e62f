"""Descent-type statistics of a single permutation or of a descent composition."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from ..symfunc.partitions import composition_from_descents, descent_set, sort_partition


@dataclass(frozen=True)
class StatRecord:
    des: int
    maj: int
    pk: int
    lpk: int
    val: int
    udr: int
    ddes: int
    br: int
    comp: tuple
    fix: Optional[int] = None
    ctype: Optional[tuple] = None

    def descent_part(self) -> "StatRecord":
        """Drop the fields that are not determined by the descent set."""
        return StatRecord(self.des, self.maj, self.pk, self.lpk, self.val, self.udr,
                          self.ddes, self.br, self.comp)


def check_perm(perm: Sequence[int]) -> tuple:
    p = tuple(int(v) for v in perm)
    if not p or sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..n with n >= 1")
    return p


def cycle_type(perm: Sequence[int]) -> tuple:
    p = check_perm(perm)
    seen = [False] * (len(p) + 1)
    lengths = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j - 1]
            length += 1
        lengths.append(length)
    return sort_partition(lengths)


def stats_of(perm: Sequence[int]) -> StatRecord:
    """All statistics of a permutation given in one-line notation (values 1..n)."""
    p = check_perm(perm)
    n = len(p)
    descents = [i for i in range(1, n) if p[i - 1] > p[i]]
    pk = val = ddes = 0
    for i in range(2, n):
        a, b, c = p[i - 2], p[i - 1], p[i]
        if a < b > c:
            pk += 1
        elif a > b < c:
            val += 1
        elif a > b > c:
            ddes += 1
    first_desc = n >= 2 and p[0] > p[1]
    lpk = pk + first_desc
    # biruns: maximal monotone runs of consecutive letters
    if n == 1:
        br = 1
    else:
        br = 1
        for i in range(1, n - 1):
            if (p[i - 1] < p[i]) != (p[i] < p[i + 1]):
                br += 1
    udr = br + first_desc
    runs = []
    length = 1
    for i in range(1, n):
        if p[i - 1] < p[i]:
            length += 1
        else:
            runs.append(length)
            length = 1
    runs.append(length)
    fix = sum(1 for i, v in enumerate(p, start=1) if i == v)
    return StatRecord(des=len(descents), maj=sum(descents), pk=pk, lpk=lpk, val=val,
                      udr=udr, ddes=ddes, br=br, comp=tuple(runs), fix=fix,
                      ctype=cycle_type(p))


@lru_cache(maxsize=None)
def comp_stats(comp: tuple) -> StatRecord:
    """Statistics determined by the descent set of a composition."""
    comp = tuple(comp)
    if not comp or any(c <= 0 for c in comp):
        raise ValueError(f"{comp!r} is not a composition")
    n = sum(comp)
    D = set(descent_set(comp))
    des = len(D)
    pk = sum(1 for i in D if 2 <= i <= n - 1 and i - 1 not in D)
    lpk = sum(1 for i in D if i == 1 or i - 1 not in D)
    ddes = sum(1 for i in D if i - 1 in D)
    val = sum(1 for i in range(2, n) if i not in D and i - 1 in D)
    udr = lpk + val + 1
    br = udr - (1 in D)
    return StatRecord(des=des, maj=sum(D), pk=pk, lpk=lpk, val=val, udr=udr, ddes=ddes,
                      br=br, comp=comp)


@lru_cache(maxsize=None)
def mask_stats(mask: int, n: int) -> StatRecord:
    """comp_stats for the composition whose descent set is encoded by ``mask``."""
    des = [i for i in range(1, n) if mask >> (i - 1) & 1]
    return comp_stats(composition_from_descents(des, n))
