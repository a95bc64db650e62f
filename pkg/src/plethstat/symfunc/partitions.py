"""Integer partitions, compositions and small number-theoretic helpers.

A partition is a weakly decreasing tuple of positive integers; a
composition is any tuple of positive integers.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, e.g. 3 -> (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for d in range(n + 1):
        yield from partitions_of(d)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def multiplicities(lam: Partition) -> dict[int, int]:
    """N_i(lambda) for the parts i that occur."""
    return dict(Counter(lam))


def odd_parts(lam: Partition) -> int:
    return sum(1 for p in lam if p % 2)


@lru_cache(maxsize=None)
def z_of(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i!."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def sort_partition(parts) -> Partition:
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def merge(a: Partition, b: Partition) -> Partition:
    """Union of two partitions (so p_a * p_b = p_merge(a, b))."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    k = 2
    while k * k <= d:
        if d % k == 0:
            d //= k
            if d % k == 0:
                return 0
            result = -result
        k += 1
    if d > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return tuple(small + large)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def cycle_type_square(lam: Partition) -> Partition:
    """Cycle type of pi^2 when pi has cycle type lam."""
    parts = []
    for m in lam:
        if m % 2:
            parts.append(m)
        else:
            parts.extend((m // 2, m // 2))
    return sort_partition(parts)


# -- compositions -----------------------------------------------------------

@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of n, ordered by their descent sets read as bit masks."""
    if n < 1:
        raise ValueError("compositions are taken of n >= 1")
    out = []
    for mask in range(1 << (n - 1)):
        out.append(composition_from_descents(
            [i for i in range(1, n) if mask >> (i - 1) & 1], n))
    return tuple(out)


def descent_set(comp: Sequence[int]) -> tuple[int, ...]:
    """Des(L) = partial sums L_1, L_1+L_2, ... excluding n."""
    out = []
    s = 0
    for part in comp[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def composition_from_descents(des: Sequence[int], n: int) -> tuple[int, ...]:
    out = []
    prev = 0
    for d in sorted(des):
        out.append(d - prev)
        prev = d
    out.append(n - prev)
    return tuple(out)


def descent_mask(comp: Sequence[int]) -> int:
    return sum(1 << (d - 1) for d in descent_set(comp))


def complement(comp: Sequence[int]) -> tuple[int, ...]:
    """Composition whose descent set is the complement of Des(comp)."""
    n = sum(comp)
    d = set(descent_set(comp))
    return composition_from_descents([i for i in range(1, n) if i not in d], n)


def coarsenings(comp: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every composition obtained by merging adjacent parts (including comp itself)."""
    comp = tuple(comp)
    cuts = descent_set(comp)
    n = sum(comp)
    for r in range(len(cuts) + 1):
        for keep in combinations(cuts, r):
            yield composition_from_descents(keep, n)
