"""Brute-force enumeration of the symmetric group.

Permutations of [n] are generated in lexicographic one-line order, one
chunk per leading letter.  Every chunk is reduced to counts keyed by
(descent mask, cycle type); chunks are merged by adding counts, so the
result does not depend on how many worker processes were used.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, Tuple

import numpy as np

ENUMERATION_CAP = 9
HARD_LIMIT = 10


class EnumerationCapError(ValueError):
    pass


def check_cap(n: int, unsafe: bool = False) -> None:
    if n < 1:
        raise ValueError("permutation families start at n = 1")
    limit = HARD_LIMIT if unsafe else ENUMERATION_CAP
    if n > limit:
        hint = "" if unsafe else f" (n up to {HARD_LIMIT} needs the unsafe flag)"
        raise EnumerationCapError(f"n = {n} exceeds the enumeration cap of {limit}{hint}")


def worker_count() -> int:
    raw = os.environ.get("PERMSTAT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def iter_perms(n: int) -> Iterator[tuple]:
    """Permutations of 1..n in lexicographic order."""
    return permutations(range(1, n + 1))


def _chunk(n: int, first: int) -> np.ndarray:
    if n == 1:
        return np.zeros((1, 1), dtype=np.int8)
    rest = [v for v in range(n) if v != first]
    body = np.array(list(permutations(rest)), dtype=np.int8).reshape(-1, n - 1)
    lead = np.full((body.shape[0], 1), first, dtype=np.int8)
    return np.hstack([lead, body])


def _cycle_lengths(P: np.ndarray) -> np.ndarray:
    """For each row and position, the length of the cycle through that position."""
    n = P.shape[1]
    idx = np.arange(n, dtype=P.dtype)
    length = np.zeros(P.shape, dtype=np.int8)
    cur = P.copy()
    for step in range(1, n + 1):
        hit = (cur == idx) & (length == 0)
        length[hit] = step
        cur = np.take_along_axis(P, cur.astype(np.intp), axis=1)
    return length


def _type_counts(length: np.ndarray) -> np.ndarray:
    """Column i-1 holds N_i, the number of i-cycles."""
    n = length.shape[1]
    return np.stack([(length == i).sum(axis=1) // i for i in range(1, n + 1)], axis=1)


def _decode_type(counts) -> tuple:
    parts = []
    for i in range(len(counts), 0, -1):
        parts.extend([i] * int(counts[i - 1]))
    return tuple(parts)


def _class_chunk(args: Tuple[int, int]) -> Dict[Tuple[int, tuple], int]:
    n, first = args
    P = _chunk(n, first)
    if n > 1:
        weights = (1 << np.arange(n - 1)).astype(np.int64)
        mask = ((P[:, :-1] > P[:, 1:]).astype(np.int64) * weights).sum(axis=1)
    else:
        mask = np.zeros(P.shape[0], dtype=np.int64)
    counts = _type_counts(_cycle_lengths(P)).astype(np.int64)
    base = n + 1
    code = (counts * (base ** np.arange(n, dtype=np.int64))).sum(axis=1)
    key = code * (1 << max(n - 1, 0)) + mask
    uniq, mult = np.unique(key, return_counts=True)
    out: Dict[Tuple[int, tuple], int] = {}
    for k, m in zip(uniq.tolist(), mult.tolist()):
        c, msk = divmod(k, 1 << max(n - 1, 0))
        digits = []
        for _ in range(n):
            c, d = divmod(c, base)
            digits.append(d)
        out[(msk, _decode_type(digits))] = m
    return out


def _square_chunk(args: Tuple[int, int]) -> Dict[Tuple[tuple, int, int], int]:
    n, first = args
    P = _chunk(n, first)
    types = _type_counts(_cycle_lengths(P))
    P2 = np.take_along_axis(P, P.astype(np.intp), axis=1)
    sq = _type_counts(_cycle_lengths(P2))
    ncyc = sq.sum(axis=1)
    nodd = sq[:, 0::2].sum(axis=1)
    out: Counter = Counter()
    for row, a, b in zip(types.tolist(), ncyc.tolist(), nodd.tolist()):
        out[(_decode_type(row), a, b)] += 1
    return dict(out)


def _run(fn, n: int) -> Counter:
    jobs = [(n, first) for first in range(n)]
    workers = min(worker_count(), n)
    total: Counter = Counter()
    if workers > 1 and n >= 8:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, jobs))
    else:
        parts = [fn(j) for j in jobs]
    for part in parts:
        total.update(part)
    return total


@lru_cache(maxsize=None)
def class_table(n: int, unsafe: bool = False) -> Dict[Tuple[int, tuple], int]:
    """Number of permutations of [n] with each (descent mask, cycle type)."""
    check_cap(n, unsafe)
    table = _run(_class_chunk, n)
    return dict(sorted(table.items()))


@lru_cache(maxsize=None)
def square_table(n: int, unsafe: bool = False) -> Dict[Tuple[tuple, int, int], int]:
    """Counts keyed by (cycle type of pi, #cycles of pi^2, #odd cycles of pi^2)."""
    check_cap(n, unsafe)
    return dict(sorted(_run(_square_chunk, n).items()))
