"""Bijections ``V(X) -> V(Y)`` as image tuples, with Lehmer-code ranking.

A bijection ``b`` on ``n`` points is a tuple with ``b[x]`` the image of
``x``.  Ranks follow lexicographic order of the image tuple, which is the
factorial-number-system value of the Lehmer code; rank 0 is the identity.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

Bijection = tuple[int, ...]

MAX_RANK_ORDER = 12


def as_bijection(images: Iterable[int]) -> Bijection:
    b = tuple(int(v) for v in images)
    if sorted(b) != list(range(len(b))):
        raise ValueError(f"{b} is not a permutation of 0..{len(b) - 1}")
    return b


def identity(n: int) -> Bijection:
    return tuple(range(n))


def rank(b: Sequence[int]) -> int:
    n = len(b)
    if n > MAX_RANK_ORDER:
        raise ValueError(f"ranking supports n <= {MAX_RANK_ORDER}")
    r = 0
    for i in range(n):
        r = r * (n - i) + sum(1 for j in range(i + 1, n) if b[j] < b[i])
    return r


def unrank(r: int, n: int) -> Bijection:
    if n > MAX_RANK_ORDER:
        raise ValueError(f"ranking supports n <= {MAX_RANK_ORDER}")
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    pool = list(range(n))
    out = []
    for i in range(n):
        f = math.factorial(n - 1 - i)
        d, r = divmod(r, f)
        out.append(pool.pop(d))
    return tuple(out)


def sign(b: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd (parity of the inversion count)."""
    inversions = sum(1 for i, j in itertools.combinations(range(len(b)), 2) if b[i] > b[j])
    return -1 if inversions % 2 else 1


def compose(b: Sequence[int], c: Sequence[int]) -> Bijection:
    """``b o c``: first ``c``, then ``b``."""
    return tuple(b[c[x]] for x in range(len(c)))


def inverse(b: Sequence[int]) -> Bijection:
    out = [0] * len(b)
    for x, y in enumerate(b):
        out[y] = x
    return tuple(out)


def swap(b: Sequence[int], a: int, c: int) -> Bijection:
    """``b o (a c)``: the images of ``a`` and ``c`` exchanged."""
    if a == c:
        raise ValueError("swap needs two distinct positions")
    out = list(b)
    out[a], out[c] = out[c], out[a]
    return tuple(out)


def compaction(n: int, removed: Iterable[int]) -> dict[int, int]:
    """Order-preserving dense relabeling of ``0..n-1`` minus ``removed``."""
    removed = set(removed)
    return {v: i for i, v in enumerate(v for v in range(n) if v not in removed)}


def restrict(b: Sequence[int], removed_x: Iterable[int], removed_y: Iterable[int] | None = None) -> Bijection:
    """Restriction of ``b`` to the kept positions, both sides compacted.

    ``removed_y`` defaults to ``b(removed_x)``; if given it must equal that
    image set, otherwise the restriction is not a bijection.
    """
    removed_x = set(removed_x)
    image = {b[x] for x in removed_x}
    if removed_y is not None and set(removed_y) != image:
        raise ValueError("b does not map the removed X-vertices onto the removed Y-vertices")
    relabel_y = compaction(len(b), image)
    return tuple(relabel_y[b[x]] for x in range(len(b)) if x not in removed_x)


def extend(b: Sequence[int], pinning: Mapping[int, int]) -> Bijection:
    """The unique extension of ``b`` that agrees with ``pinning`` on removed vertices."""
    n = len(b) + len(pinning)
    if len(set(pinning.values())) != len(pinning):
        raise ValueError("pinning is not injective")
    if any(not 0 <= v < n for kv in pinning.items() for v in kv):
        raise ValueError("pinning refers to vertices outside 0..n-1")
    kept_x = [x for x in range(n) if x not in pinning]
    kept_y = [y for y in range(n) if y not in set(pinning.values())]
    out = [0] * n
    for i, x in enumerate(kept_x):
        out[x] = kept_y[b[i]]
    for x, y in pinning.items():
        out[x] = y
    return tuple(out)


# ---------------------------------------------------------------------------
# vectorized tables used by the FS engine


def rank_rows(p: np.ndarray) -> np.ndarray:
    """Ranks of each row of an ``(m, n)`` array of permutations."""
    m, n = p.shape
    r = np.zeros(m, dtype=np.int64)
    for i in range(n):
        smaller = (p[:, i + 1:] < p[:, i:i + 1]).sum(axis=1)
        r = r * (n - i) + smaller
    return r


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    """``(n!, n)`` int8 array; row ``r`` is ``unrank(r, n)``."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    out = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def sign_table(n: int) -> np.ndarray:
    p = all_perms(n).astype(np.int64)
    inv = np.zeros(len(p), dtype=np.int64)
    for i in range(n):
        inv += (p[:, i + 1:] < p[:, i:i + 1]).sum(axis=1)
    out = np.where(inv % 2 == 0, 1, -1).astype(np.int8)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def swap_table(n: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Position pairs ``(a, c)`` and the ``(n!, C(n,2))`` ranks of ``b o (a c)``."""
    p = all_perms(n)
    pairs = list(itertools.combinations(range(n), 2))
    table = np.empty((len(p), len(pairs)), dtype=np.int64)
    for j, (a, c) in enumerate(pairs):
        q = p.copy()
        q[:, [a, c]] = q[:, [c, a]]
        table[:, j] = rank_rows(q)
    table.setflags(write=False)
    return pairs, table
