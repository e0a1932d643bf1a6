"""Vectorised exhaustive scans over tuples of elements.

Every array produced here is indexed by a tuple ``(x_1, ..., x_L)`` of
elements, so ``np.argwhere`` on a boolean result yields violating tuples in
lexicographic order.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import BudgetExceeded
from .hypercore import HyperStructure

DEFAULT_BUDGET = 10**7


def tuple_budget() -> int:
    env = os.environ.get("HYPERRING_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(size: int, length: int, budget: int | None = None) -> None:
    budget = tuple_budget() if budget is None else budget
    required = size**length
    if required > budget:
        raise BudgetExceeded(required, budget)


def axis(size: int, length: int, i: int) -> np.ndarray:
    shape = [1] * length
    shape[i] = size
    return np.arange(size).reshape(shape)


def fold_over(G: HyperStructure, length: int, positions: tuple[int, ...]) -> np.ndarray:
    """g_fold of the coordinates at ``positions`` for every ``length``-tuple.

    The result is broadcastable to ``(size,)*length``; it is cached on ``G``.
    """
    key = ("fold", length, positions)
    hit = G.cache.get(key)
    if hit is not None:
        return hit
    n = G.n
    if (len(positions) - 1) % (n - 1):
        raise ValueError(f"cannot fold {len(positions)} factors with n={n}")
    xs = [axis(G.size, length, p) for p in positions]
    acc = xs[0]
    if len(xs) > 1:
        acc = G.g_table[tuple(xs[:n])]
        for start in range(n, len(xs), n - 1):
            acc = G.g_table[(acc,) + tuple(xs[start:start + n - 1])]
    if acc.size <= 10**6:
        G.cache[key] = acc
    return acc


def with_one_at(G: HyperStructure, i: int) -> np.ndarray:
    """``g(x_1, .., x_{i-1}, 1, x_{i+1}, .., x_n)`` for every n-tuple x (axis i broadcast)."""
    return np.expand_dims(np.take(G.g_table, G.one, axis=i), i)


def in_set(size: int, m: int) -> np.ndarray:
    return np.array([(m >> i) & 1 == 1 for i in range(size)], dtype=bool)


def first_true(arr: np.ndarray, length: int, size: int):
    arr = np.broadcast_to(arr, (size,) * length)
    hits = np.argwhere(arr)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def all_true(arr: np.ndarray, length: int, size: int) -> list[tuple[int, ...]]:
    arr = np.broadcast_to(arr, (size,) * length)
    return [tuple(int(i) for i in row) for row in np.argwhere(arr)]
