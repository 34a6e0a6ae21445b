"""Vectorised helpers for the exhaustive oracles.

Permutations here are rows of 0-based image arrays.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

BLOCK_MAX = 9


@lru_cache(maxsize=None)
def _all_perms(m: int) -> np.ndarray:
    if m == 0:
        return np.zeros((1, 0), dtype=np.int16)
    sub = _all_perms(m - 1)
    rows = []
    for first in range(m):
        rest = sub + (sub >= first)
        rows.append(np.column_stack([np.full(len(sub), first, dtype=np.int16), rest]))
    out = np.vstack(rows).astype(np.int16)
    out.setflags(write=False)
    return out


def perm_blocks(m: int):
    """Yield arrays whose rows, taken together, are all m! permutations of
    ``range(m)``, in lexicographic order."""
    if m <= BLOCK_MAX:
        yield _all_perms(m)
        return
    for prefix in itertools.permutations(range(m), m - BLOCK_MAX):
        rest = np.array([x for x in range(m) if x not in prefix], dtype=np.int16)
        tail = rest[_all_perms(BLOCK_MAX)]
        head = np.broadcast_to(np.array(prefix, dtype=np.int16), (len(tail), len(prefix)))
        yield np.hstack([head, tail])


def count_cycles(perms: np.ndarray) -> np.ndarray:
    """Number of cycles of each row.

    Every element learns the minimum of its orbit by pointer doubling;
    a cycle is counted at the position holding its minimum.
    """
    r, n = perms.shape
    if n == 0:
        return np.zeros(r, dtype=np.int64)
    low = np.broadcast_to(np.arange(n, dtype=perms.dtype), perms.shape).copy()
    step = perms.copy()
    span = 1
    while span < n:
        low = np.minimum(low, np.take_along_axis(low, step, axis=1))
        step = np.take_along_axis(step, step, axis=1)
        span *= 2
    return (low == np.arange(n)).sum(axis=1)


def cyclic_orders(items) -> np.ndarray:
    """All (d-1)! cyclic orders of ``items`` as rows starting with ``items[0]``."""
    items = np.asarray(items)
    d = len(items)
    if d == 1:
        return items.reshape(1, 1)
    rest = np.vstack(list(perm_blocks(d - 1)))
    return np.column_stack([np.full(len(rest), items[0]), items[1:][rest]])


def cyclic_order_blocks(items):
    """Like :func:`cyclic_orders` but in memory-bounded chunks."""
    items = np.asarray(items)
    d = len(items)
    if d == 1:
        yield items.reshape(1, 1)
        return
    for block in perm_blocks(d - 1):
        yield np.column_stack([np.full(len(block), items[0]), items[1:][block]])


def apply_rotations(base: np.ndarray, orders: np.ndarray) -> np.ndarray:
    """Copies of ``base`` (0-based images) with one vertex rotated per row of
    ``orders`` (0-based half-edges in cyclic order)."""
    out = np.broadcast_to(base, (len(orders), len(base))).copy()
    rows = np.arange(len(orders))[:, None]
    out[rows, orders] = np.roll(orders, -1, axis=1)
    return out
