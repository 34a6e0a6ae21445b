"""Shared fixtures and deliberately naive reference implementations.

The helpers here use plain dicts and itertools only, so they share no code
with the library they check.
"""
from __future__ import annotations

import itertools
from collections import Counter
from pathlib import Path

import pytest

from fatgraph_reembed.embedding import parse_file

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return parse_file((DATA / name).read_text())


@pytest.fixture
def fig1():
    return load("fig1.emb")


@pytest.fixture
def fig1_planar():
    return load("fig1_planar.emb")


@pytest.fixture
def b2():
    return load("b2.emb")


@pytest.fixture
def b2_planar():
    return load("b2_planar.emb")


# -- naive reference code --

def naive_cycle_count(f: dict) -> int:
    seen, count = set(), 0
    for x in f:
        if x in seen:
            continue
        count += 1
        while x not in seen:
            seen.add(x)
            x = f[x]
    return count


def rotation_perm(rotations) -> dict:
    beta = {}
    for rot in rotations:
        for i, x in enumerate(rot):
            beta[x] = rot[(i + 1) % len(rot)]
    return beta


def naive_faces(rotations, edges) -> int:
    """Walk faces of a map: next half-edge is beta(alpha(x))."""
    alpha = {}
    for a, b in edges:
        alpha[a], alpha[b] = b, a
    beta = rotation_perm(rotations)
    return naive_cycle_count({x: alpha[beta[x]] for x in beta})


def naive_genus(rotations, edges) -> int:
    v, e, f = len(rotations), len(edges), naive_faces(rotations, edges)
    chi = v - e + f
    assert chi % 2 == 0
    return (2 - chi) // 2


def naive_rotations(items):
    """All cyclic orders of ``items`` that start with the first item."""
    first, rest = items[0], items[1:]
    for p in itertools.permutations(rest):
        yield (first,) + p


def naive_local_distribution(rotations, edges, index) -> Counter:
    g0 = naive_genus(rotations, edges)
    out = Counter()
    for rot in naive_rotations(rotations[index]):
        new = list(rotations)
        new[index] = rot
        out[naive_genus(new, edges) - g0] += 1
    return out


def naive_pk(parts) -> Counter:
    """Tally the cycle count of ``pi = D^-1 o s`` over all n-cycles ``s``,
    with ``D`` a fixed permutation of the given type."""
    n = sum(parts)
    d, start = {}, 1
    for p in parts:
        block = list(range(start, start + p))
        for i, x in enumerate(block):
            d[x] = block[(i + 1) % p]
        start += p
    out = Counter()
    for rest in itertools.permutations(range(2, n + 1)):
        cyc = (1,) + rest
        s = {cyc[i]: cyc[(i + 1) % n] for i in range(n)}
        dinv = {v: k for k, v in d.items()}
        pi = {x: dinv[s[x]] for x in s}
        out[naive_cycle_count(pi)] += 1
    return out
