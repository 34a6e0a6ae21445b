"""Exact counts of factorizations of a permutation through an n-cycle.

``p_k^λ(n)`` is the number of n-cycles ``s`` such that ``D⁻¹ ∘ s`` has
exactly ``k`` cycles, for a fixed permutation ``D`` of cycle type ``λ``.
Equivalently it counts plane permutations with diagonal ``D`` whose
``pi`` has ``k`` cycles.  Three independent routes are provided:

* :func:`pk_oracle` enumerates all ``(n-1)!`` n-cycles;
* :func:`pk_recurrence` runs the downward recurrence in ``k`` over
  refinements of ``λ``, seeded with the top values ``p_{n+1-ℓ(λ)}^λ``;
* :func:`p1_stanley` evaluates the alternating-sum formula for ``k = 1``.

Everything is integer or :class:`fractions.Fraction`; there is no floating
point in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Iterator, Mapping

import numpy as np

from . import _batch, caps
from .errors import ConventionError, InputError
from .perm import CycleType, Permutation

__all__ = [
    "PkTable",
    "RationalBound",
    "q_lambda",
    "splits",
    "kappa",
    "factorization_counts",
    "pk_oracle",
    "pk_max_oracle",
    "pk_max_closed",
    "pk_recurrence",
    "p1_stanley",
    "r_nu_closed_form",
    "zagier_bounds",
]


def _as_type(lam) -> CycleType:
    if isinstance(lam, CycleType):
        return lam
    if isinstance(lam, str):
        return CycleType.parse(lam)
    return CycleType(lam)


@dataclass(frozen=True)
class PkTable:
    """Counts ``k -> p_k^λ(n)``; absent keys are zero."""

    lam: CycleType
    items: tuple[tuple[int, int], ...]

    def __init__(self, lam, counts: Mapping[int, int]):
        object.__setattr__(self, "lam", _as_type(lam))
        object.__setattr__(self, "items", tuple(sorted((k, v) for k, v in counts.items() if v)))

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def k_max(self) -> int:
        return self.n + 1 - self.lam.length

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    def total(self) -> int:
        return sum(v for _, v in self.items)

    def check(self) -> None:
        """Raise :class:`ConventionError` unless the structural facts hold:
        total ``(n-1)!``, nothing above ``k_max``, a positive value at
        ``k_max`` and support of a single parity."""
        if self.total() != factorial(self.n - 1):
            raise ConventionError(f"{self.lam}: counts sum to {self.total()}, not {factorial(self.n - 1)}")
        for k, _ in self.items:
            if k > self.k_max or (self.k_max - k) % 2:
                raise ConventionError(f"{self.lam}: unexpected support at k={k}")
        if self[self.k_max] <= 0:
            raise ConventionError(f"{self.lam}: maximum k={self.k_max} not attained")

    def to_tsv(self) -> str:
        return "".join(f"{k}\t{v}\n" for k, v in self.items)


@dataclass(frozen=True)
class RationalBound:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ConventionError(f"empty bound [{self.lower}, {self.upper}]")

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper


def q_lambda(lam) -> int:
    """Number of permutations of cycle type ``lam``."""
    return _as_type(lam).class_size()


def _partitions_exact(total: int, parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, max_part), 0, -1):
        if first * parts < total:
            break
        for rest in _partitions_exact(total - first, parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _splits(eta: CycleType, parts: int) -> tuple[CycleType, ...]:
    found = set()
    base = list(eta.parts)
    for b in set(base):
        if b < parts:
            continue
        rest = list(base)
        rest.remove(b)
        for piece in _partitions_exact(b, parts, b):
            found.add(CycleType(rest + list(piece)))
    return tuple(sorted(found, key=lambda c: c.parts, reverse=True))


def splits(eta, parts: int) -> list[CycleType]:
    """Partitions obtained by cutting one part of ``eta`` into ``parts`` pieces."""
    if parts < 3 or parts % 2 == 0:
        raise InputError(f"number of pieces must be odd and at least 3, got {parts}")
    return list(_splits(_as_type(eta), parts))


@lru_cache(maxsize=None)
def _kappa(mu: CycleType, eta: CycleType) -> int:
    r = mu.length - eta.length + 1
    if r < 2 or mu.n != eta.n:
        return 0
    values = sorted(set(mu.parts))
    avail = [mu.parts.count(v) for v in values]
    total = 0

    def choose(i, left, picked):
        nonlocal total
        if i == len(values):
            if left:
                return
            merged = list(mu.parts)
            s = 0
            for v, m in zip(values, picked):
                for _ in range(m):
                    merged.remove(v)
                s += v * m
            if CycleType(merged + [s]) == eta:
                total += prod(comb(a, m) for a, m in zip(avail, picked))
            return
        for m in range(min(avail[i], left) + 1):
            choose(i + 1, left - m, picked + [m])

    choose(0, r, [])
    return total


def kappa(mu, eta) -> int:
    """Ways to merge ``ℓ(mu) - ℓ(eta) + 1`` parts of ``mu`` into one so that
    ``eta`` results; parts of equal size count as distinguishable."""
    return _kappa(_as_type(mu), _as_type(eta))


# -- brute force --

def factorization_counts(d: Permutation, cap: int | None = None) -> dict[int, int]:
    """For every n-cycle ``s`` on the ground set of ``d``, tally
    ``C(d⁻¹ ∘ s)``."""
    n = d.n
    caps.check_pk_size(n, cap)
    labels = sorted(d.domain)
    index = {x: i for i, x in enumerate(labels)}
    dinv = np.empty(n, dtype=np.int16)
    for x, y in d.items():
        dinv[index[y]] = index[x]
    tally = np.zeros(n + 1, dtype=np.int64)
    for orders in _batch.cyclic_order_blocks(np.arange(n, dtype=np.int16)):
        s = np.empty_like(orders)
        rows = np.arange(len(orders))[:, None]
        s[rows, orders] = np.roll(orders, -1, axis=1)
        tally += np.bincount(_batch.count_cycles(dinv[s]), minlength=n + 1)
    return {k: int(v) for k, v in enumerate(tally) if v}


@lru_cache(maxsize=None)
def _pk_oracle(lam: CycleType, cap) -> PkTable:
    return PkTable(lam, factorization_counts(lam.canonical(), cap))


def pk_oracle(lam, cap: int | None = None) -> PkTable:
    return _pk_oracle(_as_type(lam), caps.pk_cap(cap))


def pk_max_oracle(lam, cap: int | None = None) -> int:
    """``p_{n+1-ℓ}^λ(n)`` read off the brute-force enumeration."""
    table = pk_oracle(lam, cap)
    return table[table.k_max]


def pk_max_closed(lam) -> int:
    """``p_{n+1-ℓ}^λ(n) = (n-1)! ∏ i^{a_i} / (n+1-ℓ)!``.

    Maximal-k factorizations ``s = D ∘ pi`` are the genus-zero ones; for a
    fixed n-cycle ``s`` the admissible ``D`` correspond to non-crossing
    partitions of the cycle, counted by Kreweras.
    """
    lam = _as_type(lam)
    n, ell = lam.n, lam.length
    num = factorial(n - 1) * prod(lam.parts)
    den = factorial(n + 1 - ell)
    if num % den:
        raise ConventionError(f"non-integral top value for {lam}")
    return num // den


_BASES: dict[str, Callable[[CycleType], int]] = {
    "closed": pk_max_closed,
    "oracle": pk_max_oracle,
}


def pk_recurrence(lam, base: str | Callable[[CycleType], int] = "closed") -> PkTable:
    """All ``p_k^λ(n)`` from the top value downwards.

    ``base`` supplies ``p_{n+1-ℓ(μ)}^μ(n)`` for every refinement ``μ`` the
    recurrence reaches: ``"closed"`` (default, no size limit), ``"oracle"``
    (brute force, capped) or any callable on :class:`CycleType`.
    """
    lam = _as_type(lam)
    fn = _BASES[base] if isinstance(base, str) else base
    return _recurrence_table(lam, fn)


@lru_cache(maxsize=None)
def _recurrence_table(lam: CycleType, base: Callable[[CycleType], int]) -> PkTable:
    memo: dict[tuple[CycleType, int], int] = {}

    def p(mu: CycleType, k: int) -> int:
        key = (mu, k)
        if key in memo:
            return memo[key]
        n, ell = mu.n, mu.length
        k_max = n + 1 - ell
        if k < 1 or k > k_max:
            val = 0
        elif k == k_max:
            val = base(mu)
        else:
            q_mu = q_lambda(mu)
            num = 0
            for i in range(1, (n - k) // 2 + 1):
                num += comb(k + 2 * i, k - 1) * p(mu, k + 2 * i) * q_mu
            for i in range(1, (n - ell) // 2 + 1):
                for nu in _splits(mu, 2 * i + 1):
                    num += _kappa(nu, mu) * p(nu, k) * q_lambda(nu)
            den = q_mu * (n + 1 - k - ell)
            if num % den:
                raise ConventionError(f"recurrence for {mu}, k={k}: {num}/{den} is not an integer")
            val = num // den
        memo[key] = val
        return val

    return PkTable(lam, {k: p(lam, k) for k in range(1, lam.n + 1)})


def _gbinom(x: int, r: int) -> int:
    """Binomial coefficient with any integer top, e.g. C(-1, r) = (-1)^r."""
    if r < 0:
        return 0
    num = 1
    for t in range(r):
        num *= x - t
    return num // factorial(r)


def _solutions(i: int) -> Iterator[dict[int, int]]:
    """Non-negative ``r`` with ``sum_j j * r_j = i``, as ``{j: r_j}``."""

    def rec(left, max_part):
        if left == 0:
            yield {}
            return
        for j in range(min(left, max_part), 0, -1):
            for r in range(left // j, 0, -1):
                for rest in rec(left - r * j, j - 1):
                    yield {j: r, **rest}

    yield from rec(i, i)


def p1_stanley(lam) -> int:
    """``p_1^λ(k)`` by the alternating sum over solutions of ``sum j r_j = i``."""
    lam = _as_type(lam)
    k = lam.n
    a = {j: lam.a(j) for j in range(1, k + 1)}
    total = Fraction(0)
    for i in range(k):
        inner = 0
        for r in _solutions(i):
            term = 1
            for j, rj in r.items():
                top = a[j] - 1 if j == 1 else a[j]
                term *= _gbinom(top, rj)
                if not term:
                    break
            sign = -1 if sum(rj for j, rj in r.items() if j % 2 == 0) % 2 else 1
            inner += sign * term
        total += Fraction(factorial(i) * factorial(k - 1 - i), k) * inner
    if total.denominator != 1:
        raise ConventionError(f"Stanley sum for {lam} is {total}, not an integer")
    return int(total)


def r_nu_closed_form(d: int) -> int:
    """One-face reembeddings of a degree-``d`` vertex whose rotation reverses
    its face order, ``d >= 3``."""
    if d < 3:
        raise InputError(f"closed form needs degree >= 3, got {d}")
    val = Fraction(2 * factorial(d - 1), d + 1)
    if d % 2 == 0:
        corr = Fraction(1, comb(d, d // 2))
        val *= (1 - corr) if d % 4 == 0 else (1 + corr)
    if val.denominator != 1:
        raise ConventionError(f"closed form for d={d} is {val}")
    return int(val)


def zagier_bounds(lam) -> RationalBound:
    """Lower and upper bounds on ``p_1^λ(k)`` in terms of ``k`` and the
    number of fixed points ``a_1``."""
    lam = _as_type(lam)
    if not lam.is_even():
        raise InputError(f"p_1 vanishes for odd type {lam}; the bounds do not apply")
    k, a1 = lam.n, lam.a(1)
    top = 2 * factorial(k - 1)
    return RationalBound(Fraction(top, k - a1 + 2), top / (k - a1 + Fraction(19, 29)))
