"""Permutations, cycle types and set partitions.

Permutations act on an arbitrary finite set of positive integers (usually
``1..n``).  Composition applies the right factor first, so
``compose(p, q)(x) == p(q(x))`` and the cycle ``(a b c)`` sends ``a -> b -> c -> a``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError

__all__ = [
    "Permutation",
    "CycleType",
    "SetPartition",
    "compose",
    "inverse",
    "cycles",
    "cycle_type",
    "num_cycles",
    "partition_of",
    "parse_cycles",
    "format_cycles",
    "partitions",
]


class Permutation:
    """An immutable bijection of a finite set of positive integers."""

    def __init__(self, mapping: Mapping[int, int]):
        m = dict(mapping)
        if not m:
            raise InputError("a permutation needs a non-empty ground set")
        if set(m.values()) != m.keys():
            raise InputError(f"not a bijection: {m}")
        self._map = m

    @classmethod
    def identity(cls, ground: int | Iterable[int]) -> Permutation:
        if isinstance(ground, int):
            ground = range(1, ground + 1)
        return cls({x: x for x in ground})

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """One-line form: ``images[i - 1]`` is the image of ``i``."""
        return cls({i: v for i, v in enumerate(images, start=1)})

    @classmethod
    def from_cycles(cls, cyc: Iterable[Sequence[int]], ground: int | Iterable[int] | None = None) -> Permutation:
        m: dict[int, int] = {}
        for c in cyc:
            for i, x in enumerate(c):
                if x in m:
                    raise InputError(f"duplicate label {x}")
                m[x] = c[(i + 1) % len(c)]
        if ground is not None:
            if isinstance(ground, int):
                ground = range(1, ground + 1)
            ground = set(ground)
            extra = m.keys() - ground
            if extra:
                raise InputError(f"label {min(extra)} out of range")
            for x in ground - m.keys():
                m[x] = x
        return cls(m)

    # -- basic protocol --

    def __call__(self, x: int) -> int:
        return self._map[x]

    def __len__(self) -> int:
        return len(self._map)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._map))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"

    def __str__(self) -> str:
        return format_cycles(self)

    @property
    def n(self) -> int:
        return len(self._map)

    @cached_property
    def domain(self) -> frozenset[int]:
        return frozenset(self._map)

    def items(self):
        return self._map.items()

    def images(self) -> tuple[int, ...]:
        """Images listed in increasing order of the ground set."""
        return tuple(self._map[x] for x in sorted(self._map))

    def is_identity(self) -> bool:
        return all(k == v for k, v in self._map.items())

    def is_involution(self, fixed_point_free: bool = False) -> bool:
        m = self._map
        if any(m[m[x]] != x for x in m):
            return False
        return not fixed_point_free or all(m[x] != x for x in m)

    # -- derived data --

    def inverse(self) -> Permutation:
        return Permutation({v: k for k, v in self._map.items()})

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycles: each starts at its minimum, sorted by minimum."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            c = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                c.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(c))
        return tuple(out)

    def cycle_of(self, x: int) -> tuple[int, ...]:
        """The cycle through ``x``, starting at ``x``."""
        c = [x]
        y = self._map[x]
        while y != x:
            c.append(y)
            y = self._map[y]
        return tuple(c)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def cycle_type(self) -> CycleType:
        return CycleType(sorted((len(c) for c in self.cycles), reverse=True))

    @property
    def partition(self) -> SetPartition:
        return SetPartition(self.cycles)

    def is_even(self) -> bool:
        return (self.n - self.num_cycles) % 2 == 0

    def restrict(self, subset: Iterable[int]) -> Permutation:
        """Restriction to an invariant subset."""
        sub = set(subset)
        m = {x: self._map[x] for x in sub}
        if set(m.values()) != sub:
            raise InputError("subset is not invariant under the permutation")
        return Permutation(m)

    def induced(self, subset: Iterable[int]) -> Permutation:
        """First-return map on ``subset``: x goes to the next element of
        ``subset`` met by iterating the permutation from x."""
        sub = set(subset)
        m = {}
        for x in sub:
            y = self._map[x]
            while y not in sub:
                y = self._map[y]
            m[x] = y
        return Permutation(m)

    def relabel(self, table: Mapping[int, int]) -> Permutation:
        return Permutation({table[k]: table[v] for k, v in self._map.items()})


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply ``q`` first, then ``p``."""
    if p.domain != q.domain:
        raise InputError(f"ground sets differ (sizes {p.n} and {q.n})")
    pm = p._map
    return Permutation({x: pm[y] for x, y in q._map.items()})


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycles(p: Permutation) -> tuple[tuple[int, ...], ...]:
    return p.cycles


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type


def num_cycles(p: Permutation) -> int:
    return p.num_cycles


def partition_of(p: Permutation) -> SetPartition:
    return p.partition


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse whitespace-separated cycle notation such as ``"(1 2)(3 4)"``.

    With ``n`` the ground set is ``1..n`` and omitted labels are fixed
    points; without it the ground set is the set of labels that appear.
    Commas are accepted as separators inside a cycle.
    """
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise InputError(f"malformed cycle notation: {text!r}")
    cyc = []
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        if not tokens:
            raise InputError(f"empty cycle in {text!r}")
        try:
            labels = [int(t) for t in tokens]
        except ValueError:
            raise InputError(f"non-integer label in {text!r}") from None
        if any(x < 1 for x in labels):
            raise InputError(f"labels must be positive integers: {text!r}")
        cyc.append(labels)
    if not cyc and n is None:
        raise InputError("empty permutation")
    return Permutation.from_cycles(cyc, ground=n)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle notation, fixed points included."""
    return "".join("(" + " ".join(map(str, c)) + ")" for c in p.cycles)


@dataclass(frozen=True)
class CycleType:
    """An integer partition, stored as non-increasing parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise InputError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> CycleType:
        try:
            return cls(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise InputError(f"bad partition {text!r}; expected e.g. 3,1") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts, written ℓ(λ) in the literature."""
        return len(self.parts)

    @property
    def mult(self) -> tuple[int, ...]:
        """``(a_1, ..., a_n)`` with ``a_i`` the number of parts equal to ``i``."""
        c = Counter(self.parts)
        return tuple(c.get(i, 0) for i in range(1, self.n + 1))

    def a(self, i: int) -> int:
        return self.parts.count(i)

    def is_even(self) -> bool:
        return (self.n - self.length) % 2 == 0

    def class_size(self) -> int:
        """Number of permutations with this cycle type."""
        c = Counter(self.parts)
        return factorial(self.n) // prod(i**a * factorial(a) for i, a in c.items())

    def canonical(self) -> Permutation:
        """Permutation of this type with cycles on consecutive integers."""
        cyc, start = [], 1
        for p in self.parts:
            cyc.append(range(start, start + p))
            start += p
        return Permutation.from_cycles(cyc)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __lt__(self, other: CycleType) -> bool:
        return (self.n, self.parts) < (other.n, other.parts)


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise InputError("empty block")
        if sum(map(len, bs)) != len(frozenset().union(*bs)):
            raise InputError("blocks overlap")
        object.__setattr__(self, "blocks", tuple(sorted(bs, key=min)))

    @property
    def ground(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    def block_of(self, x: int) -> frozenset[int]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.blocks)

    def __contains__(self, block) -> bool:
        return frozenset(block) in self.blocks


def partitions(n: int, max_part: int | None = None) -> Iterator[CycleType]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    for parts in _partitions(n, max_part):
        yield CycleType(parts)


def _partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest
