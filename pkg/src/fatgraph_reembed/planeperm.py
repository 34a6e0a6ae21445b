"""Plane permutations and their two-line calculus.

A plane permutation is a pair ``(s, pi)`` of permutations on the same ground
set; its diagonal is ``D = s ∘ pi⁻¹``.  In the two-line form each s-cycle is
written as a row of tops ``s_0 s_1 ...`` over bottoms ``pi(s_0) pi(s_1) ...``
and ``D`` maps every bottom to the top of the following column.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError
from .perm import Permutation, compose

__all__ = [
    "PlanePermutation",
    "TwoLine",
    "DiagonalBlock",
    "Localization",
    "diagonal",
    "two_line",
    "from_two_line",
    "localize",
    "diagonal_blocks",
    "diagonal_block",
    "act",
    "inflate",
]


@dataclass(frozen=True, eq=False)
class PlanePermutation:
    """A pair ``(s, pi)``.

    ``starts`` records which element opens each s-cycle in the two-line
    display.  It never affects equality; it defaults to the cycle minima.
    """

    s: Permutation
    pi: Permutation
    starts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.s.domain != self.pi.domain:
            raise InputError("s and pi must share the ground set")
        if not self.starts:
            object.__setattr__(self, "starts", tuple(c[0] for c in self.s.cycles))
        else:
            owners = {min(self.s.cycle_of(x)) for x in self.starts}
            if len(owners) != len(self.starts) or len(owners) != self.s.num_cycles:
                raise InputError("starts must name exactly one element per s-cycle")

    def __eq__(self, other):
        if not isinstance(other, PlanePermutation):
            return NotImplemented
        return self.s == other.s and self.pi == other.pi

    def __hash__(self):
        return hash((self.s, self.pi))

    @property
    def k(self) -> int:
        return self.s.num_cycles

    @property
    def n(self) -> int:
        return self.s.n

    @property
    def is_cyclic(self) -> bool:
        return self.k == 1

    @cached_property
    def diagonal(self) -> Permutation:
        return compose(self.s, self.pi.inverse())

    @property
    def vertices(self):
        return self.pi.partition

    def display_cycles(self) -> list[tuple[int, ...]]:
        """s-cycles as displayed: each from its start, ordered by minimum."""
        cyc = [self.s.cycle_of(x) for x in self.starts]
        cyc.sort(key=min)
        return cyc

    def __str__(self):
        return two_line(self).render()


@dataclass(frozen=True)
class TwoLine:
    """Columns ``(top, bottom)`` grouped by s-cycle."""

    cycles: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def tops(self) -> list[int]:
        return [t for c in self.cycles for t, _ in c]

    @property
    def bottoms(self) -> list[int]:
        return [b for c in self.cycles for _, b in c]

    def diagonal_pairs(self) -> list[tuple[int, int]]:
        """``(bottom, next top)`` pairs, wrapping within each cycle."""
        pairs = []
        for c in self.cycles:
            for j, (_, b) in enumerate(c):
                pairs.append((b, c[(j + 1) % len(c)][0]))
        return pairs

    def diagonal(self) -> Permutation:
        return Permutation(dict(self.diagonal_pairs()))

    def render(self) -> str:
        """Two text rows; the corners of each cycle are boxed as ``[x]``."""
        top_parts, bot_parts = [], []
        for c in self.cycles:
            tops, bots = [], []
            for j, (t, b) in enumerate(c):
                tc = f"[{t}]" if j == 0 else str(t)
                bc = f"[{b}]" if j == len(c) - 1 else str(b)
                w = max(len(tc), len(bc))
                tops.append(tc.rjust(w))
                bots.append(bc.rjust(w))
            top_parts.append(" ".join(tops))
            bot_parts.append(" ".join(bots))
        return " | ".join(top_parts) + "\n" + " | ".join(bot_parts)


@dataclass(frozen=True)
class DiagonalBlock:
    """Consecutive diagonal pairs running from ``lower_left`` (a bottom) to
    ``upper_right`` (a top).  ``tops`` and ``bottoms`` are the spanned
    entries, with ``bottoms[0] == lower_left`` and ``tops[-1] == upper_right``."""

    lower_left: int
    upper_right: int
    tops: tuple[int, ...]
    bottoms: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.bottoms, self.tops))

    def __str__(self):
        return f"<{self.lower_left},{self.upper_right}>"


@dataclass(frozen=True)
class Localization:
    local: PlanePermutation
    vertex: frozenset[int]

    @property
    def d_nu(self) -> Permutation:
        return self.local.diagonal

    @property
    def q(self) -> int:
        return self.local.k

    @property
    def degree(self) -> int:
        return len(self.vertex)

    @property
    def two_line(self) -> TwoLine:
        return two_line(self.local)


def diagonal(p: PlanePermutation) -> Permutation:
    return p.diagonal


def two_line(p: PlanePermutation) -> TwoLine:
    return TwoLine(tuple(tuple((t, p.pi(t)) for t in c) for c in p.display_cycles()))


def from_two_line(t: TwoLine | Sequence[Sequence[tuple[int, int]]]) -> PlanePermutation:
    cyc = t.cycles if isinstance(t, TwoLine) else t
    if not cyc or any(not c for c in cyc):
        raise InputError("two-line form needs non-empty cycles")
    s = Permutation.from_cycles([[top for top, _ in c] for c in cyc])
    pi_map = {top: bot for c in cyc for top, bot in c}
    if set(pi_map.values()) != pi_map.keys():
        raise InputError("bottom row is not a bijection of the top row")
    return PlanePermutation(s, Permutation(pi_map), tuple(c[0][0] for c in cyc))


def _check_vertex(p: PlanePermutation, nu: Iterable[int]) -> frozenset[int]:
    nu = frozenset(nu)
    if nu not in p.vertices:
        raise InputError(f"{sorted(nu)} is not a cycle of pi")
    return nu


def localize(p: PlanePermutation, nu: Iterable[int]) -> Localization:
    """Delete every column whose top is not in ``nu``."""
    nu = _check_vertex(p, nu)
    kept_cycles, starts = [], []
    for c in p.display_cycles():
        kept = [t for t in c if t in nu]
        if not kept:
            continue
        # nu is pi-invariant, so the top test alone decides the column
        assert all(p.pi(t) in nu for t in kept)
        kept_cycles.append(kept)
        starts.append(kept[0])
    s_nu = Permutation.from_cycles(kept_cycles)
    return Localization(PlanePermutation(s_nu, p.pi.restrict(nu), tuple(starts)), nu)


def diagonal_block(p: PlanePermutation, lower_left: int, upper_right: int) -> DiagonalBlock:
    """The block whose corners are the given bottom and top entries."""
    col = p.pi.inverse()(lower_left)
    tops, bottoms = [], [lower_left]
    t = p.s(col)
    while True:
        tops.append(t)
        if t == upper_right:
            break
        if t == col:
            raise InputError(f"no diagonal block <{lower_left},{upper_right}>")
        bottoms.append(p.pi(t))
        t = p.s(t)
    return DiagonalBlock(lower_left, upper_right, tuple(tops), tuple(bottoms))


def diagonal_blocks(p: PlanePermutation, nu: Iterable[int]) -> list[DiagonalBlock]:
    """The ``|nu|`` blocks cut out by the columns of ``nu``, in circular order."""
    nu = _check_vertex(p, nu)
    blocks = []
    for c in p.display_cycles():
        kept = [t for t in c if t in nu]
        for j, t in enumerate(kept):
            blocks.append(diagonal_block(p, p.pi(t), kept[(j + 1) % len(kept)]))
    return blocks


def act(p: PlanePermutation, h: Sequence[int]) -> PlanePermutation:
    """Permute the diagonal pairs of a cyclic plane permutation.

    ``h`` is a permutation of the column indices ``1..n-1``; column 0 stays
    first.  The result has ``s^h = (s_0, s_{h_1}, ..., s_{h_{n-1}})`` and
    ``pi^h = D⁻¹ ∘ s^h``, so its diagonal equals that of ``p``.
    """
    if not p.is_cyclic:
        raise InputError("the h-action is defined for cyclic plane permutations only")
    cols = p.display_cycles()[0]
    n = len(cols)
    if sorted(h) != list(range(1, n)):
        raise InputError(f"h must be a permutation of 1..{n - 1}")
    new = [cols[0]] + [cols[i] for i in h]
    sh = Permutation.from_cycles([new])
    return PlanePermutation(sh, compose(p.diagonal.inverse(), sh), (cols[0],))


def inflate(base: PlanePermutation, local: PlanePermutation) -> PlanePermutation:
    """Expand a rearranged localization back into a full plane permutation.

    Each diagonal pair ``(b, t)`` of ``local`` is replaced by the block
    ``<b, t>`` of ``base``; s-cycles of ``base`` that avoid the vertex are
    carried over unchanged.
    """
    nu = frozenset(local.pi.domain)
    nu = _check_vertex(base, nu)
    if local.pi.num_cycles != 1:
        raise InputError("local pi must be a single cycle on the vertex")
    loc = localize(base, nu)
    if local.diagonal != loc.d_nu:
        raise InputError("local diagonal differs from the base diagonal at the vertex")
    new_cycles = []
    for c in local.display_cycles():
        tops: list[int] = []
        for j, t in enumerate(c):
            tops.extend(diagonal_block(base, local.pi(t), c[(j + 1) % len(c)]).tops)
        new_cycles.append(tops)
    for c in base.display_cycles():
        if not nu.intersection(c):
            new_cycles.append(list(c))
    s_new = Permutation.from_cycles(new_cycles)
    pi_new = compose(base.diagonal.inverse(), s_new)
    for x in base.pi.domain:
        expected = local.pi(x) if x in nu else base.pi(x)
        assert pi_new(x) == expected, "inflation changed pi away from the rearranged vertex"
    return PlanePermutation(s_new, pi_new)
