"""Local genus analysis: what happens to the genus when one vertex is
given a new rotation.

If a vertex of degree ``d`` meets ``q`` distinct faces and its localization
has diagonal of cycle type ``λ``, then the number of rotations changing the
genus by ``Δg`` is ``p_{q-2Δg}^λ(d)``.  Fewer faces mean higher genus,
hence the minus sign.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable

import numpy as np

from . import _batch, caps
from .counting import factorization_counts, pk_recurrence, zagier_bounds
from .embedding import Hypermap, UnderlyingGraph, face_count_table, to_plane_permutation
from .errors import ConventionError, InputError
from .perm import CycleType, Permutation
from .planeperm import Localization, PlanePermutation, localize

__all__ = [
    "GenusDistribution",
    "VertexCheck",
    "GenusReport",
    "OneFaceProbability",
    "OneFaceCount",
    "vertex_localization",
    "local_distribution",
    "local_genus_range",
    "min_genus_check",
    "max_genus_check",
    "one_face_probability",
    "one_face_lower_bound",
    "count_one_face_embeddings",
    "face_disjoint_range",
    "theorem32_check",
    "reversed_rotation_localization",
    "local_one_face_count",
]


@dataclass(frozen=True)
class GenusDistribution:
    vertex: str
    degree: int
    q: int
    lambda_d_nu: CycleType
    genus: int
    items: tuple[tuple[int, int], ...]
    method: str

    @property
    def dist(self) -> dict[int, int]:
        return dict(self.items)

    def __getitem__(self, dg: int) -> int:
        return self.dist.get(dg, 0)

    @property
    def support(self) -> list[int]:
        return [dg for dg, _ in self.items]

    def total(self) -> int:
        return sum(c for _, c in self.items)

    def check(self) -> None:
        if self.total() != factorial(self.degree - 1):
            raise ConventionError(f"distribution at {self.vertex} sums to {self.total()}")
        if self[0] < 1:
            raise ConventionError(f"current rotation of {self.vertex} not counted")
        lo, hi = _range(self.degree, self.lambda_d_nu, self.q)
        if self.support and not (lo <= self.support[0] and self.support[-1] <= hi):
            raise ConventionError(f"support {self.support} leaves [{lo}, {hi}]")

    def rows(self) -> list[tuple[int, int, int]]:
        """``(Δg, count, resulting genus)`` in increasing ``Δg``."""
        return [(dg, c, self.genus + dg) for dg, c in self.items]

    def to_tsv(self) -> str:
        return "".join(f"{dg}\t{c}\t{g}\n" for dg, c, g in self.rows())

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "degree": self.degree,
            "q": self.q,
            "lambda": list(self.lambda_d_nu.parts),
            "genus": self.genus,
            "method": self.method,
            "distribution": {str(dg): str(c) for dg, c in self.items},
        }


@dataclass(frozen=True)
class VertexCheck:
    vertex: str
    degree: int
    q: int
    ell: int
    passed: bool


@dataclass(frozen=True)
class GenusReport:
    kind: str  # "min" or "max"
    rows: tuple[VertexCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[VertexCheck]:
        return [r for r in self.rows if not r.passed]


def vertex_localization(h: Hypermap, v) -> Localization:
    return localize(to_plane_permutation(h), h.vertex(v))


def _range(degree: int, lam: CycleType, q: int) -> tuple[int, int]:
    return -((degree + 1 - lam.length - q) // 2), (q - 1) // 2


def _formula(h: Hypermap, v) -> dict[int, int]:
    loc = vertex_localization(h, v)
    table = pk_recurrence(loc.d_nu.cycle_type)
    out = {}
    for k, count in table.items:
        if (loc.q - k) % 2:
            raise ConventionError(f"face count {k} has the wrong parity against q={loc.q}")
        out[(loc.q - k) // 2] = count
    return out


def _as_arrays(h: Hypermap):
    n = h.n
    alpha = np.array([h.alpha(x) - 1 for x in range(1, n + 1)], dtype=np.int16)
    beta = np.array([h.beta(x) - 1 for x in range(1, n + 1)], dtype=np.int16)
    return alpha, beta


def _oracle(h: Hypermap, v, cap=None) -> dict[int, int]:
    hs = sorted(h.vertex(v))
    caps.check_degree(len(hs), cap)
    alpha, beta = _as_arrays(h)
    fixed = h.alpha.num_cycles + h.beta.num_cycles - h.n
    g0 = h.genus
    tally: Counter[int] = Counter()
    for orders in _batch.cyclic_order_blocks(np.array(hs, dtype=np.int16) - 1):
        betas = _batch.apply_rotations(beta, orders)
        faces = _batch.count_cycles(alpha[betas])
        chi = fixed + faces
        for c, cnt in zip(*np.unique(chi, return_counts=True)):
            tally[(2 - int(c)) // 2 - g0] += int(cnt)
    return dict(tally)


def local_distribution(h: Hypermap, v, method: str | None = None, cap: int | None = None) -> GenusDistribution:
    """How many rotations of ``v`` lead to each genus change.

    ``method`` is ``"formula"``, ``"oracle"`` (enumerate all rotations) or
    ``"both"``; by default both when the degree is within the oracle cap.
    """
    hs = h.vertex(v)
    if method is None:
        method = "both" if len(hs) <= caps.degree_cap(cap) else "formula"
    if method not in ("formula", "oracle", "both"):
        raise InputError(f"unknown method {method!r}")
    loc = vertex_localization(h, hs)
    if method == "formula":
        dist = _formula(h, hs)
    elif method == "oracle":
        dist = _oracle(h, hs, cap)
    else:
        dist = _formula(h, hs)
        other = _oracle(h, hs, cap)
        if dist != other:
            raise ConventionError(f"formula {sorted(dist.items())} != oracle {sorted(other.items())} at {h.name_of(hs)}")
    out = GenusDistribution(
        vertex=h.name_of(hs),
        degree=len(hs),
        q=loc.q,
        lambda_d_nu=loc.d_nu.cycle_type,
        genus=h.genus,
        items=tuple(sorted(dist.items())),
        method=method,
    )
    out.check()
    return out


def local_genus_range(h: Hypermap, v) -> tuple[int, int]:
    """Smallest and largest genus change reachable by rotating ``v``."""
    loc = vertex_localization(h, v)
    return _range(loc.degree, loc.d_nu.cycle_type, loc.q)


def min_genus_check(h: Hypermap) -> GenusReport:
    """Per vertex, test ``ℓ(λ(D_ν)) + q = deg + 1``; a failure proves that
    a lower-genus embedding exists."""
    rows = []
    for name in h.vertex_names():
        loc = vertex_localization(h, name)
        ell = loc.d_nu.cycle_type.length
        rows.append(VertexCheck(name, loc.degree, loc.q, ell, ell + loc.q == loc.degree + 1))
    return GenusReport("min", tuple(rows))


def max_genus_check(h: Hypermap) -> GenusReport:
    """Every vertex of a maximum-genus embedding meets at most two faces."""
    rows = []
    for name in h.vertex_names():
        loc = vertex_localization(h, name)
        rows.append(VertexCheck(name, loc.degree, loc.q, loc.d_nu.cycle_type.length, loc.q <= 2))
    return GenusReport("max", tuple(rows))


@dataclass(frozen=True)
class OneFaceProbability:
    vertex: str
    degree: int
    lambda_d_nu: CycleType
    r_nu: int
    probability: Fraction
    zagier_lower: Fraction
    zagier_upper: Fraction
    universal: Fraction


def one_face_probability(h: Hypermap, v) -> OneFaceProbability:
    """Fraction of the rotations of ``v`` that keep a one-face embedding one-face."""
    if h.num_faces != 1:
        raise InputError(f"embedding has {h.num_faces} faces, not one")
    loc = vertex_localization(h, v)
    d = loc.degree
    lam = loc.d_nu.cycle_type
    r_nu = pk_recurrence(lam)[1]
    rotations = factorial(d - 1)
    prob = Fraction(r_nu, rotations)
    bounds = zagier_bounds(lam)
    lower, upper = bounds.lower / rotations, bounds.upper / rotations
    universal = Fraction(2, d + 2)
    if not (lower <= prob <= upper) or prob < universal:
        raise ConventionError(f"probability {prob} at {h.name_of(loc.vertex)} violates its bounds")
    return OneFaceProbability(h.name_of(loc.vertex), d, lam, r_nu, prob, lower, upper, universal)


def one_face_lower_bound(g: UnderlyingGraph | Hypermap) -> Fraction:
    """``∏ 2/(deg+2)`` over all vertices."""
    if isinstance(g, Hypermap):
        g = g.underlying_graph()
    out = Fraction(1)
    for d in g.degrees().values():
        out *= Fraction(2, d + 2)
    return out


@dataclass(frozen=True)
class OneFaceCount:
    count: int
    total: int
    high_degree_vertices: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.count, self.total)


def count_one_face_embeddings(g: UnderlyingGraph | Hypermap, cap: int | None = None) -> OneFaceCount:
    """Exhaustive count; when any exists, at least ``2^m`` must, with ``m``
    the number of vertices of degree at least 4."""
    if isinstance(g, Hypermap):
        g = g.underlying_graph()
    table = face_count_table(g, cap)
    count = int((table == 1).sum())
    m = sum(1 for d in g.degrees().values() if d >= 4)
    if count and count < 2**m:
        raise ConventionError(f"{count} one-face embeddings but {m} vertices of degree >= 4")
    return OneFaceCount(count, int(table.size), m)


def face_disjoint_range(h: Hypermap, vertices: Iterable) -> tuple[int, int]:
    """Reachable genus change when rotating several vertices that share no face."""
    vs = [h.vertex(v) for v in vertices]
    face_sets = []
    for hs in vs:
        face_sets.append({f.cycle for f in h.faces if hs & f.half_edges})
    for (i, a), (j, b) in combinations(enumerate(face_sets), 2):
        if a & b:
            raise InputError(f"vertices {h.name_of(vs[i])} and {h.name_of(vs[j])} share a face")
    lo = hi = 0
    for hs in vs:
        a, b = local_genus_range(h, hs)
        lo += a
        hi += b
    return lo, hi


def theorem32_check(h: Hypermap, v) -> bool:
    """Whether a one-face embedding has another genus-preserving rotation at
    ``v`` (guaranteed when ``deg(v) >= 4``)."""
    if h.num_faces != 1:
        raise InputError("embedding is not one-face")
    if h.degree(v) < 4:
        raise InputError(f"vertex degree {h.degree(v)} is below 4")
    lam = vertex_localization(h, v).d_nu.cycle_type
    return pk_recurrence(lam)[1] >= 2


def reversed_rotation_localization(d: int) -> PlanePermutation:
    """``s = (1 2 ... d)`` with ``pi = (1 d d-1 ... 2)``."""
    if d < 1:
        raise InputError("degree must be positive")
    s = Permutation.from_cycles([range(1, d + 1)])
    pi = Permutation.from_cycles([[1] + list(range(d, 1, -1))])
    return PlanePermutation(s, pi)


def local_one_face_count(local: PlanePermutation, cap: int | None = None) -> int:
    """Brute force: rearrangements of a cyclic localization whose ``pi`` is
    a single cycle."""
    if not local.is_cyclic:
        raise InputError("localization must be cyclic")
    return factorization_counts(local.diagonal, cap).get(1, 0)
