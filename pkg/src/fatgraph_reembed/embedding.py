"""Rotation systems and hypermaps.

An embedding is a triple ``(alpha, beta, gamma)`` of permutations on the
half-edges ``1..n`` with ``gamma = alpha ∘ beta``.  ``beta`` lists the
counterclockwise rotation at each vertex, ``alpha`` pairs the two ends of
every edge (or groups the ends of a hyperedge) and the cycles of ``gamma``
are the faces.

File format (``.emb``)::

    # comment
    vertices:
    A: 1
    B: 2 6 4 8
    edges:
    1 2
    3 6

A hypermap replaces the ``edges:`` section by ``alpha:`` followed by one
line of cycle notation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import _batch, caps
from .errors import InputError
from .perm import Permutation, SetPartition, compose, format_cycles, parse_cycles
from .planeperm import PlanePermutation

__all__ = [
    "Hypermap",
    "Face",
    "UnderlyingGraph",
    "from_rotation_system",
    "genus",
    "faces",
    "faces_at",
    "betti",
    "to_plane_permutation",
    "set_rotation",
    "enumerate_rotations",
    "all_embeddings",
    "face_count_table",
    "parse_file",
    "write_file",
]


@dataclass(frozen=True)
class Face:
    cycle: tuple[int, ...]

    @property
    def half_edges(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def __len__(self):
        return len(self.cycle)


def _is_connected(ground: frozenset[int], perms: Sequence[Permutation]) -> bool:
    start = min(ground)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(ground)


def _normalize_names(beta: Permutation, names) -> tuple[tuple[str, frozenset[int]], ...]:
    if names is None:
        return tuple((f"v{c[0]}", frozenset(c)) for c in beta.cycles)
    out = []
    for name, hs in dict(names).items():
        out.append((str(name), frozenset(hs)))
    if sorted(b for _, b in out) != sorted(frozenset(c) for c in beta.cycles):
        raise InputError("vertex names must cover the cycles of beta exactly")
    return tuple(sorted(out))


class Hypermap:
    """An embedding of a (hyper)graph, given by ``alpha`` and ``beta``.

    ``names`` maps vertex names to their half-edge sets; vertices are named
    ``v<min half-edge>`` when it is omitted.
    """

    def __init__(self, alpha: Permutation, beta: Permutation, names=None, *, check: bool = True):
        if alpha.domain != beta.domain:
            raise InputError("alpha and beta must act on the same half-edges")
        if check and alpha.domain != frozenset(range(1, alpha.n + 1)):
            raise InputError("half-edge labels must be 1..n")
        self.alpha = alpha
        self.beta = beta
        self.names = _normalize_names(beta, names)
        if check and not _is_connected(alpha.domain, (alpha, beta)):
            raise InputError("the underlying graph is not connected")

    def __eq__(self, other):
        if not isinstance(other, Hypermap):
            return NotImplemented
        return (self.alpha, self.beta, self.names) == (other.alpha, other.beta, other.names)

    def __hash__(self):
        return hash((self.alpha, self.beta, self.names))

    def __repr__(self):
        return f"Hypermap(alpha={format_cycles(self.alpha)!r}, beta={format_cycles(self.beta)!r})"

    @property
    def n(self) -> int:
        return self.alpha.n

    @cached_property
    def gamma(self) -> Permutation:
        return compose(self.alpha, self.beta)

    @property
    def is_map(self) -> bool:
        return self.alpha.is_involution(fixed_point_free=True)

    @property
    def num_vertices(self) -> int:
        return self.beta.num_cycles

    @property
    def num_edges(self) -> int:
        return self.alpha.num_cycles

    @property
    def num_faces(self) -> int:
        return self.gamma.num_cycles

    @cached_property
    def _by_name(self) -> dict[str, frozenset[int]]:
        return dict(self.names)

    @cached_property
    def _owner(self) -> dict[int, str]:
        return {x: name for name, hs in self.names for x in hs}

    def vertex_names(self) -> list[str]:
        return [name for name, _ in self.names]

    def vertex(self, v) -> frozenset[int]:
        """Half-edge set of a vertex given by name or by its half-edges."""
        if isinstance(v, str):
            try:
                return self._by_name[v]
            except KeyError:
                raise InputError(f"unknown vertex {v!r}") from None
        hs = frozenset(v)
        if hs not in self._by_name.values():
            raise InputError(f"{sorted(hs)} is not a vertex")
        return hs

    def name_of(self, v) -> str:
        return self._owner[min(self.vertex(v))]

    def rotation(self, v) -> tuple[int, ...]:
        """Counterclockwise rotation at ``v``, starting at its smallest half-edge."""
        return self.beta.cycle_of(min(self.vertex(v)))

    def degree(self, v) -> int:
        return len(self.vertex(v))

    def rotations(self) -> dict[str, tuple[int, ...]]:
        return {name: self.beta.cycle_of(min(hs)) for name, hs in self.names}

    @property
    def faces(self) -> list[Face]:
        return [Face(c) for c in self.gamma.cycles]

    @property
    def genus(self) -> int:
        return genus(self)

    def underlying_graph(self) -> UnderlyingGraph:
        return UnderlyingGraph(self.alpha, SetPartition(hs for _, hs in self.names), self.names)


def from_rotation_system(vertices: Mapping[str, Sequence[int]], alpha: Permutation, *, require_map: bool = False) -> Hypermap:
    """Build an embedding from named counterclockwise rotations."""
    seen: dict[int, str] = {}
    for name, rot in vertices.items():
        if not rot:
            raise InputError(f"vertex {name!r} has no half-edges")
        for x in rot:
            if x in seen:
                raise InputError(f"half-edge {x} appears at both {seen[x]!r} and {name!r}")
            seen[x] = name
    n = len(seen)
    if set(seen) != set(range(1, n + 1)):
        missing = min(set(range(1, n + 1)) - set(seen))
        raise InputError(f"half-edge labels must be contiguous 1..{n}; {missing} is missing")
    if alpha.domain != frozenset(seen):
        raise InputError("alpha must act on exactly the vertex half-edges")
    if require_map and not alpha.is_involution(fixed_point_free=True):
        raise InputError("alpha is not a fixed-point-free involution")
    beta = Permutation.from_cycles(vertices.values())
    return Hypermap(alpha, beta, {name: rot for name, rot in vertices.items()})


def genus(h: Hypermap) -> int:
    """Genus from ``C(alpha) + C(beta) + C(gamma) - n = 2 - 2g``."""
    chi = h.alpha.num_cycles + h.beta.num_cycles + h.gamma.num_cycles - h.n
    if chi % 2 or chi > 2:
        raise InputError(f"Euler characteristic {chi} gives no valid genus")
    g = (2 - chi) // 2
    if h.is_map:
        assert h.beta.num_cycles - h.alpha.num_cycles + h.gamma.num_cycles == 2 - 2 * g
    return g


def faces(h: Hypermap) -> list[Face]:
    return h.faces


def faces_at(h: Hypermap, v) -> tuple[int, list[Face]]:
    """Distinct faces meeting the vertex, and how many there are."""
    hs = h.vertex(v)
    inc = [f for f in h.faces if hs & f.half_edges]
    return len(inc), inc


def betti(h: Hypermap) -> int:
    """Cycle rank ``e - v + 1`` of the underlying graph."""
    b = h.num_edges - h.num_vertices + 1
    if h.is_map:
        assert 2 * genus(h) == b + 1 - h.num_faces
    return b


def to_plane_permutation(h: Hypermap) -> PlanePermutation:
    """``(gamma, beta)``; its diagonal is ``alpha``."""
    return PlanePermutation(h.gamma, h.beta)


def set_rotation(h: Hypermap, v, order: Sequence[int]) -> Hypermap:
    """Replace the rotation at one vertex, keeping everything else."""
    hs = h.vertex(v)
    if len(order) != len(hs) or frozenset(order) != hs:
        raise InputError(f"new rotation must list exactly the half-edges {sorted(hs)}")
    m = dict(h.beta.items())
    for i, x in enumerate(order):
        m[x] = order[(i + 1) % len(order)]
    return Hypermap(h.alpha, Permutation(m), h.names, check=False)


def enumerate_rotations(items: int | Sequence[int], cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """All (d-1)! cyclic orders of ``items`` (``1..d`` for an integer),
    each listed once with the smallest item first."""
    if isinstance(items, int):
        items = range(1, items + 1)
    items = sorted(items)
    if not items:
        raise InputError("a vertex needs at least one half-edge")
    caps.check_degree(len(items), cap)
    first, rest = items[0], items[1:]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


@dataclass(frozen=True)
class UnderlyingGraph:
    """Edges (``alpha``) and vertex blocks, without rotation order."""

    alpha: Permutation
    vertex_partition: SetPartition
    names: tuple[tuple[str, frozenset[int]], ...]

    def degrees(self) -> dict[str, int]:
        return {name: len(hs) for name, hs in self.names}

    def num_embeddings(self) -> int:
        return prod(factorial(len(hs) - 1) for _, hs in self.names)


def all_embeddings(g: UnderlyingGraph | Hypermap, cap: int | None = None) -> Iterator[Hypermap]:
    """Every rotation system of ``g`` exactly once.

    Vertices vary in name order with the last one changing fastest.
    """
    if isinstance(g, Hypermap):
        g = g.underlying_graph()
    caps.check_embedding_count(g.num_embeddings(), cap)
    choices = [list(enumerate_rotations(sorted(hs), cap=len(hs))) for _, hs in g.names]
    names = {name: hs for name, hs in g.names}
    first = True
    for combo in itertools.product(*choices):
        beta = Permutation.from_cycles(combo)
        yield Hypermap(g.alpha, beta, names, check=first)
        first = False


def face_count_table(g: UnderlyingGraph | Hypermap, cap: int | None = None) -> np.ndarray:
    """Face counts of all embeddings, vectorised.

    The result has one axis per vertex (in name order) indexing that
    vertex's rotations in :func:`enumerate_rotations` order, so flattening
    it follows :func:`all_embeddings`.
    """
    if isinstance(g, Hypermap):
        g = g.underlying_graph()
    caps.check_embedding_count(g.num_embeddings(), cap)
    n = g.alpha.n
    alpha0 = np.array([g.alpha(x) - 1 for x in range(1, n + 1)], dtype=np.int16)
    beta = np.zeros((1, n), dtype=np.int16)
    shape = []
    for _, hs in g.names:
        orders = _batch.cyclic_orders(np.array(sorted(hs), dtype=np.int16) - 1)
        r = len(orders)
        shape.append(r)
        beta = np.repeat(beta, r, axis=0)
        tiled = np.tile(orders, (len(beta) // r, 1))
        rows = np.arange(len(beta))[:, None]
        beta[rows, tiled] = np.roll(tiled, -1, axis=1)
    return _batch.count_cycles(alpha0[beta]).reshape(shape)


# -- file format --

_SECTIONS = ("vertices", "edges", "alpha")


def parse_file(text: str) -> Hypermap:
    section = None
    seen_sections: set[str] = set()
    vertices: dict[str, list[int]] = {}
    vertex_line: dict[str, int] = {}
    edges: list[tuple[int, int, int]] = []
    alpha_text: list[tuple[int, str]] = []

    def labels(tokens, lineno):
        out = []
        for t in tokens:
            if not t.isdigit():
                raise InputError(f"label {t!r} is not a positive decimal integer", lineno)
            x = int(t)
            if x < 1:
                raise InputError("labels must be 1..n", lineno)
            out.append(x)
        return out

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.lower().rstrip()
        if head.endswith(":") and head[:-1].strip() in _SECTIONS:
            section = head[:-1].strip()
            if section in seen_sections:
                raise InputError(f"duplicate section {section!r}", lineno)
            if section in ("edges", "alpha") and {"edges", "alpha"} & seen_sections:
                raise InputError("give exactly one of 'edges:' and 'alpha:'", lineno)
            seen_sections.add(section)
            continue
        if section is None:
            raise InputError("expected a section header ('vertices:')", lineno)
        if section == "vertices":
            name, sep, rest = line.partition(":")
            name = name.strip()
            if not sep or not name or any(c.isspace() for c in name):
                raise InputError("vertex lines look like 'NAME: l1 l2 ...'", lineno)
            if name in vertices:
                raise InputError(f"duplicate vertex {name!r}", lineno)
            rot = labels(rest.split(), lineno)
            if not rot:
                raise InputError(f"vertex {name!r} has no half-edges", lineno)
            vertices[name] = rot
            vertex_line[name] = lineno
        elif section == "edges":
            pair = labels(line.split(), lineno)
            if len(pair) != 2:
                raise InputError("edge lines hold exactly two labels", lineno)
            if pair[0] == pair[1]:
                raise InputError(f"edge joins half-edge {pair[0]} to itself", lineno)
            edges.append((pair[0], pair[1], lineno))
        else:
            alpha_text.append((lineno, line))

    if "vertices" not in seen_sections or not vertices:
        raise InputError("missing 'vertices:' section")
    if not {"edges", "alpha"} & seen_sections:
        raise InputError("missing 'edges:' or 'alpha:' section")

    owner: dict[int, str] = {}
    for name, rot in vertices.items():
        for x in rot:
            if x in owner:
                raise InputError(f"half-edge {x} listed twice", vertex_line[name])
            owner[x] = name
    n = len(owner)
    for name, rot in vertices.items():
        bad = [x for x in rot if x > n]
        if bad:
            raise InputError(f"label {bad[0]} out of range; labels must be contiguous 1..{n}", vertex_line[name])

    if "edges" in seen_sections:
        m: dict[int, int] = {}
        for a, b, lineno in edges:
            for x in (a, b):
                if x > n:
                    raise InputError(f"label {x} out of range 1..{n}", lineno)
                if x in m:
                    raise InputError(f"half-edge {x} is on two edges", lineno)
            m[a], m[b] = b, a
        if len(m) != n:
            missing = sorted(set(range(1, n + 1)) - set(m))
            raise InputError(f"half-edge {missing[0]} is on no edge")
        alpha = Permutation(m)
        require_map = True
    else:
        lineno = alpha_text[0][0] if alpha_text else None
        if len(alpha_text) != 1:
            raise InputError("'alpha:' takes exactly one line of cycle notation", lineno)
        try:
            alpha = parse_cycles(alpha_text[0][1], n=n)
        except InputError as exc:
            raise InputError(str(exc), lineno) from None
        require_map = False
    return from_rotation_system(vertices, alpha, require_map=require_map)


def write_file(h: Hypermap) -> str:
    lines = ["vertices:"]
    for name, rot in sorted(h.rotations().items()):
        lines.append(f"{name}: " + " ".join(map(str, rot)))
    if h.is_map:
        lines.append("edges:")
        for c in sorted(h.alpha.cycles):
            lines.append(f"{c[0]} {c[1]}")
    else:
        lines.append("alpha:")
        lines.append(format_cycles(h.alpha))
    return "\n".join(lines) + "\n"
