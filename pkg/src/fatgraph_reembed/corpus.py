"""Small connected multigraphs (loops and parallel edges allowed), up to
isomorphism, for exhaustive cross-checks."""
from __future__ import annotations

import itertools
from functools import lru_cache

from .embedding import UnderlyingGraph
from .perm import Permutation, SetPartition

Edges = tuple[tuple[int, int], ...]


def _canonical(num_vertices: int, edges) -> Edges:
    best = None
    for perm in itertools.permutations(range(num_vertices)):
        relabeled = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


@lru_cache(maxsize=None)
def connected_graphs(num_edges: int) -> tuple[tuple[int, Edges], ...]:
    """Connected multigraphs with exactly ``num_edges`` edges, one per
    isomorphism class, as ``(num_vertices, edges)``."""
    if num_edges == 0:
        return ((1, ()),)
    found = set()
    for v, edges in connected_graphs(num_edges - 1):
        candidates = [(a, b) for a in range(v) for b in range(a, v)]
        for a, b in candidates:
            found.add((v, _canonical(v, edges + ((a, b),))))
        for a in range(v):
            found.add((v + 1, _canonical(v + 1, edges + ((a, v),))))
    return tuple(sorted(found))


def graphs_up_to(max_edges: int):
    for e in range(1, max_edges + 1):
        yield from connected_graphs(e)


def to_underlying(num_vertices: int, edges: Edges) -> UnderlyingGraph:
    """Edge ``i`` gets half-edges ``2i+1`` (at its first end) and ``2i+2``."""
    blocks: list[list[int]] = [[] for _ in range(num_vertices)]
    pairs = []
    for i, (a, b) in enumerate(edges):
        blocks[a].append(2 * i + 1)
        blocks[b].append(2 * i + 2)
        pairs.append((2 * i + 1, 2 * i + 2))
    alpha = Permutation.from_cycles(pairs)
    names = tuple((f"v{j}", frozenset(bl)) for j, bl in enumerate(blocks))
    return UnderlyingGraph(alpha, SetPartition(bl for bl in blocks), names)
