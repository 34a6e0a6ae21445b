"""Exhaustive cross-validation of every formula against brute force."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .corpus import graphs_up_to, to_underlying
from .counting import p1_stanley, pk_oracle, pk_recurrence
from .embedding import all_embeddings, face_count_table
from .perm import partitions
from .reembed import _formula, local_distribution, local_genus_range


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.cases} cases, {self.seconds:.2f}s"


def check_counting(max_n: int) -> CheckResult:
    """Oracle, recurrence (both seedings) and the k=1 formula agree for
    every partition of every ``n <= max_n``."""
    res = CheckResult(f"p_k tables, n <= {max_n}")
    t0 = time.perf_counter()
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            res.cases += 1
            oracle = pk_oracle(lam)
            try:
                oracle.check()
            except Exception as exc:
                res.failures.append(str(exc))
            for base in ("oracle", "closed"):
                rec = pk_recurrence(lam, base=base)
                if rec != oracle:
                    res.failures.append(f"{lam}: recurrence[{base}] {rec.counts} != oracle {oracle.counts}")
            if p1_stanley(lam) != oracle[1]:
                res.failures.append(f"{lam}: stanley {p1_stanley(lam)} != oracle {oracle[1]}")
    res.seconds = time.perf_counter() - t0
    return res


def _fiber_histograms(genera: np.ndarray, axis: int, width: int) -> np.ndarray:
    """For each embedding, counts of each genus among the rotations of one
    vertex with all other rotations fixed."""
    onehot = genera[..., None] == np.arange(width)
    hist = onehot.sum(axis=axis, keepdims=True)
    return np.broadcast_to(hist, genera.shape + (width,))


def check_reembedding(max_edges: int, api_oracle_edges: int = 3) -> CheckResult:
    """Formula against exhaustive rotation for every vertex of every
    embedding of every connected graph with at most ``max_edges`` edges.

    The brute-force side computes the genus of all embeddings at once and
    reads off each vertex's distribution along its axis.  For graphs with at
    most ``api_oracle_edges`` edges the per-embedding oracle of
    :func:`local_distribution` is run as well.
    """
    res = CheckResult(f"local genus distribution, graphs with <= {max_edges} edges")
    t0 = time.perf_counter()
    for v, edges in graphs_up_to(max_edges):
        g = to_underlying(v, edges)
        faces = face_count_table(g)
        n = g.alpha.n
        chi = g.alpha.num_cycles + len(g.names) + faces - n
        genera = (2 - chi) // 2
        width = int(genera.max()) + 1
        hists = [_fiber_histograms(genera, a, width) for a in range(genera.ndim)]
        flat_genera = genera.reshape(-1)
        flat_hists = [hst.reshape(-1, width) for hst in hists]
        for idx, h in enumerate(all_embeddings(g)):
            g0 = int(flat_genera[idx])
            for a, (name, hs) in enumerate(g.names):
                res.cases += 1
                row = flat_hists[a][idx]
                oracle = {gg - g0: int(c) for gg, c in enumerate(row) if c}
                formula = _formula(h, hs)
                if formula != oracle:
                    res.failures.append(f"{edges} emb#{idx} {name}: formula {formula} oracle {oracle}")
                    continue
                lo, hi = local_genus_range(h, hs)
                if sorted(oracle) != list(range(lo, hi + 1)):
                    res.failures.append(f"{edges} emb#{idx} {name}: support {sorted(oracle)} != [{lo}, {hi}]")
                if sum(oracle.values()) != factorial(len(hs) - 1):
                    res.failures.append(f"{edges} emb#{idx} {name}: total {sum(oracle.values())}")
                if len(edges) <= api_oracle_edges:
                    if local_distribution(h, hs, method="oracle").dist != oracle:
                        res.failures.append(f"{edges} emb#{idx} {name}: per-embedding oracle differs")
    res.seconds = time.perf_counter() - t0
    return res


def run(full: bool = False) -> list[CheckResult]:
    if full:
        return [check_counting(8), check_reembedding(5)]
    return [check_counting(7), check_reembedding(4)]
