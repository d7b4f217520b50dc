"""Exhaustive ground truth: optimal bisection and zero-set assignment sweeps."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .bisect import SignPartition, bisection_targets, spectral_bisection
from .family import FamilySpec, build_family, witness_vector
from .graph import Graph, cut_cost

MAX_ORACLE_N = 28
MAX_SWEEP_ZEROS = 20


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    best_cut: int
    best_set: tuple[int, ...]
    enumerated: int


def _half_subsets(size: int):
    """Bitmasks of all subsets of ``range(size)``, their 0/1 rows, and popcounts."""
    masks = np.arange(1 << size, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(size)) & 1).astype(np.float64)
    return masks, bits, bits.sum(axis=1).astype(np.int64)


def optimal_bisection(g: Graph, max_n: int = MAX_ORACLE_N, n_jobs: int = 1) -> OracleResult:
    """Minimum cut over all ``floor(n/2)``-subsets by exhaustive enumeration.

    Vertices are split into a low half and a high half; every subset is a
    pair (low part, high part) with sizes summing to ``floor(n/2)``, and the
    cuts of all pairs in one size class come out of a single matrix product:
    ``cut = inner(low) + inner(high) - 2 * edges(low, high)`` where ``inner``
    is degree sum minus twice the internal edge count.

    Ties go to the subset with the smallest bitmask ``sum(2**i)``. Size
    classes are independent, so ``n_jobs > 1`` gives identical output.
    """
    if g.n < 2:
        raise OracleError("bisection needs at least 2 vertices")
    if g.n > max_n:
        raise OracleError(f"n = {g.n} exceeds the enumeration cap {max_n}")
    n, k = g.n, g.n // 2
    h = n // 2
    adj = g.adjacency().astype(np.float64)
    deg = adj.sum(axis=1)
    lo_mask, lo_bits, lo_pop = _half_subsets(h)
    hi_mask, hi_bits, hi_pop = _half_subsets(n - h)
    lo_base = lo_bits @ deg[:h] - np.einsum("ij,ij->i", lo_bits @ adj[:h, :h], lo_bits)
    hi_base = hi_bits @ deg[h:] - np.einsum("ij,ij->i", hi_bits @ adj[h:, h:], hi_bits)
    cross = adj[:h, h:]

    def size_class(a_size: int):
        a = np.flatnonzero(lo_pop == a_size)
        b = np.flatnonzero(hi_pop == k - a_size)
        cuts = lo_base[a, None] + hi_base[None, b] - 2.0 * (lo_bits[a] @ cross @ hi_bits[b].T)
        cuts = np.rint(cuts).astype(np.int64)
        best = cuts.min()
        ia, ib = np.nonzero(cuts == best)
        masks = lo_mask[a[ia]] | (hi_mask[b[ib]] << h)
        return int(best), int(masks.min())

    classes = range(max(0, k - (n - h)), min(h, k) + 1)
    if n_jobs == 1:
        results = [size_class(c) for c in classes]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(size_class, classes))
    best_cut, mask = min(results)
    best_set = tuple(i for i in range(n) if mask >> i & 1)
    return OracleResult(best_cut, best_set, comb(n, k))


def zero_completions(g: Graph, p: SignPartition, max_zeros: int = MAX_SWEEP_ZEROS):
    """Yield every ``floor(n/2)``-side ``i_+ | U`` with ``U`` drawn from ``i_0``."""
    if p.n != g.n:
        raise OracleError(f"partition of length {p.n} for a graph on {g.n} vertices")
    if len(p.zero) > max_zeros:
        raise OracleError(f"|i_0| = {len(p.zero)} exceeds the sweep cap {max_zeros}")
    size_s, size_sc = bisection_targets(g.n)
    need = size_s - len(p.plus)
    if need < 0 or len(p.minus) > size_sc or need > len(p.zero):
        raise OracleError(
            f"|i_+|={len(p.plus)}, |i_-|={len(p.minus)}, |i_0|={len(p.zero)} "
            f"cannot form a {size_s}/{size_sc} bisection"
        )
    for u in combinations(p.zero, need):
        yield p.plus + u


def zero_assignment_sweep(
    g: Graph, p: SignPartition, max_zeros: int = MAX_SWEEP_ZEROS
) -> tuple[int, int]:
    """(min, max) cut over every way of completing ``i_+`` to a ``floor(n/2)`` side from ``i_0``."""
    cuts = [cut_cost(g, side) for side in zero_completions(g, p, max_zeros)]
    return min(cuts), max(cuts)


def witness_partition(spec: FamilySpec) -> np.ndarray:
    """``(v, 0)`` with ``v = (1,-1,-1,1) (x) 1_m`` and zeros at the cone vertices."""
    return np.concatenate([witness_vector(spec.m), np.zeros(spec.cone_count, dtype=np.int64)])


def witness_cut(spec: FamilySpec, g: Graph | None = None) -> int:
    """Cut of the bisection induced by the witness vector (blocks 1 and 4 against 2 and 3)."""
    if g is None:
        g, _ = build_family(spec)
    return spectral_bisection(g, witness_partition(spec)).cut
