"""Median cuts, sign partitions, and spectral bisection from a Fiedler vector."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import eigendecompose
from .graph import Graph, GraphError, cut_cost, induced_subgraph, is_connected, laplacian

ZERO_TOL_FACTOR = 1e-9
EIGENPAIR_TOL = 1e-8


class BisectionError(ValueError):
    pass


class CannotBalanceError(BisectionError):
    """Sign classes of the median-shifted vector are too large for a bisection."""


@dataclass(frozen=True)
class SignPartition:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    zero: tuple[int, ...]
    source: np.ndarray

    @property
    def n(self) -> int:
        return self.source.shape[0]


@dataclass(frozen=True)
class Bisection:
    side_s: tuple[int, ...]
    side_sc: tuple[int, ...]
    cut: int

    @property
    def n(self) -> int:
        return len(self.side_s) + len(self.side_sc)

    def labels(self) -> np.ndarray:
        """1 for vertices in S, 0 for vertices in S^c."""
        out = np.zeros(self.n, dtype=np.int64)
        out[list(self.side_s)] = 1
        return out


def _vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise BisectionError("expected a nonempty 1-d vector")
    return v


def median(v) -> float:
    """Middle entry of the sorted vector, or the mean of the two middle entries for even length."""
    w = np.sort(_vector(v))
    n = w.size
    if n % 2:
        return float(w[n // 2])
    return float(0.5 * (w[n // 2 - 1] + w[n // 2]))


def median_cut(v) -> np.ndarray:
    """+1 where ``v`` exceeds its median, -1 elsewhere."""
    v = _vector(v)
    return np.where(v > median(v), 1, -1)


def zero_tol(v) -> float:
    return ZERO_TOL_FACTOR * max(1.0, float(np.abs(v).max()))


def sign_partition(v, tol: float | None = None) -> SignPartition:
    v = _vector(v)
    tol = zero_tol(v) if tol is None else tol
    zero = np.abs(v) <= tol
    plus = ~zero & (v > 0)
    minus = ~zero & (v < 0)
    return SignPartition(
        tuple(np.flatnonzero(plus).tolist()),
        tuple(np.flatnonzero(minus).tolist()),
        tuple(np.flatnonzero(zero).tolist()),
        v.copy(),
    )


def bisection_targets(n: int) -> tuple[int, int]:
    return n // 2, n - n // 2


def check_balanceable(p: SignPartition) -> None:
    size_s, size_sc = bisection_targets(p.n)
    if len(p.plus) > size_s or len(p.minus) > size_sc:
        raise CannotBalanceError(
            f"|i_+|={len(p.plus)}, |i_-|={len(p.minus)} cannot form a "
            f"{size_s}/{size_sc} bisection"
        )


def distribute_zeros(p: SignPartition) -> tuple[list[int], list[int]]:
    """Assign ``p.zero`` to the two sides so that ``|S| = floor(n/2)``.

    Zero vertices are taken in ascending order; each goes to the currently
    smaller side (ties to S) unless that side is already full.
    """
    check_balanceable(p)
    size_s, size_sc = bisection_targets(p.n)
    s, sc = list(p.plus), list(p.minus)
    for z in p.zero:
        if len(s) < size_s and (len(s) <= len(sc) or len(sc) >= size_sc):
            s.append(z)
        else:
            sc.append(z)
    return sorted(s), sorted(sc)


def bisection_from_sets(g: Graph, side_s) -> Bisection:
    side_s = tuple(sorted(int(i) for i in side_s))
    if len(side_s) != g.n // 2:
        raise BisectionError(f"|S| = {len(side_s)}, expected {g.n // 2}")
    chosen = set(side_s)
    side_sc = tuple(i for i in range(g.n) if i not in chosen)
    return Bisection(side_s, side_sc, cut_cost(g, side_s))


def spectral_bisection(g: Graph, fiedler, tol: float | None = None) -> Bisection:
    """Bisect ``g`` along the median-shifted sign pattern of ``fiedler``.

    ``S = i_+(y - M(y) 1)`` plus whatever share of the zero set
    :func:`distribute_zeros` hands it. Raises :class:`CannotBalanceError`
    rather than repairing an unbalanceable sign pattern.
    """
    y = _vector(fiedler)
    if y.size != g.n:
        raise BisectionError(f"vector length {y.size} != vertex count {g.n}")
    if g.n < 2:
        raise BisectionError("bisection needs at least 2 vertices")
    p = sign_partition(y - median(y), tol)
    side_s, _ = distribute_zeros(p)
    return bisection_from_sets(g, side_s)


def _check_eigenpair(g: Graph, v: np.ndarray, lam2: float | None) -> None:
    lap = laplacian(g).astype(np.float64)
    if lam2 is None:
        lam2 = float(eigendecompose(lap).eigenvalues[1])
    bound = EIGENPAIR_TOL * max(1.0, np.linalg.norm(lap)) * np.linalg.norm(v)
    res = np.linalg.norm(lap @ v - lam2 * v)
    if not np.linalg.norm(v) > 0 or res > bound:
        raise BisectionError(
            f"vector is not a lambda_2 eigenvector (residual {res:.3e}, bound {bound:.3e})"
        )


def fiedler_connectivity_check(g: Graph, fiedler, lam2: float | None = None) -> bool:
    """True iff ``i_+ u i_0`` and ``i_- u i_0`` of ``fiedler`` both induce connected subgraphs.

    No median shift is applied. ``lam2`` may be passed to skip recomputing
    the spectrum; the eigenpair residual is checked either way.
    """
    v = _vector(fiedler)
    if v.size != g.n:
        raise BisectionError(f"vector length {v.size} != vertex count {g.n}")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    _check_eigenpair(g, v, lam2)
    p = sign_partition(v)
    for side in (p.plus + p.zero, p.minus + p.zero):
        if side and not is_connected(induced_subgraph(g, side)):
            return False
    return True
