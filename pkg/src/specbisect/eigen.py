"""Dense symmetric eigensolver (cyclic Jacobi) and Laplacian spectral queries."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RESIDUAL_TOL = 1e-10
ORTHO_TOL = 1e-10
SYMMETRY_TOL = 1e-12
OFF_DIAG_TOL = 1e-14
MAX_SWEEPS = 100

_EPS = np.finfo(np.float64).eps
_TINY = 1e-3 * _EPS


class EigenError(ArithmeticError):
    pass


class DisconnectedGraphError(EigenError):
    """The second-smallest Laplacian eigenvalue is numerically zero."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nondecreasing order; ``eigenvectors[:, k]`` pairs with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def pair(self, k: int) -> tuple[float, np.ndarray]:
        return float(self.eigenvalues[k]), self.eigenvectors[:, k]


@dataclass(frozen=True)
class Eigenspace:
    eigenvalue: float
    basis: np.ndarray  # columns are orthonormal

    @property
    def multiplicity(self) -> int:
        return self.basis.shape[1]


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings covering every (p, q) once per sweep, ``n/2`` disjoint pairs per round.

    Uses the circle method; for odd ``n`` a phantom player sits out each round.
    """
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a >= 0 and b >= 0:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


SIGN_TIE_RTOL = 1e-9


def _normalize_signs(vecs: np.ndarray) -> np.ndarray:
    # largest-magnitude entry positive; magnitudes within SIGN_TIE_RTOL of the
    # maximum count as tied (roundoff) and the lowest index wins
    mag = np.abs(vecs)
    idx = np.argmax(mag >= (1.0 - SIGN_TIE_RTOL) * mag.max(axis=0), axis=0)
    signs = np.sign(vecs[idx, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs


def jacobi_eigh(a, tol: float = OFF_DIAG_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Each round of a sweep annihilates ``n/2`` disjoint off-diagonal pairs
    simultaneously; disjoint rotations commute, so this is the same
    arithmetic as the serial cyclic method in a different order. Sweeps stop
    once the off-diagonal Frobenius norm drops to ``tol * ||A||_F``.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise EigenError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise EigenError("empty matrix")
    scale = max(1.0, float(np.abs(a).max()))
    if np.abs(a - a.T).max() > SYMMETRY_TOL * scale:
        raise EigenError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    if n == 1:
        return Spectrum(a.diagonal().copy(), v, 0)

    fro = np.linalg.norm(a)
    target = tol * fro
    rounds = _round_robin(n)
    sweeps = 0

    off_mask = ~np.eye(n, dtype=bool)

    def off_norm():
        return np.linalg.norm(a[off_mask])

    while off_norm() > target:
        if sweeps >= max_sweeps:
            raise EigenError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p, q in rounds:
            apq = a[p, q]
            # threshold step: entries negligible against their diagonal are
            # zeroed, not rotated (also keeps theta finite)
            small = np.abs(apq) <= _EPS * np.sqrt(np.abs(a[p, p] * a[q, q]))
            small |= np.abs(apq) <= _TINY * fro
            if small.any():
                a[p[small], q[small]] = 0.0
                a[q[small], p[small]] = 0.0
            active = ~small
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq

    evals = a.diagonal().copy()
    order = np.argsort(evals, kind="stable")
    return Spectrum(evals[order], _normalize_signs(v[:, order]), sweeps)


def eigendecompose(lap) -> Spectrum:
    return jacobi_eigh(lap)


def check_spectrum(a, spec: Spectrum, residual_tol=RESIDUAL_TOL, ortho_tol=ORTHO_TOL) -> None:
    """Raise :class:`EigenError` if residual or orthogonality bounds fail."""
    a = np.asarray(a, dtype=np.float64)
    vecs = spec.eigenvectors
    bound = residual_tol * max(1.0, np.linalg.norm(a))
    res = np.linalg.norm(a @ vecs - vecs * spec.eigenvalues, axis=0)
    if res.max() > bound:
        raise EigenError(f"eigenpair residual {res.max():.3e} exceeds {bound:.3e}")
    gram = vecs.T @ vecs - np.eye(spec.n)
    if np.abs(gram).max() > ortho_tol:
        raise EigenError(f"eigenvectors not orthonormal ({np.abs(gram).max():.3e})")
    if np.any(np.diff(spec.eigenvalues) < 0):
        raise EigenError("eigenvalues not sorted")


def grouping_tol(spec: Spectrum) -> float:
    return 1e-8 * max(1.0, float(spec.eigenvalues[-1]))


def group_eigenvalues(spec: Spectrum) -> list[Eigenspace]:
    """Split the sorted spectrum into clusters of eigenvalues within :func:`grouping_tol`."""
    tol = grouping_tol(spec)
    groups = []
    start = 0
    for k in range(1, spec.n + 1):
        if k == spec.n or spec.eigenvalues[k] - spec.eigenvalues[k - 1] > tol:
            vals = spec.eigenvalues[start:k]
            groups.append(Eigenspace(float(vals.mean()), spec.eigenvectors[:, start:k]))
            start = k
    return groups


def algebraic_connectivity(lap, spec: Spectrum | None = None) -> float:
    spec = spec if spec is not None else eigendecompose(lap)
    if spec.n < 2:
        raise EigenError("algebraic connectivity needs at least 2 vertices")
    return float(spec.eigenvalues[1])


def fiedler_space(lap, spec: Spectrum | None = None) -> Eigenspace:
    """All eigenvectors whose eigenvalues lie within the grouping tolerance of lambda_2."""
    spec = spec if spec is not None else eigendecompose(lap)
    if spec.n < 2:
        raise EigenError("Fiedler space needs at least 2 vertices")
    tol = grouping_tol(spec)
    lam2 = spec.eigenvalues[1]
    if lam2 <= tol:
        raise DisconnectedGraphError(f"lambda_2 = {lam2:.3e} is numerically zero")
    members = np.flatnonzero(np.abs(spec.eigenvalues - lam2) <= tol)
    members = members[members >= 1]
    return Eigenspace(float(lam2), spec.eigenvectors[:, members])
