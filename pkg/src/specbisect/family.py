"""The four-block adversarial family and the closed-form spectrum of its coupling matrix.

Vertex layout: block ``j`` (0-based, ``j = 0..3``) occupies ``j*m .. (j+1)*m - 1``;
cone vertices, if any, follow at ``4m, 4m+1, ...``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .eigen import algebraic_connectivity, eigendecompose, jacobi_eigh
from .generators import parse_descriptor
from .graph import Graph, disjoint_union, is_connected, laplacian, laplacian_add

HYPOTHESIS_MARGIN = 1e-9
MAX_CONES = 3


class FamilyError(ValueError):
    pass


def lambda_pm(m: int) -> tuple[float, float]:
    r = math.sqrt(m * m + 1)
    return m + 1 - r, m + 1 + r


def mu_pm(m: int) -> tuple[float, float]:
    r = math.sqrt((m / 2) ** 2 + 1)
    return m / 2 + 1 - r, m / 2 + 1 + r


def spectral_gap_budget(m: int) -> float:
    """``lambda_- - mu_-``: how small a block's algebraic connectivity may be."""
    return lambda_pm(m)[0] - mu_pm(m)[0]


def _check_m(m: int) -> None:
    if int(m) != m or m < 2:
        raise FamilyError(f"block size m must be an integer >= 2, got {m!r}")


def tensor(a, b) -> np.ndarray:
    """Block vector ``(a_1 b, ..., a_p b)``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.size == 0 or b.size == 0:
        raise FamilyError("tensor of an empty vector")
    return np.kron(a.ravel(), b.ravel())


def build_l_star(m: int) -> np.ndarray:
    _check_m(m)
    eye = np.eye(m, dtype=np.int64)
    ones = np.ones((m, m), dtype=np.int64)
    zero = np.zeros((m, m), dtype=np.int64)
    return np.block(
        [
            [eye, -eye, zero, zero],
            [-eye, (m + 1) * eye, -ones, zero],
            [zero, -ones, (m + 1) * eye, -eye],
            [zero, zero, -eye, eye],
        ]
    )


def ones_complement_basis(m: int) -> np.ndarray:
    """Orthonormal basis of the complement of the all-ones vector in R^m, as columns.

    Gram-Schmidt on ``e_k - e_{k+1}`` in index order.
    """
    basis = []
    for k in range(m - 1):
        x = np.zeros(m)
        x[k], x[k + 1] = 1.0, -1.0
        for b in basis:
            x -= (b @ x) * b
        basis.append(x / np.linalg.norm(x))
    return np.array(basis).T


def _unit(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x)


@dataclass(frozen=True)
class AnalyticSpectrum:
    m: int
    lambda_minus: float
    lambda_plus: float
    mu_minus: float
    mu_plus: float
    eigenvalues: np.ndarray  # in construction order, not sorted
    eigenvectors: np.ndarray  # unit columns
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return 4 * self.m

    def pairs(self):
        return list(zip(self.eigenvalues, self.eigenvectors.T))

    def sorted_eigenvalues(self) -> np.ndarray:
        return np.sort(self.eigenvalues)

    def vector(self, label: str) -> np.ndarray:
        return self.eigenvectors[:, self.labels.index(label)]


def phi_vector(m: int, lam: float) -> np.ndarray:
    """Unnormalized ``(1, 1-lam, lam-1, -1) (x) 1_m``."""
    return tensor([1.0, 1.0 - lam, lam - 1.0, -1.0], np.ones(m))


def witness_vector(m: int) -> np.ndarray:
    return tensor([1, -1, -1, 1], np.ones(m, dtype=np.int64))


def analytic_spectrum(m: int) -> AnalyticSpectrum:
    """All ``4m`` closed-form eigenpairs of :func:`build_l_star`."""
    _check_m(m)
    lam_m, lam_p = lambda_pm(m)
    mu_m, mu_p = mu_pm(m)
    xi = ones_complement_basis(m)
    vals, vecs, labels = [0.0], [_unit(np.ones(4 * m))], ["one"]
    for lam, name in ((lam_m, "phi_minus"), (lam_p, "phi_plus")):
        vals.append(lam)
        vecs.append(_unit(phi_vector(m, lam)))
        labels.append(name)
    for mu, sign in ((mu_m, "-"), (mu_p, "+")):
        for half, coeffs in enumerate(([1.0, 1.0 - mu, 0.0, 0.0], [0.0, 0.0, 1.0 - mu, 1.0])):
            for k in range(m - 1):
                vals.append(mu)
                vecs.append(_unit(tensor(coeffs, xi[:, k])))
                labels.append(f"psi{sign}_{k + 1 + half * (m - 1)}")
    vals.append(2.0)
    vecs.append(_unit(witness_vector(m).astype(np.float64)))
    labels.append("phi_2")
    return AnalyticSpectrum(
        m, lam_m, lam_p, mu_m, mu_p, np.array(vals), np.array(vecs).T, tuple(labels)
    )


@dataclass(frozen=True)
class SubspaceDecomposition:
    w0_basis: np.ndarray  # columns: phi_-, phi_+, phi_2
    w1_basis: np.ndarray  # columns: the psi vectors

    @property
    def dims(self) -> tuple[int, int]:
        return self.w0_basis.shape[1], self.w1_basis.shape[1]


def subspace_decomposition(m: int) -> SubspaceDecomposition:
    spec = analytic_spectrum(m)
    w0 = [spec.labels.index(name) for name in ("phi_minus", "phi_plus", "phi_2")]
    w1 = [i for i, name in enumerate(spec.labels) if name.startswith("psi")]
    return SubspaceDecomposition(spec.eigenvectors[:, w0], spec.eigenvectors[:, w1])


# -- graph construction -----------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one family instance; validated on construction.

    Each base graph must be connected, have ``m`` vertices, and have algebraic
    connectivity at least ``lambda_- - mu_- + HYPOTHESIS_MARGIN``.
    """

    m: int
    base_graphs: tuple[Graph, Graph, Graph, Graph]
    cone_count: int = 0
    margin: float = field(default=HYPOTHESIS_MARGIN, repr=False)

    def __post_init__(self):
        _check_m(self.m)
        object.__setattr__(self, "base_graphs", tuple(self.base_graphs))
        if len(self.base_graphs) != 4:
            raise FamilyError(f"need exactly 4 base graphs, got {len(self.base_graphs)}")
        if self.cone_count not in range(MAX_CONES + 1):
            raise FamilyError(f"cone_count must be in 0..{MAX_CONES}, got {self.cone_count}")
        required = spectral_gap_budget(self.m) + self.margin
        for j, g in enumerate(self.base_graphs, 1):
            if g.n != self.m:
                raise FamilyError(f"base graph {j} has {g.n} vertices, expected m={self.m}")
            if not is_connected(g):
                raise FamilyError(f"base graph {j} is not connected")
            a = algebraic_connectivity(laplacian(g))
            if a < required:
                raise FamilyError(
                    f"base graph {j}: algebraic connectivity {a:.6g} below the "
                    f"required threshold {required:.6g}"
                )

    @property
    def n(self) -> int:
        return 4 * self.m + self.cone_count


@dataclass(frozen=True)
class FamilyConfig:
    """Serializable description of a :class:`FamilySpec` via graph descriptors."""

    m: int
    bases: tuple[str, str, str, str] = ("cycle",) * 4
    cone_count: int = 0

    def to_spec(self) -> FamilySpec:
        graphs = tuple(parse_descriptor(d, self.m) for d in self.bases)
        return FamilySpec(self.m, graphs, self.cone_count)

    def to_dict(self) -> dict:
        return {"m": self.m, "bases": list(self.bases), "cone_count": self.cone_count}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyConfig":
        bases = d.get("bases", "cycle")
        if isinstance(bases, str):
            bases = [bases] * 4
        if len(bases) != 4:
            raise FamilyError(f"need 4 base descriptors, got {len(bases)}")
        return cls(int(d["m"]), tuple(bases), int(d.get("cone_count", 0)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"m {self.m}"]
        lines += [f"base{j} {d}" for j, d in enumerate(self.bases, 1)]
        lines.append(f"cone_count {self.cone_count}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FamilyConfig":
        """Parse ``key value`` lines: ``m``, ``base1``..``base4`` (or ``base``), ``cone_count``."""
        values: dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition(" ")
            values[key] = value.strip()
        if "m" not in values:
            raise FamilyError("family config is missing 'm'")
        default = values.get("base", "cycle")
        bases = tuple(values.get(f"base{j}", default) for j in range(1, 5))
        return cls(int(values["m"]), bases, int(values.get("cone_count", 0)))


def cone_augment(g: Graph) -> Graph:
    """Add vertex ``n`` adjacent to every existing vertex."""
    return Graph(g.n + 1, g.edges | {(i, g.n) for i in range(g.n)})


def coupling_edges(m: int) -> list[tuple[int, int]]:
    """Edges whose Laplacian is the coupling matrix L_*."""
    edges = [(i, m + i) for i in range(m)]
    edges += [(m + i, 2 * m + j) for i in range(m) for j in range(m)]
    edges += [(2 * m + i, 3 * m + i) for i in range(m)]
    return edges


def build_family(spec: FamilySpec) -> tuple[Graph, np.ndarray]:
    """Return the family graph and its Laplacian ``L_0 + L_*`` (cone-augmented if requested)."""
    union = disjoint_union(list(spec.base_graphs))
    g = Graph(union.n, union.edges | frozenset(coupling_edges(spec.m)))
    lap = laplacian_add(laplacian(union), build_l_star(spec.m))
    if not np.array_equal(laplacian(g), lap):
        raise FamilyError("assembled graph does not realize L_0 + L_*")
    for _ in range(spec.cone_count):
        g = cone_augment(g)
    return g, laplacian(g)


def analytic_fiedler(spec: FamilySpec) -> np.ndarray:
    """Unit ``phi_-`` padded with zeros at the cone vertices."""
    phi = _unit(phi_vector(spec.m, lambda_pm(spec.m)[0]))
    return np.concatenate([phi, np.zeros(spec.cone_count)])


def analytic_algebraic_connectivity(spec: FamilySpec) -> float:
    # each cone shifts every nonzero eigenvalue up by one
    return lambda_pm(spec.m)[0] + spec.cone_count


def _rayleigh_min(lap: np.ndarray, basis: np.ndarray) -> float:
    return float(jacobi_eigh(basis.T @ lap @ basis).eigenvalues[0])


def lemma1_rayleigh_bound(spec: FamilySpec) -> tuple[float, float]:
    """(min Rayleigh quotient of L over W_1, ``min_j a(G_j) + mu_-``)."""
    if spec.cone_count:
        raise FamilyError("the W_1 bound is stated for the cone-free family")
    _, lap = build_family(spec)
    w1 = subspace_decomposition(spec.m).w1_basis
    bound = min(algebraic_connectivity(laplacian(g)) for g in spec.base_graphs)
    return _rayleigh_min(lap.astype(np.float64), w1), bound + mu_pm(spec.m)[0]


def w0_rayleigh_min(spec: FamilySpec) -> float:
    if spec.cone_count:
        raise FamilyError("W_0 is defined for the cone-free family")
    _, lap = build_family(spec)
    return _rayleigh_min(lap.astype(np.float64), subspace_decomposition(spec.m).w0_basis)

