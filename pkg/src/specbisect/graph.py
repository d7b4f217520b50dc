"""Simple undirected graphs, their Laplacians, and cut functionals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs, vertex sets, or mismatched operands."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically as ``(min, max)`` pairs. Duplicate edges and
    self-loops are rejected, not silently dropped.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        canon = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"edge ({i}, {j}) out of range for n={self.n}")
            pair = (min(i, j), max(i, j))
            if pair in canon:
                raise GraphError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        # frozenset() would hide duplicates, so validate on the raw list
        edges = [tuple(e) for e in edges]
        seen = set()
        for i, j in edges:
            pair = (min(i, j), max(i, j))
            if pair in seen:
                raise GraphError(f"duplicate edge {pair}")
            seen.add(pair)
        return cls(n, frozenset(edges))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.sorted_edges():
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a


def _members(g_or_n, w) -> np.ndarray:
    n = g_or_n.n if isinstance(g_or_n, Graph) else int(g_or_n)
    members = np.unique(np.asarray(list(w), dtype=np.int64))
    if members.size and (members[0] < 0 or members[-1] >= n):
        raise GraphError(f"vertex set {members.tolist()} not contained in [0, {n})")
    return members


def indicator(n: int, w: Iterable[int]) -> np.ndarray:
    """Return the 0/1 indicator vector of ``w`` in R^n."""
    out = np.zeros(n, dtype=np.int64)
    out[_members(n, w)] = 1
    return out


def cut_vector(n: int, w: Iterable[int]) -> np.ndarray:
    """Return ``1_W - 1_{W^c}`` as an integer array of +/-1."""
    return 2 * indicator(n, w) - 1


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian: degrees on the diagonal, -1 at adjacent pairs."""
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def quadratic_form(lap: np.ndarray, u, v) -> float:
    """Bilinear form ``u^T L v`` taken from the matrix entries."""
    lap = np.asarray(lap)
    u = np.asarray(u)
    v = np.asarray(v)
    if lap.ndim != 2 or lap.shape[0] != lap.shape[1]:
        raise GraphError(f"expected a square matrix, got shape {lap.shape}")
    if u.shape != (lap.shape[0],) or v.shape != (lap.shape[0],):
        raise GraphError(
            f"dimension mismatch: matrix {lap.shape}, vectors {u.shape} and {v.shape}"
        )
    return u @ lap @ v


def _proper_subset(g: Graph, w) -> np.ndarray:
    members = _members(g, w)
    if members.size == 0 or members.size == g.n:
        raise GraphError("cut requires a nonempty proper vertex subset")
    return members


def cut_cost(g: Graph, w: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in ``w``.

    This equals one quarter of ``u^T L u`` for ``u = 1_W - 1_{W^c}``.
    """
    inside = np.zeros(g.n, dtype=bool)
    inside[_proper_subset(g, w)] = True
    return sum(1 for i, j in g.edges if inside[i] != inside[j])


def cut_ratio(g: Graph, w: Iterable[int]) -> Fraction:
    members = _proper_subset(g, w)
    return Fraction(cut_cost(g, members), min(members.size, g.n - members.size))


def is_connected(g: Graph) -> bool:
    adj = g.neighbors()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        for j in adj[queue.popleft()]:
            if not seen[j]:
                seen[j] = True
                count += 1
                queue.append(j)
    return count == g.n


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """Subgraph on ``w``, relabeled ``0..|w|-1`` in ascending original order."""
    members = _members(g, w)
    if members.size == 0:
        raise GraphError("induced subgraph of an empty vertex set")
    relabel = {int(v): k for k, v in enumerate(members)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return Graph(len(members), frozenset(edges))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise GraphError("disjoint union of an empty list")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def laplacian_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise GraphError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a + b


def check_laplacian(lap: np.ndarray, plain: bool = True) -> None:
    """Raise :class:`GraphError` unless ``lap`` is a symmetric zero-row-sum matrix.

    With ``plain=True`` off-diagonal entries must additionally be 0 or -1.
    """
    lap = np.asarray(lap)
    if lap.ndim != 2 or lap.shape[0] != lap.shape[1]:
        raise GraphError(f"expected a square matrix, got shape {lap.shape}")
    if not np.array_equal(lap, lap.T):
        raise GraphError("Laplacian is not symmetric")
    if np.any(lap.sum(axis=1) != 0):
        raise GraphError("Laplacian rows do not sum to zero")
    if plain:
        off = lap[~np.eye(lap.shape[0], dtype=bool)]
        if not np.all((off == 0) | (off == -1)):
            raise GraphError("off-diagonal entries must be 0 or -1")


def graph_from_laplacian(lap: np.ndarray) -> Graph:
    check_laplacian(lap)
    lap = np.asarray(lap)
    i, j = np.nonzero(np.triu(lap, k=1))
    return Graph(lap.shape[0], frozenset(zip(i.tolist(), j.tolist())))


# -- text formats -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` header + ``u v`` lines format ('#' comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphError(f"line {lineno}: expected header 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {i} -- {j};" for i, j in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
