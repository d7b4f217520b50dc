"""Standard named graphs used as family building blocks."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError, read_edge_list

KINDS = ("path", "cycle", "complete", "complete_bipartite", "hypercube", "file")


def path_graph(m: int) -> Graph:
    return Graph(m, frozenset((i, i + 1) for i in range(m - 1)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {m}")
    return Graph(m, frozenset((i, (i + 1) % m) for i in range(m)))


def complete_graph(m: int) -> Graph:
    return Graph(m, frozenset(combinations(range(m), 2)))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError(f"K_{{p,q}} needs p, q >= 1, got {p}, {q}")
    return Graph(p + q, frozenset((i, p + j) for i in range(p) for j in range(q)))


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph(n, frozenset((v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1))


def base_graph(kind: str, m: int, *extra) -> Graph:
    """Build a named graph on ``m`` vertices.

    ``extra`` carries ``(p, q)`` for ``complete_bipartite`` (with ``p + q == m``),
    optionally ``d`` for ``hypercube`` (``m == 2**d``), and the path for ``file``.
    """
    if m < 1:
        raise GraphError(f"vertex count must be positive, got {m}")
    if kind == "path":
        return path_graph(m)
    if kind == "cycle":
        return cycle_graph(m)
    if kind == "complete":
        return complete_graph(m)
    if kind == "complete_bipartite":
        if len(extra) == 2:
            p, q = (int(x) for x in extra)
        elif not extra:
            p, q = m // 2, m - m // 2
        else:
            raise GraphError("complete_bipartite takes parameters 'p q'")
        if p + q != m:
            raise GraphError(f"complete_bipartite {p} {q} does not have {m} vertices")
        return complete_bipartite_graph(p, q)
    if kind == "hypercube":
        d = m.bit_length() - 1
        if extra:
            d = int(extra[0])
        if 1 << d != m:
            raise GraphError(f"hypercube on {m} vertices: {m} is not 2**{d}")
        return hypercube_graph(d)
    if kind == "file":
        if len(extra) != 1:
            raise GraphError("file descriptor needs exactly one path")
        g = read_edge_list(extra[0])
        if g.n != m:
            raise GraphError(f"graph in {extra[0]} has {g.n} vertices, expected {m}")
        return g
    raise GraphError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")


def parse_descriptor(descriptor: str, m: int) -> Graph:
    """Build a graph from a descriptor such as ``"cycle"`` or ``"complete_bipartite 2 3"``."""
    parts = descriptor.split()
    if not parts:
        raise GraphError("empty graph descriptor")
    kind, extra = parts[0], parts[1:]
    if kind == "file":
        extra = [descriptor.split(None, 1)[1]] if len(parts) > 1 else []
    return base_graph(kind, m, *extra)
