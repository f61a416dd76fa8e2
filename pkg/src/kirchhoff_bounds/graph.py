"""
Simple undirected graphs: construction, structural queries, Laplacian
assembly and the plain-text edge-list format.

Vertices are the integers ``0..n-1`` and every edge is stored canonically
as a tuple ``(u, v)`` with ``u < v``.  Graph values never change after
construction; :func:`add_edge` and :func:`remove_edge` return new graphs.
"""

from __future__ import annotations

import io
import os
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    DegenerateOrder,
    Disconnected,
    DuplicateEdge,
    EdgeAbsent,
    EdgeExists,
    EdgeListFormatError,
    OutOfRangeVertex,
    SelfLoop,
)

Edge = tuple[int, int]


def _canonical(n: int, u: int, v: int) -> Edge:
    u, v = int(u), int(v)
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRangeVertex(f"vertex pair ({u}, {v}) outside [0, {n})")
    if u == v:
        raise SelfLoop(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on ``n`` labelled vertices.

    Two graphs compare equal when they have the same order and the same
    canonical edge set.  Use :func:`from_edge_list` for validated
    construction from arbitrary input.
    """

    __slots__ = ("_n", "_edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        n = int(n)
        if n < 1:
            raise DegenerateOrder(f"graph needs at least one vertex, got n={n}")
        canon: set[Edge] = set()
        for u, v in edges:
            e = _canonical(n, u, v)
            if e in canon:
                raise DuplicateEdge(f"edge {e} given twice")
            canon.add(e)
        self._n = n
        self._edges = frozenset(canon)

    @classmethod
    def _trusted(cls, n: int, edges: frozenset) -> "Graph":
        # internal fast path: edges already canonical and unique
        g = cls.__new__(cls)
        g._n = n
        g._edges = edges
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"

    def __contains__(self, pair) -> bool:
        u, v = pair
        return ((u, v) if u < v else (v, u)) in self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(m, 2)`` integer array of canonical edges in sorted order."""
        if not self._edges:
            return np.empty((0, 2), dtype=np.int64)
        return np.array(self.sorted_edges(), dtype=np.int64)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Per-vertex degrees, indexed by vertex label."""
        deg = np.zeros(self._n, dtype=np.int64)
        if self._edges:
            np.add.at(deg, self.edge_array.ravel(), 1)
        return deg

    @cached_property
    def adjacency_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs given in any order or orientation.

    >>> from_edge_list(3, [(1, 0), (2, 1)]).sorted_edges()
    [(0, 1), (1, 2)]
    """
    return Graph(n, (tuple(p) for p in pairs))


def complete_graph(n: int) -> Graph:
    return Graph._trusted(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph._trusted(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DegenerateOrder("a simple cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star with centre 0 and ``n - 1`` leaves."""
    return Graph._trusted(n, frozenset((0, i) for i in range(1, n)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    e = _canonical(g.n, u, v)
    if e in g.edges:
        raise EdgeExists(f"edge {e} already present")
    return Graph._trusted(g.n, g.edges | {e})


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` without edge ``{u, v}``; the result may be disconnected."""
    e = _canonical(g.n, u, v)
    if e not in g.edges:
        raise EdgeAbsent(f"edge {e} not present")
    return Graph._trusted(g.n, g.edges - {e})


def add_edges(g: Graph, pairs: Iterable[Edge]) -> Graph:
    new = {_canonical(g.n, u, v) for u, v in pairs}
    clash = new & g.edges
    if clash:
        raise EdgeExists(f"edges already present: {sorted(clash)}")
    return Graph._trusted(g.n, g.edges | new)


def remove_edges(g: Graph, pairs: Iterable[Edge]) -> Graph:
    gone = {_canonical(g.n, u, v) for u, v in pairs}
    missing = gone - g.edges
    if missing:
        raise EdgeAbsent(f"edges not present: {sorted(missing)}")
    return Graph._trusted(g.n, g.edges - gone)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted non-increasingly (``d1 >= d2 >= ... >= dn``)."""
    return sorted(g.degrees.tolist(), reverse=True)


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian ``D - A`` as a dense ``(n, n)`` array."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    if g.m:
        u, v = g.edge_array[:, 0], g.edge_array[:, 1]
        L[u, v] = -1
        L[v, u] = -1
    L[np.diag_indices(g.n)] = g.degrees
    return L


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0."""
    adj = g.adjacency_lists
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def diameter(g: Graph) -> int:
    """Largest hop distance between any two vertices.

    Runs an unweighted breadth-first search from every source.
    """
    if not is_connected(g):
        raise Disconnected("diameter undefined for a disconnected graph")
    if g.n == 1:
        return 0
    ea = g.edge_array
    ones = np.ones(len(ea), dtype=np.int8)
    adj = coo_matrix((ones, (ea[:, 0], ea[:, 1])), shape=(g.n, g.n)).tocsr()
    dist = shortest_path(adj, method="D", directed=False, unweighted=True)
    return int(dist.max())


def density(g: Graph) -> float:
    if g.n < 2:
        raise DegenerateOrder("density needs n >= 2")
    return 2.0 * g.m / (g.n * (g.n - 1))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def absent_pairs(g: Graph) -> list[Edge]:
    """Non-adjacent vertex pairs in canonical lexicographic order."""
    n = g.n
    adj = np.zeros((n, n), dtype=bool)
    if g.m:
        adj[g.edge_array[:, 0], g.edge_array[:, 1]] = True
    iu, ju = np.triu_indices(n, k=1)
    keep = ~adj[iu, ju]
    return list(zip(iu[keep].tolist(), ju[keep].tolist()))


# ---------------------------------------------------------------------------
# edge-list text format


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines format.

    Lines starting with ``#`` and blank lines are skipped.  Pairs may be
    written in either orientation.
    """
    rows = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListFormatError(f"line {lineno}: {exc}") from None
    if not rows:
        raise EdgeListFormatError("missing 'n m' header")
    (n, m), pairs = rows[0], rows[1:]
    if len(pairs) != m:
        raise EdgeListFormatError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))
