"""Graphs and their exact integer matrix representations.

Vertices are labeled 1..n in every public interface.  Edges are stored
canonically as (min, max) pairs in lexicographic order, so equal graphs
compare and serialize identically.  Every matrix built here is an exact
int64 array: adjacency, degree, Laplacian, and the single-excitation
coupling matrix.  Floating point enters only downstream, at
eigendecomposition time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EdgeListError, InvalidVertex, NotVertexDisjoint, SelfLoop

__all__ = [
    "Graph",
    "graph_from_edge_list",
    "complete_graph",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_minus_matching",
    "adjacency_matrix",
    "degree_matrix",
    "laplacian",
    "xyz_hamiltonian",
    "parse_edge_list",
    "graph_from_file",
]


def _canonical_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if not (isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer))):
        raise InvalidVertex(f"vertex labels must be integers, got ({u!r}, {v!r})")
    u, v = int(u), int(v)
    if u == v:
        raise SelfLoop(f"self-loop at vertex {u}")
    if not (1 <= u <= n) or not (1 <= v <= n):
        raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    The constructor canonicalizes: edges become deduplicated (min, max)
    pairs in lexicographic order.  Instances are immutable and safe to
    share across threads.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidVertex(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        canon = sorted({_canonical_edge(u, v, self.n) for u, v in self.edges})
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        """Degree of each vertex, index 0 holding vertex 1."""
        d = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            d[u - 1] += 1
            d[v - 1] += 1
        return d

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical_edge(u, v, self.n) in set(self.edges)


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from (u, v) pairs.

    Duplicate pairs collapse (set semantics); orientation is ignored.
    Raises InvalidVertex for endpoints outside 1..n and SelfLoop for
    pairs with u == v.
    """
    return Graph(n, tuple((u, v) for u, v in pairs))


def complete_graph(n: int) -> Graph:
    """All-to-all network on n vertices: every one of n(n-1)/2 edges present."""
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def empty_graph(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n, ())


def path_graph(n: int) -> Graph:
    """Path 1-2-...-n."""
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    """Cycle 1-2-...-n-1.  Needs n >= 3 (shorter cycles are not simple)."""
    if n < 3:
        raise InvalidVertex(f"cycle graph needs n >= 3, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_minus_matching(n: int, deleted: Sequence[tuple[int, int]]) -> Graph:
    """Complete graph on n vertices with a set of vertex-disjoint edges removed.

    With a single deleted pair this is the all-to-all network with one
    missing link.  The deleted pairs must be valid edges of the complete
    graph and must not share vertices (NotVertexDisjoint otherwise).
    """
    canon = [_canonical_edge(u, v, n) for u, v in deleted]
    used: set[int] = set()
    for u, v in canon:
        if u in used or v in used:
            raise NotVertexDisjoint(f"deleted pairs share a vertex: {sorted(set(canon))}")
        used.update((u, v))
    removed = set(canon)
    kept = tuple(
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in removed
    )
    return Graph(n, kept)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """0/1 adjacency matrix A with A[i][j] = 1 iff {i+1, j+1} is an edge."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u - 1, v - 1] = 1
        a[v - 1, u - 1] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    """Diagonal matrix of vertex degrees."""
    return np.diag(g.degrees())


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian: degree matrix minus adjacency matrix.

    Rows sum to zero and the matrix is positive semidefinite.
    """
    return degree_matrix(g) - adjacency_matrix(g)


def xyz_hamiltonian(g: Graph) -> np.ndarray:
    """Single-excitation coupling matrix of the isotropic Heisenberg model.

    Entry (i, j) is 2 where {i, j} is an edge and 0 otherwise; the diagonal
    entry at vertex i is m - 2*d(i) with m the edge count and d(i) the
    degree.  Built entrywise from that definition, independently of the
    Laplacian, so the identity H = m*I - 2*L can be checked rather than
    assumed.
    """
    d = g.degrees()
    h = 2 * adjacency_matrix(g)
    h[np.diag_indices(g.n)] = g.m - 2 * d
    return h


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    First non-comment line: ``n <int>``.  Each following non-comment line:
    ``<u> <v>`` with 1-indexed endpoints.  ``#`` starts a comment running to
    the end of the line; blank lines are ignored.  Duplicate edges collapse;
    a self-loop is a parse error.
    """
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListError(f"line {lineno}: expected 'n <int>', got {raw!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: vertex count {fields[1]!r} is not an integer") from None
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: endpoints must be integers, got {raw!r}") from None
        pairs.append((u, v))
    if n is None:
        raise EdgeListError("no 'n <int>' header line found")
    return graph_from_edge_list(n, pairs)


def graph_from_file(path: str | os.PathLike[str]) -> Graph:
    """Read a graph from an edge-list file (format per parse_edge_list)."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
