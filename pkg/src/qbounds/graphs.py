"""Simple undirected graphs with degree bookkeeping.

Vertices are dense 0-indexed integers; isolated vertices are allowed. Graphs
are immutable after construction, so they can be shared freely between the
eigenvalue solvers, the bound catalogue and the partition searches. Edges are
kept in a canonical lexicographic order, which also fixes the vertex labels
of the line graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

MAX_VERTICES = 4096


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adjacency", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError("vertex count must be >= 1")
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}")
        self.n = n
        canon = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        self.edges = tuple(canon)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self.degrees = tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSequence:
    """Vertex degrees sorted non-increasingly: d_1 >= d_2 >= ... >= d_n."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        if n < 1:
            raise ValueError("degree sequence must be non-empty")
        for i, d in enumerate(vals):
            if not 0 <= d <= n - 1:
                raise ValueError(f"degree {d} out of range [0, {n - 1}]")
            if i and vals[i - 1] < d:
                raise ValueError("degree sequence must be sorted non-increasingly")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def max_degree(self) -> int:
        return self.values[0]

    @property
    def min_degree(self) -> int:
        return self.values[-1]

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def average(self) -> float:
        """Average degree 2m/n."""
        return self.total / self.n

    def prefix_sums(self) -> tuple[int, ...]:
        """Integer prefix sums, entry k = sum of the k largest degrees."""
        return tuple(accumulate(self.values, initial=0))


@dataclass(frozen=True)
class LineDegreeSequence:
    """Degrees of the line graph, sorted non-increasingly.

    Entry for an edge {i, j} of the base graph is d_i + d_j - 2; there is one
    entry per edge.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 1:
            raise ValueError("line degree sequence must be non-empty")
        for i, d in enumerate(vals):
            if d < 0:
                raise ValueError("line degrees must be non-negative")
            if i and vals[i - 1] < d:
                raise ValueError("line degree sequence must be sorted non-increasingly")

    @property
    def m(self) -> int:
        return len(self.values)

    def prefix_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.values, initial=0))


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degrees of g sorted non-increasingly."""
    return DegreeSequence(tuple(sorted(g.degrees, reverse=True)))


def line_degree_sequence(g: Graph) -> LineDegreeSequence:
    """Line-graph degrees d_i + d_j - 2 over the edges of g, sorted non-increasingly.

    Computed straight from the edge list; the line graph itself is never built.
    """
    if g.m == 0:
        raise ValueError("no edges")
    deg = g.degrees
    vals = sorted((deg[u] + deg[v] - 2 for u, v in g.edges), reverse=True)
    return LineDegreeSequence(tuple(vals))


def line_graph(g: Graph) -> Graph:
    """Line graph of g.

    Vertex k of the result is edge k of g in canonical (lexicographic) order;
    two vertices are adjacent iff the underlying edges share an endpoint.
    """
    if g.m == 0:
        raise ValueError("no edges")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    edges = set()
    for ids in incident:
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                edges.add((ids[i], ids[j]))
    return Graph(g.m, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0..k-1 in sorted order."""
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(verts), edges)


def iter_vertex_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs (i, j), i < j, in lexicographic order."""
    for i in range(n):
        for j in range(i + 1, n):
            yield (i, j)
