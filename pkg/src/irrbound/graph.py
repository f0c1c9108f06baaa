"""Simple undirected graphs and their degree-based invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeNotPresentError,
    GraphValidationError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Use :func:`build_graph` to construct one; the constructor itself does not
    validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    m: int
    zagreb: int
    pendants: int
    max_degree: int
    n: int


def build_graph(n: int, edges: Iterable[Sequence[int]], allow_duplicates: bool = False) -> Graph:
    """Validate ``edges`` and return a :class:`Graph` on ``n`` vertices.

    Every pair is normalized to ``(min, max)`` and the edge list is sorted
    lexicographically. A repeated pair (in either orientation) raises
    :class:`DuplicateEdgeError` unless ``allow_duplicates`` is set, in which
    case repeats are merged.
    """
    n = int(n)
    if n < 0:
        raise GraphValidationError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRangeError(w, n)
        if u == v:
            raise SelfLoopError(u)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            if allow_duplicates:
                continue
            raise DuplicateEdgeError(*e)
        seen.add(e)
    edge_list = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n=n, adjacency=adjacency, edges=edge_list)


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees
    return DegreeProfile(
        degrees=degs,
        m=g.m,
        zagreb=sum(d * d for d in degs),
        pendants=sum(1 for d in degs if d == 1),
        max_degree=max(degs, default=0),
        n=g.n,
    )


def imbalance(g: Graph, e: Sequence[int]) -> int:
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(u, v)
    return abs(g.degree(u) - g.degree(v))


def irregularity(g: Graph) -> int:
    """Sum of ``|d(u) - d(v)|`` over all edges. Always even."""
    d = g.degrees
    return sum(abs(d[u] - d[v]) for u, v in g.edges)


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    # n == 0 is not a tree: m = n - 1 would be -1.
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
