"""Free trees: enumeration, Prüfer decoding and canonical forms.

Trees are enumerated as level sequences (vertex depths in preorder) rooted at
a centre, following Wright, Richmond, Odlyzko and McKay: canonical rooted
level sequences are walked in decreasing lexicographic order with the
Beyer-Hedetniemi successor, and any candidate whose root is not the
canonical centre is skipped with a jump over the whole block of rooted trees
sharing its first subtree.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterator, Sequence

from .errors import EntryOutOfRangeError, NotATreeError, SizeOutOfRangeError
from .graph import Graph, build_graph, is_tree

MAX_TREE_SIZE = 20


def level_sequence_to_graph(levels: Sequence[int]) -> Graph:
    """Tree whose preorder vertex depths are ``levels`` (root at depth 0)."""
    edges = []
    stack: list[int] = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return build_graph(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a canonical rooted level sequence.

    ``p`` forces the position to modify; by default it is the last vertex
    that is not a child of the root.
    """
    if p is None:
        p = len(levels) - 1
        while p > 0 and levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = levels[:p]
    for i in range(p, len(levels)):
        nxt.append(nxt[i - p + q])
    return nxt


def _split(levels: Sequence[int]) -> tuple[list[int], list[int]]:
    """First subtree of the root (re-rooted at depth 0), and the rest of the tree."""
    cut = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            cut = i
            break
    first = [lev - 1 for lev in levels[1:cut]]
    rest = [0, *levels[cut:]]
    return first, rest


def _centre_rooted(levels: Sequence[int]) -> bool:
    """True when the root is the canonical centre of the free tree."""
    first, rest = _split(levels)
    h1, h2 = max(first), max(rest)
    if h1 > h2:
        return False
    if h1 < h2:
        return True
    # Bicentral: the root and the first child are both centres.
    if len(first) != len(rest):
        return len(first) < len(rest)
    return first <= rest


def _jump(levels: list[int]) -> list[int] | None:
    """Skip every rooted tree that keeps the current (invalid) first subtree."""
    first, _ = _split(levels)
    p = len(first)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        h = max(_split(nxt)[0])
        nxt[len(nxt) - h - 1:] = range(1, h + 2)
    return nxt


class TreeStream:
    """Iterator over the non-isomorphic free trees on ``n`` vertices.

    Each tree is produced as its centre-rooted level sequence; those
    sequences strictly decrease in lexicographic order. Iterating yields
    :class:`Graph` objects; :meth:`level_sequences` yields the raw sequences.
    """

    def __init__(self, n: int):
        if not 1 <= n <= MAX_TREE_SIZE:
            raise SizeOutOfRangeError(f"free tree size must be in 1..{MAX_TREE_SIZE}, got {n}")
        self.n = n
        self._cursor: list[int] | None = None
        self._started = False

    def _advance(self) -> list[int] | None:
        n = self.n
        if not self._started:
            self._started = True
            if n <= 2:
                cur = list(range(n))
                self._cursor = cur
                return cur
            cur = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
        else:
            if self._cursor is None or n <= 2:
                self._cursor = None
                return None
            cur = _next_rooted(self._cursor)
        while cur is not None and not _centre_rooted(cur):
            cur = _jump(cur)
        self._cursor = cur
        return cur

    def level_sequences(self) -> Iterator[tuple[int, ...]]:
        while (cur := self._advance()) is not None:
            yield tuple(cur)

    def __iter__(self) -> Iterator[Graph]:
        for seq in self.level_sequences():
            yield level_sequence_to_graph(seq)


def free_trees(n: int) -> TreeStream:
    return TreeStream(n)


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    """Decode a Prüfer sequence into the labelled tree on ``len(seq) + 2`` vertices."""
    n = len(seq) + 2
    for x in seq:
        if not 0 <= x < n:
            raise EntryOutOfRangeError(f"Prüfer entry {x} outside [0, {n})")
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def centroids(t: Graph) -> list[int]:
    """The one or two vertices minimizing the largest component left on removal."""
    n = t.n
    order, parent = _bfs(t, 0)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best, found = n, []
    for v in order:
        heaviest = n - size[v]
        for w in t.adjacency[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, found = heaviest, [v]
        elif heaviest == best:
            found.append(v)
    return sorted(found)


def _bfs(t: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def rooted_level_sequence(t: Graph, root: int) -> tuple[int, ...]:
    """Lexicographically largest level sequence of ``t`` rooted at ``root``."""
    order, parent = _bfs(t, root)
    children: list[list[tuple[int, ...]]] = [[] for _ in range(t.n)]
    code: tuple[int, ...] = ()
    for v in reversed(order):
        subs = sorted(children[v], reverse=True)
        code = (0, *(lev + 1 for sub in subs for lev in sub))
        if parent[v] >= 0:
            children[parent[v]].append(code)
    return code


def canonical_form(t: Graph) -> tuple[int, ...]:
    """Isomorphism key of a tree: the largest level sequence over its centroids.

    A bicentroidal tree is rooted at whichever centroid yields the larger
    sequence, which amounts to ordering the two halves either side of the
    central edge.
    """
    if not is_tree(t):
        raise NotATreeError(f"{t!r} is not a tree")
    return max(rooted_level_sequence(t, c) for c in centroids(t))
