"""Deterministic graph families and a reproducible random-graph generator."""

from __future__ import annotations

import numpy as np

from .errors import CycleTooShortError, ParameterError, SizeTooSmallError
from .graph import Graph, build_graph

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _need(cond: bool, msg: str, exc=SizeTooSmallError) -> None:
    if not cond:
        raise exc(msg)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}", CycleTooShortError)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, f"complete bipartite needs a, b >= 1, got {a}, {b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def yoke(n1: int, n2: int) -> Graph:
    """Cycles on ``0..n1-1`` and ``n1..n1+n2-1`` joined by the edge ``(0, n1)``."""
    _need(n1 >= 3 and n2 >= 3, f"yoke cycles need length >= 3, got {n1}, {n2}",
          CycleTooShortError)
    edges = [(i, (i + 1) % n1) for i in range(n1)]
    edges += [(n1 + i, n1 + (i + 1) % n2) for i in range(n2)]
    edges.append((0, n1))
    return build_graph(n1 + n2, edges)


def splitmix64(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``.

    Output ``k`` is ``mix(seed + (k + 1) * 0x9E3779B97F4A7C15 mod 2**64)`` with
    the standard SplitMix64 finalizer, so any index can be computed directly.
    """
    with np.errstate(over="ignore"):
        k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        z = np.uint64(seed & MASK64) + k * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def uniform01(seed: int, count: int) -> np.ndarray:
    """Doubles in ``[0, 1)`` from the top 53 bits of each SplitMix64 output."""
    return (splitmix64(seed, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p) graph driven by SplitMix64.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order and the
    k-th pair is kept when the k-th uniform draw is below ``edge_prob``.
    """
    if n < 0:
        raise SizeTooSmallError(f"random graph needs n >= 0, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ParameterError(f"edge_prob={edge_prob} outside [0, 1]")
    iu, ju = np.triu_indices(n, k=1)
    keep = uniform01(seed, len(iu)) < edge_prob
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))

