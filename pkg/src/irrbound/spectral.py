"""Laplacian matrix, its quadratic form, and the largest Laplacian eigenvalue."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import (
    ConstantVectorError,
    DimensionMismatchError,
    EmptyGraphDimensionError,
    NotConvergedError,
    ParameterError,
)
from .graph import Graph

DEFAULT_REL_TOL = 1e-10
DENSE_LIMIT = 512

Method = Literal["dense-eig", "power-iteration"]


@dataclass(frozen=True)
class LaplacianMatrix:
    n: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


@dataclass(frozen=True, eq=False)
class SpectralResult:
    lambda_max: float
    tolerance_achieved: float
    method: Method
    iterations: int
    vector: np.ndarray | None = None
    # Full ascending spectrum; only the dense method fills this in.
    eigenvalues: np.ndarray | None = None


def laplacian(g: Graph) -> LaplacianMatrix:
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1
    lap[np.diag_indices(g.n)] = g.degrees
    return LaplacianMatrix(n=g.n, entries=lap)


def _as_vector(g: Graph, x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] != g.n:
        raise DimensionMismatchError(f"vector of shape {arr.shape} for graph on {g.n} vertices")
    return arr


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    """``x^T L x`` evaluated edge by edge as a sum of squared differences."""
    arr = _as_vector(g, x)
    return float(sum((arr[u] - arr[v]) ** 2 for u, v in g.edges))


def _pairwise_sq_diff(values: Sequence[float]) -> float:
    # Ordered pairs, so each unordered pair counts twice.
    return sum((a - b) ** 2 for a in values for b in values)


def pairwise_difference_sum(g: Graph) -> int:
    """Sum of ``(d(u) - d(v))**2`` over all ordered vertex pairs."""
    return _pairwise_sq_diff(g.degrees)


def fiedler_quotient(g: Graph, x: Sequence[float]) -> float:
    """``2n * x^T L x / sum_{u,v} (x_u - x_v)**2`` for a nonconstant ``x``.

    The maximum over all nonconstant vectors is the largest Laplacian
    eigenvalue, so every value returned here is a lower bound for it.
    """
    arr = _as_vector(g, x)
    if g.n == 0 or arr.max() - arr.min() <= 0:
        raise ConstantVectorError("quotient undefined for a constant vector")
    # sum_{u,v} (x_u - x_v)^2 = 2n * sum x^2 - 2 (sum x)^2, with x centred for stability
    c = arr - arr.mean()
    denom = 2.0 * g.n * float(c @ c)
    return 2.0 * g.n * quadratic_form(g, arr) / denom


def merris_bound(g: Graph) -> float:
    """``max_v d(v) + m(v)`` where ``m(v)`` is the mean neighbour degree.

    Isolated vertices contribute 0.
    """
    deg = g.degrees
    best = 0.0
    for v, nbrs in enumerate(g.adjacency):
        if nbrs:
            best = max(best, deg[v] + sum(deg[w] for w in nbrs) / len(nbrs))
    return best


def _check_tol(rel_tol: float) -> None:
    if not 1e-13 <= rel_tol <= 1e-3:
        raise ParameterError(f"rel_tol={rel_tol} outside [1e-13, 1e-3]")


def _dense(g: Graph) -> SpectralResult:
    lap = laplacian(g).entries.astype(float)
    w, vecs = np.linalg.eigh(lap)
    lam = float(w[-1])
    vec = vecs[:, -1]
    residual = float(np.linalg.norm(lap @ vec - lam * vec))
    # eigh is backward stable: error ~ n * eps * ||L||, and ||L|| <= n
    tol = max(residual, g.n * np.finfo(float).eps * max(1.0, lam))
    return SpectralResult(
        lambda_max=max(lam, 0.0),
        tolerance_achieved=tol,
        method="dense-eig",
        iterations=0,
        vector=vec,
        eigenvalues=w,
    )


def _power(g: Graph, rel_tol: float, max_iter: int) -> SpectralResult:
    n = g.n
    deg = np.asarray(g.degrees, dtype=float)
    if g.m == 0:
        return SpectralResult(0.0, 0.0, "power-iteration", 0, np.eye(n)[0])
    src = np.fromiter((u for u, _ in g.edges), dtype=np.intp, count=g.m)
    dst = np.fromiter((v for _, v in g.edges), dtype=np.intp, count=g.m)

    def matvec(x):
        return deg * x - np.bincount(src, x[dst], n) - np.bincount(dst, x[src], n)

    # Fixed pseudo-random start: the all-ones direction is the null space of L
    # and any structured vector can vanish on the top eigenvector.
    x = np.random.default_rng(0x5EED).standard_normal(n)
    x -= x.mean()
    x /= np.linalg.norm(x)
    y = matvec(x)
    residual = np.inf
    for it in range(1, max_iter + 1):
        x = y / np.linalg.norm(y)
        y = matvec(x)
        rho = float(x @ y)
        # |rho - lambda| <= ||Lx - rho x|| for unit x and symmetric L
        residual = float(np.linalg.norm(y - rho * x))
        if residual <= rel_tol * max(1.0, rho):
            return SpectralResult(rho, residual, "power-iteration", it, x)
    raise NotConvergedError(
        f"power iteration stalled after {max_iter} steps (residual {residual:.3e})"
    )


def lambda_max(
    g: Graph,
    rel_tol: float = DEFAULT_REL_TOL,
    method: str = "auto",
    max_iter: int = 200_000,
) -> SpectralResult:
    """Largest eigenvalue of the Laplacian of ``g``.

    ``method`` is ``"auto"`` (dense up to ``DENSE_LIMIT`` vertices, power
    iteration above), ``"dense"`` or ``"power"``.
    """
    if g.n == 0:
        raise EmptyGraphDimensionError("Laplacian of the empty graph has no eigenvalues")
    _check_tol(rel_tol)
    if method == "auto":
        method = "dense" if g.n <= DENSE_LIMIT else "power"
    if method == "dense":
        return _dense(g)
    if method == "power":
        return _power(g, rel_tol, max_iter)
    raise ParameterError(f"unknown eigensolver method {method!r}")
