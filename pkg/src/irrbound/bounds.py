"""Upper bounds on the irregularity of a graph."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import LambdaOutOfRangeError, NegativeInputError, NegativeRadicandError
from .graph import DegreeProfile, Graph, degree_profile, irregularity, is_tree
from .spectral import DEFAULT_REL_TOL, lambda_max, merris_bound

TRUNC_EPS = 1e-9
LAMBDA_SLACK = 1e-9


def albertson_bound(n: int) -> float:
    """``4 n^3 / 27``."""
    return 4 * n**3 / 27


def acd_bound(n: int) -> int:
    """``floor(n/3) * ceil(2n/3) * (ceil(2n/3) - 1)`` in exact integers."""
    third = n // 3
    two_thirds = -(-2 * n // 3)
    return third * two_thirds * (two_thirds - 1)


def _radicand(profile: DegreeProfile, n: int) -> int:
    spread = n * profile.zagreb - 4 * profile.m**2
    if spread < 0:
        raise NegativeRadicandError(
            f"n*Z - 4m^2 = {spread} < 0; degree profile is inconsistent with n={n}"
        )
    return profile.m * spread


def zhou_luo_bound(profile: DegreeProfile, n: int) -> float:
    """``sqrt(m (n Z - 4 m^2))``."""
    return math.sqrt(_radicand(profile, n))


def laplacian_bound(profile: DegreeProfile, n: int, lam: float) -> float:
    """``sqrt(m (n Z - 4 m^2) lam / n)`` with ``lam`` the Laplacian spectral radius.

    Any upper bound on the spectral radius may be passed for ``lam``; the
    result is still a valid (weaker) bound.
    """
    slack = LAMBDA_SLACK * max(1.0, n)
    if not -slack <= lam <= n + slack:
        raise LambdaOutOfRangeError(f"lambda={lam} outside [0, n={n}]")
    if n == 0:
        return 0.0
    lam = min(max(lam, 0.0), float(n))
    return math.sqrt(_radicand(profile, n) * lam / n)


def tree_pendant_bound(p: int) -> int:
    """``p (p - 1)`` for a tree with ``p`` pendant vertices."""
    if p < 0:
        raise NegativeInputError(f"pendant count {p} < 0")
    return p * (p - 1)


def trunc_even(x: float) -> int:
    """Largest even integer not exceeding ``x`` (up to ``TRUNC_EPS`` of float noise)."""
    if not x >= 0:
        raise NegativeInputError(f"cannot truncate {x}")
    return 2 * math.floor((x + TRUNC_EPS) / 2)


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    irregularity: int
    albertson: float
    albertson_trunc: int
    acd: int
    acd_trunc: int
    zhou_luo: float
    zhou_luo_trunc: int
    laplacian_new: float
    laplacian_new_trunc: int
    tree_pendant: int | None
    tree_pendant_trunc: int | None
    lambda_max_used: float
    lambda_source: str
    empty_graph: bool
    tight: tuple[str, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tight"] = list(self.tight)
        return d


def bound_report(
    g: Graph, rel_tol: float = DEFAULT_REL_TOL, use_merris_cap: bool = False
) -> BoundReport:
    """Irregularity of ``g`` next to every applicable upper bound.

    With ``use_merris_cap`` the spectral radius is replaced by
    ``min(n, merris_bound(g))`` instead of being computed.
    """
    n = g.n
    if n == 0:
        return BoundReport(0, 0, 0, 0.0, 0, 0, 0, 0.0, 0, 0.0, 0, None, None, 0.0,
                           "none", True, ())
    profile = degree_profile(g)
    if use_merris_cap:
        lam, source = min(float(n), merris_bound(g)), "merris"
    else:
        lam, source = lambda_max(g, rel_tol).lambda_max, "computed"
    irr = irregularity(g)
    raw = {
        "albertson": albertson_bound(n),
        "acd": acd_bound(n),
        "zhou_luo": zhou_luo_bound(profile, n),
        "laplacian_new": laplacian_bound(profile, n, lam),
    }
    if is_tree(g):
        raw["tree_pendant"] = tree_pendant_bound(profile.pendants)
    trunc = {k: trunc_even(v) for k, v in raw.items()}
    return BoundReport(
        n=n,
        m=g.m,
        irregularity=irr,
        albertson=raw["albertson"],
        albertson_trunc=trunc["albertson"],
        acd=raw["acd"],
        acd_trunc=trunc["acd"],
        zhou_luo=raw["zhou_luo"],
        zhou_luo_trunc=trunc["zhou_luo"],
        laplacian_new=raw["laplacian_new"],
        laplacian_new_trunc=trunc["laplacian_new"],
        tree_pendant=raw.get("tree_pendant"),
        tree_pendant_trunc=trunc.get("tree_pendant"),
        lambda_max_used=lam,
        lambda_source=source,
        empty_graph=False,
        tight=tuple(k for k, v in trunc.items() if v == irr),
    )
