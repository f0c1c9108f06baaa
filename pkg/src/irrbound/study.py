"""Bound comparisons over graph families and over all free trees of a given size."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .bounds import (
    TRUNC_EPS,
    laplacian_bound,
    trunc_even,
    tree_pendant_bound,
    zhou_luo_bound,
)
from .errors import ParameterError
from .generators import path, yoke
from .graph import DegreeProfile, degree_profile, irregularity
from .spectral import DEFAULT_REL_TOL, lambda_max
from .trees import canonical_form, free_trees

CSV_COLUMNS = (
    "canonical_id", "n", "p", "I", "zl_raw", "new_raw", "new_trunc", "pendant_bound", "winner",
)
MERRIS_YOKE_CAP = 16 / 3


@dataclass(frozen=True)
class TreeRow:
    canonical_id: str
    n: int
    p: int
    I: int
    zl_raw: float
    new_raw: float
    new_trunc: int
    pendant_bound: int
    winner: str
    lambda_max: float
    edges: tuple[tuple[int, int], ...] = field(repr=False, default=())


@dataclass(frozen=True)
class StudyOutcome:
    n: int
    rows: tuple[TreeRow, ...]
    new_better: int
    equal: int
    tree_better: int
    rel_tol: float = DEFAULT_REL_TOL

    def summary_line(self) -> str:
        return f"new_better={self.new_better} equal={self.equal} tree_better={self.tree_better}"

    def summary(self) -> dict:
        return {
            "n": self.n,
            "trees": len(self.rows),
            "counts": {
                "new_better": self.new_better,
                "equal": self.equal,
                "tree_better": self.tree_better,
            },
            "parameters": {"rel_tol": self.rel_tol, "truncation_eps": TRUNC_EPS},
        }

    def to_csv(self) -> str:
        return rows_to_csv(self.rows)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v
                         for v in (getattr(r, c) for c in CSV_COLUMNS)])
    return buf.getvalue()


def _classify(new_trunc: int, pendant: int) -> str:
    if new_trunc < pendant:
        return "new"
    if new_trunc == pendant:
        return "equal"
    return "tree"


def tree_rows(n: int, rel_tol: float = DEFAULT_REL_TOL):
    """One :class:`TreeRow` per free tree on ``n`` vertices, in stream order."""
    for t in free_trees(n):
        prof = degree_profile(t)
        lam = lambda_max(t, rel_tol).lambda_max
        new = laplacian_bound(prof, n, lam)
        new_trunc = trunc_even(new)
        pendant = tree_pendant_bound(prof.pendants)
        yield TreeRow(
            canonical_id=".".join(map(str, canonical_form(t))),
            n=n,
            p=prof.pendants,
            I=irregularity(t),
            zl_raw=zhou_luo_bound(prof, n),
            new_raw=new,
            new_trunc=new_trunc,
            pendant_bound=pendant,
            winner=_classify(new_trunc, pendant),
            lambda_max=lam,
            edges=t.edges,
        )


def tree_bound_study(n: int, rel_tol: float = DEFAULT_REL_TOL) -> StudyOutcome:
    """Compare the even-truncated spectral bound with ``p(p-1)`` on every free tree."""
    rows = tuple(tree_rows(n, rel_tol))
    wins = [r.winner for r in rows]
    return StudyOutcome(
        n=n,
        rows=rows,
        new_better=wins.count("new"),
        equal=wins.count("equal"),
        tree_better=wins.count("tree"),
        rel_tol=rel_tol,
    )


T15_PENDANTS = 7
T15_IRREGULARITY = 22
T15_WINDOW = (27.855, 27.867)


def find_t15_candidates(n: int = 10, rel_tol: float = DEFAULT_REL_TOL) -> list[TreeRow]:
    """Free trees on ``n`` vertices matching the worked example.

    Matches have 7 pendant vertices, irregularity 22, and an untruncated
    spectral bound in ``T15_WINDOW`` (27.8614 rounded to four places).
    """
    lo, hi = T15_WINDOW
    return [
        r for r in tree_rows(n, rel_tol)
        if r.p == T15_PENDANTS and r.I == T15_IRREGULARITY and lo <= r.new_raw <= hi
    ]


@dataclass(frozen=True)
class AsymptoticRow:
    family: str
    n: int
    I: int
    zhou_luo: float
    laplacian_new: float
    lambda_used: float
    lambda_source: str
    zl_closed: float
    new_closed: float
    new_limit: float


def _yoke_sizes(n: int) -> tuple[int, int]:
    return n // 2, n - n // 2


def _path_lambda(n: int) -> float:
    return 2 * (1 + math.cos(math.pi / n))


def _closed_profile(family: str, n: int) -> DegreeProfile:
    if family == "yoke-balanced":
        m = n + 1
        degs = (3, 3) + (2,) * (n - 2)
    else:
        m = n - 1
        degs = (1, 1) + (2,) * (n - 2)
    return DegreeProfile(degs, m, sum(d * d for d in degs), degs.count(1), max(degs), n)


def family_asymptotics(
    family: str,
    n_values,
    closed_form_only: bool = False,
    rel_tol: float = DEFAULT_REL_TOL,
) -> list[AsymptoticRow]:
    """Irregularity and the two square-root bounds along the yoke or path family.

    ``family`` is ``"yoke-balanced"`` (two cycles of sizes ``n//2`` and
    ``n - n//2``) or ``"path"``. With ``closed_form_only`` no graph is built:
    degree data come from the family's closed forms and the spectral radius
    is the known value for paths or the 16/3 cap for yokes.
    """
    if family not in ("yoke-balanced", "path"):
        raise ParameterError(f"unknown family {family!r}")
    floor = 6 if family == "yoke-balanced" else 2
    rows = []
    for n in n_values:
        if n < floor:
            raise ParameterError(f"{family} needs n >= {floor}, got {n}")
        if family == "yoke-balanced":
            zl_closed = math.sqrt(2 * (n + 1) * (n - 2))
            new_closed = math.sqrt(32 / 3 * (n + 1) * (n - 2) / n)
            new_limit = new_closed
            closed_lam = MERRIS_YOKE_CAP
            closed_irr = 4
        else:
            zl_closed = math.sqrt(2 * (n - 1) * (n - 2))
            closed_lam = _path_lambda(n)
            new_closed = math.sqrt(2 * (n - 1) * (n - 2) * closed_lam / n)
            new_limit = math.sqrt(8 * (n - 1) * (n - 2) / n)
            closed_irr = 2 if n >= 3 else 0
        if closed_form_only:
            prof = _closed_profile(family, n)
            irr, lam = closed_irr, closed_lam
            source = "merris-cap" if family == "yoke-balanced" else "closed-form"
        else:
            g = yoke(*_yoke_sizes(n)) if family == "yoke-balanced" else path(n)
            prof = degree_profile(g)
            irr = irregularity(g)
            lam = lambda_max(g, rel_tol).lambda_max
            source = "computed"
        rows.append(AsymptoticRow(
            family=family,
            n=n,
            I=irr,
            zhou_luo=zhou_luo_bound(prof, n),
            laplacian_new=laplacian_bound(prof, n, lam),
            lambda_used=lam,
            lambda_source=source,
            zl_closed=zl_closed,
            new_closed=new_closed,
            new_limit=new_limit,
        ))
    return rows
