"""Plain-text edge-list format.

::

    # optional comments
    n m
    u v
    ...

The header is the first non-comment, non-blank line. Exactly ``m`` edge lines
must follow. Endpoints are 0-based.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .errors import ParseError
from .graph import Graph, build_graph


def _parse_ints(text: str, lineno: int, expected: int) -> list[int]:
    parts = text.split()
    if len(parts) != expected:
        raise ParseError(f"expected {expected} integers, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {text.strip()!r}", lineno) from None


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse edge-list text into a validated :class:`Graph`.

    Syntax problems raise :class:`ParseError` carrying the 1-based line
    number; semantic problems (self-loops, repeated edges, endpoints out of
    range) surface as the usual graph validation errors.
    """
    header = None
    edges: list[tuple[int, int]] = []
    last = 0
    for lineno, raw in enumerate(lines, start=1):
        last = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, m = _parse_ints(line, lineno, 2)
            if n < 0 or m < 0:
                raise ParseError("negative header value", lineno)
            header = (n, m)
            continue
        if len(edges) == header[1]:
            raise ParseError(f"more edge lines than declared m={header[1]}", lineno)
        u, v = _parse_ints(line, lineno, 2)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n m' header", last or 1)
    if len(edges) != header[1]:
        raise ParseError(f"declared m={header[1]} but found {len(edges)} edge lines", last)
    return build_graph(header[0], edges)


def read_edge_list(fh: TextIO) -> Graph:
    return parse_edge_list(fh)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
