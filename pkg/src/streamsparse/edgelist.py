"""Plain-text edge lists.

Format::

    n <count>
    u v [w]
    ...

``#`` starts a comment and blank lines are ignored.  ``w`` defaults to 1
and may be an integer, a decimal or a ``p/q`` rational.  Line order is
arrival order when the file is read as a stream.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, TextIO

from .graph import DomainError, Graph

log = logging.getLogger(__name__)


def parse_weight(text: str) -> Fraction:
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad weight {text!r}") from None
    if w <= 0:
        raise DomainError(f"weight must be positive, got {text!r}")
    return w


def format_weight(w) -> str:
    if isinstance(w, Fraction):
        return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"
    return repr(float(w))


def read_edge_list(lines: str | Iterable[str]) -> tuple[int, list[tuple[int, int, Fraction]]]:
    """Parse text into ``(n, [(u, v, w), ...])`` without dropping anything.

    Self-loops are returned as-is; callers decide what to do with them.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    n = None
    entries = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise DomainError(f"line {lineno}: expected header 'n <count>', got {raw.strip()!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise DomainError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise DomainError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) not in (2, 3):
            raise DomainError(f"line {lineno}: expected 'u v [w]', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError(f"line {lineno}: vertices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"line {lineno}: vertex out of range 0..{n - 1}")
        w = parse_weight(parts[2]) if len(parts) == 3 else Fraction(1)
        entries.append((u, v, w))
    if n is None:
        raise DomainError("missing 'n <count>' header")
    return n, entries


def build_graph(n: int, entries, exact: bool = True) -> tuple[Graph, int]:
    """Graph from parsed entries; returns it with the number of self-loops skipped.

    Edge ids are entry positions, so a skipped self-loop leaves a gap.
    """
    g = Graph(n, exact=exact)
    loops = 0
    for i, (u, v, w) in enumerate(entries):
        if u == v:
            loops += 1
            continue
        g.add_edge(u, v, w, i)
    if loops:
        log.warning("skipped %d self-loop(s)", loops)
    return g, loops


def load_graph(source: str | TextIO, exact: bool = True) -> Graph:
    text = source if isinstance(source, str) else source.read()
    g, _ = build_graph(*read_edge_list(text), exact=exact)
    return g


def format_edge_list(g: Graph, weights: bool | None = None) -> str:
    """Render ``g``.  Weights are written unless every weight is 1 (or ``weights`` says otherwise)."""
    if weights is None:
        weights = any(e.w != 1 for e in g.edges)
    out = [f"n {g.n}"]
    for e in g.edges:
        out.append(f"{e.u} {e.v} {format_weight(e.w)}" if weights else f"{e.u} {e.v}")
    return "\n".join(out) + "\n"


def format_stream(n: int, stream) -> str:
    return "\n".join([f"n {n}"] + [f"{u} {v}" for u, v in stream]) + "\n"
