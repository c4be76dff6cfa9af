"""Clique-freeness and saturation checking.

A graph is K_s-saturated when it has no s-clique but gains one on the
addition of any missing edge; equivalently, it is maximal K_s-free.  The
per-non-edge test never materializes the augmented graph: adding uv
creates an s-clique exactly when the common neighborhood of u and v
already contains a clique of size s-2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graphs import Graph


def _has_clique(rows, cand: int, size: int) -> bool:
    """Does the candidate set contain a clique of the given size?"""
    if size <= 0:
        return True
    while cand:
        if cand.bit_count() < size:
            return False
        low = cand & -cand
        cand ^= low
        if _has_clique(rows, cand & rows[low.bit_length() - 1], size - 1):
            return True
    return False


def contains_clique(g: Graph, s: int) -> bool:
    """True when some s-subset of vertices induces a complete graph."""
    if s < 1:
        raise ParameterError("clique order must be at least 1")
    return _has_clique(g.rows, (1 << g.n) - 1, s)


def creates_clique_on_addition(g: Graph, u: int, v: int, s: int) -> bool:
    """Would adding the missing edge uv create an s-clique?"""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ParameterError(f"vertex pair ({u},{v}) outside 0..{g.n - 1}")
    if u == v:
        raise ParameterError("endpoints must be distinct")
    if g.has_edge(u, v):
        raise ParameterError(f"({u},{v}) is already an edge")
    if s < 2:
        raise ParameterError("clique order must be at least 2")
    common = g.rows[u] & g.rows[v]
    return _has_clique(g.rows, common, s - 2)


@dataclass(frozen=True)
class SaturationReport:
    """Outcome of a saturation check.

    ``missing_edge_failures`` lists the non-edges (lexicographically
    sorted) whose addition does not create an s-clique.  ``vacuous`` marks
    the degenerate regimes n < s (no room for an s-clique, so only the
    complete graph qualifies) and s = 2 (only the empty graph qualifies).
    """

    n: int
    s: int
    is_free: bool
    missing_edge_failures: tuple[tuple[int, int], ...]
    is_saturated: bool
    vacuous: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "is_free": self.is_free,
            "missing_edge_failures": [list(e) for e in self.missing_edge_failures],
            "is_saturated": self.is_saturated,
            "vacuous": self.vacuous,
        }


def check_saturation(g: Graph, s: int) -> SaturationReport:
    """Full saturation report for K_s."""
    if s < 2:
        raise ParameterError("clique order must be at least 2")
    is_free = not contains_clique(g, s)
    failures = tuple(
        (u, v) for u, v in g.non_edges() if not creates_clique_on_addition(g, u, v, s)
    )
    return SaturationReport(
        n=g.n,
        s=s,
        is_free=is_free,
        missing_edge_failures=failures,
        is_saturated=is_free and not failures,
        vacuous=g.n < s or s == 2,
    )
