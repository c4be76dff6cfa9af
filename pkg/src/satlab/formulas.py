"""Closed-form evaluators for saturation extremal values.

Everything here is exact integer or rational arithmetic.  The reference
construction throughout is the split graph: a clique of size s-2 joined
to an independent set (see ``graphs.make_split``).  Each formula has a
brute-force counterpart in ``counting`` and the two are cross-checked in
the test suite; none of these evaluators is ever the sole source of a
tested value.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, perm

from .errors import DomainError


def falling_factorial(x: int, k: int) -> int:
    """(x)_k = x (x-1) ... (x-k+1); equals 0 when k > x and 1 when k = 0."""
    if x < 0 or k < 0:
        raise DomainError("falling factorial needs nonnegative arguments")
    return perm(x, k)


def sat_edges_formula(n: int, s: int) -> int:
    """Minimum edge count of a K_s-saturated graph: (s-2)(n-s+2) + C(s-2,2).

    This is exactly the edge count of the split graph with clique part
    s-2, which attains the minimum for every n >= s >= 2.
    """
    if s < 2 or n < s:
        raise DomainError(f"need n >= s >= 2, got n={n}, s={s}")
    return (s - 2) * (n - s + 2) + comb(s - 2, 2)


def sat_cliques_formula(n: int, r: int, s: int) -> int:
    """Minimum K_r count of a K_s-saturated graph for large n.

    (n-s+2)·C(s-2, r-1) + C(s-2, r): the K_r count of the split graph,
    which is extremal once n passes an (unquantified) threshold.  With
    r = 2 this reduces to ``sat_edges_formula``.
    """
    if r < 2 or s <= r:
        raise DomainError(f"need s > r >= 2, got r={r}, s={s}")
    if n < s:
        raise DomainError(f"need n >= s, got n={n}, s={s}")
    return (n - s + 2) * comb(s - 2, r - 1) + comb(s - 2, r)


def matchings_in_split_exact(n: int, s: int, k: int) -> int:
    """Exact k-matching count of the split graph with clique part q = s-2.

    Stratify by the number j of matching edges inside the clique part:
    C(q,2j)·(2j-1)!! ways to pick those, then the remaining k-j edges each
    pair an independent-part vertex with an unused clique vertex, giving
    (q-2j)_(k-j) · C(n-q, k-j) choices.  Zero whenever k > q, since every
    edge meets the clique part.
    """
    if s < 3 or n < s:
        raise DomainError(f"need n >= s >= 3, got n={n}, s={s}")
    if k < 0:
        raise DomainError("matching size must be nonnegative")
    q = s - 2
    total = 0
    for j in range(min(k, q // 2) + 1):
        inside = factorial(q) // (factorial(j) * (1 << j) * factorial(q - 2 * j))
        total += inside * perm(q - 2 * j, k - j) * comb(n - q, k - j)
    return total


def matchings_in_split_leading(n: int, s: int, k: int) -> int:
    """Dominant term of the split-graph k-matching count.

    Counts only the matchings whose independent-part endpoints form a full
    k-set: C(n-s+2, k) · (s-2)_k.  Always a lower bound on the exact
    value, and asymptotically tight as n grows.
    """
    if not 2 <= k <= s - 2:
        raise DomainError(f"need 2 <= k <= s-2, got k={k}, s={s}")
    if n < s:
        raise DomainError(f"need n >= s, got n={n}, s={s}")
    return comb(n - s + 2, k) * perm(s - 2, k)


def m2_profile_quadratic(n: int, s: int, m: int) -> Fraction:
    """The raw profile quadratic (m^2 + (7-2n-2s)m + n(n-1)(s-2)) / 2."""
    return Fraction(m * m + (7 - 2 * n - 2 * s) * m + n * (n - 1) * (s - 2), 2)


def degree_profile_solution(n: int, s: int, m: int) -> tuple[Fraction, Fraction]:
    """Solve for (a, b): a vertices of degree s-2 and b of degree n-1.

    The system is a + b = n and a(s-2) + b(n-1) = 2m; solutions are
    a = (n^2 - n - 2m)/(n-s+1) and b = (2m + 2n - ns)/(n-s+1).
    """
    if s < 2 or n < s:
        raise DomainError(f"need n >= s >= 2, got n={n}, s={s}")
    denom = n - s + 1
    return Fraction(n * n - n - 2 * m, denom), Fraction(2 * m + 2 * n - n * s, denom)


def m2_profile_formula(n: int, s: int, m: int) -> int:
    """Two-edge-matching count of an m-edge graph whose degrees are all s-2 or n-1.

    Only defined when the degree profile is realizable, i.e. the solved
    vertex counts (a, b) are nonnegative integers; otherwise the quadratic
    has no combinatorial meaning and a DomainError reports the solved
    values.  The quadratic increases for m >= n+s-7/2, so over the edge
    range of saturated graphs its minimum sits at the split-graph edge
    count.
    """
    if m < 0:
        raise DomainError("edge count must be nonnegative")
    a, b = degree_profile_solution(n, s, m)
    if a.denominator != 1 or b.denominator != 1 or a < 0 or b < 0:
        raise DomainError(
            f"degree profile not realizable at n={n}, s={s}, m={m}: a={a}, b={b}"
        )
    value = m2_profile_quadratic(n, s, m)
    assert value.denominator == 1 and value >= 0
    return int(value)


def indep_lower_bound_exact(n: int, tau: int, l: int) -> Fraction:
    """The rational lower bound C(tau, l) * (n/tau)^l, with no rounding."""
    if n < 1 or tau < 1 or l < 1:
        raise DomainError("all parameters must be positive")
    if l > tau + 1:
        raise DomainError(f"need l <= tau+1, got l={l}, tau={tau}")
    return comb(tau, l) * Fraction(n, tau) ** l


def indep_lower_bound(n: int, tau: int, l: int) -> int:
    """Ceiling of ``indep_lower_bound_exact`` (counts are integers, so an
    integer count meets the rational bound iff it meets this ceiling)."""
    exact = indep_lower_bound_exact(n, tau, l)
    return -((-exact.numerator) // exact.denominator)
