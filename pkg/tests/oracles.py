"""Independent brute-force references for the test suite.

Everything here works from edge/vertex lists with itertools, deliberately
sharing no algorithmic machinery with the package: subset enumeration for
counts, definition-chasing for saturation, permutation search for
isomorphism.  Slow on purpose.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from satlab import Graph


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_graph_with_m_edges(n: int, m: int, seed: int) -> Graph:
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, rng.sample(pairs, m))


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, one per upper-triangle bitmask."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        )


def naive_count_matchings(g: Graph, k: int) -> int:
    """Literal enumeration of k-subsets of the edge list."""
    if k == 0:
        return 1
    edges = list(g.edges())
    count = 0
    for subset in combinations(edges, k):
        used = set()
        ok = True
        for u, v in subset:
            if u in used or v in used:
                ok = False
                break
            used.add(u)
            used.add(v)
        if ok:
            count += 1
    return count


def pruned_count_matchings(g: Graph, k: int) -> int:
    """Same subset enumeration, skipping supersets of any clashing pair."""
    if k == 0:
        return 1
    edges = list(g.edges())

    def extend(start: int, used: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for i in range(start, len(edges) - left + 1):
            u, v = edges[i]
            mask = (1 << u) | (1 << v)
            if used & mask:
                continue
            total += extend(i + 1, used | mask, left - 1)
        return total

    return extend(0, 0, k)


def edge_recursion_count_matchings(g: Graph, k: int, pivot: str = "first") -> int:
    """Deletion recursion: N_k(G) = N_k(G - e) + N_{k-1}(G - u - v)."""
    rng = random.Random(12345)

    def pick(edges: tuple) -> int:
        if pivot == "first":
            return 0
        if pivot == "last":
            return len(edges) - 1
        if pivot == "middle":
            return len(edges) // 2
        return rng.randrange(len(edges))

    def rec(edges: tuple, need: int) -> int:
        if need == 0:
            return 1
        if len(edges) < need:
            return 0
        i = pick(edges)
        u, v = edges[i]
        without = edges[:i] + edges[i + 1 :]
        shrunk = tuple(e for e in without if u not in e and v not in e)
        return rec(without, need) + rec(shrunk, need - 1)

    return rec(tuple(g.edges()), k)


def naive_count_cliques(g: Graph, r: int) -> int:
    return sum(
        1
        for vs in combinations(range(g.n), r)
        if all(g.has_edge(u, v) for u, v in combinations(vs, 2))
    )


def naive_count_indep_sets(g: Graph, l: int) -> int:
    return sum(
        1
        for vs in combinations(range(g.n), l)
        if not any(g.has_edge(u, v) for u, v in combinations(vs, 2))
    )


def naive_contains_clique(g: Graph, s: int) -> bool:
    return any(
        all(g.has_edge(u, v) for u, v in combinations(vs, 2))
        for vs in combinations(range(g.n), s)
    )


def naive_is_saturated(g: Graph, s: int) -> bool:
    """Definition chase: K_s-free and every added edge creates a K_s."""
    if naive_contains_clique(g, s):
        return False
    for u, v in g.non_edges():
        if not naive_contains_clique(g.with_edge(u, v), s):
            return False
    return True


def brute_certificate(g: Graph) -> tuple:
    """Lexicographically smallest adjacency table over all n! relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        table = tuple(
            1 if g.has_edge(perm[i], perm[j]) else 0
            for j in range(g.n)
            for i in range(j)
        )
        if best is None or table < best:
            best = table
    return best


def random_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm
