"""Canonical labelings, isomorphism testing, and isomorph-free enumeration.

The canonical form is computed by iterated neighborhood refinement: start
from the unit partition, split cells by adjacency counts into every cell
until the partition is equitable, then backtrack over the vertices of the
first non-singleton cell.  Among all discrete partitions reached, the one
whose adjacency upper triangle (column-major, as in graph6) is
lexicographically smallest defines the canonical labeling.  Two prunings
keep the tree small: branches whose fixed prefix already compares greater
than the incumbent are cut, and branch targets equivalent to an
already-explored target under the automorphisms discovered so far are
skipped.  Automorphisms fall out of pairs of leaves with equal encodings.

Certificates are the graph6 bytes of the canonical form, so they decode
back to a concrete representative and sort in a stable, platform-free way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError
from .graphs import Graph, from_graph6, to_graph6


@dataclass(frozen=True, order=True)
class CanonicalCertificate:
    """Bit-exact encoding of an isomorphism class (canonical graph6 bytes)."""

    data: bytes

    def __str__(self) -> str:
        return self.data.decode("ascii")


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine to an equitable ordered partition.

    Cells are repeatedly split by the vector of adjacency counts into every
    current cell; sub-cells are ordered by their count vectors, which keeps
    the resulting cell order invariant under relabeling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                key = tuple((row & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        if not changed:
            return new_cells
        cells = new_cells


def _triangle_key(rows: tuple[int, ...], lab: list[int]) -> int:
    """Upper-triangle bits of the relabeled graph packed into one int.

    Column-major order, matching the graph6 payload, so smaller key means
    lexicographically smaller encoding.
    """
    key = 0
    for j in range(1, len(lab)):
        col = rows[lab[j]]
        for i in range(j):
            key = (key << 1) | ((col >> lab[i]) & 1)
    return key


class _CanonicalSearch:
    def __init__(self, rows: tuple[int, ...], n: int):
        self.rows = rows
        self.n = n
        self.best_key: int | None = None
        self.best_lab: list[int] | None = None
        self.best_prefix: dict[int, int] = {}
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> tuple[list[int], list[tuple[int, ...]]]:
        if self.n == 0:
            return [], []
        self._descend([list(range(self.n))], [])
        assert self.best_lab is not None
        return self.best_lab, self.generators

    def _prefix_key(self, t: int) -> int:
        key = self.best_prefix.get(t)
        if key is None:
            key = _triangle_key(self.rows, self.best_lab[:t])
            self.best_prefix[t] = key
        return key

    def _descend(self, cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(self.rows, cells)
        branch_at = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                branch_at = i
                break
        if branch_at is None:
            lab = [cell[0] for cell in cells]
            key = _triangle_key(self.rows, lab)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_lab = lab
                self.best_prefix = {}
            elif key == self.best_key:
                perm = [0] * self.n
                for u, w in zip(self.best_lab, lab):
                    perm[u] = w
                self.generators.append(tuple(perm))
            return
        if self.best_key is not None:
            # all leaves below share the labels of the leading singletons
            t = branch_at
            partial = _triangle_key(self.rows, [cells[i][0] for i in range(t)])
            if partial > self._prefix_key(t):
                return
        cell = cells[branch_at]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and self._in_explored_orbit(v, tried, fixed):
                continue
            tried.append(v)
            child = (
                cells[:branch_at]
                + [[v], [w for w in cell if w != v]]
                + cells[branch_at + 1 :]
            )
            self._descend(child, fixed + [v])

    def _in_explored_orbit(self, v: int, tried: list[int], fixed: list[int]) -> bool:
        """Is v equivalent to an explored target under automorphisms fixing the path?"""
        useful = [g for g in self.generators if all(g[x] == x for x in fixed)]
        if not useful:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in useful:
            for a, b in enumerate(g):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(u) == rv for u in tried)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Canonical labeling as a tuple lab[position] = original vertex."""
    lab, _ = _CanonicalSearch(g.rows, g.n).run()
    return tuple(lab)


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of g (identical for isomorphic inputs)."""
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(lab):
        perm[v] = pos
    return g.relabel(perm)


def canonical_certificate(g: Graph) -> CanonicalCertificate:
    """Permutation-invariant certificate; equal certificates mean isomorphic."""
    return CanonicalCertificate(to_graph6(canonical_form(g)))


def certificate_graph(cert: CanonicalCertificate) -> Graph:
    """Decode a certificate back to its canonical representative."""
    return from_graph6(cert.data)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_certificate(g) == canonical_certificate(h)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group, as discovered by the search."""
    _, gens = _CanonicalSearch(g.rows, g.n).run()
    return gens


def automorphism_group_order(g: Graph) -> int:
    """Order of the automorphism group (closure of the discovered generators)."""
    gens = automorphism_generators(g)
    identity = tuple(range(g.n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for gen in gens:
            q = tuple(gen[x] for x in p)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen)


def _mask_orbit_reps(num_bits: int, gens: list[tuple[int, ...]]) -> list[int]:
    """One representative neighborhood mask per orbit of the generated group."""
    total = 1 << num_bits
    if not gens:
        return list(range(total))
    seen = bytearray(total)
    reps = []
    for mask in range(total):
        if seen[mask]:
            continue
        reps.append(mask)
        stack = [mask]
        seen[mask] = 1
        while stack:
            m = stack.pop()
            for g in gens:
                im = 0
                r = m
                while r:
                    low = r & -r
                    im |= 1 << g[low.bit_length() - 1]
                    r ^= low
                if not seen[im]:
                    seen[im] = 1
                    stack.append(im)
    return reps


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, in certificate order.

    Built by extending each (n-1)-vertex class with a new vertex attached to
    one representative neighborhood per automorphism orbit, then
    deduplicating by certificate.  Every returned graph is in canonical form.
    Feasible up to n = 10 or so; the counts 1, 1, 2, 4, 11, 34, 156, 1044,
    12346 for n = 0..8 make a handy self-check.
    """
    if n < 0:
        raise ParameterError("vertex count must be nonnegative")
    if n == 0:
        return (Graph.empty(0),)
    reps: dict[CanonicalCertificate, Graph] = {}
    for parent in nonisomorphic_graphs(n - 1):
        gens = automorphism_generators(parent)
        for mask in _mask_orbit_reps(n - 1, gens):
            rows = [r | ((mask >> v & 1) << (n - 1)) for v, r in enumerate(parent.rows)]
            rows.append(mask)
            child = canonical_form(Graph(n, tuple(rows)))
            reps.setdefault(CanonicalCertificate(to_graph6(child)), child)
    return tuple(reps[c] for c in sorted(reps))
