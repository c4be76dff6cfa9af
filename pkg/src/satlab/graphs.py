"""Bitset-backed simple graphs and the graph6 interchange format.

Vertices are the integers 0..n-1.  Adjacency is one Python int per vertex:
bit ``v`` of ``rows[u]`` is set exactly when uv is an edge.  Graphs are
immutable after construction; every operation returns a new object, so
instances are safe to share across threads.

The graph6 codec is bit-exact per the published format: an N(n) size
header followed by the upper-triangle bits in column-major order
(x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), zero-padded to 6-bit groups,
each group offset by 63 into printable ASCII.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Graph6Error, ParameterError

MAX_VERTICES = 512


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not 0 <= self.n <= MAX_VERTICES:
            raise ParameterError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"adjacency row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ParameterError(f"loop at vertex {v}")
        for v, row in enumerate(self.rows):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                r ^= low
                if not (self.rows[u] >> v) & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ParameterError(f"loop edge at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- queries ----------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        r = self.rows[v]
        while r:
            low = r & -r
            yield low.bit_length() - 1
            r ^= low

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            r = self.rows[v] >> (v + 1)
            u = v + 1
            while r:
                if r & 1:
                    yield (v, u)
                r >>= 1
                u += 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Missing edges uv with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not (self.rows[u] >> v) & 1:
                    yield (u, v)

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ParameterError("cannot add a loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ r) & ~(1 << v) & full for v, r in enumerate(self.rows)))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabel so that old vertex v becomes perm[v]."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ParameterError("relabeling is not a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            nv = p[v]
            r = row
            while r:
                low = r & -r
                rows[nv] |= 1 << p[low.bit_length() - 1]
                r ^= low
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def make_split(n: int, q: int) -> Graph:
    """Split graph: a q-clique joined to an independent set of n-q vertices.

    Vertices 0..q-1 form the clique part and are adjacent to everything;
    vertices q..n-1 are pairwise non-adjacent.  The edge count is
    C(q,2) + q*(n-q).
    """
    if q < 0 or q > n:
        raise ParameterError(f"clique part size {q} outside 0..{n}")
    if n > MAX_VERTICES:
        raise ParameterError(f"vertex count {n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    clique_mask = (1 << q) - 1
    rows = [0] * n
    for v in range(q):
        rows[v] = full ^ (1 << v)
    for v in range(q, n):
        rows[v] = clique_mask
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between the two parts."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ParameterError(f"join would have {n} > {MAX_VERTICES} vertices")
    h_mask = ((1 << h.n) - 1) << g.n
    g_mask = (1 << g.n) - 1
    rows = [r | h_mask for r in g.rows]
    rows += [(r << g.n) | g_mask for r in h.rows]
    return Graph(n, tuple(rows))


# -- graph6 codec ----------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # 63 <= n <= 258047: marker byte then 18 bits in three 6-bit groups
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, header_length).  Rejects non-minimal encodings."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 sizes above 258047 are not supported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header", len(data))
        for i in (1, 2, 3):
            if not 63 <= data[i] <= 126:
                raise Graph6Error(f"size byte {data[i]} outside graph6 range", i)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise Graph6Error("non-minimal graph6 size header", 0)
        return n, 4
    if not 63 <= b0 <= 125:
        raise Graph6Error(f"invalid graph6 header byte {b0}", 0)
    return b0 - 63, 1


def to_graph6(g: Graph) -> bytes:
    """Encode to graph6 bytes (no trailing newline, no '>>graph6<<' header)."""
    out = bytearray(_encode_size(g.n))
    group = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            group = (group << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    """Decode graph6 bytes.  Raises Graph6Error with a byte offset on defects."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 input is not ASCII", None) from exc
    n, pos = _decode_size(data)
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph size {n} exceeds the {MAX_VERTICES}-vertex cap", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"payload length {len(data) - pos} bytes, expected {nbytes} for n={n}",
            len(data),
        )
    rows = [0] * n
    remaining = nbits
    u, v = 0, 1
    for offset in range(pos, len(data)):
        byte = data[offset]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"payload byte {byte} outside graph6 range", offset)
        group = byte - 63
        for k in range(5, -1, -1):
            bit = (group >> k) & 1
            if remaining == 0:
                if bit:
                    raise Graph6Error("nonzero padding bits", offset)
                continue
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            remaining -= 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, tuple(rows))
