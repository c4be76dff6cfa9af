"""Exhaustive extremal search over saturated graphs, plus random sampling.

Exhaustive mode enumerates every isomorphism class on n <= 8 vertices,
keeps the K_s-saturated ones, and scans a motif count over them.  The
scan is split into round-robin shards that are processed independently
and merged in certificate order, so the result is byte-identical for any
shard count.  Beyond the exhaustive cap, ``random_saturated`` samples
maximal K_s-free graphs by seeded greedy completion and
``probe_conjecture`` compares sampled minima against the split-graph
count.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .canonical import CanonicalCertificate, nonisomorphic_graphs
from .counting import MotifSpec, count_matchings, count_motif
from .errors import BudgetError, ParameterError
from .graphs import Graph, make_split, to_graph6
from .saturation import _has_clique, check_saturation

EXHAUSTIVE_CAP = 8


@dataclass(frozen=True)
class SearchBudget:
    """Limits for exhaustive search: size cap, shard count, optional seconds."""

    max_n: int = EXHAUSTIVE_CAP
    parallel_shards: int = 1
    time_limit: float | None = None

    def __post_init__(self):
        if not 1 <= self.max_n <= EXHAUSTIVE_CAP:
            raise ParameterError(f"exhaustive cap must be in 1..{EXHAUSTIVE_CAP}")
        if self.parallel_shards < 1:
            raise ParameterError("shard count must be positive")


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of one extremal scan over all saturated classes."""

    n: int
    s: int
    motif: MotifSpec
    mode: str
    optimum: int
    extremal: tuple[CanonicalCertificate, ...]
    unique: bool
    classes: int
    histogram: dict[int, int] = field(hash=False)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "motif": {"kind": self.motif.kind, "size": self.motif.size},
            "mode": self.mode,
            "optimum": str(self.optimum),
            "extremal": [str(c) for c in self.extremal],
            "unique": self.unique,
            "classes": self.classes,
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
        }


def enumerate_saturated(n: int, s: int, budget: SearchBudget | None = None) -> Iterator[Graph]:
    """One canonical representative per K_s-saturated class, certificate-sorted."""
    budget = budget or SearchBudget()
    if s < 3:
        raise ParameterError("clique order must be at least 3 for exhaustive search")
    if n < 1:
        raise ParameterError("vertex count must be positive")
    if n > budget.max_n:
        raise BudgetError(f"n={n} exceeds the exhaustive cap {budget.max_n}")
    for g in nonisomorphic_graphs(n):
        if check_saturation(g, s).is_saturated:
            yield g


def extremal_count(
    n: int,
    s: int,
    motif: MotifSpec,
    mode: str = "min",
    budget: SearchBudget | None = None,
) -> ExtremalResult:
    """Scan the motif count over every saturated class and report the optimum."""
    if mode not in ("min", "max"):
        raise ParameterError(f"mode must be 'min' or 'max', got {mode!r}")
    budget = budget or SearchBudget()
    reps = list(enumerate_saturated(n, s, budget))
    shards = [reps[i :: budget.parallel_shards] for i in range(budget.parallel_shards)]
    deadline = time.monotonic() + budget.time_limit if budget.time_limit else None
    scored: list[tuple[int, CanonicalCertificate]] = []
    for shard in shards:
        for g in shard:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetError(f"time limit of {budget.time_limit}s exceeded")
            # representatives come out of enumerate_saturated already canonical
            scored.append((count_motif(g, motif), CanonicalCertificate(to_graph6(g))))
    histogram = Counter(value for value, _ in scored)
    pick = min if mode == "min" else max
    optimum = pick(histogram)
    extremal = tuple(sorted(cert for value, cert in scored if value == optimum))
    return ExtremalResult(
        n=n,
        s=s,
        motif=motif,
        mode=mode,
        optimum=optimum,
        extremal=extremal,
        unique=len(extremal) == 1,
        classes=len(reps),
        histogram=dict(sorted(histogram.items())),
    )


def random_saturated(n: int, s: int, seed: int) -> Graph:
    """A maximal K_s-free (hence K_s-saturated) graph by greedy completion.

    Visits all vertex pairs in a seed-determined random order and inserts
    each edge unless its insertion would complete an s-clique, i.e. unless
    the current common neighborhood of the endpoints contains K_{s-2}.
    Deterministic for a given seed.
    """
    if n < 1:
        raise ParameterError("vertex count must be positive")
    if s < 3:
        raise ParameterError("clique order must be at least 3")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    random.Random(seed).shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        if not _has_clique(rows, rows[u] & rows[v], s - 2):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class ProbeRow:
    """One row of a conjecture probe: sampled minimum vs split-graph count."""

    n: int
    s: int
    k: int
    samples: int
    sampled_min: int
    split_count: int
    sampled_min_ge_split: bool


def probe_conjecture(
    n_range: Iterable[int], s: int, k: int, samples: int, seed: int
) -> list[ProbeRow]:
    """Sampled minima of the k-matching count over saturated graphs, per n.

    The split-graph column is computed with the generic matching counter,
    not the closed form, so the table doubles as a cross-check.  The
    sampled minimum is only an upper-bound estimate of the true minimum;
    whether it still reaches the split value is recorded, not asserted,
    since the equality is an asymptotic statement.
    """
    if k < 2:
        raise ParameterError("matching size must be at least 2")
    if s < 3:
        raise ParameterError("clique order must be at least 3")
    if samples < 1:
        raise ParameterError("need at least one sample")
    out = []
    for n in n_range:
        if n < s:
            raise ParameterError(f"need n >= s in the probe range, got n={n}")
        counts = []
        for i in range(samples):
            g = random_saturated(n, s, seed * 1_000_003 + n * 1_009 + i)
            counts.append(count_matchings(g, k))
        sampled_min = min(counts)
        assert sampled_min >= 0
        split_count = count_matchings(make_split(n, s - 2), k)
        out.append(
            ProbeRow(
                n=n,
                s=s,
                k=k,
                samples=samples,
                sampled_min=sampled_min,
                split_count=split_count,
                sampled_min_ge_split=sampled_min >= split_count,
            )
        )
    return out
