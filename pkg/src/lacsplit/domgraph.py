"""Labeled gcd graphs on vertices 0..k and exact domination.

Graphs are stored as tuples of adjacency bitmasks (bit j of row i set iff
{i, j} is an edge).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd

from .errors import BudgetExceeded, IsolatedVertex
from .fieldcore import FieldContext
from .lacunary import ExponentPattern, iter_patterns

MAX_EXACT_VERTICES = 24


@dataclass(frozen=True)
class PatternGraph:
    n: int
    adjacency: tuple[int, ...]
    label: object = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 2 or len(self.adjacency) != self.n:
            raise ValueError("a pattern graph needs n >= 2 adjacency rows")
        for i, row in enumerate(self.adjacency):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in range(self.n):
                if (row >> j & 1) != (self.adjacency[j] >> i & 1):
                    raise ValueError(f"asymmetric adjacency at {{{i}, {j}}}")

    @classmethod
    def from_edges(cls, n: int, edges, label=None) -> "PatternGraph":
        rows = [0] * n
        for i, j in edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows), label)

    @classmethod
    def from_encoding(cls, n: int, code: str) -> "PatternGraph":
        pairs = list(combinations(range(n), 2))
        return cls.from_edges(n, [pr for pr, b in zip(pairs, code) if b == "1"])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.n), 2) if self.has_edge(i, j)]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def closed_neighborhoods(self) -> list[int]:
        return [row | 1 << i for i, row in enumerate(self.adjacency)]

    def encoding(self) -> str:
        """Row-major upper-triangle bitstring, the canonical labeled key."""
        return "".join("1" if self.has_edge(i, j) else "0"
                       for i, j in combinations(range(self.n), 2))


@dataclass(frozen=True)
class DominatingSet:
    members: tuple[int, ...]
    is_minimum: bool
    padded_to: int | None = None


def build_pattern_graph(pattern: ExponentPattern, D: int) -> PatternGraph:
    ts, m = pattern.full, pattern.ctx.p - 1
    edges = [(i, j) for i, j in combinations(range(len(ts)), 2)
             if gcd(ts[j] - ts[i], m) >= D]
    return PatternGraph.from_edges(len(ts), edges, label=(pattern.exps, D))


def min_degree(G: PatternGraph) -> int:
    return min(G.degrees())


def dominates(G: PatternGraph, members) -> bool:
    full = (1 << G.n) - 1
    cover = 0
    nbhd = G.closed_neighborhoods()
    for v in members:
        cover |= nbhd[v]
    return cover == full


def min_dominating_set(G: PatternGraph) -> DominatingSet:
    """Lexicographically first dominating set of minimum size."""
    if G.n > MAX_EXACT_VERTICES:
        raise BudgetExceeded(f"exact domination capped at {MAX_EXACT_VERTICES} vertices")
    full = (1 << G.n) - 1
    nbhd = G.closed_neighborhoods()
    for size in range(1, G.n + 1):
        for subset in combinations(range(G.n), size):
            cover = 0
            for v in subset:
                cover |= nbhd[v]
            if cover == full:
                return DominatingSet(subset, is_minimum=True)
    raise AssertionError("the full vertex set always dominates")


def domination_number(G: PatternGraph) -> int:
    return len(min_dominating_set(G).members)


def ore_check(G: PatternGraph) -> bool:
    """gamma(G) <= floor(n/2) for a graph without isolated vertices."""
    if min_degree(G) == 0:
        raise IsolatedVertex("Ore's bound needs minimum degree >= 1")
    return domination_number(G) <= G.n // 2


def padded_dominating_set(G: PatternGraph) -> DominatingSet:
    """A dominating set of size exactly floor(n/2).

    Starts from the minimum set and adds the smallest absent vertices.
    """
    if min_degree(G) == 0:
        raise IsolatedVertex("padding relies on Ore's bound; graph has an isolated vertex")
    target = G.n // 2
    base = min_dominating_set(G)
    members = set(base.members)
    for v in range(G.n):
        if len(members) >= target:
            break
        members.add(v)
    return DominatingSet(tuple(sorted(members)), is_minimum=len(members) == len(base.members),
                         padded_to=target)


def classify_patterns(ctx: FieldContext, k: int, t: int, D: int,
                      budget: int = 10**7) -> dict[PatternGraph, int]:
    """Count patterns with t_k = t by their labeled graph at threshold D.

    Keys are ordered by canonical encoding.
    """
    total = comb(t - 1, k - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} patterns exceed the classification budget {budget}")
    counts: Counter = Counter()
    for pattern in iter_patterns(k, t, ctx):
        G = build_pattern_graph(pattern, D)
        counts[PatternGraph(G.n, G.adjacency, label=D)] += 1
    return dict(sorted(counts.items(), key=lambda kv: kv[0].encoding()))
