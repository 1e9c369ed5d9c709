"""Exact computation of N_k(p, t) and the M_p(D, G, t) classification.

Coefficient search fixes a_0 = 1 (global scaling preserves the roots) and
skips coefficient vectors that are not the lexicographic minimum of their
orbit under X -> cX, which maps a_i to a_i c^t_i and preserves both the
support and splitting.  The first canonical split vector found in
lexicographic order is therefore the lexicographically first split vector
overall.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .domgraph import (
    classify_patterns,
    min_degree,
    padded_dominating_set,
)
from .errors import BudgetExceeded, InvariantViolation
from .fieldcore import FieldContext, make_context
from .lacunary import ExponentPattern, LacunaryPoly, count_roots_brute, iter_patterns
from .polyarith import splits_lists
from .zerostats import compute_D

PATTERN_BUDGET = 10**8
CENSUS_BUDGET = 10**9


@dataclass(frozen=True)
class PatternEntry:
    pattern: tuple[int, ...]
    splittable: bool
    D: int
    witness: tuple[int, ...] | None = None
    Q_witness: int | None = None


@dataclass(frozen=True)
class TheoremBound:
    leading: float
    trivial_bound: int
    nontrivial: bool
    simplified_exponent: int
    simplified_value: float


@dataclass
class CensusRecord:
    p: int
    k: int
    t: int
    N: int
    per_pattern: list[PatternEntry]
    bound_leading: float
    nontrivial: bool
    strict: bool = True

    @property
    def witnesses(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return {e.pattern: e.witness for e in self.per_pattern if e.splittable}

    @property
    def trivial_bound(self) -> int:
        return math.comb(self.t - 1, self.k - 1)


def ceil_half(n: int) -> int:
    """ceil(n / 2) for any integer n."""
    return -((-n) // 2)


def coefficient_space(p: int, k: int, strict: bool = True) -> int:
    return (p - 1) ** k if strict else p ** (k - 1) * (p - 1)


def _orbit_powers(exps, p: int) -> list[tuple[int, ...]]:
    return [tuple(pow(c, e, p) for e in exps) for c in range(2, p)]


def _search(exps, p: int, strict: bool, find_all: bool = False):
    """Depth-first search over canonical vectors (a_1..a_k), a_0 = 1."""
    k = len(exps)
    t = exps[-1]
    powers = _orbit_powers(exps, p)
    dense = [0] * (t + 1)
    dense[0] = 1
    vec = [0] * k
    found = []

    def rec(d: int, stab: list[tuple[int, ...]]) -> bool:
        lo = 1 if (strict or d == k - 1) else 0
        e = exps[d]
        for a in range(lo, p):
            keep = []
            for pw in stab:
                b = a * pw[d] % p
                if b < a:
                    break
                if b == a:
                    keep.append(pw)
            else:
                vec[d] = a
                dense[e] = a
                if d == k - 1:
                    if splits_lists(dense, p):
                        found.append((1, *vec))
                        if not find_all:
                            return True
                elif rec(d + 1, keep):
                    return True
        dense[e] = 0
        return False

    rec(0, powers)
    return found


def pattern_splittable(pattern: ExponentPattern, strict: bool = True,
                       budget: int = PATTERN_BUDGET) -> tuple[bool, tuple[int, ...] | None]:
    """Whether some coefficient vector with this pattern splits over F_p.

    Returns the lexicographically first witness (a_0 = 1, ..., a_k).
    """
    p, k = pattern.ctx.p, pattern.k
    space = coefficient_space(p, k, strict)
    if space > budget:
        raise BudgetExceeded(f"coefficient space {space} exceeds budget {budget}")
    found = _search(pattern.exps, p, strict)
    return (True, found[0]) if found else (False, None)


def split_witnesses(pattern: ExponentPattern, strict: bool = True,
                    budget: int = PATTERN_BUDGET) -> list[tuple[int, ...]]:
    """All canonical split vectors of a pattern (debug mode)."""
    space = coefficient_space(pattern.ctx.p, pattern.k, strict)
    if space > budget:
        raise BudgetExceeded(f"coefficient space {space} exceeds budget {budget}")
    return _search(pattern.exps, pattern.ctx.p, strict, find_all=True)


def _entry(pattern: ExponentPattern, strict: bool, budget: int) -> PatternEntry:
    ok, w = pattern_splittable(pattern, strict, budget)
    D = compute_D(pattern)
    if not ok:
        return PatternEntry(pattern.exps, False, D)
    q = count_roots_brute(LacunaryPoly(pattern, w, strict=strict)).Q
    return PatternEntry(pattern.exps, True, D, w, q)


def _census_block(args) -> list[PatternEntry]:
    p, k, t, first, strict, budget = args
    ctx = make_context(p)
    return [_entry(pat, strict, budget) for pat in iter_patterns(k, t, ctx, first=first)]


def theorem_bound(p: int, k: int, t: int) -> TheoremBound:
    """Leading term of the N_k(p, t) upper bound, without the p^o(1) factor."""
    c = ceil_half(k - 3)
    leading = Fraction(t) ** (k - k * c - 1) * Fraction(p) ** ((k - 1) * c)
    simplified = ceil_half(k) + 1
    return TheoremBound(
        leading=float(leading),
        trivial_bound=math.comb(t - 1, k - 1),
        nontrivial=k > 3 and t > p ** (1 - 1 / k),
        simplified_exponent=simplified,
        simplified_value=float(t) ** simplified,
    )


def count_Nk(ctx: FieldContext, k: int, t: int, strict: bool = True, jobs: int = 1,
             pattern_budget: int = PATTERN_BUDGET,
             budget: int = CENSUS_BUDGET) -> CensusRecord:
    """Exact N_k(p, t) with one record per pattern having t_k = t.

    Work is split into blocks by t_1; the result does not depend on ``jobs``.
    """
    p = ctx.p
    if not (k >= 1 and 1 <= t < p):
        raise ValueError(f"need k >= 1 and 1 <= t < p, got k={k}, t={t}, p={p}")
    npat = math.comb(t - 1, k - 1)
    space = coefficient_space(p, k, strict)
    if space > pattern_budget:
        raise BudgetExceeded(f"coefficient space {space} exceeds budget {pattern_budget}")
    if npat * space > budget:
        raise BudgetExceeded(f"{npat} patterns x {space} vectors exceed budget {budget}")
    firsts = [t] if k == 1 else list(range(1, max(t - k + 2, 1)))
    blocks = [(p, k, t, f, strict, pattern_budget) for f in firsts]
    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_block, blocks))
    else:
        parts = [_census_block(b) for b in blocks]
    entries = [e for part in parts for e in part]
    bound = theorem_bound(p, k, t)
    return CensusRecord(p=p, k=k, t=t, N=sum(e.splittable for e in entries),
                        per_pattern=entries, bound_leading=bound.leading,
                        nontrivial=bound.nontrivial, strict=strict)


def _mul_linear(poly: list[int], r: int, p: int) -> list[int]:
    # poly * (X - r), low degree first
    out = [(-r * poly[0]) % p]
    for i in range(1, len(poly)):
        out.append((poly[i - 1] - r * poly[i]) % p)
    out.append(poly[-1])
    return out


@lru_cache(maxsize=16)
def rootside_supports(p: int, depth: int) -> tuple[frozenset, ...]:
    """Supports (as exponent bitmasks) of all monic products of d roots in F_p^*.

    Entry d of the result holds the distinct supports for multisets of
    size d, for d = 0..depth.
    """
    seen = [set() for _ in range(depth + 1)]

    def rec(poly: list[int], start: int, d: int) -> None:
        mask = 0
        for i, c in enumerate(poly):
            if c:
                mask |= 1 << i
        seen[d].add(mask)
        if d == depth:
            return
        for r in range(start, p):
            rec(_mul_linear(poly, r, p), r, d + 1)

    rec([1], 1, 0)
    return tuple(frozenset(s) for s in seen)


def count_Nk_rootside(ctx: FieldContext, k: int, t: int, strict: bool = True,
                      budget: int = CENSUS_BUDGET) -> int:
    """Independent count of N_k(p, t) from root multisets.

    Expands every product of t linear factors X - r with r in F_p^* and
    collects the exponent supports that occur.
    """
    p = ctx.p
    size = math.comb(p - 2 + t, t)
    if size > budget:
        raise BudgetExceeded(f"{size} root multisets exceed budget {budget}")
    supports = rootside_supports(p, t)[t]
    if strict:
        return sum(1 for m in supports if m.bit_count() == k + 1)
    # Relaxed: a pattern is witnessed by any support inside {0} U pattern.
    small = [m for m in supports if m.bit_count() <= k + 1]
    n = 0
    for pat in iter_patterns(k, t, ctx):
        allowed = 1 | sum(1 << e for e in pat.exps)
        if any(m & ~allowed == 0 for m in small):
            n += 1
    return n


@dataclass(frozen=True)
class MpRecord:
    graph: str
    M: int
    min_degree: int
    excluded: str | None = None
    dominating_set: tuple[int, ...] = ()
    case: str | None = None
    eq5: float | None = None
    eq6: float | None = None
    eq7: float | None = None
    case_bound: float | None = None
    slack: float | None = None


def mp_case_bounds(k: int, t: int, D: int) -> tuple[Fraction, Fraction, Fraction]:
    """Leading terms for S containing both of 0 and k, exactly one, or neither."""
    r = Fraction(t, D)
    ft = Fraction(t)
    both = ft ** ((k - 3) // 2) * r ** ceil_half(k + 1)
    one = ft ** ((k - 1) // 2) * r ** ceil_half(k - 1)
    neither = ft ** ((k + 1) // 2) * r ** ceil_half(k - 3)
    return both, one, neither


def mp_bound_report(ctx: FieldContext, k: int, t: int, D: int,
                    budget: int = 10**7) -> list[MpRecord]:
    both, one, neither = mp_case_bounds(k, t, D)
    if t >= D and not (neither >= both and neither >= one):
        raise InvariantViolation(f"case bound ordering fails at k={k}, t={t}, D={D}")
    out = []
    for G, M in classify_patterns(ctx, k, t, D, budget=budget).items():
        delta = min_degree(G)
        if delta == 0:
            out.append(MpRecord(G.encoding(), M, 0, excluded="isolated-vertex"))
            continue
        S = padded_dominating_set(G).members
        hits = (0 in S) + (k in S)
        case, value = {2: ("both", both), 1: ("one", one), 0: ("neither", neither)}[hits]
        out.append(MpRecord(G.encoding(), M, delta, dominating_set=S, case=case,
                            eq5=float(both), eq6=float(one), eq7=float(neither),
                            case_bound=float(value), slack=M / float(value)))
    return out
