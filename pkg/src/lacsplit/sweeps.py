"""Exhaustive verification suites for the lemmas and the census.

Each suite returns a ``SweepResult`` with the number of cases examined and
the violations found; nothing is raised, so callers decide how to report.
The coefficient sweeps evaluate whole coefficient grids at once with numpy;
multiplicities are still obtained by repeated synthetic division.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from . import census
from .domgraph import build_pattern_graph, min_degree
from .fieldcore import FieldContext, is_prime, make_context
from .lacunary import (
    ExponentPattern,
    LacunaryPoly,
    count_roots_brute,
    determinant_identity_check,
    fully_splits,
    iter_patterns,
)
from .zerostats import compute_D, dt_floor_check, zero_bound_report


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepResult") -> "SweepResult":
        self.cases += other.cases
        self.violations.extend(other.violations)
        for key, v in other.stats.items():
            if key.startswith("max_"):
                self.stats[key] = max(self.stats.get(key, v), v)
            else:
                self.stats[key] = self.stats.get(key, 0) + v
        return self


def primes_up_to(n: int, start: int = 3) -> list[int]:
    return [q for q in range(start, n + 1) if is_prime(q)]


def all_patterns(ctx: FieldContext, k: int):
    """Every pattern of size k with t_k < p."""
    for t in range(k, ctx.p):
        yield from iter_patterns(k, t, ctx)


def coefficient_grid(p: int, k: int) -> np.ndarray:
    """All (a_1..a_k) in (F_p^*)^k as rows, lexicographic."""
    axes = np.arange(1, p, dtype=np.int64)
    mesh = np.meshgrid(*([axes] * k), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def batch_multiplicity(dense: np.ndarray, roots: np.ndarray, p: int, cap: int) -> np.ndarray:
    """Multiplicity of roots[i] in the polynomial dense[i], capped at ``cap``.

    Rows of ``dense`` are coefficient vectors, low degree first.
    """
    cur = dense.copy()
    mult = np.zeros(len(roots), dtype=np.int64)
    alive = np.ones(len(roots), dtype=bool)
    r = roots.astype(np.int64)[:, None]
    for _ in range(cap):
        n = cur.shape[1]
        if n < 2:
            break
        q = np.zeros((cur.shape[0], n - 1), dtype=np.int64)
        acc = cur[:, -1].copy()
        for i in range(n - 2, -1, -1):
            q[:, i] = acc
            acc = (acc * r[:, 0] + cur[:, i]) % p
        divides = alive & (acc == 0)
        mult += divides
        alive = divides
        if not alive.any():
            break
        cur = q
    return mult


def _pattern_roots(pattern: ExponentPattern, grid: np.ndarray):
    p = pattern.ctx.p
    xs = np.arange(1, p, dtype=np.int64)
    powers = np.array([[pow(int(x), e, p) for x in xs] for e in pattern.exps], dtype=np.int64)
    values = (1 + grid @ powers) % p
    rows, cols = np.nonzero(values == 0)
    dense = np.zeros((len(grid), pattern.t + 1), dtype=np.int64)
    dense[:, 0] = 1
    for i, e in enumerate(pattern.exps):
        dense[:, e] = grid[:, i]
    return rows, xs[cols], dense


def multiplicity_sweep(primes=(5, 7, 11, 13), kmax: int = 3) -> SweepResult:
    """Every root of every normalized pattern polynomial has multiplicity <= k."""
    res = SweepResult("multiplicity", stats={"roots": 0, "max_multiplicity": 0})
    for p in primes:
        ctx = make_context(p)
        for k in range(1, min(kmax, p - 1) + 1):
            grid = coefficient_grid(p, k)
            for pattern in all_patterns(ctx, k):
                rows, roots, dense = _pattern_roots(pattern, grid)
                res.cases += len(grid)
                if not len(rows):
                    continue
                mult = batch_multiplicity(dense[rows], roots, p, cap=k + 1)
                res.stats["roots"] += len(rows)
                res.stats["max_multiplicity"] = max(res.stats["max_multiplicity"], int(mult.max()))
                for i in np.nonzero(mult > k)[0]:
                    coeffs = (1, *map(int, grid[rows[i]]))
                    res.violations.append((p, pattern.exps, coeffs, int(roots[i]), int(mult[i])))
    return res


def determinant_sweep(tmax: int = 12, kmax: int = 4) -> SweepResult:
    """det of the falling-factorial matrix equals the Vandermonde product."""
    res = SweepResult("determinant")
    ctx = make_context(next(q for q in range(tmax + 1, 2 * tmax + 4) if is_prime(q)))
    for k in range(1, kmax + 1):
        for exps in combinations(range(1, tmax + 1), k):
            res.cases += 1
            det, prod_, equal = determinant_identity_check(ExponentPattern(exps, ctx))
            if not equal:
                res.violations.append((exps, det, prod_))
    return res


def _closed_nbhds(n: int) -> np.ndarray:
    """Closed neighbourhood masks of every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    nb = np.zeros((n, len(codes)), dtype=np.int64)
    for v in range(n):
        nb[v] = 1 << v
    for e, (i, j) in enumerate(pairs):
        bit = (codes >> e) & 1
        nb[i] |= bit << j
        nb[j] |= bit << i
    return nb


def ore_sweep(nmin: int = 2, nmax: int = 7) -> SweepResult:
    """gamma(G) <= n/2 over all labeled graphs without isolated vertices."""
    res = SweepResult("ore", stats={"graphs": 0})
    for n in range(nmin, nmax + 1):
        nb = _closed_nbhds(n)
        solo = np.array([1 << v for v in range(n)], dtype=np.int64)[:, None]
        keep = np.all(nb != solo, axis=0)
        nb = nb[:, keep]
        full = (1 << n) - 1
        gamma = np.zeros(nb.shape[1], dtype=np.int64)
        for size in range(1, n // 2 + 1):
            for subset in combinations(range(n), size):
                cover = np.bitwise_or.reduce(nb[list(subset)], axis=0)
                gamma[(gamma == 0) & (cover == full)] = size
        res.cases += nb.shape[1]
        res.stats["graphs"] += 1 << (n * (n - 1) // 2)
        res.stats[f"gamma_hist_n{n}"] = np.bincount(gamma).tolist()
        bad = np.nonzero(gamma == 0)[0]
        res.violations.extend((n, int(b)) for b in bad)
    return res


def delta_claim_sweep(primes=(7, 11, 13), kmax: int = 3) -> SweepResult:
    """The graph at threshold D = compute_D(pattern) has no isolated vertex."""
    res = SweepResult("delta_claim")
    for p in primes:
        ctx = make_context(p)
        for k in range(1, min(kmax, p - 1) + 1):
            for pattern in all_patterns(ctx, k):
                res.cases += 1
                D = compute_D(pattern)
                if (ctx.p - 1) % D:
                    res.violations.append((p, pattern.exps, "D does not divide p-1"))
                if min_degree(build_pattern_graph(pattern, D)) < 1:
                    res.violations.append((p, pattern.exps, D))
    return res


def split_equivalence_sweep(primes=(3, 5, 7, 11, 13), kmax: int = 3, random_cases: int = 10_000,
                            random_pmax: int = 101, random_kmax: int = 4,
                            seed: int = 20260101) -> SweepResult:
    """fully_splits against the multiplicity-sum oracle.

    Exhaustive part: every normalized pattern polynomial at the given primes.
    Random part: uniformly drawn prime, pattern and nonzero coefficients.
    """
    res = SweepResult("split_equivalence", stats={"split": 0})
    for p in primes:
        ctx = make_context(p)
        for k in range(1, min(kmax, p - 1) + 1):
            grid = coefficient_grid(p, k)
            for pattern in all_patterns(ctx, k):
                rows, roots, dense = _pattern_roots(pattern, grid)
                mult = batch_multiplicity(dense[rows], roots, p, cap=pattern.t)
                total = np.bincount(rows, weights=mult, minlength=len(grid))
                oracle = total == pattern.t
                for i, coeffs in enumerate(grid):
                    f = LacunaryPoly(pattern, (1, *map(int, coeffs)))
                    got = fully_splits(f)
                    res.cases += 1
                    res.stats["split"] += got
                    if got != bool(oracle[i]):
                        res.violations.append((p, pattern.exps, f.coeffs, got))
    rng = random.Random(seed)
    pool = primes_up_to(random_pmax)
    for _ in range(random_cases):
        p = rng.choice(pool)
        ctx = make_context(p)
        k = rng.randint(1, min(random_kmax, p - 1))
        exps = tuple(sorted(rng.sample(range(1, p), k)))
        f = LacunaryPoly(ExponentPattern(exps, ctx), [rng.randrange(1, p) for _ in range(k + 1)])
        rec = count_roots_brute(f)
        oracle = rec.total_with_multiplicity == f.degree
        got = fully_splits(f)
        res.cases += 1
        res.stats["split"] += got
        if got != oracle:
            res.violations.append((p, exps, f.coeffs, got))
    return res


@dataclass
class CensusSweep:
    """Oracle equivalence plus the witness-level checks over one sweep."""

    equivalence: SweepResult
    root_floor: SweepResult
    witnesses: SweepResult
    diagnostics: list[dict]
    cells: list[tuple[int, int, int, int]]


def census_sweep(primes=(5, 7, 11, 13), kmax: int = 3, orbit_samples: int = 3,
                 seed: int = 7) -> CensusSweep:
    """count_Nk against count_Nk_rootside for every (p, k, t) with t < p."""
    eq = SweepResult("census_equivalence")
    floor = SweepResult("root_floor")
    wit = SweepResult("witness_revalidation")
    diag = []
    cells = []
    rng = random.Random(seed)
    for p in primes:
        ctx = make_context(p)
        census.rootside_supports(p, p - 1)
        for k in range(1, kmax + 1):
            for t in range(1, p):
                rec = census.count_Nk(ctx, k, t)
                oracle = census.count_Nk_rootside(ctx, k, t)
                eq.cases += 1
                cells.append((p, k, t, rec.N))
                if rec.N != oracle:
                    eq.violations.append((p, k, t, rec.N, oracle))
                for e in rec.per_pattern:
                    if not e.splittable:
                        continue
                    pattern = ExponentPattern(e.pattern, ctx)
                    f = LacunaryPoly(pattern, e.witness)
                    floor.cases += 1
                    if e.Q_witness * k < t or e.Q_witness < math.ceil(t / k):
                        floor.violations.append((p, e.pattern, e.witness, e.Q_witness))
                    wit.cases += 1
                    if not fully_splits(f) or 0 in f.coeffs:
                        wit.violations.append((p, e.pattern, e.witness, "revalidation"))
                    for _ in range(orbit_samples):
                        c = rng.randrange(1, p)
                        moved = tuple(a * pow(c, te, p) % p for a, te in zip(f.coeffs, pattern.full))
                        if not fully_splits(LacunaryPoly(pattern, moved)):
                            wit.violations.append((p, e.pattern, e.witness, f"orbit c={c}"))
                    zb = zero_bound_report(f)
                    dt = dt_floor_check(pattern, True)
                    diag.append({"p": p, "k": k, "t": t, "pattern": e.pattern, "D": zb.D,
                                 "Q": zb.Q, "zero_ratio": zb.ratio, "dt_rhs": dt.rhs,
                                 "dt_ratio": dt.ratio})
    return CensusSweep(eq, floor, wit, diag, cells)


def closed_form_k1_sweep(pmax: int = 31) -> SweepResult:
    """N_1(p, t) = 1 exactly when t divides p - 1."""
    res = SweepResult("closed_form_k1")
    for p in primes_up_to(pmax):
        ctx = make_context(p)
        for t in range(1, p):
            res.cases += 1
            n = census.count_Nk(ctx, 1, t).N
            expected = int((p - 1) % t == 0)
            if n != expected:
                res.violations.append((p, t, n, expected))
    return res


def k1_root_count_sweep(pmax: int = 31) -> SweepResult:
    """Q(a_0 + a_1 X^t) is gcd(t, p-1) or 0 by the power-residue criterion."""
    res = SweepResult("k1_root_count")
    for p in primes_up_to(pmax):
        ctx = make_context(p)
        for t, a0, a1 in product(range(1, p), range(1, p), range(1, p)):
            g = math.gcd(t, p - 1)
            target = (-a0) * pow(a1, -1, p) % p
            residue = pow(target, (p - 1) // g, p) == 1
            f = LacunaryPoly(ExponentPattern((t,), ctx), (a0, a1))
            q = count_roots_brute(f).Q
            res.cases += 1
            if q != (g if residue else 0):
                res.violations.append((p, t, a0, a1, q))
    return res
