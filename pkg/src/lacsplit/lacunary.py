"""Sparse polynomials a_0 + a_1 X^t_1 + ... + a_k X^t_k over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from . import polyarith
from .errors import BudgetExceeded, InvalidCoefficients, InvalidPattern
from .fieldcore import FieldContext
from .polyarith import DensePoly

BRUTE_FORCE_LIMIT = 1 << 24


@dataclass(frozen=True)
class ExponentPattern:
    """Strictly increasing exponents (t_1, ..., t_k); t_0 = 0 is implicit."""

    exps: tuple[int, ...]
    ctx: FieldContext

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        object.__setattr__(self, "exps", exps)
        if not exps:
            raise InvalidPattern("a pattern needs k >= 1 exponents")
        if exps[0] < 1 or exps[-1] >= self.ctx.p:
            raise InvalidPattern(f"exponents {exps} must lie in [1, p)")
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise InvalidPattern(f"exponents {exps} are not strictly increasing")

    @property
    def k(self) -> int:
        return len(self.exps)

    @property
    def t(self) -> int:
        return self.exps[-1]

    @property
    def full(self) -> tuple[int, ...]:
        """Exponents including t_0 = 0."""
        return (0,) + self.exps

    def label(self) -> str:
        return "-".join(map(str, self.exps))


@dataclass(frozen=True)
class LacunaryPoly:
    """Coefficients (a_0, ..., a_k) attached to a pattern.

    With ``strict`` (the default) every coefficient must be nonzero, so the
    polynomial has exactly the given support.  Otherwise only a_0 and a_k
    are required to be nonzero.
    """

    pattern: ExponentPattern
    coeffs: tuple[int, ...]
    strict: bool = True

    def __post_init__(self):
        p = self.pattern.ctx.p
        coeffs = tuple(int(c) % p for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.pattern.k + 1:
            raise InvalidCoefficients(
                f"expected {self.pattern.k + 1} coefficients, got {len(coeffs)}")
        if coeffs[0] == 0 or coeffs[-1] == 0:
            raise InvalidCoefficients("a_0 and a_k must be nonzero")
        if self.strict and 0 in coeffs:
            raise InvalidCoefficients("strict pattern requires all a_i nonzero")

    @property
    def ctx(self) -> FieldContext:
        return self.pattern.ctx

    @property
    def degree(self) -> int:
        return self.pattern.t

    def terms(self):
        return zip(self.coeffs, self.pattern.full)

    def to_dense(self) -> DensePoly:
        dense = [0] * (self.pattern.t + 1)
        for a, e in self.terms():
            dense[e] = a
        return DensePoly(tuple(dense), self.ctx)

    def __str__(self) -> str:
        parts = []
        for a, e in self.terms():
            if not a:
                continue
            mono = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            parts.append(str(a) if not mono else (mono if a == 1 else f"{a}*{mono}"))
        return " + ".join(parts)


@dataclass(frozen=True)
class RootCountRecord:
    """Root statistics over F_p^*; Q counts distinct roots."""

    Q: int
    max_multiplicity: int
    total_with_multiplicity: int
    roots: tuple[int, ...] = ()
    multiplicities: tuple[int, ...] = ()
    with_multiplicity: bool = False


def evaluate(f: LacunaryPoly, x: int) -> int:
    """Value of f at x, one modular power per term."""
    p = f.ctx.p
    return sum(a * pow(x, e, p) for a, e in f.terms()) % p


def root_multiplicity(f: LacunaryPoly, r: int) -> int:
    """Largest m with (X - r)^m dividing f, by repeated synthetic division."""
    g = f.to_dense()
    m = 0
    while g.degree >= 1:
        q, rem = polyarith.divide_linear(g, r)
        if rem:
            break
        g = q
        m += 1
    return m


def count_roots_brute(f: LacunaryPoly, limit: int = BRUTE_FORCE_LIMIT) -> RootCountRecord:
    """Exact root count over F_p^* by evaluating at every nonzero element."""
    p = f.ctx.p
    if p > limit:
        raise BudgetExceeded(f"p = {p} exceeds the brute-force limit {limit}")
    roots = tuple(x for x in range(1, p) if evaluate(f, x) == 0)
    mults = tuple(root_multiplicity(f, r) for r in roots)
    return RootCountRecord(
        Q=len(roots),
        max_multiplicity=max(mults, default=0),
        total_with_multiplicity=sum(mults),
        roots=roots,
        multiplicities=mults,
    )


def fully_splits(f: LacunaryPoly) -> bool:
    """True iff f is a product of linear factors over F_p.

    Since deg f < p, f splits exactly when its radical s satisfies
    X^p = X (mod s).
    """
    return polyarith.splits_lists(f.to_dense().coeffs, f.ctx.p)


def derivative_matrix(pattern: ExponentPattern) -> list[list[int]]:
    """Falling-factorial matrix: entry (i, j) = t_i (t_i - 1) ... (t_i - j + 1).

    Row i belongs to exponent t_i (t_0 = 0 included), column j to the j-th
    derivative.  Plain integers, not reduced modulo p.
    """
    ts = pattern.full
    n = len(ts)
    return [[prod(t - h for h in range(j)) for j in range(n)] for t in ts]


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for i in range(n - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i]), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[-1][-1] if n else 1


def vandermonde_product(exps) -> int:
    """prod_{i<j} (t_j - t_i)."""
    return prod(b - a for i, a in enumerate(exps) for b in exps[i + 1:])


def determinant_identity_check(pattern: ExponentPattern) -> tuple[int, int, bool]:
    det = bareiss_determinant(derivative_matrix(pattern))
    product = vandermonde_product(pattern.full)
    return det, product, det == product


def iter_patterns(k: int, t: int, ctx: FieldContext, first: int | None = None):
    """Patterns with t_k = t in lexicographic order, optionally with fixed t_1."""
    if k == 1:
        if first in (None, t):
            yield ExponentPattern((t,), ctx)
        return
    heads = range(1, t) if first is None else [first]
    for t1 in heads:
        for rest in combinations(range(t1 + 1, t), k - 2):
            yield ExponentPattern((t1,) + rest + (t,), ctx)
