"""The gcd parameter D of a pattern and measured-versus-bound diagnostics.

The bounds carry unknown implied constants, so the real-valued terms here
are reported, never asserted.  Q, D and divisibility are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lacunary import ExponentPattern, LacunaryPoly, count_roots_brute


@dataclass(frozen=True)
class DBoundRecord:
    D: int
    Q: int
    k: int
    leading: float
    secondary: float
    ratio: float


@dataclass(frozen=True)
class DtFloorRecord:
    applicable: bool
    D: int
    t: int
    k: int
    rhs: float | None = None
    ratio: float | None = None


def gcd_table(pattern: ExponentPattern) -> list[list[int]]:
    """gcd(|t_j - t_i|, p - 1) for all index pairs; the diagonal is 0."""
    ts, m = pattern.full, pattern.ctx.p - 1
    return [[gcd(abs(b - a), m) if i != j else 0 for j, b in enumerate(ts)]
            for i, a in enumerate(ts)]


def compute_D(pattern: ExponentPattern) -> int:
    """min over i in {0..k} of max over j != i of gcd(t_j - t_i, p - 1)."""
    return min(max(row) for row in gcd_table(pattern))


def zero_bound_report(f: LacunaryPoly) -> DBoundRecord:
    p, k = f.ctx.p, f.pattern.k
    D = compute_D(f.pattern)
    Q = count_roots_brute(f).Q
    leading = 2.0 * p ** (1.0 - 1.0 / k) * D ** (1.0 / k)
    secondary = p ** (1.0 - 2.0 / k) * D ** (2.0 / k)
    return DBoundRecord(D=D, Q=Q, k=k, leading=leading, secondary=secondary,
                        ratio=Q / leading)


def dt_floor_check(pattern: ExponentPattern, observed_split: bool) -> DtFloorRecord:
    D, t, k = compute_D(pattern), pattern.t, pattern.k
    # Unconditional half: every gcd is at most its difference, hence <= t.
    assert D <= t, (D, t)
    if not observed_split:
        return DtFloorRecord(applicable=False, D=D, t=t, k=k)
    rhs = t**k / pattern.ctx.p ** (k - 1)
    return DtFloorRecord(applicable=True, D=D, t=t, k=k, rhs=rhs, ratio=D / rhs)
