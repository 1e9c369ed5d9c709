"""Dense univariate polynomials over F_p.

Coefficients are stored low degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Only the machinery needed by the
full-split test is provided: product, division, gcd, derivative, radical and
X^p modulo a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BothZero,
    ConstantModulus,
    ContextMismatch,
    DegreeTooHigh,
    DivisionByZeroPoly,
)
from .fieldcore import FieldContext

KARATSUBA_CUTOFF = 64
_SMALL = 12
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class DensePoly:
    coeffs: tuple[int, ...]
    ctx: FieldContext

    @classmethod
    def from_coeffs(cls, coeffs, ctx: FieldContext) -> "DensePoly":
        """Reduce modulo p and strip trailing zeros."""
        return cls(tuple(_trim([c % ctx.p for c in coeffs])), ctx)

    @classmethod
    def monomial(cls, degree: int, ctx: FieldContext, coeff: int = 1) -> "DensePoly":
        return cls.from_coeffs([0] * degree + [coeff], ctx)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        p = self.ctx.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def _trim(c: list[int]) -> list[int]:
    while c and not c[-1]:
        c.pop()
    return c


def _wrap(c: list[int], ctx: FieldContext) -> DensePoly:
    return DensePoly(tuple(_trim(c)), ctx)


def _check_ctx(f: DensePoly, g: DensePoly) -> None:
    if f.ctx.p != g.ctx.p:
        raise ContextMismatch(f"moduli differ: {f.ctx.p} vs {g.ctx.p}")


def _school(a, b, p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % p for v in out]


def _karatsuba(a, b, p: int) -> list[int]:
    # Unreduced result; caller reduces mod p.
    n = max(len(a), len(b))
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    h = n // 2
    a0, a1 = a[:h], a[h:] or [0]
    b0, b1 = b[:h], b[h:] or [0]
    z0 = _karatsuba(a0, b0, p)
    z2 = _karatsuba(a1, b1, p)
    sa = [x + y for x, y in _zip_pad(a0, a1)]
    sb = [x + y for x, y in _zip_pad(b0, b1)]
    z1 = _karatsuba(sa, sb, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
        z1[i] -= v
    for i, v in enumerate(z2):
        if i + 2 * h < len(out):
            out[i + 2 * h] += v
        z1[i] -= v
    for i, v in enumerate(z1):
        if v and i + h < len(out):
            out[i + h] += v
    return [v % p for v in out]


def _zip_pad(x, y):
    n = max(len(x), len(y))
    return zip(list(x) + [0] * (n - len(x)), list(y) + [0] * (n - len(y)))


def _mul_lists(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    short = min(len(a), len(b))
    if short <= _SMALL:
        return _school(a, b, p)
    if (p - 1) ** 2 * short < _INT64_SAFE:
        prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return (prod % p).tolist()
    return _karatsuba(list(a), list(b), p)


def _divrem_lists(f, g, p: int) -> tuple[list[int], list[int]]:
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], _trim(r)
    if dg > _SMALL and p * p < _INT64_SAFE // 2:
        return _divrem_numpy(r, g, p)
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] * inv % p
        if not c:
            continue
        q[i - dg] = c
        base = i - dg
        for j in range(dg):
            if g[j]:
                r[base + j] = (r[base + j] - c * g[j]) % p
        r[i] = 0
    return _trim(q), _trim(r[:dg])


def _divrem_numpy(r, g, p: int) -> tuple[list[int], list[int]]:
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    ra = np.asarray(r, dtype=np.int64)
    ga = np.asarray(g[:dg], dtype=np.int64)
    q = np.zeros(len(r) - dg, dtype=np.int64)
    for i in range(len(r) - 1, dg - 1, -1):
        c = int(ra[i]) * inv % p
        if c:
            q[i - dg] = c
            seg = ra[i - dg:i]
            seg -= c * ga
            seg %= p
    return _trim(q.tolist()), _trim(ra[:dg].tolist())


def _rem_lists(f, g, p: int) -> list[int]:
    return _divrem_lists(f, g, p)[1]


def mul(f: DensePoly, g: DensePoly) -> DensePoly:
    _check_ctx(f, g)
    return _wrap(_mul_lists(f.coeffs, g.coeffs, f.ctx.p), f.ctx)


def add(f: DensePoly, g: DensePoly) -> DensePoly:
    _check_ctx(f, g)
    p = f.ctx.p
    return _wrap([(x + y) % p for x, y in _zip_pad(f.coeffs, g.coeffs)], f.ctx)


def sub(f: DensePoly, g: DensePoly) -> DensePoly:
    _check_ctx(f, g)
    p = f.ctx.p
    return _wrap([(x - y) % p for x, y in _zip_pad(f.coeffs, g.coeffs)], f.ctx)


def divrem(f: DensePoly, g: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Euclidean division: returns (q, r) with f = q*g + r and deg r < deg g."""
    _check_ctx(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    q, r = _divrem_lists(f.coeffs, g.coeffs, f.ctx.p)
    return _wrap(q, f.ctx), _wrap(r, f.ctx)


def make_monic(f: DensePoly) -> DensePoly:
    if f.is_zero() or f.lead() == 1:
        return f
    p = f.ctx.p
    inv = pow(f.lead(), -1, p)
    return _wrap([c * inv % p for c in f.coeffs], f.ctx)


def _gcd_lists(a, b, p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem_lists(a, b, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_gcd(f: DensePoly, g: DensePoly) -> DensePoly:
    """Monic greatest common divisor."""
    _check_ctx(f, g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return _wrap(_gcd_lists(f.coeffs, g.coeffs, f.ctx.p), f.ctx)


def formal_derivative(f: DensePoly) -> DensePoly:
    p = f.ctx.p
    return _wrap([i * c % p for i, c in enumerate(f.coeffs)][1:], f.ctx)


def squarefree_part(f: DensePoly) -> DensePoly:
    """Monic radical of f, computed as f / gcd(f, f').

    Requires deg f < p so that f' vanishes only on repeated factors.
    """
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree >= f.ctx.p:
        raise DegreeTooHigh(f"deg f = {f.degree} is not below p = {f.ctx.p}")
    return _wrap(_radical_lists(f.coeffs, f.ctx.p), f.ctx)


def _radical_lists(f, p: int) -> list[int]:
    df = [i * c % p for i, c in enumerate(f)][1:]
    _trim(df)
    g = _gcd_lists(f, df, p) if df else list(f)
    q, _ = _divrem_lists(f, g, p)
    if q and q[-1] != 1:
        inv = pow(q[-1], -1, p)
        q = [c * inv % p for c in q]
    return q


def _xpow_mod_lists(e: int, m, p: int) -> list[int]:
    # X^e mod m by left-to-right square-and-multiply; multiplication by X is
    # a shift followed by one reduction step.
    dm = len(m) - 1
    if dm == 0:
        return []
    if dm > _SMALL and (p - 1) ** 2 * 2 * dm < _INT64_SAFE:
        return _xpow_mod_numpy(e, m, p)
    acc = [1]
    for bit in bin(e)[2:]:
        acc = _rem_lists(_mul_lists(acc, acc, p), m, p)
        if bit == "1":
            acc = _rem_lists([0] + acc, m, p)
    return acc


def _xpow_mod_numpy(e: int, m, p: int) -> list[int]:
    # Row i of the table holds X^(dm + i) mod m, so reducing a product of
    # degree <= 2 dm - 2 is one vector-matrix product.
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    tail = np.asarray([(-c * inv) % p for c in m[:dm]], dtype=np.int64)
    table = np.zeros((dm - 1, dm), dtype=np.int64)
    row = tail.copy()  # X^dm mod m
    for i in range(dm - 1):
        table[i] = row
        top = row[-1]
        row = np.concatenate(([0], row[:-1]))
        row = (row + top * tail) % p
    acc = np.zeros(dm, dtype=np.int64)
    acc[0] = 1
    for bit in bin(e)[2:]:
        sq = np.convolve(acc, acc) % p
        acc = (sq[:dm] + sq[dm:] @ table) % p
        if bit == "1":
            top = acc[-1]
            acc = np.concatenate(([0], acc[:-1]))
            acc = (acc + top * tail) % p
    return _trim(acc.tolist())


def x_pow_p_mod(f: DensePoly) -> DensePoly:
    """X^p reduced modulo f."""
    if f.degree < 1:
        raise ConstantModulus("modulus must have degree at least 1")
    return _wrap(_xpow_mod_lists(f.ctx.p, f.coeffs, f.ctx.p), f.ctx)


def x_pow_mod(e: int, f: DensePoly) -> DensePoly:
    if f.degree < 1:
        raise ConstantModulus("modulus must have degree at least 1")
    return _wrap(_xpow_mod_lists(e, f.coeffs, f.ctx.p), f.ctx)


def divide_linear(f: DensePoly, r: int) -> tuple[DensePoly, int]:
    """Synthetic division of f by (X - r): returns (quotient, f(r))."""
    p = f.ctx.p
    c = f.coeffs
    if not c:
        return f, 0
    q = [0] * (len(c) - 1)
    acc = c[-1]
    for i in range(len(c) - 2, -1, -1):
        q[i] = acc
        acc = (acc * r + c[i]) % p
    return _wrap(q, f.ctx), acc


def splits_lists(f, p: int) -> bool:
    """List-level full-split test used by hot loops (deg f < p assumed)."""
    s = _radical_lists(f, p)
    if len(s) <= 2:
        return True
    xp = _xpow_mod_lists(p, s, p)
    return xp == [0, 1]
