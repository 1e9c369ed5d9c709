"""Arithmetic modulo a prime and the integer utilities around p - 1."""

from __future__ import annotations

import math
import random
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass

from .errors import NotPrime, TooLarge, ZeroInverse

MAX_MODULUS = 1 << 64

# Deterministic for every n < 3.3e24, in particular all 64-bit integers.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    # Brent's variant; n is odd and composite.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> list[int]:
    """Prime factors of ``n`` with multiplicity, ascending.

    Trial division up to 10**6, then Pollard rho on the cofactor.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors = []
    d = 2
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1 if d == 2 else 2
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors.append(m)
            continue
        g = _pollard_rho(m, rng)
        stack.extend((g, m // g))
    return sorted(factors)


def divisors_from_factors(factors: list[int]) -> list[int]:
    divs = [1]
    for q, e in sorted(Counter(factors).items()):
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class FieldContext:
    """A validated odd prime together with the factorization of p - 1."""

    p: int
    pm1_factors: tuple[int, ...]
    pm1_divisors: tuple[int, ...]

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p})"


def make_context(p: int) -> FieldContext:
    if p >= MAX_MODULUS:
        raise TooLarge(f"modulus {p} exceeds the 64-bit guard")
    if p < 3 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    factors = factorize(p - 1)
    return FieldContext(p, tuple(factors), tuple(divisors_from_factors(factors)))


def mod_pow(base: int, exp: int, ctx: FieldContext) -> int:
    return pow(base, exp, ctx.p)


def mod_inv(a: int, ctx: FieldContext) -> int:
    if a % ctx.p == 0:
        raise ZeroInverse("0 has no inverse modulo p")
    return pow(a, -1, ctx.p)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def divisors_at_least(ctx: FieldContext, D: int) -> list[int]:
    """Divisors d of p - 1 with d >= D, ascending."""
    divs = ctx.pm1_divisors
    return list(divs[bisect_left(divs, D):])
