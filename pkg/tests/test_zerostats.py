import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacsplit.fieldcore import make_context
from lacsplit.lacunary import ExponentPattern, LacunaryPoly
from lacsplit.sweeps import all_patterns
from lacsplit.zerostats import compute_D, dt_floor_check, gcd_table, zero_bound_report


def test_compute_D_examples(F7):
    pat = ExponentPattern((2, 3), F7)
    assert [max(r) for r in gcd_table(pat)] == [3, 2, 3]
    assert compute_D(pat) == 2
    assert compute_D(ExponentPattern((1, 3), F7)) == 2
    for t1 in range(1, 7):
        assert compute_D(ExponentPattern((t1,), F7)) == math.gcd(t1, 6)


@pytest.mark.parametrize("p,k", [(7, 1), (31, 2), (31, 1), (101, 1), (211, 4)])
def test_compute_D_consecutive(p, k):
    # all differences are below the smallest prime factor of p - 1
    ctx = make_context(p)
    if k < min(ctx.pm1_factors):
        assert compute_D(ExponentPattern(tuple(range(1, k + 1)), ctx)) == 1


@pytest.mark.parametrize("p", [7, 11, 13])
def test_D_divides_p_minus_1(p):
    ctx = make_context(p)
    for k in (1, 2, 3):
        for pat in all_patterns(ctx, k):
            assert (p - 1) % compute_D(pat) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([13, 31, 61, 97]), st.data())
def test_D_reflection_invariant(p, data):
    ctx = make_context(p)
    k = data.draw(st.integers(1, 5))
    exps = tuple(sorted(data.draw(st.sets(st.integers(1, p - 1), min_size=k, max_size=k))))
    full = (0,) + exps
    t = exps[-1]
    mirrored = tuple(t - full[k - i] for i in range(k + 1))
    assert mirrored[0] == 0
    assert compute_D(ExponentPattern(exps, ctx)) == compute_D(ExponentPattern(mirrored[1:], ctx))


def test_zero_bound_examples(F7):
    rec = zero_bound_report(LacunaryPoly(ExponentPattern((3,), F7), (6, 1)))
    assert (rec.D, rec.Q) == (3, 3)
    assert rec.leading == pytest.approx(6.0) and rec.ratio == pytest.approx(0.5)
    for p in (5, 11, 13):
        ctx = make_context(p)
        rec = zero_bound_report(LacunaryPoly(ExponentPattern((p - 1,), ctx), (p - 1, 1)))
        assert (rec.Q, rec.D) == (p - 1, p - 1)
        assert rec.leading == pytest.approx(2 * (p - 1)) and rec.ratio == pytest.approx(0.5)
    rec = zero_bound_report(LacunaryPoly(ExponentPattern((1, 3), F7), (1, 4, 1)))
    assert rec.D == 2
    brute = sum(1 for x in range(1, 7) if (1 + 4 * x + x**3) % 7 == 0)
    assert rec.Q == brute
    assert rec.secondary == pytest.approx(7**0 * 2**1)


def test_dt_floor(F7):
    rec = dt_floor_check(ExponentPattern((1, 3), F7), True)
    assert rec.D == 2 and rec.rhs == pytest.approx(9 / 7) and rec.ratio == pytest.approx(14 / 9)
    assert not dt_floor_check(ExponentPattern((4,), F7), False).applicable
    rec = dt_floor_check(ExponentPattern((3,), F7), True)
    assert rec.D == 3 and rec.rhs == 3 and rec.ratio == 1
