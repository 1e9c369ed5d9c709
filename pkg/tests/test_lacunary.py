import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacsplit.errors import BudgetExceeded, InvalidCoefficients, InvalidPattern
from lacsplit.fieldcore import make_context
from lacsplit.lacunary import (
    ExponentPattern,
    LacunaryPoly,
    bareiss_determinant,
    count_roots_brute,
    derivative_matrix,
    determinant_identity_check,
    evaluate,
    fully_splits,
    iter_patterns,
    root_multiplicity,
)
from lacsplit.polyarith import DensePoly, poly_gcd, x_pow_p_mod, sub


def lac(exps, coeffs, ctx, strict=True):
    return LacunaryPoly(ExponentPattern(exps, ctx), coeffs, strict=strict)


def cofactor_det(m):
    """Laplace expansion along the first row."""
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


def test_pattern_validation(F7):
    assert ExponentPattern((1, 3), F7).full == (0, 1, 3)
    for bad in [(), (0, 2), (3, 2), (2, 2), (1, 7)]:
        with pytest.raises(InvalidPattern):
            ExponentPattern(bad, F7)


def test_coefficient_validation(F7):
    with pytest.raises(InvalidCoefficients):
        lac((1, 3), (0, 1, 1), F7)
    with pytest.raises(InvalidCoefficients):
        lac((1, 3), (1, 1, 0), F7)
    with pytest.raises(InvalidCoefficients):
        lac((1, 3), (1, 0, 1), F7)
    assert lac((1, 3), (1, 0, 1), F7, strict=False).coeffs == (1, 0, 1)
    with pytest.raises(InvalidCoefficients):
        lac((1, 3), (1, 1), F7)


def test_evaluate_examples(F7):
    f = lac((1, 3), (1, 4, 1), F7)
    assert evaluate(f, 1) == 6
    assert evaluate(f, 0) == 1
    g = lac((1, 3), (2, 4, 1), F7)
    assert 125 + 20 + 2 == 147 == 21 * 7
    assert evaluate(g, 5) == 0


def test_count_roots_examples(F7):
    rec = count_roots_brute(lac((3,), (6, 1), F7))
    assert rec.Q == 3 and rec.roots == (1, 2, 4)
    assert {x for x in range(1, 7) if pow(x, 3, 7) == 6} == {3, 5, 6}
    assert count_roots_brute(lac((3,), (1, 1), F7)).roots == (3, 5, 6)
    for p in (5, 11, 101):
        ctx = make_context(p)
        assert count_roots_brute(lac((p - 1,), (p - 1, 1), ctx)).Q == p - 1


def test_count_roots_budget(F7):
    with pytest.raises(BudgetExceeded):
        count_roots_brute(lac((3,), (6, 1), F7), limit=5)


def test_root_multiplicity_examples(F7):
    f = lac((1, 3), (2, 4, 1), F7)  # (X-1)^2 (X-5)
    assert root_multiplicity(f, 1) == 2
    assert root_multiplicity(f, 3) == 0
    assert root_multiplicity(f, 5) == 1
    rec = count_roots_brute(f)
    assert (rec.Q, rec.max_multiplicity, rec.total_with_multiplicity) == (2, 2, 3)


def test_fully_splits_examples(F7):
    assert fully_splits(lac((3,), (6, 1), F7))
    assert sorted({pow(x, 3, 7) for x in range(1, 7)}) == [1, 6]
    assert not fully_splits(lac((3,), (5, 1), F7))
    assert fully_splits(lac((1, 3), (2, 4, 1), F7))


def split_oracle(f):
    assert evaluate(f, 0) != 0
    return count_roots_brute(f).total_with_multiplicity == f.degree


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fully_splits_agrees_with_oracle_relaxed(p):
    # all coefficient vectors, interior zeros allowed, up to k = 3
    ctx = make_context(p)
    for k in range(1, min(3, p - 1) + 1):
        for t in range(k, p):
            for pat in iter_patterns(k, t, ctx):
                for mid in itertools.product(range(p), repeat=k - 1):
                    for ak in range(1, p):
                        f = LacunaryPoly(pat, (1, *mid, ak), strict=False)
                        assert fully_splits(f) == split_oracle(f), f


def test_fully_splits_random_high_degree():
    rng = random.Random(5)
    for _ in range(200):
        p = rng.choice([53, 61, 89, 97, 101])
        ctx = make_context(p)
        k = rng.randint(1, 4)
        exps = tuple(sorted(rng.sample(range(1, p), k)))
        f = lac(exps, [rng.randrange(1, p) for _ in range(k + 1)], ctx)
        assert fully_splits(f) == split_oracle(f)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_root_count_equals_gcd_degree(p):
    # Q = deg gcd(f, X^p - X) for roots away from zero
    ctx = make_context(p)
    rng = random.Random(p)
    for _ in range(25):
        k = rng.randint(1, min(4, p - 1))
        exps = tuple(sorted(rng.sample(range(1, p), k)))
        f = lac(exps, [rng.randrange(1, p) for _ in range(k + 1)], ctx)
        dense = f.to_dense()
        xp_minus_x = sub(x_pow_p_mod(dense), DensePoly.from_coeffs([0, 1], ctx))
        assert count_roots_brute(f).Q == poly_gcd(dense, xp_minus_x).degree


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_binomial_root_count(p):
    ctx = make_context(p)
    for t in range(1, p):
        g = math.gcd(t, p - 1)
        powers = {pow(x, t, p) for x in range(1, p)}
        for a0 in range(1, p):
            for a1 in (1, 2, p - 1):
                target = (-a0) * pow(a1, -1, p) % p
                expected = g if target in powers else 0
                assert count_roots_brute(lac((t,), (a0, a1), ctx)).Q == expected


def test_derivative_matrix_example(F7):
    assert derivative_matrix(ExponentPattern((1, 3), F7)) == [[1, 0, 0], [1, 1, 0], [1, 3, 6]]


def test_determinant_examples(F7):
    assert determinant_identity_check(ExponentPattern((1, 2), F7)) == (2, 2, True)
    assert determinant_identity_check(ExponentPattern((1, 3), F7)) == (6, 6, True)
    for t1 in range(1, 7):
        assert determinant_identity_check(ExponentPattern((t1,), F7)) == (t1, t1, True)


def test_bareiss_against_laplace():
    rng = random.Random(0)
    for n in range(1, 6):
        for _ in range(30):
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert bareiss_determinant(m) == cofactor_det(m)
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [1, 0]]) == 0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_determinant_identity_exhaustive(k, F13):
    for exps in itertools.combinations(range(1, 13), k):
        det, prod, equal = determinant_identity_check(ExponentPattern(exps, F13))
        assert equal and det != 0


def test_determinant_big_exponents():
    ctx = make_context(2**61 - 1)
    pat = ExponentPattern((10**17, 3 * 10**17, 2**60, 2**61 - 2), ctx)
    det, prod, equal = determinant_identity_check(pat)
    assert equal


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([5, 7, 11, 13]), st.data())
def test_multiplicity_at_most_k(p, data):
    ctx = make_context(p)
    k = data.draw(st.integers(1, min(3, p - 1)))
    exps = tuple(sorted(data.draw(st.sets(st.integers(1, p - 1), min_size=k, max_size=k))))
    coeffs = [1] + data.draw(st.lists(st.integers(1, p - 1), min_size=k, max_size=k))
    rec = count_roots_brute(lac(exps, coeffs, ctx))
    assert rec.max_multiplicity <= k
    assert rec.Q <= rec.total_with_multiplicity <= exps[-1]
