import itertools
import math
import random

import pytest

from lacsplit.domgraph import (
    PatternGraph,
    build_pattern_graph,
    classify_patterns,
    dominates,
    domination_number,
    min_degree,
    min_dominating_set,
    ore_check,
    padded_dominating_set,
)
from lacsplit.errors import BudgetExceeded, IsolatedVertex
from lacsplit.fieldcore import make_context
from lacsplit.lacunary import ExponentPattern
from lacsplit.sweeps import all_patterns, ore_sweep
from lacsplit.zerostats import compute_D


def path(n):
    return PatternGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return PatternGraph.from_edges(n, itertools.combinations(range(n), 2))


def matching(n):
    return PatternGraph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield PatternGraph.from_edges(n, [e for b, e in enumerate(pairs) if mask >> b & 1])


def brute_gamma(G):
    """Smallest dominating subset by scanning all 2^n subsets."""
    best = G.n
    for mask in range(1 << G.n):
        members = [v for v in range(G.n) if mask >> v & 1]
        if dominates(G, members):
            best = min(best, len(members))
    return best


def test_graph_validation():
    with pytest.raises(ValueError):
        PatternGraph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        PatternGraph(2, (0b01, 0b00))
    with pytest.raises(ValueError):
        PatternGraph(1, (0,))
    G = path(4)
    assert PatternGraph.from_encoding(4, G.encoding()) == G


def test_build_pattern_graph(F7):
    pat = ExponentPattern((2, 3), F7)
    G = build_pattern_graph(pat, 2)
    assert G.edges() == [(0, 1), (0, 2)]
    assert build_pattern_graph(pat, 1) == complete(3)
    assert build_pattern_graph(pat, 7).edges() == []


def test_min_degree():
    assert min_degree(path(3)) == 1
    assert min_degree(complete(4)) == 3
    assert min_degree(PatternGraph.from_edges(3, [(0, 1)])) == 0


def test_min_dominating_set_examples():
    assert len(min_dominating_set(path(4)).members) == 2
    star = PatternGraph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert min_dominating_set(star).members == (0,)
    for n in range(2, 7):
        assert len(min_dominating_set(complete(n)).members) == 1


def test_min_dominating_set_is_lexicographic():
    assert min_dominating_set(path(4)).members == (0, 2)
    assert min_dominating_set(matching(6)).members == (0, 2, 4)


def test_exact_guard():
    with pytest.raises(BudgetExceeded):
        min_dominating_set(complete(25))


def test_gamma_against_brute_force_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        G = PatternGraph.from_edges(n, edges)
        ds = min_dominating_set(G)
        assert dominates(G, ds.members)
        assert len(ds.members) == brute_gamma(G)


def test_ore_examples():
    assert ore_check(matching(6)) and domination_number(matching(6)) == 3
    assert ore_check(complete(5))
    with pytest.raises(IsolatedVertex):
        ore_check(PatternGraph.from_edges(3, [(0, 1)]))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_ore_exhaustive_with_library_search(n):
    checked = 0
    for G in all_graphs(n):
        ds = min_dominating_set(G)
        assert dominates(G, ds.members)
        if min_degree(G) >= 1:
            assert ore_check(G)
            checked += 1
    assert checked == {2: 1, 3: 4, 4: 41, 5: 768, 6: 27449}[n]


def test_vectorized_ore_sweep_matches_library():
    res = ore_sweep(2, 6)
    for n in range(2, 7):
        hist = [0] * (n // 2 + 1)
        for G in all_graphs(n):
            if min_degree(G) >= 1:
                hist[domination_number(G)] += 1
        assert res.stats[f"gamma_hist_n{n}"] == hist


def test_padded_dominating_set():
    assert padded_dominating_set(complete(5)).members == (0, 1)
    m = padded_dominating_set(matching(6))
    assert len(m.members) == 3 and m.is_minimum
    G = PatternGraph.from_edges(3, [(0, 1), (0, 2)])
    assert padded_dominating_set(G).members == (0,)
    with pytest.raises(IsolatedVertex):
        padded_dominating_set(PatternGraph.from_edges(3, [(0, 1)]))


@pytest.mark.parametrize("p", [7, 11, 13])
def test_delta_claim(p):
    ctx = make_context(p)
    for k in (1, 2, 3):
        for pat in all_patterns(ctx, k):
            assert min_degree(build_pattern_graph(pat, compute_D(pat))) >= 1


def test_classify_examples(F7):
    classes = classify_patterns(F7, 2, 3, 2)
    assert [G.encoding() for G in classes] == ["011", "110"]
    assert list(classes.values()) == [1, 1]
    ctx = make_context(13)
    assert classify_patterns(ctx, 3, 9, 1) == {complete(4): 28}
    empty = classify_patterns(ctx, 3, 9, 13)
    assert len(empty) == 1 and next(iter(empty)).edges() == []


@pytest.mark.parametrize("p,k,t", [(13, 3, 12), (31, 4, 30), (37, 3, 20)])
def test_classification_conservation(p, k, t):
    ctx = make_context(p)
    for D in ctx.pm1_divisors:
        assert sum(classify_patterns(ctx, k, t, D).values()) == math.comb(t - 1, k - 1)


def test_classify_budget(F13):
    with pytest.raises(BudgetExceeded):
        classify_patterns(F13, 3, 12, 2, budget=10)
