import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import domset as ds
from domset.errors import AlphaOutOfRange, Exhausted
from domset.heuristic import (
    RULE_LEXICOGRAPHIC,
    RULE_POOL_RANDOM,
    RULE_SOLUTION_PREFIX,
    RULE_SOLUTION_RANDOM,
    BaseSolution,
    SeenBases,
)

from .conftest import connected_graphs, ratio_ceiling


@pytest.mark.parametrize("alpha, U, s, expected", [(0.5, 10, 2, 6), (0.2, 6, 0, 1)])
def test_beta(alpha, U, s, expected):
    assert ds.beta(alpha, U, s) == expected


@pytest.mark.parametrize("U", [0, 1, 5, 40])
def test_beta_degenerate(U):
    assert ds.beta(0.99, U, U) == U


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1, 1.5])
def test_beta_alpha_range(alpha):
    with pytest.raises(AlphaOutOfRange):
        ds.beta(alpha, 10, 2)


def test_make_base_support_fills():
    g = ds.path_graph(4)
    base = ds.make_base(g, ds.Solution(g, [2, 3]), 2, 0, np.random.default_rng(0), SeenBases())
    assert set(base.members) == {2, 3}


def test_make_base_rule_one():
    g = ds.cycle_graph(5)
    base = ds.make_base(g, ds.Solution(g, [1, 3]), 1, 0, np.random.default_rng(0), SeenBases())
    assert base.members == (1,) and base.rule == RULE_SOLUTION_PREFIX


def test_make_base_forced_support_set():
    g = ds.from_edge_list(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])  # supports {2, 4, 3}
    sigma = ds.greedy_solve(g)
    seen = SeenBases()
    rng = np.random.default_rng(0)
    s = len(g.supports)
    base = ds.make_base(g, sigma, s, 0, rng, seen)
    assert set(base.members) == g.supports
    with pytest.raises(Exhausted):
        ds.make_base(g, sigma, s, 1, rng, seen)


def test_make_base_rules_and_exhaustion():
    g = ds.cycle_graph(12)
    sigma = ds.Solution(g, [1, 4, 7, 10])
    rng = np.random.default_rng(3)
    seen = SeenBases()
    rules, keys = [], set()
    h = 0
    while True:
        try:
            base = ds.make_base(g, sigma, 3, h, rng, seen)
        except Exhausted:
            break
        rules.append(base.rule)
        keys.add(tuple(sorted(base.members)))
        h += 1
    assert len(keys) == len(rules) == math.comb(12, 3)
    assert rules[0] == RULE_SOLUTION_PREFIX
    assert keys >= {(1, 4, 7)}
    # h = 1..3 draw from the solution's own vertices (C(4, 3) = 4)
    assert set(rules[1:4]) == {RULE_SOLUTION_RANDOM}
    assert rules[4] == RULE_POOL_RANDOM
    # once collisions pile up the remaining bases come in lexicographic order
    lex = rules.index(RULE_LEXICOGRAPHIC)
    assert set(rules[lex:]) == {RULE_LEXICOGRAPHIC}


def test_extend_examples():
    g = ds.cycle_graph(5)
    rng = np.random.default_rng(0)
    base = BaseSolution((1,), RULE_SOLUTION_RANDOM, 1)
    assert ds.extend(g, base, 3, 1, rng) is None
    assert ds.extend(g, base, 4, 1, rng).members == {1, 2, 3}


def test_extend_random_branch_never_picks_leaves():
    g = ds.random_connected(30, 35, 8)
    for seed in range(20):
        sol = ds.extend(g, BaseSolution(tuple(sorted(g.supports)), 1, 0), g.n, 0, np.random.default_rng(seed))
        assert sol is not None and not (sol.members & g.leaves)


@pytest.mark.parametrize(
    "g, size",
    [(ds.path_graph(4), 2), (ds.star_graph(5), 1), (ds.cycle_graph(7), 3)],
)
def test_dbs_examples(g, size):
    res = ds.dbs_solve(g, ds.SolverConfig(seed=0))
    assert res.size == size
    assert ds.is_dominating(g, res.members)


def test_dbs_p4_witness():
    assert ds.dbs_solve(ds.path_graph(4)).members == {2, 3}


def test_dbs_alpha_drawn_in_range():
    alphas = {ds.dbs_solve(ds.cycle_graph(9), ds.SolverConfig(seed=s)).alpha for s in range(20)}
    assert all(0.2 <= a <= 0.7 for a in alphas) and len(alphas) == 20


def test_dbs_rejects_bad_alpha():
    with pytest.raises(AlphaOutOfRange):
        ds.dbs_solve(ds.cycle_graph(9), ds.SolverConfig(alpha=1.0))


def test_dbs_deadline():
    g = ds.random_connected(300, 900, 1)
    res = ds.dbs_solve(g, ds.SolverConfig(time_limit_s=1e-4, seed=1))
    assert ds.is_dominating(g, res.members)


def test_dbs_deterministic():
    g = ds.random_connected(60, 300, 12)
    a = ds.dbs_solve(g, ds.SolverConfig(seed=5))
    b = ds.dbs_solve(g, ds.SolverConfig(seed=5))
    assert a.witness.order == b.witness.order and a.alpha == b.alpha
    assert [vars(x) for x in a.levels] == [vars(x) for x in b.levels]


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=3, max_n=12), st.integers(0, 1000), st.sampled_from([None, 0.3, 0.5, 0.9]))
def test_dbs_properties(g, seed, alpha):
    res = ds.dbs_solve(g, ds.SolverConfig(seed=seed, alpha=alpha), unlimited=True)
    greedy = ds.greedy_solve(g)
    gamma = ds.brute_force(g).gamma
    assert ds.is_dominating(g, res.members)
    assert res.size <= len(greedy)
    sizes = [lv.U for lv in res.levels]
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)
    assert res.size / gamma <= ratio_ceiling(g) + 1e-12
    last = res.levels[-1] if res.levels else None
    L = ds.lower_bound(g).L
    if last is not None and last.exhausted and last.beta > L:
        assert last.beta < gamma
