import math

import pytest
from hypothesis import given, settings

import domset as ds
from domset.errors import BudgetExhausted, InfeasibleSeed
from domset.exact import SearchState, enumeration_envelope

from .conftest import connected_graphs


def test_priority_list_p4_empty():
    g = ds.path_graph(4)
    assert ds.build_priority_list(g, ds.Solution(g, [2, 3])).order == ()


def test_priority_list_c5():
    g = ds.cycle_graph(5)
    assert ds.build_priority_list(g, ds.Solution(g, [1, 3])).order == (1, 3, 2, 4, 5)


def test_priority_list_star_empty():
    g = ds.star_graph(4)
    assert ds.build_priority_list(g, ds.Solution(g, [1])).order == ()


def test_priority_list_rejects_infeasible_seed():
    g = ds.path_graph(5)
    with pytest.raises(InfeasibleSeed):
        ds.build_priority_list(g, ds.Solution(g, [2]))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=3, max_n=14))
def test_priority_list_invariants(g):
    seed = ds.greedy_solve(g)
    plist = ds.build_priority_list(g, seed)
    core = set(range(1, g.n + 1)) - g.supports - g.leaves
    assert sorted(plist.order) == sorted(core)
    first = [v for v in plist.order if v in seed.members]
    rest = plist.order[len(first):]
    assert list(plist.order[: len(first)]) == first
    assert list(rest) == sorted(rest, key=lambda v: (-int(g.degree[v - 1]), v))


def test_next_feasible_c5():
    g = ds.cycle_graph(5)
    plist = ds.build_priority_list(g, ds.Solution(g, [1, 3]))
    assert ds.next_feasible(g, 2, plist).members == {1, 3}
    assert ds.next_feasible(g, 1, plist) is None


def test_next_feasible_star_base_case():
    g = ds.star_graph(4)
    plist = ds.build_priority_list(g, ds.Solution(g, [1]))
    assert ds.next_feasible(g, 1, plist).members == {1}


def test_next_feasible_below_support_count():
    g = ds.path_graph(6)  # supports {2, 5}
    plist = ds.build_priority_list(g, ds.greedy_solve(g))
    assert ds.next_feasible(g, 1, plist) is None


def test_next_feasible_budget():
    g = ds.cycle_graph(15)
    best = ds.greedy_solve(g)
    state = SearchState(L=1, U=len(best), best=best, plist=ds.build_priority_list(g, best), node_cap=10)
    with pytest.raises(BudgetExhausted) as info:
        ds.next_feasible(g, 4, state.plist, state)
    assert info.value.nodes_visited == 10
    assert state.nodes_visited == 10
    assert state.trials[-1].exhausted_budget


@pytest.mark.parametrize(
    "g, gamma",
    [(ds.path_graph(4), 2), (ds.petersen_graph(), 3), (ds.cycle_graph(7), 3)],
)
def test_bds_examples(g, gamma):
    res = ds.bds_solve(g)
    assert res.gamma == gamma == ds.brute_force(g).gamma
    assert res.proof is ds.Proof.EXACT
    assert ds.is_dominating(g, res.members)


def test_bds_p4_witness_without_search():
    res = ds.bds_solve(ds.path_graph(4))
    assert res.members == {2, 3}
    assert res.trials == []


def test_bds_closes_gap_at_lower_bound():
    # a size equal to the initial lower bound must still be tried
    for name_seed in range(40):
        g = ds.random_connected(12, 20, name_seed)
        assert ds.bds_solve(g).gamma == ds.brute_force(g).gamma


def test_bds_budget_gives_upper_bound_only():
    g = ds.random_connected(60, 200, 4)
    res = ds.bds_solve(g, ds.SolverConfig(node_cap=5))
    assert res.proof is ds.Proof.UPPER_BOUND_ONLY
    assert ds.is_dominating(g, res.members)
    assert res.gamma <= res.initial_upper


def test_bds_time_limit():
    g = ds.random_connected(400, 1200, 2)
    res = ds.bds_solve(g, ds.SolverConfig(time_limit_s=0.05))
    assert ds.is_dominating(g, res.members)


@pytest.mark.parametrize("n", [1, 2])
def test_bds_tiny(n):
    res = ds.bds_solve(ds.complete_graph(n))
    assert res.gamma == 1 and res.proof is ds.Proof.EXACT


def test_envelope_formula():
    g = ds.cycle_graph(9)
    assert enumeration_envelope(g, 2) == 1 + 9 + 36
    assert enumeration_envelope(ds.path_graph(4), 1) == 0


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=3, max_n=14))
def test_bds_matches_oracle(g):
    gamma = ds.brute_force(g).gamma
    for pruning in (False, True):
        res = ds.bds_solve(g, ds.SolverConfig(pruning=pruning))
        assert res.gamma == gamma
        assert ds.is_dominating(g, res.members)
        assert g.supports <= res.members and not (res.members & g.leaves)
        s, pool = len(g.supports), g.n - len(g.supports) - len(g.leaves)
        for trial in res.trials:
            assert trial.L <= trial.nu < trial.U
            assert trial.L <= gamma <= trial.U
            assert trial.nodes <= sum(math.comb(pool, k) for k in range(trial.nu - s + 1))
        widths = [t.U - t.L for t in res.trials]
        assert widths == sorted(widths, reverse=True) and len(set(widths)) == len(widths)
