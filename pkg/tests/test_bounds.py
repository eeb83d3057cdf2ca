import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

import domset as ds
from domset.bounds import bounds

from .conftest import connected_graphs


def test_p4_components():
    rep = ds.lower_bound(ds.path_graph(4))
    assert rep.components == (Fraction(4, 3), Fraction(4, 3), Fraction(4, 3), 2)
    assert rep.L == 2


def test_k2_drops_support_bound():
    rep = ds.lower_bound(ds.complete_graph(2))
    assert rep.components[:3] == (Fraction(1), Fraction(2, 3), Fraction(2, 3))
    assert rep.lb_support == 0
    assert rep.L == 1 == ds.brute_force(ds.complete_graph(2)).gamma


def test_ceiling_of_printed_components():
    # table row printed truncated components (2, 1, 1, 2); the ceiled max is still 2
    assert math.ceil(max(2, 1, 1, 2)) == 2
    # n=50 with n - max_degree = 33 gives 50/18, printed as 2 but ceiled to 3
    assert math.ceil(Fraction(50, 18)) == 3


@pytest.mark.parametrize(
    "n, ub_maxdeg, printed",
    [(50, 33, 2), (60, 40, 2), (70, 45, 2)],
)
def test_degree_component_consistent_with_table(n, ub_maxdeg, printed):
    delta = n - ub_maxdeg
    assert Fraction(n, delta + 1) <= printed + 1


def test_upper_candidates():
    rep = ds.upper_candidates(ds.star_graph(4))
    assert rep.ub_maxdeg == 1
    rep = ds.upper_candidates(ds.path_graph(4), heuristic_size=2)
    assert rep.ub_leaf == 2 and rep.ub_heuristic == 2 and rep.U == 2


def test_table_row_maxdeg():
    g = ds.from_edge_list(50, [(1, i) for i in range(2, 19)] + [(i, i + 1) for i in range(18, 50)])
    assert g.max_degree == 17
    assert ds.upper_candidates(g).ub_maxdeg == 33


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=3, max_n=12))
def test_sandwich(g):
    rep = bounds(g)
    gamma = ds.brute_force(g).gamma
    assert rep.L <= gamma <= min(rep.ub_leaf, rep.ub_maxdeg)
    assert rep.L == math.ceil(max(rep.components))
