"""Active degree and the greedy initial dominating set."""
from __future__ import annotations

from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph, Solution, _check_vertex


def active_degree(g: Graph, v: int, chosen: Iterable[int]) -> int:
    """Neighbours of ``v`` that are neither chosen nor adjacent to a chosen vertex."""
    _check_vertex(g, v)
    sol = chosen if isinstance(chosen, Solution) else Solution(g, chosen)
    return int(np.count_nonzero(sol.cover_count[g.neighbors(v - 1)] == 0))


def active_degrees(g: Graph, sol: Solution) -> np.ndarray:
    """Active degree of every vertex (0-based array) with respect to ``sol``."""
    return kernels.active_degrees(g.indptr, g.indices, g.rows, sol.cover_count)


def pick_max_active(g: Graph, sol: Solution, allowed: np.ndarray) -> int:
    """1-based vertex of maximum active degree among ``allowed`` (mask); smallest id wins ties."""
    deg = np.where(allowed, active_degrees(g, sol), -1)
    return int(np.argmax(deg)) + 1


def prune_redundant(sol: Solution, keep: Iterable[int] = ()) -> Solution:
    """Drop members whose removal keeps domination, newest first."""
    keep = set(keep)
    g = sol.graph
    for v in reversed(sol.order):
        if v in keep:
            continue
        if (sol.cover_count[g.closed[v - 1]] >= 2).all():
            sol.remove(v)
    return sol


def greedy_solve(g: Graph) -> Solution:
    """Supports first, then maximum active degree until dominating.

    The result is made minimal (every member has a private neighbour), so
    its size never exceeds ``n / 2`` on a connected graph with ``n >= 2``.
    """
    if g.n <= 2:
        return Solution(g, [1])
    sol = Solution(g, sorted(g.supports))
    allowed = np.ones(g.n, dtype=bool)
    allowed[g.leaf_idx] = False
    allowed[g.support_idx] = False
    while not sol.feasible:
        deg = np.where(allowed, active_degrees(g, sol), -1)
        v = int(np.argmax(deg))
        if deg[v] <= 0:
            # only reachable if the non-leaf pool cannot progress
            v = int(np.flatnonzero(sol.cover_count == 0)[0])
        sol.add(v + 1)
        allowed[v] = False
    return prune_redundant(sol, keep=g.supports)
