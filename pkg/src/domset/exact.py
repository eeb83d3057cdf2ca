"""Exact implicit-enumeration solver (BDS).

A priority list orders the non-leaf, non-support vertices; for a trial size
``nu`` every subset of that list with at most ``nu - s`` members is walked
depth-first in list order, always together with all supports, and the
first dominating one is returned. A binary search over ``nu`` between the
combined lower bound and the best size found so far closes the gap.
"""
from __future__ import annotations

import enum
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .bounds import lower_bound
from .errors import BudgetExhausted, InfeasibleSeed
from .graph import Graph, Solution
from .greedy import active_degrees, greedy_solve

log = logging.getLogger(__name__)


class Proof(str, enum.Enum):
    EXACT = "Exact"
    UPPER_BOUND_ONLY = "UpperBoundOnly"


@dataclass
class SolverConfig:
    seed: int = 0
    time_limit_s: Optional[float] = None
    node_cap: Optional[int] = None
    max_bases_per_level: Optional[int] = None
    alpha: Optional[float] = None
    pruning: bool = False

    def __post_init__(self):
        for name in ("time_limit_s", "node_cap", "max_bases_per_level"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive, got {val}")

    def deadline(self, start: float) -> Optional[float]:
        return None if self.time_limit_s is None else start + self.time_limit_s


@dataclass(frozen=True)
class PriorityList:
    order: tuple  # 1-based vertices
    supports: frozenset
    leaves: frozenset

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


@dataclass
class Trial:
    nu: int
    L: int
    U: int
    nodes: int
    found: Optional[int]  # size found, None when exhausted
    exhausted_budget: bool = False


@dataclass
class SearchState:
    L: int
    U: int
    best: Solution
    plist: PriorityList
    nu: int = 0
    nodes_visited: int = 0
    deadline: Optional[float] = None
    node_cap: Optional[int] = None
    pruning: bool = False
    trials: list = field(default_factory=list)

    def node_limit(self) -> Optional[int]:
        return None if self.node_cap is None else max(0, self.node_cap - self.nodes_visited)


@dataclass
class BdsResult:
    gamma: int
    witness: Solution
    proof: Proof
    L: int
    nodes_visited: int
    trials: list
    initial_upper: int

    @property
    def members(self) -> frozenset:
        return self.witness.members


def build_priority_list(g: Graph, s: Solution) -> PriorityList:
    """Solution vertices by iterated maximum active degree, then the rest by degree."""
    if not s.feasible:
        raise InfeasibleSeed(f"seed {sorted(s.members)} does not dominate the graph")
    excluded = g.supports | g.leaves
    pending = np.zeros(g.n, dtype=bool)
    for v in s.members - excluded:
        pending[v - 1] = True
    listed = Solution(g, sorted(g.supports))
    order = []
    while pending.any():
        deg = np.where(pending, active_degrees(g, listed), -1)
        v = int(np.argmax(deg))
        pending[v] = False
        order.append(v + 1)
        listed.add(v + 1)
    rest = [v for v in range(1, g.n + 1) if v not in excluded and v not in s.members]
    rest.sort(key=lambda v: (-int(g.degree[v - 1]), v))
    order.extend(rest)
    return PriorityList(tuple(order), g.supports, g.leaves)


def enumeration_envelope(g: Graph, nu: int) -> int:
    """Largest number of nodes one trial at size ``nu`` may visit."""
    s, pool = len(g.supports), g.n - len(g.supports) - len(g.leaves)
    return sum(math.comb(pool, k) for k in range(0, max(-1, nu - s) + 1))


def _support_cover(g: Graph) -> np.ndarray:
    if len(g.support_idx):
        return np.bitwise_or.reduce(g.nb_bits[g.support_idx], axis=0)
    return np.zeros_like(g.full_bits)


def next_feasible(g: Graph, nu: int, plist: PriorityList, state: Optional[SearchState] = None) -> Optional[Solution]:
    """First dominating ``Supp + subset(plist)`` with at most ``nu`` vertices, or None.

    Raises :class:`BudgetExhausted` if the state's deadline or node cap
    stops the walk; the visited count is added to ``state`` either way.
    """
    s = len(g.supports)
    if nu < s:
        return None
    items = np.array([v - 1 for v in plist.order], dtype=np.int64)
    kw = {}
    if state is not None:
        kw = dict(node_limit=state.node_limit(), deadline=state.deadline, prune=state.pruning)
    try:
        positions, nodes = kernels.search_subsets(
            g.nb_bits, items, _support_cover(g), g.full_bits, nu - s,
            nb_sizes=g.degree + 1, **kw,
        )
    except BudgetExhausted as exc:
        if state is not None:
            state.nodes_visited += exc.nodes_visited
            state.trials.append(Trial(nu, state.L, state.U, exc.nodes_visited, None, True))
        raise
    if state is not None:
        state.nodes_visited += nodes
        state.trials.append(Trial(nu, state.L, state.U, nodes, None if positions is None else s + len(positions)))
    if positions is None:
        return None
    return Solution(g, sorted(g.supports) + [plist.order[p] for p in positions])


def _trial_size(L: int, U: int) -> int:
    nu = (L + 3 * U) // 4
    assert L <= nu < U
    return nu


def bds_solve(g: Graph, cfg: Optional[SolverConfig] = None, initial: Optional[Solution] = None) -> BdsResult:
    """Binary search on the solution size between the lower bound and the greedy size.

    ``L`` is kept as a proven lower bound: a trial size with no dominating
    set moves it to ``nu + 1``, and the search stops once ``L == U``.
    """
    cfg = cfg or SolverConfig()
    start = time.monotonic()
    L = lower_bound(g).L
    best = initial.copy() if initial is not None else greedy_solve(g)
    U = len(best)
    if g.n <= 2:
        return BdsResult(1, best, Proof.EXACT, 1, 0, [], U)
    state = SearchState(
        L=L, U=U, best=best, plist=build_priority_list(g, best),
        deadline=cfg.deadline(start), node_cap=cfg.node_cap, pruning=cfg.pruning,
    )
    proof = Proof.EXACT
    while state.L < state.U:
        state.nu = nu = _trial_size(state.L, state.U)
        log.debug("bds trial nu=%d in [%d, %d]", nu, state.L, state.U)
        try:
            found = next_feasible(g, nu, state.plist, state)
        except BudgetExhausted as exc:
            log.info("bds budget exhausted (%s) at nu=%d", exc.reason, nu)
            proof = Proof.UPPER_BOUND_ONLY
            break
        if found is None:
            state.L = nu + 1
        else:
            state.best = found
            state.U = len(found)
            state.plist = build_priority_list(g, found)
    gamma = state.U
    return BdsResult(gamma, state.best, proof, state.L, state.nodes_visited, state.trials, U)
