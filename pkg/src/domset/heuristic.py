"""Breadth/depth hybrid heuristic (DBS).

Partial "base" solutions of size ``beta`` (all supports plus ``beta - s``
more vertices) are drawn breadth-first; each is then grown depth-first one
vertex at a time up to ``U - 1`` vertices. Any dominating base or
extension becomes the new incumbent, ``beta`` is recomputed from its size
and the level restarts. The solve stops when a level runs out of bases.
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from .errors import AlphaOutOfRange, Exhausted
from .exact import SolverConfig
from .graph import Graph, Solution
from .greedy import greedy_solve, pick_max_active

log = logging.getLogger(__name__)

ALPHA_RANGE = (0.2, 0.7)
COLLISION_RETRIES = 50
BASES_PER_VERTEX = 10

RULE_SOLUTION_PREFIX = 1
RULE_SOLUTION_RANDOM = 2
RULE_POOL_RANDOM = 3
RULE_LEXICOGRAPHIC = 4


def beta(alpha: float, U: int, s: int) -> int:
    """Base-solution size ``floor(alpha * (U - s)) + s``."""
    if not 0 < alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    if not 0 <= s <= U:
        raise ValueError(f"need 0 <= s <= U, got s={s}, U={U}")
    return math.floor(alpha * (U - s)) + s


@dataclass(frozen=True)
class BaseSolution:
    members: tuple  # 1-based, supports first
    rule: int
    h: int

    def __len__(self):
        return len(self.members)


@dataclass
class SeenBases:
    """Bases already emitted at one size, plus the lexicographic fallback once engaged."""

    keys: set = field(default_factory=set)
    lex: Optional[Iterator] = None

    def __len__(self):
        return len(self.keys)


def make_base(g: Graph, sigma: Solution, beta_: int, h: int, rng: np.random.Generator, seen: SeenBases) -> BaseSolution:
    supports = sorted(g.supports)
    need = beta_ - len(supports)
    if need < 0:
        raise ValueError(f"beta={beta_} smaller than the support count {len(supports)}")
    pool = [int(v) + 1 for v in g.core_idx]
    if len(seen) >= math.comb(len(pool), need):
        raise Exhausted(f"all {len(seen)} bases of size {beta_} emitted")
    sigma_core = [v for v in sigma.order if v not in g.supports]

    def emit(chosen, rule):
        key = tuple(sorted(chosen))
        if key in seen.keys:
            return None
        seen.keys.add(key)
        return BaseSolution(tuple(supports) + tuple(chosen), rule, h)

    if seen.lex is None:
        if h == 0:
            rule, draw = RULE_SOLUTION_PREFIX, lambda: sigma_core[:need]
            first = emit(draw(), rule)
            if first is not None:
                return first
        if 0 < h < math.comb(len(sigma_core), need):
            rule = RULE_SOLUTION_RANDOM
            draw = lambda: [sigma_core[i] for i in rng.choice(len(sigma_core), need, replace=False)]
        else:
            rule = RULE_POOL_RANDOM
            draw = lambda: [pool[i] for i in rng.choice(len(pool), need, replace=False)]
        for _ in range(COLLISION_RETRIES):
            out = emit(draw(), rule)
            if out is not None:
                return out
        log.debug("base collisions at beta=%d; switching to lexicographic order", beta_)
        seen.lex = combinations(pool, need)
    for chosen in seen.lex:
        out = emit(list(chosen), RULE_LEXICOGRAPHIC)
        if out is not None:
            return out
    raise Exhausted(f"lexicographic bases of size {beta_} exhausted")


def extend(g: Graph, base: BaseSolution | Solution, U: int, h: int, rng: np.random.Generator) -> Optional[Solution]:
    """Grow ``base`` one vertex at a time up to ``U - 1`` vertices; first dominating set or None.

    The first base of a level (``h == 0``) grows by uniformly random
    non-leaf vertices, later ones by maximum active degree.
    """
    sol = base.copy() if isinstance(base, Solution) else Solution(g, base.members)
    allowed = np.ones(g.n, dtype=bool)
    allowed[g.leaf_idx] = False
    for v in sol.members:
        allowed[v - 1] = False
    while len(sol) < U - 1:
        if not allowed.any():
            return None
        if h == 0:
            x = int(rng.choice(np.flatnonzero(allowed))) + 1
        else:
            x = pick_max_active(g, sol, allowed)
        sol.add(x)
        allowed[x - 1] = False
        if sol.feasible:
            return sol
    return None


@dataclass
class Level:
    beta: int
    U: int
    bases: int = 0
    improved: bool = False
    exhausted: bool = False  # every base of this size was tried


@dataclass
class DbsResult:
    size: int
    witness: Solution
    alpha: float
    levels: list
    initial_size: int
    timed_out: bool = False

    @property
    def members(self) -> frozenset:
        return self.witness.members

    @property
    def bases_tried(self) -> int:
        return sum(lv.bases for lv in self.levels)


def dbs_solve(g: Graph, cfg: Optional[SolverConfig] = None, *, unlimited: bool = False,
              initial: Optional[Solution] = None) -> DbsResult:
    """Run the heuristic; the returned witness always dominates ``g``.

    Each level tries at most ``cfg.max_bases_per_level`` bases (default
    ``10 n``); ``unlimited`` lifts that cap so a level ends only when every
    base of its size has been tried.
    """
    cfg = cfg or SolverConfig()
    start = time.monotonic()
    deadline = cfg.deadline(start)
    sigma = initial.copy() if initial is not None else greedy_solve(g)
    rng = np.random.default_rng(cfg.seed)
    alpha = cfg.alpha if cfg.alpha is not None else float(rng.uniform(*ALPHA_RANGE))
    if not 0 < alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    U = len(sigma)
    result = DbsResult(U, sigma, alpha, [], U)
    if g.n <= 2:
        return result
    s = len(g.supports)
    pool = len(g.core_idx)
    cap = cfg.max_bases_per_level or BASES_PER_VERTEX * g.n

    while True:
        b = beta(alpha, U, s)
        if b >= U:
            break
        level = Level(b, U)
        result.levels.append(level)
        h_max = math.comb(pool, b - s)
        limit = h_max if unlimited else min(h_max, cap)
        seen = SeenBases()
        h = 0
        found = None
        while h < limit:
            if deadline is not None and time.monotonic() >= deadline:
                result.timed_out = True
                break
            try:
                base = make_base(g, sigma, b, h, rng, seen)
            except Exhausted:
                break
            level.bases += 1
            cand = Solution(g, base.members)
            found = cand if cand.feasible else extend(g, cand, U, h, rng)
            if found is not None:
                break
            h += 1
        if found is None:
            level.exhausted = not result.timed_out and len(seen) >= h_max
            break
        level.improved = True
        sigma, U = found, len(found)
        log.debug("dbs improved to %d at beta=%d after %d bases", U, b, level.bases)
    result.size, result.witness = U, sigma
    return result
