"""Exhaustive domination-number oracle for small graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import SizeGuardExceeded
from .graph import Graph

MAX_ORACLE_N = 25


@dataclass(frozen=True)
class OracleResult:
    gamma: int
    witness: frozenset
    subsets_tested: int


def brute_force(g: Graph, size_cap: Optional[int] = None) -> OracleResult:
    """Try every k-subset in lexicographic order for k = 1, 2, ...; the first hit is minimum.

    ``size_cap`` stops the search after that subset size (returns gamma 0
    with an empty witness when nothing was found up to the cap).
    """
    if g.n > MAX_ORACLE_N:
        raise SizeGuardExceeded(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
    masks = [1 << (v - 1) for v in range(1, g.n + 1)]
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    full = (1 << g.n) - 1
    tested = 0
    top = g.n if size_cap is None else min(size_cap, g.n)
    for k in range(1, top + 1):
        for combo in combinations(range(g.n), k):
            tested += 1
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                return OracleResult(k, frozenset(v + 1 for v in combo), tested)
    return OracleResult(0, frozenset(), tested)
