"""Lower and upper bounds on the domination number."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class BoundsReport:
    lb_degree: Fraction
    lb_diameter: Fraction
    lb_radius: Fraction
    lb_support: int
    L: int
    ub_leaf: Optional[int] = None
    ub_maxdeg: Optional[int] = None
    ub_heuristic: Optional[int] = None

    @property
    def components(self) -> tuple:
        return (self.lb_degree, self.lb_diameter, self.lb_radius, self.lb_support)

    @property
    def U(self) -> Optional[int]:
        vals = [u for u in (self.ub_leaf, self.ub_maxdeg, self.ub_heuristic) if u is not None]
        return min(vals) if vals else None


def lower_bound(g: Graph) -> BoundsReport:
    """Exact rational components and their ceiled maximum ``L``.

    The support count only bounds the optimum from below when ``n >= 3``
    (on K2 both endpoints are supports yet one vertex dominates), so it is
    reported as 0 on smaller graphs.
    """
    lb_degree = Fraction(g.n, g.max_degree + 1)
    lb_diameter = Fraction(g.diameter + 1, 3)
    lb_radius = Fraction(2 * g.radius, 3)
    lb_support = len(g.supports) if g.n >= 3 else 0
    L = math.ceil(max(lb_degree, lb_diameter, lb_radius, lb_support))
    return BoundsReport(lb_degree, lb_diameter, lb_radius, lb_support, max(L, 1))


def upper_candidates(g: Graph, heuristic_size: Optional[int] = None, report: Optional[BoundsReport] = None) -> BoundsReport:
    report = report or lower_bound(g)
    return replace(
        report,
        ub_leaf=g.n - len(g.leaves),
        ub_maxdeg=g.n - g.max_degree,
        ub_heuristic=heuristic_size,
    )


def bounds(g: Graph, heuristic_size: Optional[int] = None) -> BoundsReport:
    return upper_candidates(g, heuristic_size, lower_bound(g))
