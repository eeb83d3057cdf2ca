"""Simple connected graphs, dominating-set bookkeeping, I/O and generation.

Vertices are 1-based at every public boundary (DIMACS files, solution sets
returned to callers) and 0-based in the arrays held by :class:`Graph`.
"""
from __future__ import annotations

import heapq
import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    DisconnectedGraph,
    EdgeBudgetOutOfRange,
    EdgeCountMismatch,
    MalformedHeader,
    SelfLoop,
    VertexOutOfRange,
)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected connected graph.

    Build through :func:`from_edge_list`, :func:`parse_dimacs` or
    :func:`random_connected` rather than directly.
    """

    n: int
    edges: tuple  # sorted 1-based (u, v) pairs with u < v
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    degree: np.ndarray = field(repr=False)
    diameter: int
    radius: int
    leaves: frozenset
    supports: frozenset

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return int(self.degree.max()) if self.n else 0

    @property
    def density(self) -> float:
        return 2 * self.m / (self.n * (self.n - 1)) if self.n > 1 else 0.0

    def neighbors(self, v: int) -> np.ndarray:
        """0-based neighbours of 0-based vertex ``v``."""
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @cached_property
    def rows(self) -> np.ndarray:
        return np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))

    @cached_property
    def closed(self) -> tuple:
        """0-based closed neighbourhood arrays, one per vertex."""
        return tuple(np.append(self.neighbors(v), v) for v in range(self.n))

    @cached_property
    def nb_bits(self) -> np.ndarray:
        return kernels.closed_neighborhood_bits(self.n, self.indptr, self.indices)

    @cached_property
    def full_bits(self) -> np.ndarray:
        return kernels.full_bits(self.n)

    @cached_property
    def leaf_idx(self) -> np.ndarray:
        return np.array(sorted(v - 1 for v in self.leaves), dtype=np.int64)

    @cached_property
    def support_idx(self) -> np.ndarray:
        return np.array(sorted(v - 1 for v in self.supports), dtype=np.int64)

    @cached_property
    def core_idx(self) -> np.ndarray:
        """0-based vertices that are neither leaves nor supports."""
        mask = np.ones(self.n, dtype=bool)
        mask[self.leaf_idx] = False
        mask[self.support_idx] = False
        return np.flatnonzero(mask)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree}, d={self.diameter}, r={self.radius})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 1 <= v <= g.n:
        raise VertexOutOfRange(f"vertex {v} not in 1..{g.n}")


def from_edge_list(n: int, pairs: Iterable) -> Graph:
    """Build a :class:`Graph` from 1-based vertex pairs; repeated pairs collapse."""
    if n < 1:
        raise VertexOutOfRange("a graph needs at least one vertex")
    seen = set()
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))

    e = np.array(edges, dtype=np.int64).reshape(-1, 2) - 1
    src = np.concatenate([e[:, 0], e[:, 1]])
    dst = np.concatenate([e[:, 1], e[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    degree = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degree, out=indptr[1:])
    indices = dst.astype(np.int64)

    ecc = kernels.eccentricities(indptr, indices, n)
    if (ecc < 0).any():
        missing = int(np.flatnonzero(ecc < 0)[0]) + 1
        raise DisconnectedGraph(f"graph on {n} vertices is disconnected (vertex {missing} unreachable)")

    leaf0 = np.flatnonzero(degree == 1)
    leaves = frozenset(int(v) + 1 for v in leaf0)
    supports = frozenset(int(indices[indptr[v]]) + 1 for v in leaf0)
    return Graph(
        n=n,
        edges=edges,
        indptr=indptr,
        indices=indices,
        degree=degree,
        diameter=int(ecc.max()),
        radius=int(ecc.min()),
        leaves=leaves,
        supports=supports,
    )


def eccentricity_profile(g: Graph) -> tuple[int, int]:
    """(diameter, radius) recomputed by BFS from every vertex."""
    ecc = kernels.eccentricities(g.indptr, g.indices, g.n)
    return int(ecc.max()), int(ecc.min())


# --- dominating-set bookkeeping ------------------------------------------


class Solution:
    """Vertex subset with per-vertex closed-neighbourhood cover counts.

    Members are kept in insertion order; the heuristic relies on that order.
    All public vertex arguments are 1-based.
    """

    def __init__(self, g: Graph, members: Iterable[int] = ()):
        self.graph = g
        self._order: list[int] = []
        self._set: set[int] = set()
        self.cover_count = np.zeros(g.n, dtype=np.int64)
        self.uncovered = g.n
        for v in members:
            self.add(v)

    def add(self, v: int) -> None:
        _check_vertex(self.graph, v)
        if v in self._set:
            return
        self._set.add(v)
        self._order.append(v)
        nbhd = self.graph.closed[v - 1]
        self.uncovered -= int(np.count_nonzero(self.cover_count[nbhd] == 0))
        self.cover_count[nbhd] += 1

    def remove(self, v: int) -> None:
        if v not in self._set:
            raise KeyError(v)
        self._set.remove(v)
        self._order.remove(v)
        nbhd = self.graph.closed[v - 1]
        self.cover_count[nbhd] -= 1
        self.uncovered += int(np.count_nonzero(self.cover_count[nbhd] == 0))

    @property
    def feasible(self) -> bool:
        return self.uncovered == 0

    @property
    def members(self) -> frozenset:
        return frozenset(self._set)

    @property
    def order(self) -> list[int]:
        return list(self._order)

    def copy(self) -> "Solution":
        out = Solution.__new__(Solution)
        out.graph = self.graph
        out._order = list(self._order)
        out._set = set(self._set)
        out.cover_count = self.cover_count.copy()
        out.uncovered = self.uncovered
        return out

    def __len__(self):
        return len(self._set)

    def __contains__(self, v):
        return v in self._set

    def __iter__(self):
        return iter(self._order)

    def __repr__(self):
        return f"Solution({sorted(self._set)}, feasible={self.feasible})"


def is_dominating(g: Graph, members: Iterable[int]) -> bool:
    """True iff every vertex is in ``members`` or adjacent to one of them."""
    cover = np.zeros(g.n, dtype=np.int64)
    for v in members:
        _check_vertex(g, v)
        cover[g.closed[v - 1]] += 1
    return bool((cover > 0).all())


# --- DIMACS ---------------------------------------------------------------


def parse_dimacs(text) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` text (bytes or str)."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    header = None
    pairs = []
    for lineno, raw in enumerate(io.StringIO(text), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise MalformedHeader(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise MalformedHeader(f"line {lineno}: expected 'p edge <n> <m>', got {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedHeader(f"line {lineno}: non-integer size in {line!r}") from None
        elif parts[0] == "e":
            if header is None:
                raise MalformedHeader(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise MalformedHeader(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise MalformedHeader(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise MalformedHeader("missing 'p edge <n> <m>' line")
    n, m = header
    distinct = {(min(u, v), max(u, v)) for u, v in pairs}
    if len(pairs) != m or len(distinct) != m:
        raise EdgeCountMismatch(f"header declares {m} edges, found {len(pairs)} lines / {len(distinct)} distinct")
    return from_edge_list(n, pairs)


def write_dimacs(g: Graph, seed=None) -> str:
    lines = []
    if seed is not None:
        lines.append(f"c generated seed={seed}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# --- generation -----------------------------------------------------------


def _random_tree(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random labelled tree on 0..n-1 via a Prüfer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2)
    deg = np.ones(n, dtype=np.int64)
    np.add.at(deg, seq, 1)
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    tree = []
    for x in seq:
        leaf = heapq.heappop(heap)
        tree.append((leaf, int(x)))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, int(x))
    tree.append((heapq.heappop(heap), heapq.heappop(heap)))
    return tree


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree plus uniformly chosen extra edges, exactly ``m`` in total."""
    if n < 1 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise EdgeBudgetOutOfRange(f"need n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    tree = _random_tree(n, rng)
    extra = m - len(tree)
    pairs = list(tree)
    if extra:
        iu, iv = np.triu_indices(n, 1)
        code = iu * n + iv
        tcode = np.array([min(a, b) * n + max(a, b) for a, b in tree], dtype=np.int64)
        free = np.flatnonzero(~np.isin(code, tcode))
        pick = np.sort(rng.choice(free, size=extra, replace=False))
        pairs.extend(zip(iu[pick].tolist(), iv[pick].tolist()))
    return from_edge_list(n, [(u + 1, v + 1) for u, v in pairs])


def edges_for_density(n: int, density: float) -> int:
    return max(n - 1, min(n * (n - 1) // 2, round(density * n * (n - 1) / 2)))


# --- named families -------------------------------------------------------


def path_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, i + 1) for i in range(1, k)])


def cycle_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, i % k + 1) for i in range(1, k + 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return from_edge_list(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
