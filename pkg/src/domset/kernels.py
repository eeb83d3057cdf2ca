"""Hot inner loops, each with a numba kernel and a numpy fallback.

The public names (``eccentricities``, ``active_degrees``, ``search_subsets``)
dispatch to the numba path when it is available and not disabled through
``DOMSET_DISABLE_JIT``; the ``*_numpy`` and ``*_numba`` variants stay
importable so the two paths can be compared directly.

Bitsets are ``(rows, W)`` arrays of ``uint64`` words, bit ``i`` of a row
living in word ``i >> 6`` at position ``i & 63``.
"""
import time

import numpy as np

from . import _jit
from .errors import BudgetExhausted

FOUND, EXHAUSTED, PAUSED = 0, 1, 2
CHUNK_NODES = 1 << 21


def n_words(n):
    return max(1, (n + 63) >> 6)


def closed_neighborhood_bits(n, indptr, indices):
    """Bitset rows of N[v] for every vertex."""
    w = n_words(n)
    bits = np.zeros((n, w), dtype=np.uint64)
    rows = np.concatenate([np.repeat(np.arange(n), np.diff(indptr)), np.arange(n)])
    cols = np.concatenate([indices, np.arange(n)]).astype(np.int64)
    np.bitwise_or.at(bits, (rows, cols >> 6), np.left_shift(np.uint64(1), (cols & 63).astype(np.uint64)))
    return bits


def full_bits(n):
    out = np.zeros(n_words(n), dtype=np.uint64)
    idx = np.arange(n)
    np.bitwise_or.at(out, idx >> 6, np.left_shift(np.uint64(1), (idx & 63).astype(np.uint64)))
    return out


def popcount_rows(bits):
    return np.bitwise_count(bits).sum(axis=-1, dtype=np.int64)


# --- eccentricities -------------------------------------------------------


def eccentricities_numpy(indptr, indices, n, block=512):
    """Eccentricity of every vertex by blocked boolean-matrix BFS; -1 if unreachable."""
    adj = np.zeros((n, n), dtype=np.float32)
    adj[np.repeat(np.arange(n), np.diff(indptr)), indices] = 1.0
    ecc = np.full(n, -1, dtype=np.int64)
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        reach = np.zeros((hi - lo, n), dtype=bool)
        reach[np.arange(hi - lo), np.arange(lo, hi)] = True
        done = reach.all(axis=1)
        ecc[lo:hi][done] = 0
        level = 0
        while not done.all():
            level += 1
            grown = reach | ((reach.astype(np.float32) @ adj) > 0)
            if np.array_equal(grown, reach):
                break
            reach = grown
            just = ~done & reach.all(axis=1)
            ecc[lo:hi][just] = level
            done |= just
    return ecc


@_jit.njit(cache=True)
def _eccentricities_jit(indptr, indices, n):
    ecc = np.empty(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for src in range(n):
        dist[:] = -1
        dist[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = du
                    queue[tail] = w
                    tail += 1
        if tail < n:
            ecc[src] = -1
        else:
            ecc[src] = dist[queue[tail - 1]]
    return ecc


def eccentricities_numba(indptr, indices, n):
    return _eccentricities_jit(indptr.astype(np.int64), indices.astype(np.int64), n)


# --- active degrees -------------------------------------------------------


def active_degrees_numpy(indptr, indices, rows, cover):
    """Per vertex, the number of neighbours whose cover count is zero."""
    n = len(indptr) - 1
    if len(indices) == 0:
        return np.zeros(n, dtype=np.int64)
    return np.bincount(rows, weights=(cover[indices] == 0), minlength=n).astype(np.int64)


@_jit.njit(cache=True)
def _active_degrees_jit(indptr, indices, cover):
    n = len(indptr) - 1
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        c = 0
        for p in range(indptr[v], indptr[v + 1]):
            if cover[indices[p]] == 0:
                c += 1
        out[v] = c
    return out


def active_degrees_numba(indptr, indices, rows, cover):
    return _active_degrees_jit(indptr, indices, cover)


# --- subset enumeration ---------------------------------------------------
#
# Preorder DFS over subsets of ``items`` with at most ``k`` members, in
# lexicographic position order. Every visited node is tested for
# domination; the first feasible node is returned. With ``prune`` set a
# child is skipped when the remaining slots times the largest closed
# neighbourhood among the remaining items cannot reach the uncovered count;
# siblings further right are then skipped too, as ``sufmax`` is
# non-increasing.


@_jit.njit(cache=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@_jit.njit(cache=True)
def _uncovered(full, cov):
    u = 0
    for w in range(len(full)):
        u += _popcount64(full[w] & ~cov[w])
    return u


@_jit.njit(cache=True)
def _search_chunk(nb, items, full, k, cov, pos, state, prune, sufmax, limit):
    # state = [depth, mode, nodes]; mode 0 visits the current node, 1 advances.
    m = len(items)
    nw = len(full)
    depth = state[0]
    mode = state[1]
    nodes = state[2]
    while True:
        if mode == 0:
            if nodes >= limit:
                state[0] = depth
                state[1] = mode
                state[2] = nodes
                return PAUSED
            nodes += 1
            feasible = True
            for w in range(nw):
                if cov[depth, w] != full[w]:
                    feasible = False
                    break
            if feasible:
                state[0] = depth
                state[1] = 1
                state[2] = nodes
                return FOUND
            mode = 1
            start = pos[depth - 1] + 1 if depth > 0 else 0
            if depth < k and start < m:
                ok = True
                if prune:
                    if (k - depth) * sufmax[start] < _uncovered(full, cov[depth]):
                        ok = False
                if ok:
                    pos[depth] = start
                    v = items[start]
                    for w in range(nw):
                        cov[depth + 1, w] = cov[depth, w] | nb[v, w]
                    depth += 1
                    mode = 0
                    continue
        # advance to the next sibling, backtracking as needed
        while depth > 0:
            p = pos[depth - 1] + 1
            ok = p < m
            if ok and prune:
                if (k - depth + 1) * sufmax[p] < _uncovered(full, cov[depth - 1]):
                    ok = False
            if ok:
                pos[depth - 1] = p
                v = items[p]
                for w in range(nw):
                    cov[depth, w] = cov[depth - 1, w] | nb[v, w]
                mode = 0
                break
            depth -= 1
        if mode == 1:
            state[0] = 0
            state[1] = 1
            state[2] = nodes
            return EXHAUSTED


def _suffix_max(nb_sizes, items):
    out = np.zeros(len(items) + 1, dtype=np.int64)
    if len(items):
        out[:-1] = np.maximum.accumulate(nb_sizes[items][::-1])[::-1]
    return out


def search_subsets_numba(nb, items, base, full, k, *, node_limit=None, deadline=None, prune=False, nb_sizes=None):
    """Return ``(positions, nodes)`` of the first feasible node, or ``(None, nodes)``.

    Raises :class:`BudgetExhausted` when ``node_limit`` or ``deadline``
    (a ``time.monotonic`` value) stops the walk first.
    """
    items = np.asarray(items, dtype=np.int64)
    k = int(min(k, len(items)))
    cov = np.zeros((k + 1, len(full)), dtype=np.uint64)
    cov[0] = base
    pos = np.zeros(max(k, 1), dtype=np.int64)
    state = np.zeros(3, dtype=np.int64)
    if nb_sizes is None:
        nb_sizes = popcount_rows(nb)
    sufmax = _suffix_max(nb_sizes, items)
    cap = np.iinfo(np.int64).max if node_limit is None else int(node_limit)
    while True:
        limit = min(cap, int(state[2]) + CHUNK_NODES)
        status = _search_chunk(nb, items, full, k, cov, pos, state, bool(prune), sufmax, limit)
        nodes = int(state[2])
        if status == FOUND:
            return [int(p) for p in pos[: state[0]]], nodes
        if status == EXHAUSTED:
            return None, nodes
        if nodes >= cap:
            raise BudgetExhausted(nodes, "node cap")
        if deadline is not None and time.monotonic() >= deadline:
            raise BudgetExhausted(nodes, "deadline")


class _Found(Exception):
    def __init__(self, positions):
        self.positions = positions


def search_subsets_numpy(nb, items, base, full, k, *, node_limit=None, deadline=None, prune=False, nb_sizes=None):
    """Same walk and node accounting as the numba kernel; the last level is tested as one batch."""
    items = np.asarray(items, dtype=np.int64)
    m = len(items)
    k = int(min(k, m))
    if nb_sizes is None:
        nb_sizes = popcount_rows(nb)
    sufmax = _suffix_max(nb_sizes, items)
    cap = np.iinfo(np.int64).max if node_limit is None else int(node_limit)
    nodes = 0
    item_bits = nb[items]

    def uncovered(cov):
        return int(np.bitwise_count(full & ~cov).sum())

    def visit(depth, start, cov, chosen):
        nonlocal nodes
        if nodes >= cap:
            raise BudgetExhausted(nodes, "node cap")
        if deadline is not None and time.monotonic() >= deadline:
            raise BudgetExhausted(nodes, "deadline")
        nodes += 1
        if np.array_equal(cov, full):
            raise _Found(chosen)
        if depth >= k or start >= m:
            return
        stop = m
        if prune:
            u = uncovered(cov)
            stop = start + int(np.count_nonzero((k - depth) * sufmax[start:m] >= u))
        if depth == k - 1:
            covs = item_bits[start:stop] | cov
            hits = np.flatnonzero((covs == full).all(axis=1))
            span = stop - start
            if hits.size and nodes + hits[0] + 1 <= cap:
                nodes += int(hits[0]) + 1
                raise _Found(chosen + [start + int(hits[0])])
            if nodes + span > cap:
                nodes = cap
                raise BudgetExhausted(nodes, "node cap")
            nodes += span
            return
        for p in range(start, stop):
            visit(depth + 1, p + 1, cov | item_bits[p], chosen + [p])

    try:
        visit(0, 0, np.asarray(base, dtype=np.uint64), [])
    except _Found as hit:
        return hit.positions, nodes
    return None, nodes


def set_backend(name):
    """Switch the dispatching names to ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global eccentricities, active_degrees, search_subsets, BACKEND
    if name == "numba" and not _jit.HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    impl = {
        "numba": (eccentricities_numba, active_degrees_numba, search_subsets_numba),
        "numpy": (eccentricities_numpy, active_degrees_numpy, search_subsets_numpy),
    }[name]
    prev = globals().get("BACKEND")
    eccentricities, active_degrees, search_subsets = impl
    BACKEND = name
    return prev


set_backend("numba" if _jit.USE_NUMBA else "numpy")
