"""Bitmask kernels for facet sets, clique enumeration and isomorph rejection.

A complex on at most 64 vertices is held as a sorted ``uint64`` array of facet
masks.  Every kernel exists twice: a loop version compiled with numba, and a
numpy version used when numba is missing or when ``SPGAMES_DISABLE_NUMBA=1``
is set in the environment.  Both versions are importable under explicit
names (``*_nb`` / ``*_np``) so tests and benchmarks can compare them.
"""
from __future__ import annotations

import os
import warnings

import numpy as np

MAX_BITS = 64

_U1 = np.uint64(1)
_U0 = np.uint64(0)

try:
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SPGAMES_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# numpy / pure Python reference versions


def maximal_np(masks: np.ndarray) -> np.ndarray:
    """Inclusion-maximal members of ``masks``, deduplicated and sorted."""
    if masks.size == 0:
        return masks.astype(np.uint64)
    m = np.unique(masks.astype(np.uint64))
    if m.size == 1:
        return m
    keep = np.ones(m.size, dtype=bool)
    # row blocks bound the memory of the pairwise subset test
    for lo in range(0, m.size, 1024):
        rows = m[lo:lo + 1024, None]
        sub = ((rows & m[None, :]) == rows) & (rows != m[None, :])
        keep[lo:lo + 1024] = ~sub.any(axis=1)
    return m[keep]


def link_np(masks: np.ndarray, bit: int) -> np.ndarray:
    b = np.uint64(1) << np.uint64(bit)
    sel = masks[(masks & b) != 0]
    if sel.size == 0:
        return sel
    return maximal_np(sel & ~b)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_cliques_np(adj: np.ndarray) -> np.ndarray:
    """Bron-Kerbosch with pivoting over a bitmask adjacency list."""
    n = adj.size
    nbr = [int(a) for a in adj]
    out: list[int] = []
    if n == 0:
        return np.zeros(0, dtype=np.uint64)

    def expand(r: int, p: int, x: int) -> None:
        if p == 0:
            if x == 0:
                out.append(r)
            return
        px = p | x
        best, best_cnt = -1, -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            cnt = _popcount(p & nbr[u])
            if cnt > best_cnt:
                best, best_cnt = u, cnt
            px ^= low
        cand = p & ~nbr[best]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & nbr[v], x & nbr[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, (1 << n) - 1, 0)
    return np.sort(np.array(out, dtype=np.uint64))


def set_codes_np(facet_sets: np.ndarray, perm_table: np.ndarray) -> np.ndarray:
    """Minimum over permutations of each family-of-subsets code.

    ``facet_sets[i]`` has bit ``S`` set when subset ``S`` (a mask over at most
    six points) is a facet; ``perm_table[k, S]`` is the image of ``S`` under
    the k-th permutation.
    """
    n_sub = perm_table.shape[1]
    bits = (facet_sets[:, None] >> np.arange(n_sub, dtype=np.uint64)[None, :]) & _U1
    best = np.full(facet_sets.size, np.iinfo(np.uint64).max, dtype=np.uint64)
    for row in perm_table:
        weights = np.left_shift(_U1, row.astype(np.uint64))
        code = np.bitwise_or.reduce(np.where(bits == 1, weights[None, :], _U0), axis=1)
        np.minimum(best, code, out=best)
    return best


def orbit_min_np(labels: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """Minimum image of each point-mask in ``labels`` under the rows of ``perms``."""
    n = perms.shape[1]
    bits = (labels[:, None] >> np.arange(n, dtype=np.uint64)[None, :]) & _U1
    best = np.full(labels.size, np.iinfo(np.uint64).max, dtype=np.uint64)
    for row in perms:
        weights = np.left_shift(_U1, row.astype(np.uint64))
        code = (bits * weights[None, :]).sum(axis=1, dtype=np.uint64)
        np.minimum(best, code, out=best)
    return best


# ---------------------------------------------------------------------------
# numba versions

if HAVE_NUMBA:

    @njit(cache=True)
    def _maximal_sorted_nb(m):
        # m sorted ascending and unique
        n = m.size
        keep = np.ones(n, dtype=np.bool_)
        for i in range(n):
            a = m[i]
            for j in range(n):
                if i != j and (a & m[j]) == a:
                    keep[i] = False
                    break
        return m[keep]

    @njit(cache=True)
    def maximal_nb(masks):
        if masks.size == 0:
            return masks.copy()
        m = np.unique(masks)
        return _maximal_sorted_nb(m)

    @njit(cache=True)
    def link_nb(masks, bit):
        b = np.uint64(1) << np.uint64(bit)
        nb = np.uint64(~b)
        cnt = 0
        for i in range(masks.size):
            if masks[i] & b:
                cnt += 1
        sel = np.empty(cnt, dtype=np.uint64)
        k = 0
        for i in range(masks.size):
            if masks[i] & b:
                sel[k] = masks[i] & nb
                k += 1
        if cnt == 0:
            return sel
        return _maximal_sorted_nb(np.unique(sel))

    @njit(cache=True)
    def _popcount_nb(x):
        c = 0
        while x:
            x &= x - np.uint64(1)
            c += 1
        return c

    @njit(cache=True)
    def _lowbit_index(x):
        i = 0
        while (x & np.uint64(1)) == 0:
            x >>= np.uint64(1)
            i += 1
        return i

    @njit(cache=True)
    def _pivot_cands(p, x, adj):
        px = p | x
        best = -1
        best_cnt = -1
        while px:
            u = _lowbit_index(px)
            c = _popcount_nb(p & adj[u])
            if c > best_cnt:
                best = u
                best_cnt = c
            px &= px - np.uint64(1)
        return p & ~adj[best]

    @njit(cache=True)
    def max_cliques_nb(adj):
        n = adj.size
        if n == 0:
            return np.zeros(0, dtype=np.uint64)
        if n == 64:
            full = np.uint64(0xFFFFFFFFFFFFFFFF)
        else:
            full = (np.uint64(1) << np.uint64(n)) - np.uint64(1)
        sr = np.zeros(n + 2, dtype=np.uint64)
        sp_ = np.zeros(n + 2, dtype=np.uint64)
        sx = np.zeros(n + 2, dtype=np.uint64)
        sc = np.zeros(n + 2, dtype=np.uint64)
        out = []
        sr[0] = np.uint64(0)
        sp_[0] = full
        sx[0] = np.uint64(0)
        sc[0] = _pivot_cands(full, np.uint64(0), adj)
        top = 1
        while top > 0:
            t = top - 1
            if sc[t] == 0:
                top -= 1
                continue
            v = _lowbit_index(sc[t])
            vb = np.uint64(1) << np.uint64(v)
            sc[t] &= ~vb
            r2 = sr[t] | vb
            p2 = sp_[t] & adj[v]
            x2 = sx[t] & adj[v]
            sp_[t] &= ~vb
            sx[t] |= vb
            if p2 == 0:
                if x2 == 0:
                    out.append(r2)
                continue
            sr[top] = r2
            sp_[top] = p2
            sx[top] = x2
            sc[top] = _pivot_cands(p2, x2, adj)
            top += 1
        res = np.empty(len(out), dtype=np.uint64)
        for i in range(len(out)):
            res[i] = out[i]
        return np.sort(res)

    @njit(cache=True)
    def set_codes_nb(facet_sets, perm_table):
        n_perm, n_sub = perm_table.shape
        res = np.empty(facet_sets.size, dtype=np.uint64)
        for i in range(facet_sets.size):
            fs = facet_sets[i]
            best = np.uint64(0xFFFFFFFFFFFFFFFF)
            for k in range(n_perm):
                code = np.uint64(0)
                for s in range(n_sub):
                    if (fs >> np.uint64(s)) & np.uint64(1):
                        code |= np.uint64(1) << np.uint64(perm_table[k, s])
                if code < best:
                    best = code
            res[i] = best
        return res

    @njit(cache=True)
    def orbit_min_nb(labels, perms):
        n_perm, n = perms.shape
        res = np.empty(labels.size, dtype=np.uint64)
        for i in range(labels.size):
            lab = labels[i]
            best = np.uint64(0xFFFFFFFFFFFFFFFF)
            for k in range(n_perm):
                code = np.uint64(0)
                for j in range(n):
                    if (lab >> np.uint64(j)) & np.uint64(1):
                        code |= np.uint64(1) << np.uint64(perms[k, j])
                if code < best:
                    best = code
            res[i] = best
        return res

else:  # pragma: no cover
    maximal_nb = link_nb = max_cliques_nb = set_codes_nb = orbit_min_nb = None


if USE_NUMBA:
    maximal = maximal_nb
    link = link_nb
    max_cliques = max_cliques_nb
    set_codes = set_codes_nb
    orbit_min = orbit_min_nb
else:
    if not HAVE_NUMBA:  # pragma: no cover
        warnings.warn("numba not importable; using numpy kernels", RuntimeWarning)
    maximal = maximal_np
    link = link_np
    max_cliques = max_cliques_np
    set_codes = set_codes_np
    orbit_min = orbit_min_np

BACKEND = "numba" if USE_NUMBA else "numpy"


def warmup() -> None:
    """Trigger compilation of every active kernel on tiny inputs."""
    m = np.array([3, 5, 6], dtype=np.uint64)
    maximal(m)
    link(m, 0)
    max_cliques(np.array([2, 1], dtype=np.uint64))
    perms = np.array([[0, 1], [1, 0]], dtype=np.int64)
    table = np.array([[0, 1, 2, 3], [0, 2, 1, 3]], dtype=np.int64)
    set_codes(np.array([6], dtype=np.uint64), table)
    orbit_min(np.array([1], dtype=np.uint64), perms)
