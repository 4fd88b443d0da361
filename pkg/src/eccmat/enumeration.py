"""Exhaustive generation of small connected graphs.

Two paths: a labeled stream that scans every edge bitmask with an
on-the-fly connectivity check, and a deduplicated census that keeps one
representative per isomorphism class.  The canonical form is the
lexicographically minimal row-major adjacency bit string over all vertex
relabelings -- full permutation minimization, correctness over
cleverness -- with the inner loop vectorized through numpy.  That makes
n = 7 a few seconds and n = 8 the practical boundary.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import SizeLimitExceeded
from .graphs import Graph

_MAX_N = 8
_PERM_BLOCK = 512
_CAND_BLOCK = 16384


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-permutation packing weights, split so float64 sums stay exact.

    Bit position (i, j) of the row-major adjacency string has weight
    2^(n^2 - 1 - (i*n + j)).  The weight a relabeling attaches to entry
    (a, b) of the original matrix is that of position (inv(a), inv(b)).
    Weights are split into a high and a low 32-bit half; each half sums
    below 2^53, so BLAS matmuls over float64 are exact.
    """
    size = n * n
    exps = size - 1 - np.arange(size, dtype=np.int64)
    hi_mat = np.where(exps >= 32, 2.0 ** (exps - 32), 0.0).reshape(n, n)
    lo_mat = np.where(exps >= 32, 0.0, 2.0**exps).reshape(n, n)
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    invs = np.argsort(perms, axis=1)
    hi = hi_mat[invs[:, :, None], invs[:, None, :]].reshape(len(perms), size)
    lo = lo_mat[invs[:, :, None], invs[:, None, :]].reshape(len(perms), size)
    return hi, lo


def _canonical_keys(graphs, n: int) -> list[int]:
    """Canonical packed adjacency key for each graph (all of order n)."""
    if n > _MAX_N:
        raise SizeLimitExceeded(f"canonical forms are limited to {_MAX_N} vertices")
    if n == 1:
        return [0] * len(graphs)
    hi_w, lo_w = _perm_weights(n)
    nperms = hi_w.shape[0]
    keys: list[int] = []
    for start in range(0, len(graphs), _CAND_BLOCK):
        chunk = graphs[start : start + _CAND_BLOCK]
        flat = np.zeros((len(chunk), n * n), dtype=np.float64)
        for idx, g in enumerate(chunk):
            for u in range(n):
                row = g.rows[u]
                for v in range(n):
                    if row >> v & 1:
                        flat[idx, u * n + v] = 1.0
        best_hi = np.full(len(chunk), np.inf)
        best_lo = np.full(len(chunk), np.inf)
        for pstart in range(0, nperms, _PERM_BLOCK):
            hi = flat @ hi_w[pstart : pstart + _PERM_BLOCK].T
            lo = flat @ lo_w[pstart : pstart + _PERM_BLOCK].T
            blk_hi = hi.min(axis=1)
            blk_lo = np.where(hi == blk_hi[:, None], lo, np.inf).min(axis=1)
            better = (blk_hi < best_hi) | ((blk_hi == best_hi) & (blk_lo < best_lo))
            best_hi = np.where(better, blk_hi, best_hi)
            best_lo = np.where(better, blk_lo, best_lo)
        keys.extend(int(h) * (1 << 32) + int(l) for h, l in zip(best_hi, best_lo))
    return keys


def canonical_key(g: Graph) -> int:
    """Packed row-major adjacency bits of the minimal relabeling of ``g``."""
    return _canonical_keys([g], g.n)[0]


def graph_from_canonical_key(n: int, key: int) -> Graph:
    size = n * n
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if key >> (size - 1 - (i * n + j)) & 1:
                rows[i] |= 1 << j
    return Graph(n, tuple(rows))


def canonical_form(g: Graph) -> Graph:
    """The representative of g's isomorphism class (minimal relabeling)."""
    return graph_from_canonical_key(g.n, canonical_key(g))


@lru_cache(maxsize=None)
def connected_census(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class.

    Built by augmentation: attach a new vertex to every nonempty subset
    of each (n-1)-vertex representative, then canonicalize.  Every
    connected graph arises this way since deleting a non-cut vertex
    (every connected graph has one) leaves a connected graph.
    Deterministic output, sorted by canonical key.
    """
    if not 1 <= n <= _MAX_N:
        raise SizeLimitExceeded(f"census generation is limited to {_MAX_N} vertices")
    if n == 1:
        return (Graph(1, (0,)),)
    new_bit = 1 << (n - 1)
    candidates: list[Graph] = []
    for g in connected_census(n - 1):
        for subset in range(1, 1 << (n - 1)):
            rows = [
                row | new_bit if subset >> u & 1 else row
                for u, row in enumerate(g.rows)
            ]
            rows.append(subset)
            candidates.append(Graph(n, tuple(rows)))
    keys = sorted(set(_canonical_keys(candidates, n)))
    return tuple(graph_from_canonical_key(n, key) for key in keys)


def _labeled_masks(n: int):
    """Yield adjacency rows for every labeled graph on n vertices."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            i, j = pairs[low.bit_length() - 1]
            mm ^= low
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield rows


def _rows_connected(rows: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def connected_graphs_labeled(n: int):
    """Every labeled connected graph on n vertices (bitmask scan)."""
    if not 1 <= n <= _MAX_N:
        raise SizeLimitExceeded(f"labeled enumeration is limited to {_MAX_N} vertices")
    for rows in _labeled_masks(n):
        if _rows_connected(rows, n):
            yield Graph(n, tuple(rows))


def all_graphs_labeled(n: int):
    """Every labeled graph on n vertices, connected or not."""
    if not 1 <= n <= _MAX_N:
        raise SizeLimitExceeded(f"labeled enumeration is limited to {_MAX_N} vertices")
    for rows in _labeled_masks(n):
        yield Graph(n, tuple(rows))


def enumerate_connected(n: int, dedup: bool = False):
    """Stream connected graphs on n vertices.

    With ``dedup`` one canonical representative per isomorphism class is
    produced; otherwise every labeled graph.  Duplicates never affect
    downstream eigenvalue checks (they are label-invariant), so the
    labeled stream is a valid, if slower, substrate too.
    """
    if dedup:
        return iter(connected_census(n))
    return connected_graphs_labeled(n)
