"""Independent oracles the tests check the library against.

Everything here deliberately avoids the code paths under test: the
determinant uses fraction-free elimination instead of the trace
recurrence, distances use Floyd-Warshall instead of BFS, and the census
counts come from cycle-index counting plus an inverse Euler transform
rather than from any enumeration.
"""
from __future__ import annotations

from math import comb, factorial, gcd


def bareiss_det(m) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def floyd_distances(g):
    """All-pairs distances by Floyd-Warshall; -1 where unreachable."""
    n = g.n
    inf = float("inf")
    d = [
        [0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)]
        for i in range(n)
    ]
    for k in range(n):
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            for j in range(n):
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return tuple(tuple(-1 if x == inf else int(x) for x in row) for row in d)


def _partitions(n: int, max_part: int | None = None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _cycle_type_size(lam) -> int:
    """Number of permutations of S_n with cycle type lam."""
    n = sum(lam)
    z = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for length, m in mult.items():
        z *= length**m * factorial(m)
    return factorial(n) // z


def _edge_orbits(lam) -> int:
    """Orbits of unordered vertex pairs under a permutation of type lam."""
    orbits = sum(length // 2 for length in lam)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            orbits += gcd(lam[i], lam[j])
    return orbits


def unlabeled_graph_count(n: int) -> int:
    """Graphs on n unlabeled vertices, counted by Burnside over cycle types."""
    total = sum(
        _cycle_type_size(lam) * 2 ** _edge_orbits(lam) for lam in _partitions(n)
    )
    assert total % factorial(n) == 0
    return total // factorial(n)


def connected_unlabeled_counts(n_max: int) -> list[int]:
    """Connected-graph class counts from the all-graph counts.

    Uses the inverse Euler transform: graph classes are multisets of
    connected classes, so the connected counts are recoverable from the
    totals with no enumeration at all.
    """
    a = [unlabeled_graph_count(n) for n in range(1, n_max + 1)]
    b: dict[int, int] = {}
    c: dict[int, int] = {}
    for n in range(1, n_max + 1):
        b[n] = n * a[n - 1] - sum(b[k] * a[n - k - 1] for k in range(1, n))
        rest = sum(d * c[d] for d in range(1, n) if n % d == 0)
        assert (b[n] - rest) % n == 0
        c[n] = (b[n] - rest) // n
    return [c[n] for n in range(1, n_max + 1)]


def labeled_connected_counts(n_max: int) -> list[int]:
    """Labeled connected-graph counts by the standard subtraction recurrence."""
    c = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        c[k] = 2 ** comb(k, 2) - sum(
            comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2) for j in range(1, k)
        )
    return c[1:]
