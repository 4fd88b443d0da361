"""Floating-point symmetric eigensolver used to cross-check the exact path.

Cyclic Jacobi rotations on plain Python floats.  Deliberately shares no
code with the integer characteristic-polynomial route, so agreement
between the two is a meaningful check rather than a tautology.
"""
from __future__ import annotations

import math

from .errors import NonConvergence, NotSymmetric
from .exact import Inertia, is_symmetric

_MAX_SWEEPS = 60


def eigenvalues_symmetric(m, tol: float = 1e-12, max_sweeps: int = _MAX_SWEEPS) -> tuple[float, ...]:
    """Eigenvalues of a symmetric matrix, sorted ascending.

    Sweeps rotate every off-diagonal pair until the off-diagonal
    Frobenius norm drops below ``tol`` relative to the matrix norm, which
    bounds the eigenvalue error by the same amount.  Raises
    NonConvergence (carrying the sweep count) if the budget runs out.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_symmetric(m):
        raise NotSymmetric("eigensolver requires a symmetric matrix")
    n = len(m)
    a = [[float(x) for x in row] for row in m]
    if n == 1:
        return (a[0][0],)

    norm = math.sqrt(sum(x * x for row in a for x in row))
    threshold = tol * max(norm, 1.0)

    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n)) * 2.0)
        if off <= threshold:
            return tuple(sorted(a[i][i] for i in range(n)))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip, aiq = a[i][p], a[i][q]
                    a[i][p] = a[p][i] = c * aip - s * aiq
                    a[i][q] = a[q][i] = s * aip + c * aiq
    raise NonConvergence(max_sweeps)


def sign_counts(eigenvalues, zero_tol: float = 1e-6) -> Inertia:
    """Classify eigenvalues as positive / zero / negative with a tolerance band."""
    if zero_tol <= 0:
        raise ValueError("zero_tol must be positive")
    plus = sum(1 for x in eigenvalues if x > zero_tol)
    zero = sum(1 for x in eigenvalues if -zero_tol <= x <= zero_tol)
    return Inertia(plus, zero, len(eigenvalues) - plus - zero)


def group_multiplicities(eigenvalues, tol: float = 1e-6) -> tuple[tuple[float, int], ...]:
    """Collapse a sorted spectrum into (value, multiplicity) pairs.

    A new group starts whenever the gap to the previous eigenvalue
    exceeds ``tol``; the reported value is the group mean.
    """
    vals = sorted(eigenvalues)
    if not vals:
        return ()
    groups: list[list[float]] = [[vals[0]]]
    for x in vals[1:]:
        if x - groups[-1][-1] > tol:
            groups.append([x])
        else:
            groups[-1].append(x)
    return tuple((sum(grp) / len(grp), len(grp)) for grp in groups)


def multiplicity_near(eigenvalues, target: float, tol: float = 1e-6) -> int:
    """How many eigenvalues lie within ``tol`` of ``target``."""
    return sum(1 for x in eigenvalues if abs(x - target) <= tol)
