"""Exact integer linear algebra and the polynomial arithmetic behind it.

Characteristic polynomials, eigenvalue sign counts and polynomial
division/gcd all run over Python ints and Fractions, so nothing in this
module carries floating-point error.

Polynomials are coefficient tuples indexed by power (``p[k]`` is the
coefficient of x^k); matrices are nested tuples, row major.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZeroPolynomial, NotSymmetric, ZeroPolynomial

# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def trace(m) -> int:
    return sum(m[i][i] for i in range(len(m)))


def is_symmetric(m) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def _check_square(m):
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("matrix must be square and nonempty")


def char_poly(m) -> tuple[int, ...]:
    """Monic characteristic polynomial det(xI - m), ascending coefficients.

    Uses the Faddeev-LeVerrier trace recurrence; for integer input every
    division in the recurrence is exact, so the coefficients are exact
    ints.  Cost is O(n^4) integer multiplications, fine at the sizes the
    exhaustive sweeps use.
    """
    _check_square(m)
    n = len(m)
    cs = [1]  # cs[k] is the coefficient of x^(n-k)
    aux = identity_matrix(n)
    for k in range(1, n + 1):
        mk = mat_mul(m, aux)
        q, r = divmod(-trace(mk), k)
        if r:
            raise ArithmeticError("non-exact division in trace recurrence")
        cs.append(q)
        aux = tuple(
            tuple(mk[i][j] + (q if i == j else 0) for j in range(n))
            for i in range(n)
        )
    return tuple(cs[n - p] for p in range(n + 1))


# ---------------------------------------------------------------------------
# inertia
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, zero and negative eigenvalues."""

    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


def inertia_from_char_poly(p) -> Inertia:
    """Sign counts of the roots of a polynomial known to have all-real roots.

    Zero roots are the trailing zero coefficients; positive roots are the
    sign changes of the remaining coefficient sequence (Descartes' rule,
    which is exact when every root is real); the rest are negative.
    """
    n = len(p) - 1
    nz = 0
    while p[nz] == 0:
        nz += 1
    seq = [c for c in p[nz:] if c != 0]
    plus = sum(1 for a, b in zip(seq, seq[1:]) if (a > 0) != (b > 0))
    return Inertia(plus, nz, n - nz - plus)


def inertia(m) -> Inertia:
    """Exact eigenvalue sign counts of a symmetric integer matrix.

    This is the load-bearing correctness argument of the whole exact
    path: a real symmetric matrix has an all-real spectrum, so Descartes'
    rule of signs applied to its characteristic polynomial counts the
    positive eigenvalues exactly -- no pivoting, no rounding.
    """
    if not is_symmetric(m):
        raise NotSymmetric("inertia requires a symmetric matrix")
    return inertia_from_char_poly(char_poly(m))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def poly_trim(p) -> tuple:
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def poly_add(p, q) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_mul(p, q) -> tuple:
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_pow(p, e: int) -> tuple:
    out = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p) -> tuple:
    return poly_trim(tuple(k * c for k, c in enumerate(p) if k >= 1))


def poly_divide(p, q) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Division with remainder over the rationals: p = q*quot + rem.

    Accepts int or Fraction coefficients; returns Fraction tuples with
    deg(rem) < deg(q).  Raises DivisionByZeroPolynomial when q is zero.
    """
    q = poly_trim(q)
    if not q:
        raise DivisionByZeroPolynomial("cannot divide by the zero polynomial")
    rem = [Fraction(c) for c in poly_trim(p)]
    qf = [Fraction(c) for c in q]
    dq = len(qf) - 1
    lead = qf[-1]
    if len(rem) - 1 < dq:
        return (), tuple(rem)
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        coeff = rem[k] / lead
        if coeff:
            quot[k - dq] = coeff
            for i in range(dq + 1):
                rem[k - dq + i] -= coeff * qf[i]
    return poly_trim(quot), poly_trim(rem)


def poly_divides(d, p) -> bool:
    """True iff d divides p exactly over the rationals."""
    _, rem = poly_divide(p, d)
    return rem == ()


def _primitive_int(p) -> tuple[int, ...]:
    """Scale a rational polynomial to a primitive integer one, positive lead."""
    p = poly_trim(p)
    if not p:
        return ()
    fr = [Fraction(c) for c in p]
    mult = lcm(*(c.denominator for c in fr))
    ints = [int(c * mult) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_gcd(p, q) -> tuple[int, ...]:
    """Gcd as a primitive integer polynomial with positive leading coefficient.

    Plain Euclid over the rationals, reducing each remainder to its
    primitive part to keep coefficients small.
    """
    a = _primitive_int(p)
    b = _primitive_int(q)
    while b:
        _, r = poly_divide(a, b)
        a, b = b, _primitive_int(r)
    if not a:
        raise ZeroPolynomial("gcd of two zero polynomials")
    return a


def squarefree_part(p) -> tuple[int, ...]:
    """p / gcd(p, p'): each distinct root kept exactly once (primitive form)."""
    p = poly_trim(p)
    if not p:
        raise ZeroPolynomial("the zero polynomial has no squarefree part")
    if len(p) == 1:
        return (1,)
    g = poly_gcd(p, poly_derivative(p))
    quot, rem = poly_divide(p, g)
    if rem != ():
        raise ArithmeticError("gcd does not divide its argument")
    return _primitive_int(quot)


def format_poly(p, var: str = "x") -> str:
    """Human-readable form, highest power first: ``x^4 - 6x^2 - 8x - 3``."""
    p = poly_trim(p)
    if not p:
        return "0"
    parts: list[str] = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xk = var if k == 1 else f"{var}^{k}"
            body = xk if mag == 1 else f"{mag}{xk}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
