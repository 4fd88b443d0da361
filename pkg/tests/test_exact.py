import random
from fractions import Fraction

import pytest

from eccmat.eccentricity import eccentricity_matrix
from eccmat.enumeration import connected_census
from eccmat.errors import DivisionByZeroPolynomial, NotSymmetric, ZeroPolynomial
from eccmat.exact import (
    char_poly,
    format_poly,
    inertia,
    poly_divide,
    poly_eval,
    poly_mul,
    poly_trim,
    squarefree_part,
)
from eccmat.families import complete, complete_split
from eccmat.graphs import Graph
from eccmat.numeric import eigenvalues_symmetric

from oracles import bareiss_det


def random_symmetric(n, rng, lo=-5, hi=5):
    vals = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            vals[i][j] = vals[j][i] = rng.randint(lo, hi)
    return tuple(tuple(row) for row in vals)


# -- characteristic polynomial -------------------------------------------------


def test_char_poly_j_minus_i():
    m = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert char_poly(m) == (-2, -3, 0, 1)  # x^3 - 3x - 2


def test_char_poly_zero_matrix():
    for n in (1, 2, 5):
        m = tuple(tuple(0 for _ in range(n)) for _ in range(n))
        assert char_poly(m) == (0,) * n + (1,)


def test_char_poly_two_disjoint_distance3_pairs():
    m = ((0, 3, 0, 0), (3, 0, 0, 0), (0, 0, 0, 3), (0, 0, 3, 0))
    assert char_poly(m) == (81, 0, -18, 0, 1)  # (x^2 - 9)^2


def test_char_poly_matches_determinant_oracle():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = random_symmetric(n, rng)
        p = char_poly(m)
        assert p[-1] == 1 and len(p) == n + 1
        assert p[n - 1] == -sum(m[i][i] for i in range(n))
        assert p[0] == (-1) ** n * bareiss_det(m)
        for t in range(-3, 4):
            shifted = tuple(
                tuple((t if i == j else 0) - m[i][j] for j in range(n))
                for i in range(n)
            )
            assert poly_eval(p, t) == bareiss_det(shifted)


# -- inertia --------------------------------------------------------------------


def test_inertia_examples():
    k4 = eccentricity_matrix(complete(4))
    assert inertia(k4).as_tuple() == (1, 0, 3)
    c4 = eccentricity_matrix(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert inertia(c4).as_tuple() == (2, 0, 2)
    p4 = eccentricity_matrix(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert inertia(p4).as_tuple() == (2, 0, 2)


def test_inertia_requires_symmetry():
    with pytest.raises(NotSymmetric):
        inertia(((0, 1), (2, 0)))


def test_inertia_counts_sum_to_n():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        m = random_symmetric(n, rng)
        assert inertia(m).n == n


def test_zero_trace_nonzero_matrices_have_both_signs():
    for n in range(2, 6):
        for g in connected_census(n):
            inr = inertia(eccentricity_matrix(g))
            assert inr.n_plus >= 1 and inr.n_minus >= 1


def test_interlacing_of_principal_submatrices():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(2, 6)
        m = random_symmetric(n, rng)
        full = eigenvalues_symmetric(m)
        keep = sorted(rng.sample(range(n), rng.randint(1, n - 1)))
        sub = tuple(tuple(m[i][j] for j in keep) for i in keep)
        small = eigenvalues_symmetric(sub)
        k = len(keep)
        for idx in range(k):
            assert full[idx] <= small[idx] + 1e-9
            assert small[idx] <= full[idx + n - k] + 1e-9


# -- polynomial arithmetic -------------------------------------------------------


def test_poly_divide_exact():
    quot, rem = poly_divide((-1, 0, 1), (-1, 1))  # (x^2-1)/(x-1)
    assert quot == (1, 1) and rem == ()


def test_poly_divide_with_remainder():
    quot, rem = poly_divide((0, 0, 1), (1, 1))  # x^2 / (x+1)
    assert quot == (-1, 1) and rem == (Fraction(1),)


def test_poly_divide_by_zero():
    with pytest.raises(DivisionByZeroPolynomial):
        poly_divide((1, 1), ())


def test_char_poly_of_complete_split_factors():
    p = char_poly(eccentricity_matrix(complete_split(5, 2)))
    divisor = poly_mul((2, 1), poly_mul((1, 1), (1, 1)))  # (x+2)(x+1)^2
    quot, rem = poly_divide(p, divisor)
    assert rem == ()
    assert poly_trim(quot) == (-2, -4, 1)  # x^2 - 4x - 2


def test_squarefree_part():
    assert squarefree_part(poly_mul((1, 1), (1, 1))) == (1, 1)
    assert squarefree_part((-2, -3, 0, 1)) == (-2, -1, 1)  # roots {2, -1}
    assert squarefree_part((1, 0, 1)) == (1, 0, 1)
    with pytest.raises(ZeroPolynomial):
        squarefree_part(())


def test_format_poly():
    assert format_poly((-3, -8, -6, 0, 1)) == "x^4 - 6x^2 - 8x - 3"
    assert format_poly((0,)) == "0"
    assert format_poly(()) == "0"
    assert format_poly((1,)) == "1"
    assert format_poly((0, -1)) == "-x"
