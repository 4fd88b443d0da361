from itertools import combinations, permutations

import pytest

from eccmat.eccentricity import check_diam2_identity, eccentricity_matrix
from eccmat.enumeration import connected_census
from eccmat.errors import DisconnectedGraph
from eccmat.exact import inertia
from eccmat.families import complete, star
from eccmat.graphs import (
    Graph,
    adjacency_matrix,
    complement,
    distance_matrix,
    eccentricity_profile,
)
from eccmat.numeric import eigenvalues_symmetric, sign_counts


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_complete_graph_matrix_is_all_ones_off_diagonal():
    m = eccentricity_matrix(complete(5))
    assert m == tuple(
        tuple(0 if i == j else 1 for j in range(5)) for i in range(5)
    )


def test_star_matrix_literal():
    assert eccentricity_matrix(star(4)) == (
        (0, 1, 1, 1),
        (1, 0, 2, 2),
        (1, 2, 0, 2),
        (1, 2, 2, 0),
    )


def test_path_matrix_nonzeros():
    m = eccentricity_matrix(path(4))
    nonzero = {(u, v): m[u][v] for u in range(4) for v in range(u + 1, 4) if m[u][v]}
    assert nonzero == {(0, 2): 2, (0, 3): 3, (1, 3): 2}


def test_disconnected_raises():
    with pytest.raises(DisconnectedGraph):
        eccentricity_matrix(Graph(2, (0, 0)))


def test_entry_rule_and_row_support_exhaustively():
    # definition re-check plus the every-row-hits-its-eccentricity fact
    for n in range(2, 6):
        for g in connected_census(n):
            m = eccentricity_matrix(g)
            d = distance_matrix(g)
            ecc = eccentricity_profile(g).eccentricities
            for u in range(n):
                assert any(m[u]), "every vertex realizes its eccentricity"
                for v in range(n):
                    want = d[u][v] if u != v and d[u][v] == min(ecc[u], ecc[v]) else 0
                    assert m[u][v] == want


def test_stars_have_one_positive_eigenvalue():
    for n in range(2, 11):
        assert inertia(eccentricity_matrix(star(n))).n_plus == 1


# -- diameter-2 identity ------------------------------------------------------


def test_identity_on_c5():
    g = cycle(5)
    assert check_diam2_identity(g)
    doubled = tuple(tuple(2 * x for x in row) for row in adjacency_matrix(complement(g)))
    assert eccentricity_matrix(g) == doubled


def test_identity_on_c4_and_vacuous_star():
    assert check_diam2_identity(cycle(4))
    assert check_diam2_identity(star(4))  # universal vertex: hypothesis not met


def test_identity_exhaustive_small():
    for n in range(2, 7):
        for g in connected_census(n):
            assert check_diam2_identity(g)


# -- the two demonstration matrices (eccentricity matrices of a graph and an
#    induced subgraph of it whose matrix is nevertheless not a principal
#    submatrix of the larger one) ---------------------------------------------

BIG = (
    (0, 0, 2, 2, 0, 2),
    (0, 0, 0, 2, 0, 0),
    (2, 0, 0, 0, 0, 0),
    (2, 2, 0, 0, 0, 2),
    (0, 0, 0, 0, 0, 2),
    (2, 0, 0, 2, 2, 0),
)

SMALL = (
    (0, 0, 2, 2, 1),
    (0, 0, 0, 2, 1),
    (2, 0, 0, 0, 1),
    (2, 2, 0, 0, 1),
    (1, 1, 1, 1, 0),
)


def test_demo_matrices_are_symmetric_with_zero_diagonal():
    for m in (BIG, SMALL):
        n = len(m)
        for i in range(n):
            assert m[i][i] == 0
            for j in range(n):
                assert m[i][j] == m[j][i]


def test_small_not_principal_submatrix_of_big():
    hits = 0
    for subset in combinations(range(6), 5):
        for perm in permutations(subset):
            candidate = tuple(tuple(BIG[u][v] for v in perm) for u in perm)
            if candidate == SMALL:
                hits += 1
    assert hits == 0


def test_demo_matrix_inertias_consistent_across_methods():
    for m in (BIG, SMALL):
        exact = inertia(m)
        approx = sign_counts(eigenvalues_symmetric(m))
        assert exact == approx
        assert exact.n_plus >= 1 and exact.n_minus >= 1
