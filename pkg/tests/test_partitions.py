from fractions import Fraction

import pytest

from eccmat.eccentricity import eccentricity_matrix
from eccmat.enumeration import connected_census
from eccmat.errors import InvalidPartition, NotEquitable
from eccmat.exact import char_poly
from eccmat.families import complete, star, windmill
from eccmat.graphs import Graph
from eccmat.partitions import (
    coarsest_equitable_refinement,
    is_equitable,
    quotient_matrix,
    spectrum_containment_holds,
)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def all_set_partitions(items):
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i, cls in enumerate(part):
            yield part[:i] + (cls + (first,),) + part[i + 1 :]
        yield part + ((first,),)


def test_star_partition_is_equitable():
    m = eccentricity_matrix(star(4))
    assert is_equitable(m, ((0,), (1, 2, 3)))


def test_path_halves_not_equitable():
    m = eccentricity_matrix(path(4))
    assert not is_equitable(m, ((0, 1), (2, 3)))


def test_discrete_partition_always_equitable():
    m = eccentricity_matrix(path(4))
    assert is_equitable(m, ((0,), (1,), (2,), (3,)))


def test_partition_validation():
    m = eccentricity_matrix(path(4))
    with pytest.raises(InvalidPartition):
        is_equitable(m, ((0, 1),))  # not covering
    with pytest.raises(InvalidPartition):
        is_equitable(m, ((0, 1), (1, 2, 3)))  # overlapping
    with pytest.raises(InvalidPartition):
        is_equitable(m, ((0, 1), (), (2, 3)))  # empty class


def test_quotients():
    m = eccentricity_matrix(star(4))
    q = quotient_matrix(m, ((0,), (1, 2, 3)))
    assert q.entries == ((Fraction(0), Fraction(3)), (Fraction(1), Fraction(4)))

    kn = eccentricity_matrix(complete(5))
    q = quotient_matrix(kn, (tuple(range(5)),))
    assert q.entries == ((Fraction(4),),)

    bow = eccentricity_matrix(windmill(3, 2))
    q = quotient_matrix(bow, ((0,), (1, 2), (3, 4)))
    assert q.int_entries() == ((0, 2, 2), (1, 0, 4), (1, 4, 0))
    assert char_poly(q.int_entries()) == (-16, -20, 0, 1)  # x^3 - 20x - 16


def test_refinement_examples():
    m = eccentricity_matrix(star(4))
    assert coarsest_equitable_refinement(m, (tuple(range(4)),)) == ((0,), (1, 2, 3))

    kn = eccentricity_matrix(complete(6))
    assert coarsest_equitable_refinement(kn, (tuple(range(6)),)) == (tuple(range(6)),)

    p4 = eccentricity_matrix(path(4))
    assert coarsest_equitable_refinement(p4, (tuple(range(4)),)) == ((0, 3), (1, 2))


def test_refinement_output_is_equitable_and_coarsest():
    # exhaustive comparison against every equitable partition on small graphs
    for n in range(2, 6):
        for g in connected_census(n):
            m = eccentricity_matrix(g)
            cep = coarsest_equitable_refinement(m, (tuple(range(n)),))
            assert is_equitable(m, cep)
            cep_classes = [frozenset(c) for c in cep]
            for p in all_set_partitions(range(n)):
                if not is_equitable(m, p):
                    continue
                # every equitable partition refines the coarsest one
                for cls in p:
                    assert any(set(cls) <= big for big in cep_classes)


def test_quotient_of_equitable_partition_is_integral():
    for n in range(2, 6):
        for g in connected_census(n):
            m = eccentricity_matrix(g)
            cep = coarsest_equitable_refinement(m, (tuple(range(n)),))
            quotient_matrix(m, cep).int_entries()  # must not raise


def test_containment_examples():
    m = eccentricity_matrix(star(4))
    q = quotient_matrix(m, ((0,), (1, 2, 3)))
    assert spectrum_containment_holds(m, q)

    kn = eccentricity_matrix(complete(5))
    assert spectrum_containment_holds(kn, quotient_matrix(kn, (tuple(range(5)),)))

    bow = eccentricity_matrix(windmill(3, 2))
    assert spectrum_containment_holds(bow, quotient_matrix(bow, ((0,), (1, 2), (3, 4))))


def test_containment_rejects_inequitable_partition():
    m = eccentricity_matrix(path(4))
    q = quotient_matrix(m, ((0, 1), (2, 3)))
    with pytest.raises(NotEquitable):
        spectrum_containment_holds(m, q)


def test_containment_exhaustive_small():
    for n in range(1, 6):
        for g in connected_census(n):
            m = eccentricity_matrix(g)
            cep = coarsest_equitable_refinement(m, (tuple(range(n)),))
            assert spectrum_containment_holds(m, quotient_matrix(m, cep))
