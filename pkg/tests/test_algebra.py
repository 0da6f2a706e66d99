import itertools

from hypothesis import given, settings

import oracles
from conftest import structures
from homorder.algebra import (disjoint_sum, injection, k1, path, product, product_all, projection, top,
                              transitive_tournament)
from homorder.hom import core, equivalent, is_homomorphism, is_isomorphic, leq


def test_sum_of_points():
    S = disjoint_sum(k1(), k1())
    assert S.n == 2 and S.size == 0


def test_sum_core():
    assert is_isomorphic(core(disjoint_sum(path(1), path(2))), path(2))


def test_product_two_arcs():
    P = product(path(2), transitive_tournament(2))
    assert P.relations == (((0, 3), (2, 5)),)
    assert is_isomorphic(core(P), path(1))


def test_row_major_vertices():
    P = product(path(1), path(1))
    assert P.n == 4 and P.relations == (((0, 3),),)


@given(structures())
def test_top_is_meet_identity(A):
    assert equivalent(product(A, top(A.sig)), A)


def test_empty_product_is_top():
    assert product_all([], (2, 3)) == top((2, 3))


@settings(deadline=None)
@given(structures(max_n=3), structures(max_n=3))
def test_projections_and_injections(A, B):
    if A.sig != B.sig:
        return
    P = product(A, B)
    assert is_homomorphism(P, A, projection(A, B, 0))
    assert is_homomorphism(P, B, projection(A, B, 1))
    S = disjoint_sum(A, B)
    assert is_homomorphism(A, S, injection(A, B, 0))
    assert is_homomorphism(B, S, injection(A, B, 1))


@settings(deadline=None, max_examples=60)
@given(structures(max_n=3, max_tuples=3), structures(max_n=3, max_tuples=3), structures(max_n=3, max_tuples=3))
def test_commutative_associative(A, B, C):
    if not A.sig == B.sig == C.sig:
        return
    assert equivalent(product(A, B), product(B, A))
    assert equivalent(disjoint_sum(A, B), disjoint_sum(B, A))
    assert equivalent(product(product(A, B), C), product(A, product(B, C)))
    assert equivalent(disjoint_sum(disjoint_sum(A, B), C), disjoint_sum(A, disjoint_sum(B, C)))


def test_lattice_laws_small(cores3):
    sample = cores3[:7]
    for A, B, C in itertools.product(sample, repeat=3):
        assert leq(disjoint_sum(A, B), C) == (oracles.maps_to(A, C) and oracles.maps_to(B, C))
        assert leq(C, product(A, B)) == (oracles.maps_to(C, A) and oracles.maps_to(C, B))
