import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import digraphs, structures
from homorder.algebra import cycle, disjoint_sum, k1, path, top, transitive_tournament
from homorder.hom import (Relation, SignatureMismatch, canonical_form, compare, core, core_of, count_homs,
                          enumerate_homs, find_hom, is_core, is_homomorphism, is_isomorphic)
from homorder.model import validate


class TestFindHom:
    def test_first_embedding(self):
        assert find_hom(path(1), path(2)) == (0, 1)

    def test_path_into_arc(self):
        assert find_hom(path(2), transitive_tournament(2)) is None

    @given(structures())
    def test_identity(self, A):
        f = find_hom(A, A)
        assert f is not None and is_homomorphism(A, A, f)

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatch):
            find_hom(path(1), top((2, 2)))

    def test_repeated_positions(self):
        A = validate((3,), 2, [[(0, 1, 0)]])
        B = validate((3,), 3, [[(0, 1, 2), (2, 1, 2)]])
        assert find_hom(A, B) == (2, 1)

    @settings(max_examples=150, deadline=None)
    @given(structures(max_n=3, max_tuples=4), structures(max_n=3, max_tuples=6))
    def test_lexicographically_first(self, A, B):
        if A.sig != B.sig:
            return
        expected = oracles.homs(A, B)
        assert find_hom(A, B) == (expected[0] if expected else None)
        assert enumerate_homs(A, B) == expected


class TestCount:
    def test_k1_maps_anywhere(self):
        assert enumerate_homs(k1(), cycle(3)) == [(0,), (1,), (2,)]

    def test_arc_to_arc(self):
        assert count_homs(path(1), path(1)) == 1

    def test_arc_to_cycle(self):
        assert count_homs(path(1), cycle(3)) == 3

    @given(digraphs(max_n=3), digraphs(max_n=3))
    def test_count_matches_enumerate(self, A, B):
        assert count_homs(A, B) == len(enumerate_homs(A, B)) == len(oracles.homs(A, B))


class TestCompare:
    def test_below(self):
        c = compare(path(1), path(2))
        assert c.relation is Relation.BELOW and c.forward == (0, 1) and c.backward is None

    @given(structures())
    def test_self_equivalent(self, A):
        assert compare(A, A).relation is Relation.EQUIVALENT

    def test_incomparable(self):
        assert str(compare(path(3), transitive_tournament(3))) == "incomparable"

    def test_path_below_tournament(self):
        assert compare(path(2), transitive_tournament(3)).relation is Relation.BELOW

    @settings(deadline=None)
    @given(digraphs(max_n=3), digraphs(max_n=3), digraphs(max_n=3))
    def test_composition(self, A, B, C):
        f, g = find_hom(A, B), find_hom(B, C)
        if f is not None and g is not None:
            assert is_homomorphism(A, C, tuple(g[x] for x in f))


class TestCores:
    def test_path_sum(self):
        C, f = core_of(disjoint_sum(path(2), path(1)))
        assert is_isomorphic(C, path(2))
        assert is_homomorphism(disjoint_sum(path(2), path(1)), C, f)

    def test_tt3_is_own_core(self):
        assert core(transitive_tournament(3)) == transitive_tournament(3)

    def test_k1(self):
        assert core(k1()) == k1()

    def test_cycle_is_core(self):
        assert is_core(cycle(3))
        assert [f for f in enumerate_homs(cycle(3), cycle(3))] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    def test_sum_not_core(self):
        assert not is_core(disjoint_sum(path(2), path(1)))

    def test_top_absorbs(self):
        assert core(disjoint_sum(cycle(5), top())) == top()

    @settings(max_examples=80, deadline=None)
    @given(structures(max_n=4, max_tuples=5))
    def test_core_laws(self, A):
        C, f = core_of(A)
        assert is_homomorphism(A, C, f)
        assert find_hom(C, A) is not None
        assert is_core(C) and oracles.is_core(C)
        assert is_isomorphic(core(C), C)

    def test_is_core_matches_oracle(self, digraphs3):
        assert [is_core(A) for A in digraphs3] == [oracles.is_core(A) for A in digraphs3]

    def test_core_unique(self, digraphs3):
        for A, B in itertools.combinations(digraphs3, 2):
            if oracles.maps_to(A, B) and oracles.maps_to(B, A):
                assert canonical_form(core(A)) == canonical_form(core(B))


class TestCanonicalForm:
    @given(structures())
    def test_idempotent(self, A):
        C = canonical_form(A)
        assert canonical_form(C) == C

    def test_arc_labelings(self):
        assert canonical_form(validate((2,), 2, [[(0, 1)]])) == canonical_form(validate((2,), 2, [[(1, 0)]]))

    def test_non_isomorphic_pairs_differ(self, digraphs3):
        forms = [canonical_form(A) for A in digraphs3]
        assert len(set(forms)) == len(forms)

    @settings(deadline=None)
    @given(structures(max_n=5), st.randoms(use_true_random=False))
    def test_relabel_invariant(self, A, rnd):
        perm = list(range(A.n))
        rnd.shuffle(perm)
        assert canonical_form(A.relabel(perm)) == canonical_form(A)

    @settings(deadline=None)
    @given(structures(max_n=4), structures(max_n=4))
    def test_isomorphism_matches_oracle(self, A, B):
        assert is_isomorphic(A, B) == oracles.isomorphic(A, B)
