import pytest

import oracles
from homorder.algebra import path
from homorder.enumeration import (CatalogTooLarge, all_cores, all_structures, all_trees,
                                  all_trees_one_edge_per_kind, burnside_count, load_catalog, save_catalog)
from homorder.hom import canonical_form, canonical_key, is_core, is_isomorphic
from homorder.model import is_tree


def test_one_vertex_digraphs():
    cat = all_structures((2,), 1)
    assert [A.relations for A in cat] == [((),), (((0, 0),),)]


def test_two_vertex_digraphs():
    # 2 one-vertex classes + (16 + 4) / 2 two-vertex classes
    assert len(all_structures((2,), 2)) == 12


def test_ternary_one_vertex():
    assert len(all_structures((3,), 1)) == 2


@pytest.mark.parametrize("sig,n", [((2,), 1), ((2,), 2), ((2,), 3), ((2,), 4), ((3,), 2), ((2, 2), 2)])
def test_burnside(sig, n):
    counted = sum(1 for A in all_structures(sig, n) if A.n == n)
    assert counted == burnside_count(sig, n)


def test_known_digraph_counts():
    # digraphs with loops allowed, up to isomorphism: 2, 10, 104, 3044
    assert [burnside_count((2,), n) for n in range(1, 5)] == [2, 10, 104, 3044]


def test_entries_canonical_and_ordered():
    cat = all_structures((2,), 3)
    assert all(canonical_form(A) == A for A in cat)
    keys = [canonical_key(A) for A in cat]
    assert keys == sorted(keys)


def test_pairwise_non_isomorphic():
    cat = list(all_structures((2,), 2)) + [A for A in all_structures((2,), 3) if A.n == 3][:30]
    for i, A in enumerate(cat):
        for B in cat[i + 1:]:
            assert not oracles.isomorphic(A, B)


def test_cores():
    cores = all_cores((2,), 1)
    assert len(cores) == 2
    assert path(2) in all_cores((2,), 3)
    assert all(is_core(A) for A in all_cores((2,), 3))
    flagged = [A for A, f in zip(all_structures((2,), 3), all_structures((2,), 3).flags) if f["core"]]
    assert flagged == list(all_cores((2,), 3))


def test_no_core_with_twin_components(cores4):
    from homorder.model import components
    for A in cores4:
        comps = [c.structure for c in components(A)]
        for i, C in enumerate(comps):
            assert not any(is_isomorphic(C, D) for D in comps[i + 1:])


def test_ceiling():
    with pytest.raises(CatalogTooLarge):
        all_structures((2,), 5)
    with pytest.raises(CatalogTooLarge):
        all_structures((2,), 3, ceiling=500)


def test_oriented_tree_counts():
    # oriented trees on 1..7 vertices: 1, 1, 3, 8, 27, 91, 350
    counts = [sum(1 for T in all_trees((2,), 7) if T.n == n) for n in range(1, 8)]
    assert counts == [1, 1, 3, 8, 27, 91, 350]


def test_trees_match_catalog_filter():
    grown = set(all_trees((2,), 4))
    filtered = {A for A in all_structures((2,), 4) if oracles.is_tree(A)}
    assert grown == filtered
    grown = set(all_trees((2, 2), 3))
    assert grown == {A for A in all_structures((2, 2), 2) if oracles.is_tree(A)} | {
        T for T in grown if T.n == 3}
    assert all(is_tree(T) for T in grown)


def test_one_edge_trees_digraph():
    assert [T.n for T in all_trees_one_edge_per_kind((2,))] == [1, 2]


def test_one_edge_trees_two_kinds():
    family = all_trees_one_edge_per_kind((2, 2))
    assert len(family) == 7
    assert sorted(T.n for T in family) == [1, 2, 2, 3, 3, 3, 3]
    assert all(is_tree(T) and all(len(r) <= 1 for r in T.relations) for T in family)


def test_round_trip(tmp_path):
    cat = all_structures((2,), 3)
    save_catalog(cat, tmp_path / "cat")
    again = load_catalog(tmp_path / "cat")
    assert again == cat
    index = (tmp_path / "cat" / "index.txt").read_text().splitlines()
    assert len(index) == len(cat) + 1
