import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import structures
from homorder.algebra import cycle, disjoint_sum, k1, path, top, transitive_tournament
from homorder.model import (Structure, StructureError, components, directed_shadow, incidence_graph,
                            is_balanced, is_connected, is_forest, is_tree, validate)


class TestValidate:
    def test_minimal_edge(self):
        A = validate((2,), 2, [[(0, 1)]])
        assert A.relations == (((0, 1),),)

    def test_empty_base_set(self):
        with pytest.raises(StructureError, match="empty base set"):
            validate((2,), 0, [[]])

    def test_arity_mismatch(self):
        with pytest.raises(StructureError, match="arity mismatch"):
            validate((3,), 2, [[(0, 1)]])

    def test_out_of_range(self):
        with pytest.raises(StructureError, match="out-of-range"):
            validate((2,), 2, [[(0, 2)]])

    @pytest.mark.parametrize("sig", [(), (1,), (2, 1)])
    def test_bad_signature(self, sig):
        with pytest.raises(StructureError):
            validate(sig, 1, [])

    def test_duplicates_dropped(self):
        A = validate((2,), 2, [[(1, 0), (0, 1), (1, 0)]])
        assert A.relations == (((0, 1), (1, 0)),)


class TestIncidenceGraph:
    def test_loop_gives_parallel_edges(self):
        inc = incidence_graph(top())
        assert inc.left == (0,)
        assert len(inc.right) == 1
        assert inc.edges == ((0, 0), (0, 0))
        assert inc.has_cycle()

    def test_single_arc(self):
        inc = incidence_graph(path(1))
        assert (len(inc.left), len(inc.right), len(inc.edges)) == (2, 1, 2)
        assert not inc.has_cycle()

    def test_ternary_tuple(self):
        inc = incidence_graph(validate((3,), 3, [[(0, 1, 2)]]))
        assert (len(inc.left), len(inc.right), len(inc.edges)) == (3, 1, 3)
        assert not inc.has_cycle()

    def test_block_order(self):
        A = validate((2, 2), 3, [[(1, 2), (0, 1)], [(0, 2)]])
        assert incidence_graph(A).right == ((0, (0, 1)), (0, (1, 2)), (1, (0, 2)))

    @given(structures())
    def test_edge_count(self, A):
        assert len(incidence_graph(A).edges) == sum(a * len(r) for a, r in zip(A.sig, A.relations))


class TestComponents:
    def test_path_plus_cycle(self):
        comps = components(disjoint_sum(path(2), cycle(3)))
        assert [c.structure.n for c in comps] == [3, 3]
        assert comps[1].vertices == (3, 4, 5)

    def test_connected_identity(self):
        (c,) = components(transitive_tournament(3))
        assert c.structure == transitive_tournament(3)

    def test_isolated(self):
        comps = components(validate((2,), 3, []))
        assert [c.structure for c in comps] == [k1()] * 3

    @given(structures())
    def test_component_count_matches_incidence_graph(self, A):
        G = oracles.incidence_multigraph(A)
        assert len(components(A)) == len(list(nx_components(G)))


def nx_components(G):
    import networkx as nx
    return (c for c in nx.connected_components(G) if any(node[0] == "v" for node in c))


class TestTrees:
    @pytest.mark.parametrize("k", range(0, 6))
    def test_paths_are_trees(self, k):
        assert is_tree(path(k))

    def test_loop_not_forest(self):
        assert not is_forest(top())

    def test_tt3_not_forest(self):
        assert not is_forest(transitive_tournament(3))

    def test_forest_not_tree(self):
        A = disjoint_sum(path(1), path(2))
        assert is_forest(A) and not is_tree(A) and not is_connected(A)

    def test_repeated_vertex_ternary(self):
        assert not is_forest(validate((3,), 2, [[(0, 1, 0)]]))

    @given(structures())
    def test_against_networkx(self, A):
        assert is_forest(A) == oracles.is_forest(A)
        assert is_tree(A) == oracles.is_tree(A)


class TestBalance:
    def test_path_levels(self):
        assert is_balanced(path(3)).levels == (0, 1, 2, 3)

    def test_tt3_unbalanced(self):
        assert is_balanced(transitive_tournament(3)) is None

    def test_cycle_unbalanced(self):
        assert is_balanced(cycle(3)) is None

    def test_levels_normalized_per_component(self):
        A = validate((2,), 4, [[(1, 0), (3, 2)]])
        assert is_balanced(A).levels == (1, 0, 1, 0)

    def test_ternary_levels(self):
        assert is_balanced(validate((3,), 4, [[(0, 1, 2), (3, 2, 1)]])) is None
        assert is_balanced(validate((3,), 4, [[(0, 1, 2), (3, 1, 2)]])).levels == (0, 1, 2, 0)

    @settings(max_examples=60)
    @given(structures(max_n=4, max_tuples=4))
    def test_against_brute_force(self, A):
        assert (is_balanced(A) is not None) == oracles.balanced(A)

    @given(structures(), st.randoms(use_true_random=False))
    def test_relabel_invariant(self, A, rnd):
        perm = list(range(A.n))
        rnd.shuffle(perm)
        assert (is_balanced(A) is None) == (is_balanced(A.relabel(perm)) is None)

    @given(structures())
    def test_forest_implies_balanced(self, A):
        if is_forest(A):
            assert is_balanced(A) is not None


class TestShadow:
    def test_ternary_path(self):
        S = directed_shadow(validate((3,), 3, [[(0, 1, 2)]]))
        assert S == Structure((2,), 3, (((0, 1), (1, 2)),))

    def test_digraph_unchanged(self):
        assert directed_shadow(transitive_tournament(3)) == transitive_tournament(3)

    def test_back_and_forth(self):
        S = directed_shadow(validate((3,), 2, [[(0, 1, 0)]]))
        assert S.relations == (((0, 1), (1, 0)),)

    @given(structures(sigs=((3,), (2, 3))), structures(sigs=((3,), (2, 3))))
    def test_commutes_with_sum(self, A, B):
        if A.sig == B.sig:
            assert directed_shadow(disjoint_sum(A, B)) == disjoint_sum(directed_shadow(A), directed_shadow(B))
