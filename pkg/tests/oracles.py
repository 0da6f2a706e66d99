"""Brute-force reference implementations, independent of the solver code paths."""

from itertools import permutations, product

import networkx as nx


def raw(A):
    """(n, list of (kind, tuple)) straight from the structure fields."""
    return A.n, [(i, t) for i, rel in enumerate(A.relations) for t in rel]


def all_maps(A, B):
    n, tuples = raw(A)
    target = {(i, t) for i, rel in enumerate(B.relations) for t in rel}
    for f in product(range(B.n), repeat=n):
        if all((i, tuple(f[v] for v in t)) in target for i, t in tuples):
            yield f


def homs(A, B):
    return list(all_maps(A, B))


def maps_to(A, B):
    return next(all_maps(A, B), None) is not None


def isomorphic(A, B):
    if A.sig != B.sig or A.n != B.n:
        return False
    target = [set(r) for r in B.relations]
    for p in permutations(range(A.n)):
        if all({tuple(p[v] for v in t) for t in rel} == target[i] for i, rel in enumerate(A.relations)):
            return True
    return False


def is_core(A):
    """No endomorphism misses a vertex."""
    return all(len(set(f)) == A.n for f in all_maps(A, A))


def incidence_multigraph(A):
    G = nx.MultiGraph()
    G.add_nodes_from(("v", v) for v in range(A.n))
    for b, (i, t) in enumerate((i, t) for i, rel in enumerate(A.relations) for t in rel):
        for v in t:
            G.add_edge(("v", v), ("b", b))
    return G


def is_forest(A):
    G = incidence_multigraph(A)
    return G.number_of_edges() == G.number_of_nodes() - nx.number_connected_components(G)


def is_tree(A):
    G = incidence_multigraph(A)
    return nx.is_connected(G) and is_forest(A)


def balanced(A):
    """Some level assignment in range(n) with consecutive positions differing by one."""
    _, tuples = raw(A)
    for levels in product(range(A.n), repeat=A.n):
        if all(levels[t[j + 1]] == levels[t[j]] + 1 for _, t in tuples for j in range(len(t) - 1)):
            return True
    return False
