"""Membership in the cycle-based subclasses of cores, and bounded extension searches.

Conditions, for a core ``A``:

1. ``A`` maps to no tree;
2. no component of ``A`` maps to a tree;
3. the incidence graph of ``A`` has a cycle;
4. every component's incidence graph has a cycle;
5. (digraphs) the underlying undirected multigraph has an odd cycle;
6. (digraphs) every component has an odd cycle.

``shadow`` records whether the directed shadow has a directed cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .enumeration import DEFAULT_CEILING, all_structures, all_trees, feasible_bound
from .hom import find_hom, incomparable, leq, strictly_below
from .model import Structure, components, directed_shadow, incidence_graph, is_balanced, is_forest

CONDITIONS = (1, 2, 3, 4, 5, 6, "shadow")


class ClassError(ValueError):
    pass


def _tree_mappable_connected(C: Structure) -> bool:
    if is_forest(C):
        return True
    if is_balanced(C) is None:
        return False
    # the image of a connected structure in a tree is a subtree with at most C.n vertices
    return any(find_hom(C, T) is not None for T in all_trees(C.sig, C.n))


def tree_mappable(A: Structure) -> bool:
    """Whether ``A`` maps to some tree.

    A disjoint union of trees maps into the tree obtained by gluing them at
    one vertex, so mapping to a forest and mapping to a tree coincide.
    """
    return all(_tree_mappable_connected(c.structure) for c in components(A))


def _odd_cycle(A: Structure) -> bool:
    adj: list[list[int]] = [[] for _ in range(A.n)]
    for _, (u, v) in A.tuples():
        if u == v:
            return True
        adj[u].append(v)
        adj[v].append(u)
    side: list[int | None] = [None] * A.n
    for root in range(A.n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] is None:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return True
    return False


def has_directed_cycle(G: Structure) -> bool:
    """Directed cycle (loops included) in a digraph, by depth-first search."""
    succ: list[list[int]] = [[] for _ in range(G.n)]
    for _, (u, v) in G.tuples():
        succ[u].append(v)
    state = [0] * G.n  # 0 new, 1 on stack, 2 done
    for root in range(G.n):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if state[w] == 1:
                    return True
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    break
            else:
                state[v] = 2
                stack.pop()
    return False


@dataclass(frozen=True)
class ClassMembership:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool | None  # None outside digraphs
    c6: bool | None
    shadow: bool

    def __getitem__(self, k) -> bool | None:
        return self.shadow if k == "shadow" else getattr(self, f"c{k}")

    def as_dict(self) -> dict:
        return {k: self[k] for k in CONDITIONS}


def membership(A: Structure) -> ClassMembership:
    comps = [c.structure for c in components(A)]
    mappable = [_tree_mappable_connected(C) for C in comps]
    cyclic = [incidence_graph(C).has_cycle() for C in comps]
    if A.sig == (2,):
        odd = [_odd_cycle(C) for C in comps]
        c5, c6 = any(odd), all(odd)
    else:
        c5 = c6 = None
    return ClassMembership(
        c1=not all(mappable),
        c2=not any(mappable),
        c3=any(cyclic),
        c4=all(cyclic),
        c5=c5,
        c6=c6,
        shadow=has_directed_cycle(directed_shadow(A)),
    )


def in_class(A: Structure, k) -> bool:
    if k not in CONDITIONS:
        raise ClassError(f"unknown condition {k!r}")
    value = membership(A)[k]
    if value is None:
        raise ClassError(f"condition {k} is defined only for digraphs")
    return value


def extension_witness_bounded(k, S: Sequence[Structure], X: Structure, direction: str, n_max: int,
                              ceiling: int = DEFAULT_CEILING) -> Structure | None:
    """Least catalog core ``Y`` in class ``k``, incomparable with all of ``S``, beyond ``X``.

    ``direction="up"`` asks for ``X < Y`` and requires that no element of
    ``S`` maps to ``X``; ``"down"`` asks for ``Y < X`` and requires that
    ``X`` maps to no element of ``S``. Precondition failures raise
    :class:`ClassError`; an unsuccessful search returns None.
    """
    if direction not in ("up", "down"):
        raise ClassError(f"direction must be 'up' or 'down', not {direction!r}")
    for s in S:
        if not in_class(s, k):
            raise ClassError(f"antichain element {s} is not in class {k}")
    if not all(incomparable(a, b) for i, a in enumerate(S) for b in S[i + 1:]):
        raise ClassError("S is not an antichain")
    if direction == "up" and any(leq(s, X) for s in S):
        raise ClassError("X lies in the upset of S")
    if direction == "down" and any(leq(X, s) for s in S):
        raise ClassError("X lies in the downset of S")
    bound = feasible_bound(X.sig, n_max, ceiling)
    for Y in all_structures(X.sig, bound, ceiling).where(core=True):
        beyond = strictly_below(X, Y) if direction == "up" else strictly_below(Y, X)
        if beyond and in_class(Y, k) and all(incomparable(Y, s) for s in S):
            return Y
    return None
