"""Homomorphism search, comparability, cores and canonical forms.

The solver is a plain backtracking search with generalized arc consistency
maintained after every assignment. Variables are taken in vertex order and
values in increasing order, so the first solution found is the
lexicographically least homomorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .model import Structure, Tuple

VertexMap = tuple[int, ...]


class SignatureMismatch(ValueError):
    pass


def _check_same_sig(A: Structure, B: Structure) -> None:
    if A.sig != B.sig:
        raise SignatureMismatch(f"signature mismatch: {A.sig} vs {B.sig}")


def is_homomorphism(A: Structure, B: Structure, f: Sequence[int]) -> bool:
    if len(f) != A.n or any(not 0 <= x < B.n for x in f):
        return False
    return all(B.has(i, tuple(f[v] for v in t)) for i, t in A.tuples())


class _Solver:
    def __init__(self, A: Structure, B: Structure, domains: Sequence[set[int]] | None = None):
        _check_same_sig(A, B)
        self.A, self.B = A, B
        self.scopes: list[tuple[int, Tuple]] = list(A.tuples())
        self.watch: list[list[int]] = [[] for _ in range(A.n)]
        for c, (_, t) in enumerate(self.scopes):
            for v in set(t):
                self.watch[v].append(c)
        if domains is None:
            domains = [set(range(B.n)) for _ in range(A.n)]
        self.initial = [set(d) for d in domains]

    def _revise(self, c: int, dom: list[set[int]]) -> list[int] | None:
        """Restrict the scope of constraint ``c`` to supported values.

        Returns the changed variables, or None on a wipe-out.
        """
        kind, t = self.scopes[c]
        scope = sorted(set(t))
        support: dict[int, set[int]] = {v: set() for v in scope}
        for b in self.B.relations[kind]:
            vals: dict[int, int] = {}
            for v, x in zip(t, b):
                if vals.setdefault(v, x) != x or x not in dom[v]:
                    break
            else:
                for v, x in vals.items():
                    support[v].add(x)
        changed = []
        for v in scope:
            if len(support[v]) < len(dom[v]):
                if not support[v]:
                    return None
                dom[v] = support[v]
                changed.append(v)
        return changed

    def _propagate(self, dom: list[set[int]], queue: list[int]) -> bool:
        pending = set(queue)
        queue = list(queue)
        while queue:
            c = queue.pop()
            pending.discard(c)
            changed = self._revise(c, dom)
            if changed is None:
                return False
            for v in changed:
                for c2 in self.watch[v]:
                    if c2 != c and c2 not in pending:
                        pending.add(c2)
                        queue.append(c2)
        return True

    def solutions(self) -> Iterator[VertexMap]:
        dom = [set(d) for d in self.initial]
        if any(not d for d in dom):
            return
        if not self._propagate(dom, list(range(len(self.scopes)))):
            return
        yield from self._search(0, dom)

    def _search(self, var: int, dom: list[set[int]]) -> Iterator[VertexMap]:
        n = self.A.n
        while var < n and len(dom[var]) == 1:
            var += 1
        if var == n:
            yield tuple(next(iter(d)) for d in dom)
            return
        for x in sorted(dom[var]):
            child = list(dom)
            child[var] = {x}
            if self._propagate(child, list(self.watch[var])):
                yield from self._search(var + 1, child)


def find_hom(A: Structure, B: Structure, domains: Sequence[set[int]] | None = None) -> VertexMap | None:
    """Lexicographically least homomorphism ``A -> B``, or None."""
    return next(_Solver(A, B, domains).solutions(), None)


def enumerate_homs(A: Structure, B: Structure) -> list[VertexMap]:
    return list(_Solver(A, B).solutions())


def count_homs(A: Structure, B: Structure) -> int:
    return sum(1 for _ in _Solver(A, B).solutions())


def brute_force_homs(A: Structure, B: Structure) -> list[VertexMap]:
    """All homomorphisms by checking every one of ``B.n ** A.n`` maps (oracle)."""
    _check_same_sig(A, B)
    return [f for f in product(range(B.n), repeat=A.n) if is_homomorphism(A, B, f)]


def leq(A: Structure, B: Structure) -> bool:
    return find_hom(A, B) is not None


class Relation(enum.Enum):
    EQUIVALENT = "equivalent"
    BELOW = "strictly-below"
    ABOVE = "strictly-above"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Comparability:
    relation: Relation
    forward: VertexMap | None  # A -> B
    backward: VertexMap | None  # B -> A

    def __str__(self) -> str:
        return self.relation.value


def compare(A: Structure, B: Structure) -> Comparability:
    f = find_hom(A, B)
    g = find_hom(B, A)
    if f is not None and g is not None:
        rel = Relation.EQUIVALENT
    elif f is not None:
        rel = Relation.BELOW
    elif g is not None:
        rel = Relation.ABOVE
    else:
        rel = Relation.INCOMPARABLE
    return Comparability(rel, f, g)


def equivalent(A: Structure, B: Structure) -> bool:
    return leq(A, B) and leq(B, A)


def strictly_below(A: Structure, B: Structure) -> bool:
    return leq(A, B) and not leq(B, A)


def incomparable(A: Structure, B: Structure) -> bool:
    return not leq(A, B) and not leq(B, A)


# -- cores --------------------------------------------------------------------


def _proper_retraction(A: Structure) -> VertexMap | None:
    """An endomorphism of ``A`` whose image misses some vertex, if one exists."""
    if A.n == 1:
        return None
    occupied = {v for _, t in A.tuples() for v in t}
    # an isolated vertex folds onto any other vertex
    for v in range(A.n):
        if v not in occupied:
            w = 0 if v else 1
            return tuple(w if u == v else u for u in range(A.n))
    # single-vertex folds before the general search
    for v in range(A.n):
        for w in range(A.n):
            if w != v:
                f = tuple(w if u == v else u for u in range(A.n))
                if is_homomorphism(A, A, f):
                    return f
    full = set(range(A.n))
    for v in range(A.n):
        f = find_hom(A, A, [full - {v}] * A.n)
        if f is not None:
            return f
    return None


def core_of(A: Structure) -> tuple[Structure, VertexMap]:
    """The core of ``A`` and a retraction onto it.

    The core is an induced substructure of ``A`` re-indexed to ``0..m-1``;
    the returned map sends each vertex of ``A`` to its image in the core.
    """
    current = A
    to_current = tuple(range(A.n))
    while True:
        f = _proper_retraction(current)
        if f is None:
            return current, to_current
        sub, keep = current.induced(set(f))
        pos = {v: k for k, v in enumerate(keep)}
        to_current = tuple(pos[f[x]] for x in to_current)
        current = sub


def core(A: Structure) -> Structure:
    return core_of(A)[0]


def is_core(A: Structure) -> bool:
    return _proper_retraction(A) is None


# -- canonical forms ----------------------------------------------------------


def _refined_colors(A: Structure) -> list[int]:
    """Isomorphism-invariant vertex colouring by iterated refinement."""
    occurrences: list[list[tuple[int, Tuple, int]]] = [[] for _ in range(A.n)]
    for kind, t in A.tuples():
        for j, v in enumerate(t):
            occurrences[v].append((kind, t, j))

    def pattern(t: Tuple) -> Tuple:
        first: dict[int, int] = {}
        return tuple(first.setdefault(v, len(first)) for v in t)

    colors = [0] * A.n
    while True:
        sigs = []
        for v in range(A.n):
            sig = sorted(
                (kind, j, pattern(t), tuple(colors[u] for u in t)) for kind, t, j in occurrences[v]
            )
            sigs.append((colors[v], tuple(sig)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(A: Structure) -> tuple:
    return (A.n, A.relations)


def canonical_form(A: Structure) -> Structure:
    """Least relabeling of ``A`` among those consistent with the refined colouring.

    The colour classes are ordered by colour and receive consecutive label
    blocks; all permutations inside each block are tried and the relabeling
    with the smallest relation tuple (kind by kind, sorted tuples) wins.
    """
    colors = _refined_colors(A)
    classes: dict[int, list[int]] = {}
    for v in range(A.n):
        classes.setdefault(colors[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    starts = []
    offset = 0
    for block in blocks:
        starts.append(offset)
        offset += len(block)

    best: Structure | None = None
    for choice in product(*(permutations(b) for b in blocks)):
        perm = [0] * A.n
        for start, order in zip(starts, choice):
            for k, v in enumerate(order):
                perm[v] = start + k
        cand = A.relabel(perm)
        if best is None or cand.relations < best.relations:
            best = cand
    assert best is not None
    return best


def is_isomorphic(A: Structure, B: Structure) -> bool:
    if A.sig != B.sig or A.n != B.n or [len(r) for r in A.relations] != [len(r) for r in B.relations]:
        return False
    return canonical_form(A) == canonical_form(B)
