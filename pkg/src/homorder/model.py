"""Finite relational structures and their purely structural analysis.

A structure of type ``sig`` (a tuple of arities, each at least 2) lives on the
base set ``{0, ..., n-1}`` and carries one set of tuples per relation kind.
Everything here is a pure function of immutable values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

Signature = tuple[int, ...]
Tuple = tuple[int, ...]


class StructureError(ValueError):
    """Raised when raw data violates a structure invariant."""


def check_signature(sig: Iterable[int]) -> Signature:
    sig = tuple(int(a) for a in sig)
    if not sig:
        raise StructureError("empty signature")
    for kind, arity in enumerate(sig):
        if arity < 2:
            raise StructureError(f"arity of kind {kind} is {arity}; unary relations are not allowed")
    return sig


@dataclass(frozen=True)
class Structure:
    """A finite relational structure.

    ``relations[i]`` is a sorted tuple of distinct ``sig[i]``-tuples. Build
    instances through :func:`validate` (or :meth:`build`) unless the data is
    already normalized.
    """

    sig: Signature
    n: int
    relations: tuple[tuple[Tuple, ...], ...]

    @classmethod
    def build(cls, sig: Iterable[int], n: int, relations: Sequence[Iterable[Sequence[int]]] = ()) -> "Structure":
        return validate(sig, n, relations)

    def __repr__(self) -> str:
        rels = ", ".join(f"R{i}={list(r)}" for i, r in enumerate(self.relations))
        return f"Structure(sig={self.sig}, n={self.n}, {rels})"

    @property
    def kinds(self) -> range:
        return range(len(self.sig))

    def tuples(self) -> Iterable[tuple[int, Tuple]]:
        """All ``(kind, tuple)`` pairs in (kind, lexicographic) order."""
        for i, rel in enumerate(self.relations):
            for t in rel:
                yield i, t

    @property
    def size(self) -> int:
        """Total number of tuples over all kinds."""
        return sum(len(r) for r in self.relations)

    def has(self, kind: int, t: Tuple) -> bool:
        return t in self._sets[kind]

    @property
    def _sets(self) -> tuple[frozenset[Tuple], ...]:
        try:
            return self.__dict__["_sets_cache"]
        except KeyError:
            sets = tuple(frozenset(r) for r in self.relations)
            object.__setattr__(self, "_sets_cache", sets)
            return sets

    def relabel(self, perm: Sequence[int], n: int | None = None) -> "Structure":
        """Image of the structure under ``v -> perm[v]`` (no validation of injectivity)."""
        n = self.n if n is None else n
        rels = tuple(
            tuple(sorted({tuple(perm[v] for v in t) for t in rel})) for rel in self.relations
        )
        return Structure(self.sig, n, rels)

    def induced(self, vertices: Sequence[int]) -> tuple["Structure", tuple[int, ...]]:
        """Induced substructure on ``vertices`` (sorted), re-indexed.

        Returns the substructure and the map new index -> old index.
        """
        keep = tuple(sorted(set(vertices)))
        pos = {v: k for k, v in enumerate(keep)}
        rels = tuple(
            tuple(sorted(tuple(pos[v] for v in t) for t in rel if all(v in pos for v in t)))
            for rel in self.relations
        )
        return Structure(self.sig, len(keep), rels), keep


def validate(sig: Iterable[int], n: int, relations: Sequence[Iterable[Sequence[int]]] = ()) -> Structure:
    """Normalize raw data into a :class:`Structure`, or raise :class:`StructureError`."""
    sig = check_signature(sig)
    if n < 1:
        raise StructureError("empty base set")
    relations = list(relations)
    if len(relations) > len(sig):
        raise StructureError(f"{len(relations)} relations given for a signature with {len(sig)} kinds")
    relations += [()] * (len(sig) - len(relations))
    rels = []
    for kind, (arity, rel) in enumerate(zip(sig, relations)):
        seen = set()
        for t in rel:
            t = tuple(int(v) for v in t)
            if len(t) != arity:
                raise StructureError(f"arity mismatch: tuple {t} of kind {kind} has length {len(t)}, expected {arity}")
            for v in t:
                if not 0 <= v < n:
                    raise StructureError(f"out-of-range index {v} in tuple {t} of kind {kind} (n={n})")
            seen.add(t)
        rels.append(tuple(sorted(seen)))
    return Structure(sig, n, tuple(rels))


# -- incidence graph ---------------------------------------------------------


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite multigraph between vertices and blocks.

    ``edges`` holds one ``(vertex, block_index)`` pair per occurrence of the
    vertex in the block's tuple, so a repeated vertex gives parallel edges.
    """

    left: tuple[int, ...]
    right: tuple[tuple[int, Tuple], ...]
    edges: tuple[tuple[int, int], ...]

    def has_cycle(self) -> bool:
        # union-find over vertices and blocks; an edge inside one class closes a cycle
        n = len(self.left)
        parent = list(range(n + len(self.right)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v, b in self.edges:
            rv, rb = find(v), find(n + b)
            if rv == rb:
                return True
            parent[rv] = rb
        return False

    def is_connected(self) -> bool:
        n = len(self.left)
        total = n + len(self.right)
        adj: list[list[int]] = [[] for _ in range(total)]
        for v, b in self.edges:
            adj[v].append(n + b)
            adj[n + b].append(v)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == total


def incidence_graph(A: Structure) -> IncidenceGraph:
    blocks = tuple(A.tuples())
    edges = tuple((v, b) for b, (_, t) in enumerate(blocks) for v in t)
    return IncidenceGraph(tuple(range(A.n)), blocks, edges)


# -- connectivity -------------------------------------------------------------


class Component(NamedTuple):
    structure: Structure
    vertices: tuple[int, ...]  # component index -> original vertex


def _vertex_classes(A: Structure) -> list[list[int]]:
    parent = list(range(A.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, t in A.tuples():
        r = find(t[0])
        for v in t[1:]:
            s = find(v)
            if s != r:
                parent[s] = r
    classes: dict[int, list[int]] = {}
    for v in range(A.n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def components(A: Structure) -> list[Component]:
    """Connected components, ordered by their least original vertex."""
    return [Component(*A.induced(vs)) for vs in _vertex_classes(A)]


def is_connected(A: Structure) -> bool:
    return len(_vertex_classes(A)) == 1


def is_forest(A: Structure) -> bool:
    return not incidence_graph(A).has_cycle()


def is_tree(A: Structure) -> bool:
    return is_connected(A) and is_forest(A)


# -- balance ------------------------------------------------------------------


@dataclass(frozen=True)
class LevelAssignment:
    """Integer level per vertex; consecutive tuple positions differ by +1.

    Levels are normalized so each component has minimum level 0.
    """

    levels: tuple[int, ...]

    def height(self) -> int:
        return max(self.levels)


def is_balanced(A: Structure) -> LevelAssignment | None:
    """Solve ``level(t[j+1]) = level(t[j]) + 1`` over all tuples, or return None."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(A.n)]
    for _, t in A.tuples():
        for a, b in zip(t, t[1:]):
            adj[a].append((b, 1))
            adj[b].append((a, -1))
    level: list[int | None] = [None] * A.n
    for root in range(A.n):
        if level[root] is not None:
            continue
        level[root] = 0
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, d in adj[x]:
                want = level[x] + d
                if level[y] is None:
                    level[y] = want
                    comp.append(y)
                    queue.append(y)
                elif level[y] != want:
                    return None
        low = min(level[v] for v in comp)
        for v in comp:
            level[v] -= low
    return LevelAssignment(tuple(level))


def directed_shadow(A: Structure) -> Structure:
    """Digraph with an arc for every pair of consecutive tuple positions."""
    arcs = {(t[j], t[j + 1]) for _, t in A.tuples() for j in range(len(t) - 1)}
    return Structure((2,), A.n, (tuple(sorted(arcs)),))
