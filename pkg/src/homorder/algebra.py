"""Lattice operations (disjoint union and categorical product) and named structures."""

from __future__ import annotations

from functools import reduce
from itertools import product as _cartesian
from typing import Iterable

from .hom import _check_same_sig
from .model import Signature, Structure, check_signature

DIGRAPH: Signature = (2,)


def disjoint_sum(A: Structure, B: Structure) -> Structure:
    """Disjoint union; ``B``'s vertices are shifted by ``A.n``."""
    _check_same_sig(A, B)
    shift = A.n
    rels = tuple(
        ra + tuple(tuple(v + shift for v in t) for t in rb)
        for ra, rb in zip(A.relations, B.relations)
    )
    return Structure(A.sig, A.n + B.n, rels)


def product(A: Structure, B: Structure) -> Structure:
    """Categorical product; the pair ``(a, b)`` becomes vertex ``a * B.n + b``."""
    _check_same_sig(A, B)
    m = B.n
    rels = []
    for ra, rb in zip(A.relations, B.relations):
        rels.append(tuple(sorted(
            tuple(a * m + b for a, b in zip(ta, tb)) for ta, tb in _cartesian(ra, rb)
        )))
    return Structure(A.sig, A.n * B.n, tuple(rels))


def sum_all(structures: Iterable[Structure]) -> Structure:
    return reduce(disjoint_sum, structures)


def product_all(structures: Iterable[Structure], sig: Signature | None = None) -> Structure:
    """Product of the given structures; the empty product is :func:`top`."""
    structures = list(structures)
    if not structures:
        if sig is None:
            raise ValueError("empty product needs a signature")
        return top(sig)
    return reduce(product, structures)


def projection(A: Structure, B: Structure, side: int) -> tuple[int, ...]:
    """Projection of ``product(A, B)`` onto ``A`` (side 0) or ``B`` (side 1)."""
    m = B.n
    return tuple((v // m) if side == 0 else (v % m) for v in range(A.n * m))


def injection(A: Structure, B: Structure, side: int) -> tuple[int, ...]:
    """Injection of ``A`` (side 0) or ``B`` (side 1) into ``disjoint_sum(A, B)``."""
    return tuple(range(A.n)) if side == 0 else tuple(A.n + v for v in range(B.n))


# -- named structures -----------------------------------------------------------


def top(sig: Signature = DIGRAPH) -> Structure:
    """One vertex carrying the full loop tuple of every kind."""
    sig = check_signature(sig)
    return Structure(sig, 1, tuple(((0,) * a,) for a in sig))


def k1(sig: Signature = DIGRAPH) -> Structure:
    sig = check_signature(sig)
    return Structure(sig, 1, tuple(() for _ in sig))


def path(k: int) -> Structure:
    """Directed path with ``k`` arcs."""
    return Structure(DIGRAPH, k + 1, (tuple((i, i + 1) for i in range(k)),))


def transitive_tournament(k: int) -> Structure:
    return Structure(DIGRAPH, k, (tuple((i, j) for i in range(k) for j in range(i + 1, k)),))


def cycle(k: int) -> Structure:
    """Directed cycle of length ``k`` (``k = 1`` is a loop)."""
    return Structure(DIGRAPH, k, (tuple(sorted((i, (i + 1) % k) for i in range(k))),))
