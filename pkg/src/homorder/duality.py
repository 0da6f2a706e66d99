"""Duals of trees, finite dualities and gap certificates.

The dual of a tree ``T`` is built from *choice functions*: maps ``f`` sending
each vertex ``t`` of ``T`` to a block containing ``t``. A tuple
``(f_1, ..., f_k)`` of kind ``i`` is present unless some block
``b = (t_1, ..., t_k)`` of kind ``i`` has ``f_j(t_j) = b`` at every position.
Every structure either admits a map from ``T`` or maps to this structure,
never both; the result is reduced to its core and then checked against the
brute-force catalog before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import prod
from typing import Sequence

from .algebra import product, product_all
from .enumeration import DEFAULT_CEILING, all_structures, feasible_bound
from .hom import core, equivalent, leq
from .model import Structure, components, is_connected, is_forest, is_tree

DEFAULT_VERIFY_BOUND = 3
DUAL_CEILING = 512
TUPLE_CEILING = 2 * 10**6


class DualityError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a bounded duality check over the structure catalog."""

    bound: int
    checked: int
    counterexample: Structure | None = None
    failure: str | None = None  # which side of the biconditional broke

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class DualityPair:
    tree: Structure
    dual: Structure
    verified_bound: int


@dataclass(frozen=True)
class FiniteDuality:
    forests: tuple[Structure, ...]
    duals: tuple[Structure, ...]
    verified_bound: int


@dataclass(frozen=True)
class GapCertificate:
    bottom: Structure
    top: Structure
    verified_bound: int
    counterexample: Structure | None = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None


def verify_duality_bounded(forests: Sequence[Structure], duals: Sequence[Structure], n_max: int,
                           ceiling: int = DEFAULT_CEILING) -> VerificationReport:
    """Check ``(some forest maps to X) <=> (X maps to no dual)`` for every catalog X."""
    structures = list(forests) + list(duals)
    if not structures:
        raise ValueError("need at least one structure to fix the signature")
    sig = structures[0].sig
    if any(S.sig != sig for S in structures):
        raise ValueError("signature mismatch among forests and duals")
    catalog = all_structures(sig, n_max, ceiling)
    for X in catalog:
        above = any(leq(F, X) for F in forests)
        below = any(leq(X, D) for D in duals)
        if above and below:
            return VerificationReport(n_max, len(catalog), X, "a forest maps to X and X maps to a dual")
        if not above and not below:
            return VerificationReport(n_max, len(catalog), X, "no forest maps to X and X maps to no dual")
    return VerificationReport(n_max, len(catalog))


def _raw_dual(T: Structure, ceiling: int = DUAL_CEILING) -> Structure:
    blocks = list(T.tuples())
    incident: list[list[int]] = [[] for _ in range(T.n)]
    for b, (_, t) in enumerate(blocks):
        for v in sorted(set(t)):
            incident[v].append(b)
    size = prod(len(c) for c in incident)
    if size > ceiling:
        raise DualityError(f"dual construction needs {size} vertices, above the ceiling {ceiling}")
    if any(size**a > TUPLE_CEILING for a in T.sig):
        raise DualityError(f"dual construction on {size} vertices has too many candidate tuples")
    functions = list(_cartesian(*incident))
    rels = []
    for kind, arity in enumerate(T.sig):
        kind_blocks = [(b, t) for b, (i, t) in enumerate(blocks) if i == kind]
        if not kind_blocks:
            rels.append(tuple(_cartesian(range(size), repeat=arity)))
            continue
        tuples = []
        for choice in _cartesian(range(size), repeat=arity):
            fs = [functions[c] for c in choice]
            if not any(all(fs[j][t[j]] == b for j in range(arity)) for b, t in kind_blocks):
                tuples.append(choice)
        rels.append(tuple(tuples))
    return Structure(T.sig, size, tuple(rels))


def duality_pair(T: Structure, verify_bound: int = DEFAULT_VERIFY_BOUND,
                 ceiling: int = DEFAULT_CEILING) -> DualityPair:
    """Dual of a tree with the bound up to which it was checked.

    If the catalog at ``verify_bound`` would exceed ``ceiling``, the largest
    feasible bound is used and recorded in ``verified_bound``.
    """
    if not is_tree(T):
        raise DualityError("input is not a tree")
    if T.size == 0:
        raise DualityError("a tree without tuples has no dual")
    D = core(_raw_dual(T))
    bound = feasible_bound(T.sig, verify_bound, ceiling)
    report = verify_duality_bounded([T], [D], bound, ceiling)
    if not report.passed:
        raise DualityError(f"constructed dual fails verification at X={report.counterexample}: {report.failure}")
    return DualityPair(T, D, bound)


def dual_of_tree(T: Structure, verify_bound: int = DEFAULT_VERIFY_BOUND) -> Structure:
    return duality_pair(T, verify_bound).dual


def _maximal(structures: list[Structure]) -> list[Structure]:
    """Drop structures below another one (equivalent copies keep the first)."""
    keep: list[Structure] = []
    for k, S in enumerate(structures):
        dominated = False
        for j, R in enumerate(structures):
            if j == k or not leq(S, R):
                continue
            if not leq(R, S) or j < k:
                dominated = True
                break
        if not dominated:
            keep.append(S)
    return keep


def generalized_dual(forests: Sequence[Structure], verify_bound: int = DEFAULT_VERIFY_BOUND,
                     ceiling: int = DEFAULT_CEILING, sig=None) -> FiniteDuality:
    """Duals for a finite family of forests.

    For every way of picking one component from each forest, the product of
    the chosen components' duals is a candidate; only the maximal candidates
    (up to equivalence) are kept.
    """
    forests = list(forests)
    if sig is None:
        if not forests:
            raise ValueError("an empty family needs an explicit signature")
        sig = forests[0].sig
    for F in forests:
        if not is_forest(F):
            raise DualityError(f"not a forest: {F}")
    # components without tuples map anywhere and impose nothing
    choices = []
    for F in forests:
        comps = [c.structure for c in components(F) if c.structure.size]
        if not comps:
            # F maps to every structure, so nothing may lie below a dual
            return FiniteDuality(tuple(forests), (), 0)
        choices.append([core(c) for c in comps])
    duals: dict[Structure, Structure] = {}
    candidates = []
    for pick in _cartesian(*choices):
        for c in pick:
            if c not in duals:
                duals[c] = duality_pair(c, verify_bound, ceiling).dual
        candidates.append(core(product_all([duals[c] for c in pick], sig)))
    result = tuple(_maximal(candidates))
    bound = feasible_bound(sig, verify_bound, ceiling)
    if forests or result:
        report = verify_duality_bounded(forests, result, bound, ceiling)
        if not report.passed:
            raise DualityError(f"generalized dual fails verification at X={report.counterexample}: {report.failure}")
    return FiniteDuality(tuple(forests), result, bound)


def gap_certificate(T: Structure, verify_bound: int = DEFAULT_VERIFY_BOUND,
                    ceiling: int = DEFAULT_CEILING) -> GapCertificate:
    """The gap below a connected tree, checked against all catalog cores."""
    if not (is_connected(T) and is_tree(T)) or T.size == 0:
        raise DualityError("gap certificates need a connected tree with at least one tuple")
    top = core(T)
    D = duality_pair(top, verify_bound, ceiling).dual
    bottom = core(product(top, D))
    bound = feasible_bound(T.sig, verify_bound, ceiling)
    if leq(top, bottom):
        # would contradict the duality; report the top itself as the failure
        return GapCertificate(bottom, top, bound, top)
    return GapCertificate(bottom, top, bound, strictly_between(bottom, top, bound, ceiling))


def strictly_between(bottom: Structure, top: Structure, n_max: int,
                     ceiling: int = DEFAULT_CEILING) -> Structure | None:
    """First catalog core strictly between ``bottom`` and ``top``, or None."""
    for X in all_structures(bottom.sig, n_max, ceiling).where(core=True):
        if leq(bottom, X) and leq(X, top) and not equivalent(X, bottom) and not equivalent(X, top):
            return X
    return None

