"""Antichains in the homomorphism order and the splitting procedure.

Given an ordered antichain ``A_1, ..., A_n`` of cores, the procedure walks the
elements in order and moves ``A_i`` into the *upper* part when some structure
``X`` satisfies

* ``A_i < X``,
* no element already in the upper part maps to ``X``,
* no later element ``A_j`` (``j > i``) maps to ``X``;

everything else forms the *lower* part. The partition is a splitting when the
upset of the antichain equals the upset of the upper part and the downset of
the antichain equals the downset of the lower part. Witness searches and
contract checks are bounded; every bounded answer carries its bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import disjoint_sum, product, sum_all
from .duality import (DEFAULT_VERIFY_BOUND, DualityError, dual_of_tree, generalized_dual,
                      verify_duality_bounded)
from .enumeration import (DEFAULT_CEILING, all_structures, all_trees, all_trees_one_edge_per_kind,
                          feasible_bound)
from .hom import canonical_form, core, equivalent, incomparable, leq, strictly_below
from .model import Signature, Structure, check_signature, is_connected, is_forest, is_tree

DEFAULT_WITNESS_BOUND = 4


class AntichainError(ValueError):
    pass


def is_antichain(elements: Sequence[Structure]) -> bool:
    return all(incomparable(a, b) for k, a in enumerate(elements) for b in elements[k + 1:])


def as_antichain(elements: Sequence[Structure]) -> tuple[Structure, ...]:
    """Core-reduce the elements and check pairwise incomparability."""
    if not elements:
        raise AntichainError("empty antichain")
    if len({A.sig for A in elements}) != 1:
        raise AntichainError("elements have different signatures")
    cores = tuple(canonical_form(core(A)) for A in elements)
    if not is_antichain(cores):
        raise AntichainError("elements are not pairwise incomparable")
    return cores


def _cores(sig: Signature, n_max: int, ceiling: int):
    return all_structures(sig, n_max, ceiling).where(core=True)


@dataclass(frozen=True)
class MaximalityReport:
    bound: int
    checked: int
    witness: Structure | None = None  # a core incomparable with every element

    @property
    def passed(self) -> bool:
        return self.witness is None


def is_maximal_antichain_bounded(elements: Sequence[Structure], n_max: int,
                                 ceiling: int = DEFAULT_CEILING) -> MaximalityReport:
    """Every catalog core up to ``n_max`` vertices is comparable with some element."""
    if not is_antichain(elements):
        raise AntichainError("elements are not pairwise incomparable")
    cores = _cores(elements[0].sig, n_max, ceiling)
    for X in cores:
        if all(incomparable(X, A) for A in elements):
            return MaximalityReport(n_max, len(cores), X)
    return MaximalityReport(n_max, len(cores))


def antichain_from_duality(forests: Sequence[Structure], duals: Sequence[Structure],
                           verify_bound: int = DEFAULT_VERIFY_BOUND,
                           ceiling: int = DEFAULT_CEILING) -> tuple[Structure, ...]:
    """The forests together with the duals that map to none of them."""
    bound = feasible_bound(forests[0].sig if forests else duals[0].sig, verify_bound, ceiling)
    report = verify_duality_bounded(forests, duals, bound, ceiling)
    if not report.passed:
        raise DualityError(f"not a duality up to {bound} vertices: X={report.counterexample} ({report.failure})")
    chosen = list(forests) + [D for D in duals if not any(leq(D, F) for F in forests)]
    return as_antichain(chosen)


# -- the splitting procedure -------------------------------------------------


class Tag(str, enum.Enum):
    SEARCH = "search"                  # witness found by the bounded search
    DUAL_WITNESS = "dual-witness"      # witness is a dual of the forbidden family
    DUALITY_FORCED = "duality-forced"  # no witness exists, by a verified duality
    SEARCH_EXHAUSTED = "search-exhausted"


@dataclass(frozen=True)
class Step:
    index: int
    element: Structure
    upper: bool
    tag: Tag
    witness: Structure | None = None
    bound: int | None = None  # witness bound, for search-based answers


@dataclass(frozen=True)
class ContractReport:
    """Bounded check of a splitting; each field holds the first failing core."""

    bound: int
    up_counterexample: Structure | None = None  # strictly above the antichain, not above the upper part
    down_counterexample: Structure | None = None  # strictly below the antichain, not below the lower part
    uncovered: Structure | None = None  # neither above the upper part nor below the lower part

    @property
    def passed(self) -> bool:
        return self.up_counterexample is None and self.down_counterexample is None and self.uncovered is None


@dataclass(frozen=True)
class SplitResult:
    elements: tuple[Structure, ...]
    upper: tuple[Structure, ...]
    lower: tuple[Structure, ...]
    steps: tuple[Step, ...]
    contract: ContractReport
    witness_bound: int
    catalog_bound: int
    small: tuple["SmallnessVerdict", ...] = field(default=())  # one per upper element, filled on failure

    @property
    def verdict(self) -> str:
        if self.contract.passed:
            return "splitting"
        if any(v.status != "not-small" for v in self.small):
            return "no valid splitting: antichain at the bottom"
        return "no valid splitting"


def _is_witness(X: Structure, i: int, elements: Sequence[Structure], upper: Sequence[Structure]) -> bool:
    A = elements[i]
    if not strictly_below(A, X):
        return False
    if any(leq(F, X) for F in upper):
        return False
    return not any(leq(B, X) for B in elements[i + 1:])


def _candidates(i: int, elements: Sequence[Structure], witness_bound: int, catalog_bound: int,
                ceiling: int):
    A = elements[i]
    for T in all_trees(A.sig, witness_bound):
        yield disjoint_sum(A, T)
    for j, B in enumerate(elements):
        if j != i:
            yield disjoint_sum(A, B)
            yield disjoint_sum(A, product(A, B))
    yield from _cores(A.sig, catalog_bound, ceiling)


def _forced_rejection(i: int, elements: Sequence[Structure], upper: Sequence[Structure],
                      verify_bound: int, ceiling: int) -> tuple[bool, Structure | None]:
    """Decide the step exactly when every forbidden structure is a forest.

    Returns ``(applies, dual_witness)``: when the forbidden family is a
    verified finite duality, a witness exists iff ``A_i`` lies strictly
    below one of the duals, in which case that dual is a witness.
    """
    forbidden = list(upper) + list(elements[i + 1:])
    if not all(is_forest(F) for F in forbidden):
        return False, None
    try:
        duality = generalized_dual(forbidden, verify_bound, ceiling, sig=elements[i].sig)
    except DualityError:
        return False, None
    for D in duality.duals:
        if strictly_below(elements[i], D):
            return True, D
    return True, None


def check_splitting(elements: Sequence[Structure], upper: Sequence[Structure], lower: Sequence[Structure],
                    n_max: int, ceiling: int = DEFAULT_CEILING) -> ContractReport:
    """Check a partition against every catalog core up to ``n_max`` vertices.

    Three conditions: the strict upset of the antichain equals the strict
    upset of ``upper``, the strict downset equals that of ``lower``, and every
    core lies above ``upper`` or below ``lower``. For a maximal antichain the
    three are equivalent.
    """
    up_bad = down_bad = uncovered = None
    for X in _cores(elements[0].sig, n_max, ceiling):
        above_upper = any(leq(F, X) for F in upper)
        below_lower = any(leq(X, D) for D in lower)
        if up_bad is None and (any(strictly_below(A, X) for A in elements)
                               != any(strictly_below(F, X) for F in upper)):
            up_bad = X
        if down_bad is None and (any(strictly_below(X, A) for A in elements)
                                 != any(strictly_below(X, D) for D in lower)):
            down_bad = X
        if uncovered is None and not (above_upper or below_lower):
            uncovered = X
    return ContractReport(n_max, up_bad, down_bad, uncovered)


def split_antichain(elements: Sequence[Structure], witness_bound: int = DEFAULT_WITNESS_BOUND,
                    verify_bound: int = DEFAULT_VERIFY_BOUND,
                    ceiling: int = DEFAULT_CEILING) -> SplitResult:
    """Partition an ordered antichain into upper and lower parts and check the result.

    Witness candidates for ``A_i`` are tried in this order: ``A_i + T`` for
    every tree ``T`` up to ``witness_bound`` vertices, sums of ``A_i`` with
    the other elements and with their products with ``A_i``, then every catalog
    core up to ``witness_bound`` vertices (clamped to the catalog ceiling).
    """
    elements = as_antichain(elements)
    sig = elements[0].sig
    catalog_bound = feasible_bound(sig, witness_bound, ceiling)
    contract_bound = feasible_bound(sig, verify_bound, ceiling)
    upper: list[Structure] = []
    steps = []
    for i, A in enumerate(elements):
        applies, dual_witness = _forced_rejection(i, elements, upper, verify_bound, ceiling)
        if applies and dual_witness is None:
            steps.append(Step(i, A, False, Tag.DUALITY_FORCED))
            continue
        witness = next((X for X in _candidates(i, elements, witness_bound, catalog_bound, ceiling)
                        if _is_witness(X, i, elements, upper)), None)
        if witness is not None:
            steps.append(Step(i, A, True, Tag.SEARCH, canonical_form(core(witness)), witness_bound))
            upper.append(A)
        elif dual_witness is not None:
            steps.append(Step(i, A, True, Tag.DUAL_WITNESS, dual_witness))
            upper.append(A)
        else:
            steps.append(Step(i, A, False, Tag.SEARCH_EXHAUSTED, None, witness_bound))
    lower = [A for A in elements if A not in upper]
    contract = check_splitting(elements, upper, lower, contract_bound, ceiling)
    small: tuple[SmallnessVerdict, ...] = ()
    if not contract.passed:
        small = tuple(is_small_bounded(F, contract_bound, ceiling) for F in upper)
    return SplitResult(elements, tuple(upper), tuple(lower), tuple(steps), contract,
                       witness_bound, catalog_bound, small)


# -- the bottom of the order ---------------------------------------------------


@dataclass(frozen=True)
class DStar:
    components: tuple[Structure, ...]
    structure: Structure
    core: Structure


def d_star(sig: Signature) -> DStar:
    """Disjoint union of all trees with at most one tuple of each kind."""
    sig = check_signature(sig)
    comps = all_trees_one_edge_per_kind(sig).entries
    whole = sum_all(comps)
    return DStar(comps, whole, canonical_form(core(whole)))


@dataclass(frozen=True)
class SmallnessVerdict:
    """``status`` is ``small``, ``not-small`` or ``unknown``.

    ``exact`` is False when the verdict depends on the catalog bound. For a
    bounded ``small`` verdict ``lower`` is a highest structure ``Y`` such that
    nothing outside the bottom region was found strictly between ``Y`` and
    ``X``; for ``not-small`` the refutations map each candidate lower
    structure to a structure strictly between it and ``X`` that does not map
    to the bottom region.
    """

    status: str
    exact: bool
    bound: int
    lower: Structure | None = None
    refutations: tuple[tuple[Structure, Structure], ...] = ()


def is_small_bounded(X: Structure, n_max: int, ceiling: int = DEFAULT_CEILING) -> SmallnessVerdict:
    bottom = d_star(X.sig).core
    if leq(X, bottom):
        return SmallnessVerdict("small", True, n_max)
    n_max = feasible_bound(X.sig, n_max, ceiling)
    cores = _cores(X.sig, n_max, ceiling)
    lowers = [Y for Y in cores if leq(Y, bottom) and strictly_below(Y, X)]
    refutations = []
    good = []
    for Y in lowers:
        bad = next((Z for Z in cores
                    if strictly_below(Y, Z) and strictly_below(Z, X) and not leq(Z, bottom)), None)
        if bad is None:
            good.append(Y)
        else:
            refutations.append((Y, bad))
    if good:
        # report the highest such Y: it exhibits the gap just below X
        Y = next(Y for Y in good if not any(strictly_below(Y, W) for W in good))
        return SmallnessVerdict("small", False, n_max, Y)
    if not lowers:
        return SmallnessVerdict("unknown", False, n_max)
    return SmallnessVerdict("not-small", False, n_max, None, tuple(refutations))


# -- cut-points ----------------------------------------------------------------


@dataclass(frozen=True)
class CutpointReport:
    tree: Structure
    dual: Structure
    meet_point: Structure  # core of tree x dual
    join_point: Structure  # core of tree + dual
    bound: int
    below_counterexample: Structure | None = None
    above_counterexample: Structure | None = None

    @property
    def passed(self) -> bool:
        return self.below_counterexample is None and self.above_counterexample is None


def cutpoint_certificates(T: Structure, n_max: int = DEFAULT_VERIFY_BOUND,
                          ceiling: int = DEFAULT_CEILING) -> CutpointReport:
    """Check the two interval identities that make ``T x D`` and ``T + D`` cut-points.

    Below ``T``: every core ``X < T`` maps to ``T x D``. Above ``D``: ``T + D``
    maps to every core ``X > D``.
    """
    if not (is_tree(T) and is_connected(T)) or T.size == 0:
        raise DualityError("cut-point certificates need a connected tree with at least one tuple")
    T = canonical_form(core(T))
    D = canonical_form(dual_of_tree(T, n_max))
    meet = canonical_form(core(product(T, D)))
    join = canonical_form(core(disjoint_sum(T, D)))
    n_max = feasible_bound(T.sig, n_max, ceiling)
    below_bad = above_bad = None
    for X in _cores(T.sig, n_max, ceiling):
        if below_bad is None and strictly_below(X, T) and not leq(X, meet):
            below_bad = X
        if above_bad is None and strictly_below(D, X) and not leq(join, X):
            above_bad = X
    return CutpointReport(T, D, meet, join, n_max, below_bad, above_bad)


def interval(lo: Structure, hi: Structure, n_max: int, ceiling: int = DEFAULT_CEILING) -> list[Structure]:
    """Catalog cores ``X`` with ``lo <= X <= hi``."""
    return [X for X in _cores(lo.sig, n_max, ceiling) if leq(lo, X) and leq(X, hi)]

