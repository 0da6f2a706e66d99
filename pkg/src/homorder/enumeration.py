"""Brute-force catalogs of small structures, up to isomorphism.

Labeled structures on ``n`` vertices are bit masks over the universe of all
possible tuples. A mask is kept when it is the least element of its orbit
under vertex permutations (checked for all masks at once with numpy), then
normalized with :func:`~homorder.hom.canonical_form`.
"""

from __future__ import annotations

import os
import shutil
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from pathlib import Path
from typing import Iterator

import numpy as np

from .hom import canonical_form, canonical_key, is_core
from .model import Signature, Structure, check_signature, components, is_balanced, is_tree

DEFAULT_CEILING = 10**7
GENERATOR_VERSION = 1

_cache_dir: Path | None = None


def set_cache_dir(directory: str | os.PathLike | None) -> None:
    """Persist structure catalogs under ``directory`` (None disables the disk cache)."""
    global _cache_dir
    _cache_dir = None if directory is None else Path(directory)


class CatalogTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Catalog:
    sig: Signature
    n_max: int
    entries: tuple[Structure, ...]
    flags: tuple[dict, ...] = field(repr=False)

    def __iter__(self) -> Iterator[Structure]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Structure:
        return self.entries[i]

    def where(self, **wanted: bool) -> "Catalog":
        keep = [i for i, f in enumerate(self.flags) if all(f[k] == v for k, v in wanted.items())]
        return Catalog(self.sig, self.n_max, tuple(self.entries[i] for i in keep),
                       tuple(self.flags[i] for i in keep))


def _universe(sig: Signature, n: int) -> list[tuple[int, tuple[int, ...]]]:
    return [(i, t) for i, a in enumerate(sig) for t in product(range(n), repeat=a)]


def labeled_count(sig: Signature, n: int) -> int:
    return 2 ** sum(n**a for a in sig)


def check_ceiling(sig: Signature, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    total = sum(labeled_count(sig, n) for n in range(1, n_max + 1))
    if total > ceiling:
        raise CatalogTooLarge(
            f"{total} labeled candidates for signature {sig} up to {n_max} vertices exceeds the ceiling {ceiling}"
        )


def feasible_bound(sig: Signature, n_max: int, ceiling: int = DEFAULT_CEILING) -> int:
    """Largest bound ``<= n_max`` whose catalog fits under the ceiling (at least 1)."""
    sig = check_signature(sig)
    for n in range(n_max, 1, -1):
        try:
            check_ceiling(sig, n, ceiling)
            return n
        except CatalogTooLarge:
            pass
    return 1


def _orbit_representatives(sig: Signature, n: int) -> list[Structure]:
    universe = _universe(sig, n)
    index = {u: k for k, u in enumerate(universe)}
    bits = len(universe)
    masks = np.arange(1 << bits, dtype=np.int64)
    minimal = np.ones(masks.shape, dtype=bool)
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        image = np.zeros_like(masks)
        for k, (i, t) in enumerate(universe):
            target = index[(i, tuple(perm[v] for v in t))]
            image |= ((masks >> k) & 1) << target
        minimal &= image >= masks
    reps = []
    for mask in np.flatnonzero(minimal).tolist():
        rels: list[list[tuple[int, ...]]] = [[] for _ in sig]
        for k, (i, t) in enumerate(universe):
            if mask >> k & 1:
                rels[i].append(t)
        reps.append(Structure(sig, n, tuple(tuple(sorted(r)) for r in rels)))
    return reps


def _flags(A: Structure) -> dict:
    return {
        "core": is_core(A),
        "tree": is_tree(A),
        "balanced": is_balanced(A) is not None,
        "connected": len(components(A)) == 1,
    }


@lru_cache(maxsize=None)
def _structures_on(sig: Signature, n: int) -> tuple[Structure, ...]:
    forms = [canonical_form(r) for r in _orbit_representatives(sig, n)]
    return tuple(sorted(forms, key=canonical_key))


@lru_cache(maxsize=None)
def _flags_of(A: Structure) -> tuple:
    return tuple(sorted(_flags(A).items()))


def all_structures(sig: Signature, n_max: int, ceiling: int = DEFAULT_CEILING) -> Catalog:
    """Every isomorphism class of structures with at most ``n_max`` vertices."""
    sig = check_signature(sig)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    check_ceiling(sig, n_max, ceiling)
    return _all_structures(sig, n_max, _cache_dir)


@lru_cache(maxsize=None)
def _all_structures(sig: Signature, n_max: int, cache_dir: Path | None) -> Catalog:
    if cache_dir is not None:
        stored = cache_dir / cache_key(sig, n_max)
        if (stored / "index.txt").exists():
            return load_catalog(stored)
    entries = tuple(A for n in range(1, n_max + 1) for A in _structures_on(sig, n))
    flags = tuple(dict(_flags_of(A)) for A in entries)
    catalog = Catalog(sig, n_max, entries, flags)
    if cache_dir is not None:
        save_catalog(catalog, cache_dir / cache_key(sig, n_max))
    return catalog


def all_cores(sig: Signature, n_max: int, ceiling: int = DEFAULT_CEILING) -> Catalog:
    return all_structures(sig, n_max, ceiling).where(core=True)


def burnside_count(sig: Signature, n: int) -> int:
    """Number of isomorphism classes on exactly ``n`` vertices, by Burnside's lemma."""
    sig = check_signature(sig)
    universe = _universe(sig, n)
    index = {u: k for k, u in enumerate(universe)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(universe)
        cycles = 0
        for start in range(len(universe)):
            if seen[start]:
                continue
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                i, t = universe[k]
                k = index[(i, tuple(perm[v] for v in t))]
        total += 2**cycles
    count = Fraction(total, factorial(n))
    assert count.denominator == 1
    return int(count)


# -- trees --------------------------------------------------------------------


def _grow_trees(sig: Signature, n_max: int, per_kind_limit: int | None = None) -> list[Structure]:
    """Connected trees obtained by repeatedly attaching a block at one vertex."""
    start = Structure(sig, 1, tuple(() for _ in sig))
    found = {start}
    frontier = [start]
    while frontier:
        grown = set()
        for T in frontier:
            for kind, arity in enumerate(sig):
                if per_kind_limit is not None and len(T.relations[kind]) >= per_kind_limit:
                    continue
                m = T.n + arity - 1
                if m > n_max:
                    continue
                for v in range(T.n):
                    for pos in range(arity):
                        fresh = iter(range(T.n, m))
                        t = tuple(v if j == pos else next(fresh) for j in range(arity))
                        rels = list(T.relations)
                        rels[kind] = tuple(sorted(rels[kind] + (t,)))
                        new = canonical_form(Structure(sig, m, tuple(rels)))
                        if new not in found:
                            grown.add(new)
        found |= grown
        frontier = sorted(grown, key=canonical_key)
    return sorted(found, key=canonical_key)


@lru_cache(maxsize=None)
def _trees(sig: Signature, n_max: int) -> tuple[Structure, ...]:
    return tuple(_grow_trees(sig, n_max))


def all_trees(sig: Signature, n_max: int) -> Catalog:
    """Connected trees with at most ``n_max`` vertices (generated directly, no ceiling)."""
    sig = check_signature(sig)
    entries = _trees(sig, n_max)
    return Catalog(sig, n_max, entries, tuple(dict(_flags_of(T)) for T in entries))


@lru_cache(maxsize=None)
def _one_edge_trees(sig: Signature) -> tuple[Structure, ...]:
    bound = 1 + sum(a - 1 for a in sig)
    return tuple(_grow_trees(sig, bound, per_kind_limit=1))


def all_trees_one_edge_per_kind(sig: Signature) -> Catalog:
    """The finite family of trees with at most one tuple of each kind."""
    sig = check_signature(sig)
    entries = _one_edge_trees(sig)
    return Catalog(sig, 1 + sum(a - 1 for a in sig), entries, tuple(dict(_flags_of(T)) for T in entries))


# -- on-disk catalogs ----------------------------------------------------------


def cache_key(sig: Signature, n_max: int, kind: str = "structures") -> str:
    return f"{kind}-sig{'_'.join(map(str, sig))}-n{n_max}-v{GENERATOR_VERSION}"


def save_catalog(catalog: Catalog, directory: str | os.PathLike) -> Path:
    """Write one structure file per entry plus ``index.txt``; the directory appears atomically."""
    from .formats import dumps

    directory = Path(directory)
    directory.parent.mkdir(parents=True, exist_ok=True)
    tmp = Path(tempfile.mkdtemp(prefix=directory.name + ".", dir=directory.parent))
    width = max(4, len(str(len(catalog))))
    lines = [f"# type {' '.join(map(str, catalog.sig))} n_max {catalog.n_max} entries {len(catalog)}"]
    for k, (A, flags) in enumerate(zip(catalog.entries, catalog.flags)):
        name = f"{k:0{width}d}.ds"
        (tmp / name).write_text(dumps(A), encoding="utf-8")
        lines.append(name + " " + " ".join(f"{key}={int(val)}" for key, val in sorted(flags.items())))
    (tmp / "index.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    if directory.exists():
        shutil.rmtree(directory)
    os.replace(tmp, directory)
    return directory


def load_catalog(directory: str | os.PathLike) -> Catalog:
    from .formats import loads

    directory = Path(directory)
    lines = (directory / "index.txt").read_text(encoding="utf-8").splitlines()
    header = lines[0].lstrip("# ").split()
    sig = tuple(int(x) for x in header[1:header.index("n_max")])
    n_max = int(header[header.index("n_max") + 1])
    entries, flags = [], []
    for line in lines[1:]:
        if not line.strip():
            continue
        name, *pairs = line.split()
        entries.append(loads((directory / name).read_text(encoding="utf-8")))
        flags.append({k: bool(int(v)) for k, v in (p.split("=") for p in pairs)})
    return Catalog(sig, n_max, tuple(entries), tuple(flags))
