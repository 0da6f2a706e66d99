"""
Classes defined by cycles
=========================

Cores that map to no tree, cores with a cycle, cores with an odd cycle and
their per-component variants. The script prints the membership table for
a handful of digraphs and searches the small catalog for separating cores.
"""

import itertools

from homorder import all_cores, cycle, disjoint_sum, path, top, transitive_tournament
from homorder.classes import CONDITIONS, membership
from homorder.formats import dumps_inline

samples = {
    "P2": path(2), "TT3": transitive_tournament(3), "C3+P1": disjoint_sum(cycle(3), path(1)),
    "P3+TT3": disjoint_sum(path(3), transitive_tournament(3)), "loop": top(),
}
print("structure  " + " ".join(f"{k!s:>6}" for k in CONDITIONS))
for name, A in samples.items():
    m = membership(A)
    print(f"{name:10s} " + " ".join(f"{'x' if m[k] else '.':>6}" for k in CONDITIONS))

###############################################################################
# Separations among digraph cores up to 4 vertices
# ------------------------------------------------
cores = list(all_cores((2,), 4))
members = [membership(A) for A in cores]
for a, b in itertools.permutations(CONDITIONS, 2):
    sep = next((A for A, m in zip(cores, members) if m[a] and not m[b]), None)
    if sep is not None:
        print(f"in {a} but not {b}: {dumps_inline(sep)}")
