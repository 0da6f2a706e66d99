"""
Splitting a maximal antichain
=============================

A finite maximal antichain usually splits into an upper part and a lower
part so that everything lies above the first or below the second. The
exception lives at the very bottom of the order.
"""

from homorder import cycle, path, transitive_tournament
from homorder.formats import dumps_inline
from homorder.order import antichain_from_duality, is_small_bounded, split_antichain

# {P3, TT3} is a maximal antichain because TT3 is the dual of P3.
A = antichain_from_duality([path(3)], [transitive_tournament(3)], verify_bound=4)
result = split_antichain(A, witness_bound=5, verify_bound=4)
for step in result.steps:
    witness = dumps_inline(step.witness) if step.witness else "-"
    print(f"{dumps_inline(step.element):40s} {'upper' if step.upper else 'lower'}  {step.tag.value:15s} {witness}")
print("verdict:", result.verdict)

###############################################################################
# The bottom exception
# --------------------
# The singleton {P2} is maximal, but P1 < P2 is a gap, so nothing can be put
# below the antichain.
result = split_antichain([path(2)], verify_bound=4)
print("{P2}:", result.verdict)
for X in (path(1), path(2), cycle(3)):
    v = is_small_bounded(X, 4)
    print(f"{dumps_inline(X):40s} {v.status} (exact={v.exact}, bound={v.bound})")
