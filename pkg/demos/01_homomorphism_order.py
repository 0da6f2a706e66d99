"""
Comparing structures in the homomorphism order
==============================================

A structure sits below another when it maps into it. This walk-through
compares a few small digraphs, reduces them to cores and combines them
with the two lattice operations.
"""

from homorder import compare, core, disjoint_sum, path, product, transitive_tournament
from homorder.formats import dumps_inline

P2, P3 = path(2), path(3)
TT2, TT3 = transitive_tournament(2), transitive_tournament(3)

# The identity embeds the 2-path into the transitive tournament on 3 vertices.
print("P2 vs TT3:", compare(P2, TT3))

# Neither of these maps to the other: P3 needs a walk of length 3,
# TT3 has a triangle in its underlying graph.
print("P3 vs TT3:", compare(P3, TT3))

###############################################################################
# Cores
# -----
# The union P2 + P1 folds onto its larger component.
print("core(P2 + P1):", dumps_inline(core(disjoint_sum(P2, path(1)))))

###############################################################################
# Join and meet
# -------------
# The disjoint sum is the least upper bound, the product the greatest lower bound.
meet = core(product(P2, TT2))
print("core(P2 x TT2):", dumps_inline(meet))
join = core(disjoint_sum(P3, TT3))
print("core(P3 + TT3) has", join.n, "vertices")
