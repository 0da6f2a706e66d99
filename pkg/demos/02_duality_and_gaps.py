"""
Tree duals and gaps
===================

Every tree T has a dual D: a structure maps to D exactly when T does not
map to it. The product T x D is then the element directly below T.
"""

from homorder import path
from homorder.duality import duality_pair, gap_certificate, generalized_dual
from homorder.formats import dumps_inline

# Directed paths have transitive tournaments as duals.
for k in range(1, 4):
    pair = duality_pair(path(k), verify_bound=4)
    print(f"dual of P{k}: {dumps_inline(pair.dual)}  (checked up to {pair.verified_bound} vertices)")

###############################################################################
# A family of forests
# -------------------
# Forbidding both P2 and P3 is the same as forbidding P2.
family = generalized_dual([path(2), path(3)])
print("duals of {P2, P3}:", [dumps_inline(D) for D in family.duals])

###############################################################################
# Gaps below trees
# ----------------
for k in (1, 2, 3):
    cert = gap_certificate(path(k), verify_bound=4)
    status = "no core in between" if cert.verified else f"found {cert.counterexample}"
    print(f"gap below P{k}: bottom has {cert.bottom.n} vertices, {status} up to {cert.verified_bound}")
