"""
Detection exponents from the ell-clique list
============================================

Exact rational exponents g(k, ell) for finding a k-clique when all
ell-cliques are given, at omega = 2.
"""
from __future__ import annotations

from kclique.planner import detection_exponent, detection_table, listing_exponents

table = detection_table(12, 5, 2)
print("k   " + "  ".join(f"ell={e:<5}" for e in range(1, 6)))
for k in range(3, 13):
    cells = [str(table.get((k, e), "-")) for e in range(1, 6)]
    print(f"{k:<3} " + "  ".join(f"{c:<9}" for c in cells))

# The (4, 2) entry splits a 4-clique into 2 + 1 + 1 and sends single
# vertices with few incident edges down a recursive branch.
rep = detection_exponent(4, 2, 2)
print("\n(4, 2):", rep.g, "split", rep.choice, "thresholds", rep.thresholds)

# Listing is output sensitive: t cliques cost n^alpha t^(1 - alpha/k)
# once t exceeds n^gamma.
for k in (4, 5, 6):
    ex = listing_exponents(k, 1, 2)
    print(f"list {k}-cliques: alpha={ex.alpha}, gamma={ex.gamma}")
