"""
Listing k-cliques several ways
==============================

Every lister returns the same set; the phase tallies show where each
clique was found.
"""
from __future__ import annotations

from kclique.cliques import brute_force_cliques
from kclique.graph import gen_random
from kclique.lister import (ListingBudget, list_43, list_61_a, list_61_b, list_k1, list_kl,
                            list_via_tuple_reduction)

g = gen_random(30, 0.5, 8)
truth = brute_force_cliques(g, 4).as_set()
print(f"graph: n={g.n}, m={g.m}, 4-cliques={len(truth)}")

edges, triangles = brute_force_cliques(g, 2), brute_force_cliques(g, 3)
runs = {
    "dense/sparse": list_k1(g, 4, seed=1),
    "from edges": list_kl(g, 4, 2, edges, seed=1),
    "from triangles": list_43(g, triangles, seed=1),
    "pairs of vertices": list_via_tuple_reduction(g, 4, 1, 2, seed=1),
}
for name, rep in runs.items():
    same = rep.cliques.as_set() == truth
    print(f"{name:<18} {len(rep):>4} cliques, exact={same}, phases={rep.phases}")

# With a cap only t cliques come back, and the run stops early.
rep = list_k1(g, 4, ListingBudget.capped(25), seed=1)
print("\ncapped at 25:", len(rep), "cliques")

# The two 6-clique listers on a denser graph.
h = gen_random(20, 0.75, 5)
six = brute_force_cliques(h, 6).as_set()
for name, fn in (("six-a", list_61_a), ("six-b", list_61_b)):
    rep = fn(h, seed=2)
    print(f"{name}: {len(rep)} of {len(six)} 6-cliques, exact={rep.cliques.as_set() == six}")
