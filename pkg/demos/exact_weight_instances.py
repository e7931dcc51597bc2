"""
Zero-weight cliques via capped listing
======================================

Hash the weights of a complete k-partite graph, cut the field into s
intervals, and list a bounded number of k-cliques in each surviving
subgraph.
"""
from __future__ import annotations

from kclique.hardness import (DecisionStats, IntervalFamily, decide_exact_kclique,
                              exact_cliques_brute, gen_exact_instance, hash_preserved,
                              hash_weights)

wg = gen_exact_instance(8, 3, seed=4, plant=True)
print("prime:", wg.p, "planted:", wg.planted, "weight:", wg.clique_weight(wg.planted))

# Hashing keeps exactly the same zero-weight cliques.
print("hash preserves zero cliques:", hash_preserved(wg, hash_weights(wg, 1)))

fam = IntervalFamily(wg.p, 4, 3)
print("interval choices with a zero sum:", len(list(fam.admissible())), "of", 4 ** 3)

stats = DecisionStats()
found = decide_exact_kclique(wg, 3, 1, 2, seed=9, stats=stats)
print("found:", found, "witness:", stats.found, "subgraphs:", stats.combinations)

# On an instance without a zero clique the answer is always no.
plain = gen_exact_instance(8, 3, seed=5)
print("zero cliques by brute force:", len(exact_cliques_brute(plain)),
      "decision:", decide_exact_kclique(plain, 3, 1, 2, seed=9))
