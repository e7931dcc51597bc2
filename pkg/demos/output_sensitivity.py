"""
Work grows with the number of cliques
=====================================

Pad a sparse random graph with a complete 4-partite block and watch the
listing tallies follow the clique count.
"""
from __future__ import annotations

import time

from kclique.graph import gen_random, pad_to_clique_count
from kclique.lister import list_k1

base = gen_random(40, 0.15, 2)
for extra in (0, 16, 81, 256, 625):
    g = pad_to_clique_count(base, 4, extra)
    t0 = time.perf_counter()
    rep = list_k1(g, 4, seed=1)
    took = time.perf_counter() - t0
    print(f"extra={extra:<4} n={g.n:<3} cliques={len(rep):<4} {took:.3f}s "
          f"matmul rounds={rep.phases.get('matmul_rounds', 0)}")
