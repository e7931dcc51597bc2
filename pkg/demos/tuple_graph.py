"""
Cliques of a tuple graph
========================

Grouping vertices of a k-partite graph into s-tuples turns each k-clique
into exactly one ceil(k/s)-clique of the tuple graph.
"""
from __future__ import annotations

from kclique.cliques import brute_force_cliques
from kclique.graph import gen_kpartite_random
from kclique.lister import build_tuple_graph

k, per = 6, 5
g = gen_kpartite_random(k, per, 0.7, 3)
parts = [list(range(i * per, (i + 1) * per)) for i in range(k)]
source = brute_force_cliques(g, k).as_set()

for s in (2, 3):
    tg = build_tuple_graph(g, k, s, parts)
    kp = len(tg.blocks)
    found = [tg.project(c) for c in brute_force_cliques(tg.graph, kp)]
    print(f"s={s}: {tg.graph.n} tuple nodes, {len(found)} {kp}-cliques, "
          f"{len(source)} source {k}-cliques, bijective={set(found) == source and len(set(found)) == len(found)}")
