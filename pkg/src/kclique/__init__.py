"""k-clique detection, counting and output-sensitive listing from ell-clique lists."""
from __future__ import annotations

from .boolmat import BoolMatrix, bool_multiply, count_multiply, mm_cost, witness_multiply
from .cliques import (brute_force_cliques, clique_degrees, count_cliques_oracle,
                      list_cliques_simple)
from .detector import DetectionOutcome, count, detect, find_witness
from .graph import (Clique, CliqueList, Graph, GraphFormatError, SplitMix64, common_neighborhood,
                    gen_kpartite_random, gen_planted, gen_random, kpartite_copy, load_edge_list,
                    pad_to_clique_count, save_edge_list)
from .hardness import (WeightedGraph, decide_exact_kclique, gen_exact_instance, hash_weights,
                       interval_subgraphs)
from .lister import (ListingBudget, ListingReport, auto_list, list_43, list_61_a, list_61_b,
                     list_k1, list_kl, list_specified_t, list_via_tuple_reduction)
from .planner import (ExponentReport, ListingPlan, detection_exponent, f_i_bound,
                      listing_exponents, make_plan, reduction_exponent)

__all__ = [name for name in dir() if not name.startswith("_")]
