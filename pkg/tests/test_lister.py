from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from kclique.cliques import brute_force_cliques
from kclique.graph import (CliqueList, Graph, complete_multipartite, gen_kpartite_random,
                           gen_planted, gen_random)
from kclique.lister import (ListingBudget, auto_list, build_tuple_graph, list_43, list_61_a,
                            list_61_b, list_k1, list_kl, list_specified_t,
                            list_via_tuple_reduction, run_algorithm)

from conftest import nx_cliques


def L(g, ell):
    return brute_force_cliques(g, ell)


def as_set(rep):
    return set(rep.cliques.items)


# --- small worked examples -------------------------------------------------

def test_k6_four_cliques():
    rep = list_k1(Graph.complete(6), 4)
    assert len(rep) == 15


def test_k7_five_from_edges():
    g = Graph.complete(7)
    assert len(list_kl(g, 5, 2, L(g, 2))) == 21


def test_k5_four_from_triangles():
    g = Graph.complete(5)
    assert len(list_43(g, L(g, 3))) == 5


def test_six_cliques_of_k7_and_k8():
    assert len(list_61_a(Graph.complete(7))) == 7
    assert len(list_61_b(Graph.complete(8))) == 28


def test_multipartite_has_no_large_clique():
    g = complete_multipartite([2] * 5)
    assert len(list_k1(g, 6)) == 0
    assert len(list_k1(g, 5)) == 32


def test_empty_graph():
    g = Graph(0, [])
    assert len(list_k1(g, 3)) == 0


# --- oracle equivalence ----------------------------------------------------

GOLDENS = [
    ((20, 0.5, 11), 4, 45),
    ((36, 0.5, 21), 4, 907),
    ((30, 0.5, 13), 5, 99),
    ((30, 0.6, 4), 5, 701),
    ((28, 0.6, 2), 4, 1084),
    ((18, 0.6, 2), 5, 79),
    ((30, 0.5, 8), 3, 440),
    ((30, 0.5, 8), 4, 317),
]


@pytest.mark.parametrize("args, k, want", GOLDENS)
def test_dense_sparse_goldens(args, k, want):
    g = gen_random(*args)
    rep = list_k1(g, k, seed=5)
    assert len(rep) == want
    assert as_set(rep) == brute_force_cliques(g, k).as_set()


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("k, ell", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (6, 3)])
def test_kl_against_networkx(seed, k, ell):
    g = gen_random(18, 0.6, 50 * k + seed)
    assert as_set(list_kl(g, k, ell, L(g, ell), seed=seed)) == nx_cliques(g, k)


@pytest.mark.parametrize("seed", range(10))
def test_four_three_against_networkx(seed):
    g = gen_random(20, 0.55, seed)
    assert as_set(list_43(g, L(g, 3), seed=seed)) == nx_cliques(g, 4)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("fn", [list_61_a, list_61_b])
def test_six_against_networkx(seed, fn):
    g = gen_random(18, 0.75, seed)
    assert as_set(fn(g, seed=seed)) == nx_cliques(g, 6)


def test_six_golden():
    g = gen_random(22, 0.75, 5)
    assert len(list_61_a(g)) == 421
    assert len(list_61_b(g)) == 421


# the partite copy grows as k!, so it is exercised at k <= 5 only
TUPLE_CASES = ([(k, ell, s, "order") for k, ell, s in [(4, 1, 2), (5, 2, 2), (6, 2, 2), (6, 3, 3),
                                                       (5, 1, 3)]]
               + [(k, ell, s, "copy") for k, ell, s in [(4, 1, 2), (5, 2, 2), (5, 1, 3)]])


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("k, ell, s, partition", TUPLE_CASES)
def test_tuple_reduction_against_networkx(seed, k, ell, s, partition):
    g = gen_random(14, 0.65, 7 * k + seed)
    rep = list_via_tuple_reduction(g, k, ell, s, ell_cliques=L(g, ell), partition=partition)
    assert as_set(rep) == nx_cliques(g, k)


def test_tuple_reduction_rejects_bad_width():
    g = Graph.complete(5)
    with pytest.raises(ValueError):
        list_via_tuple_reduction(g, 6, 5, 3)


def test_tuple_graph_with_parts_is_bijective():
    g = gen_kpartite_random(4, 5, 0.6, 9)
    parts = [list(range(5 * i, 5 * i + 5)) for i in range(4)]
    tg = build_tuple_graph(g, 4, 2, parts)
    tuple_cliques = brute_force_cliques(tg.graph, 2)
    projected = [tg.project(c) for c in tuple_cliques]
    assert len(projected) == len(set(projected)) == 16
    assert set(projected) == brute_force_cliques(g, 4).as_set()


@given(st.integers(5, 14), st.floats(0.3, 0.9), st.integers(0, 10 ** 6), st.integers(3, 5))
def test_dense_sparse_property(n, p, seed, k):
    g = gen_random(n, p, seed)
    assert as_set(list_k1(g, k, seed=seed)) == brute_force_cliques(g, k).as_set()


# --- budgets ---------------------------------------------------------------

@pytest.mark.parametrize("t", [1, 7, 100, 5000])
def test_capped_returns_min(t):
    g = gen_random(20, 0.5, 11)
    truth = brute_force_cliques(g, 4).as_set()
    rep = list_k1(g, 4, ListingBudget.capped(t))
    assert len(rep) == min(t, len(truth))
    assert as_set(rep) <= truth


def test_budget_validation():
    with pytest.raises(ValueError):
        ListingBudget(3, "some")
    with pytest.raises(ValueError):
        ListingBudget.capped(0)


@pytest.mark.parametrize("ell", [1, 2])
@pytest.mark.parametrize("t", [1, 10, 300, 2000])
def test_specified_t(ell, t):
    g = gen_random(30, 0.5, 8)
    truth = brute_force_cliques(g, 4).as_set()
    rep = list_specified_t(g, 4, ell, L(g, ell), t, seed=1)
    assert len(rep) == min(t, len(truth))
    assert as_set(rep) <= truth


def test_specified_t_halves_large_outputs():
    g = Graph.complete(14)
    rep = list_specified_t(g, 3, 1, L(g, 1), 2)
    assert len(rep) == 2 and rep.phases["halvings"] >= 1
    assert all(g.is_clique(c) for c in rep.cliques)


# --- tallies and dispatch --------------------------------------------------

def test_phase_tallies():
    g = gen_random(30, 0.5, 8)
    rep = list_k1(g, 4, seed=3)
    assert rep.phases["attempts"] >= 1
    emitted = sum(rep.phases.get(key, 0)
                  for key in ("base_cliques", "light_edge_cliques", "light_k4_cliques"))
    assert emitted == len(rep) == 317
    assert rep.phases.get("sampling_missed", 0) == 0
    assert rep.plan is not None and rep.plan.tag == "dense-sparse"


def test_same_seed_same_tallies():
    g = gen_random(26, 0.6, 1)
    a, b = list_k1(g, 4, seed=9), list_k1(g, 4, seed=9)
    assert a.phases == b.phases and a.cliques.items == b.cliques.items


@pytest.mark.parametrize("name, k, ell", [
    ("dense-sparse", 4, 1), ("kl", 4, 2), ("four-three", 4, 3), ("six-a", 6, 1),
    ("six-b", 6, 1), ("tuple:2", 5, 2), ("auto", 5, 2), ("auto", 4, 1),
])
def test_run_algorithm(name, k, ell):
    g = gen_planted(16, 0.6, 6, 3)
    rep = run_algorithm(name, g, k, ell, L(g, ell), seed=2)
    assert as_set(rep) == nx_cliques(g, k)


def test_run_algorithm_rejects():
    g = Graph.complete(5)
    with pytest.raises(ValueError):
        run_algorithm("four-three", g, 5, 3, L(g, 3))
    with pytest.raises(ValueError):
        run_algorithm("bogus", g, 4, 1, L(g, 1))


def test_auto_attaches_plan():
    g = gen_random(16, 0.5, 2)
    rep = auto_list(g, 4, 2, L(g, 2))
    assert rep.plan is not None


def test_list_must_be_cliques():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        list_kl(g, 3, 2, CliqueList(2, [(0, 2)]))
