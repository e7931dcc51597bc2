from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from kclique.cliques import brute_force_cliques, count_cliques_oracle
from kclique.detector import count, detect, find_witness
from kclique.graph import (CliqueList, Graph, gen_kpartite_random, gen_planted, gen_random,
                           planted_vertices)
from kclique.planner import detection_exponent

from conftest import nx_cliques


def ell_list(g, ell):
    return brute_force_cliques(g, ell)


def test_complete_graph_examples():
    K6 = Graph.complete(6)
    assert detect(K6, 4, ell_list(K6, 2)).found
    assert count(K6, 4, ell_list(K6, 2)) == 15


def test_empty_list_means_no_clique():
    g = Graph.complete(5)
    assert not detect(g, 3, CliqueList(2, [])).found
    assert count(g, 3, CliqueList(2, [])) == 0


def test_partial_list_restricts_cliques():
    # only the triangles of K5 whose edges are all listed may be reported
    g = Graph.complete(5)
    edges = CliqueList(2, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert count(g, 3, edges) == 1
    assert detect(g, 3, edges).witness == (0, 1, 2)


def test_rejects_non_cliques():
    g = Graph.from_edges(4, [(0, 1)])
    with pytest.raises(ValueError):
        detect(g, 3, CliqueList(2, [(0, 2)]))


def test_rejects_bad_ell():
    g = Graph.complete(4)
    with pytest.raises(ValueError):
        detect(g, 2, ell_list(g, 3))


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("k, ell", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2), (6, 3)])
def test_against_networkx(seed, k, ell):
    g = gen_random(18, 0.55, 100 * k + seed)
    truth = nx_cliques(g, k)
    L = ell_list(g, ell)
    out = detect(g, k, L)
    assert out.found == bool(truth)
    if out.found:
        assert out.witness in truth
    assert count(g, k, L) == len(truth)


@pytest.mark.parametrize("n, p, seed, k, want", [
    (20, 0.5, 11, 4, 45),
    (30, 0.5, 13, 5, 99),
    (22, 0.75, 5, 6, 421),
])
def test_count_goldens(n, p, seed, k, want):
    g = gen_random(n, p, seed)
    for ell in (1, 2):
        assert count(g, k, ell_list(g, ell)) == want


def test_kpartite_golden():
    g = gen_kpartite_random(6, 4, 0.7, 8)
    assert count(g, 6, ell_list(g, 2)) == 4


def test_phase_attribution_sums():
    g = gen_random(24, 0.7, 31)
    stats = {}
    total = count(g, 6, ell_list(g, 3), stats=stats)
    assert total == 1201
    assert stats["low_phase"] + stats["product_phase"] == total


def test_custom_report_is_used():
    g = gen_random(16, 0.6, 3)
    rep = detection_exponent(4, 2, 2)
    assert count(g, 4, ell_list(g, 2), report=rep) == count_cliques_oracle(g, 4)


def test_planted_witness():
    g = gen_planted(24, 0.2, 6, 9)
    w = find_witness(g, 6, ell_list(g, 2))
    assert w is not None and g.is_clique(w) and len(w) == 6
    assert g.is_clique(planted_vertices(24, 6, 9))


def test_witness_absent():
    g = gen_kpartite_random(3, 5, 0.9, 1)
    assert find_witness(g, 4, ell_list(g, 2)) is None


@given(st.integers(6, 16), st.floats(0.2, 0.9), st.integers(0, 10 ** 6), st.integers(3, 5))
def test_witness_is_clique(n, p, seed, k):
    g = gen_random(n, p, seed)
    L = ell_list(g, 1)
    w = find_witness(g, k, L)
    truth = count_cliques_oracle(g, k)
    assert (w is None) == (truth == 0)
    if w is not None:
        assert len(w) == k and g.is_clique(w)


@given(st.integers(5, 14), st.floats(0.3, 0.95), st.integers(0, 10 ** 6),
       st.integers(3, 6), st.integers(1, 5))
def test_count_property(n, p, seed, k, ell):
    if ell >= k:
        ell = k - 1
    g = gen_random(n, p, seed)
    assert count(g, k, ell_list(g, ell)) == count_cliques_oracle(g, k)
