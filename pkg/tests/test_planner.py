from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from kclique.planner import (alpha_k, alpha_recurrence, as_rational, detection_exponent,
                             detection_table, epsilon_kl, f_i_bound, f_i_recurrence, f_index,
                             gamma_k, gamma_kl, listing_exponents, make_plan, partitions3,
                             reduction_exponent, reduction_regimes, reduction_valid, x_seq, y_seq,
                             z_recurrence, z_seq)

# detection exponents at omega = 2, rows ell = 1..5, columns k = 3..12 ("-" where ell >= k)
DETECTION_GOLDEN = """
2 3 4 4 5 6 6 7 8 8
4/3 3/2 2 2 5/2 3 3 7/2 4 4
- 6/5 4/3 3/2 7/4 2 2 7/3 8/3 8/3
- - 8/7 6/5 7/5 3/2 8/5 9/5 2 2
- - - 12/11 7/6 9/7 4/3 3/2 5/3 12/7
"""


def golden_table():
    out = {}
    for ell, row in enumerate(DETECTION_GOLDEN.strip().splitlines(), 1):
        for k, cell in enumerate(row.split(), 3):
            if cell != "-":
                out[(k, ell)] = F(cell)
    return out


def test_detection_table_matches_golden():
    assert detection_table(12, 5, 2) == golden_table()


@pytest.mark.parametrize("k, ell, g, choice", [
    (4, 2, F(3, 2), (2, 1, 1)),
    (8, 4, F(3, 2), (4, 2, 2)),
    (3, 2, F(4, 3), None),
    (9, 4, F(8, 5), None),
])
def test_detection_examples(k, ell, g, choice):
    rep = detection_exponent(k, ell, 2)
    assert rep.g == g
    if choice:
        assert rep.choice == choice


def test_four_two_threshold():
    rep = detection_exponent(4, 2, 2)
    assert rep.thresholds == {1: F(1, 2)}


def test_report_invariants():
    for (k, ell) in golden_table():
        rep = detection_exponent(k, ell, 2)
        a, b, c = rep.choice
        assert a >= b >= c >= 1 and a + b + c == k
        assert all(0 <= x <= 1 for x in rep.thresholds.values())


def test_partitions_lex():
    assert partitions3(5) == [(2, 2, 1), (3, 1, 1)]


def test_row_one_is_clique_detection_bound():
    # g(k, 1) at omega 2 equals ceil(k/3) + ceil((k-1)/3) ... i.e. k - floor(k/3)
    for k in range(3, 16):
        assert detection_exponent(k, 1, 2).g == k - k // 3


def test_monotone_along_diagonals():
    for h in range(1, 6):
        for ell in range(1, 8):
            assert detection_exponent(ell + h + 1, ell + 1).g <= detection_exponent(ell + h, ell).g


def test_invalid_detection_arguments():
    with pytest.raises(ValueError):
        detection_exponent(4, 4)
    with pytest.raises(ValueError):
        detection_exponent(1, 1)


def test_pluggable_rectangular_table():
    def cubic(a, b, c):
        return a + b + c
    # with cubic products nothing beats enumerating via the product step
    assert detection_exponent(3, 1, 2, omega_abc=cubic).g == 3


def test_higher_omega_is_slower():
    for k, ell in [(4, 2), (6, 3), (7, 2)]:
        assert detection_exponent(k, ell, F(237, 100)).g >= detection_exponent(k, ell, 2).g


def test_f_examples():
    assert f_i_bound(3, 0) == 2
    for C in (F(3, 2), F(2), F(5, 2)):
        assert f_i_bound(C, 1) == 8 * C / (C + 9)
    assert f_i_bound(3, 1) == 2


@pytest.mark.parametrize("i", range(6))
def test_f_closed_form_matches_recurrence(i):
    for j in range(20):
        C = F(101 + j * 7, 100)  # grid in (1, 2.4]
        try:
            rec = f_i_recurrence(C, i)
        except (ValueError, ZeroDivisionError):
            continue
        assert f_i_bound(C, i) == rec


@given(st.fractions(F(201, 100), F(3)))
def test_f_identity_symbolic_omega(omega):
    for C in (F(6, 5), F(3, 2)):
        for i in range(3):
            assert f_i_bound(C, i, omega) == f_i_recurrence(C, i, omega)


def test_f_index():
    assert f_index(F(3)) == 0
    assert f_index(F(2)) == 1
    assert f_index(F(3, 2)) == 2
    with pytest.raises(ValueError):
        f_index(1)


def test_listing_closed_forms_at_two():
    for k in range(2, 21):
        assert x_seq(k, 2) == k
        assert y_seq(k, 2) == F(k * (k - 1), 2)
        for ell in range(1, k):
            assert z_seq(k, ell, 2) == F(k * ell * (k - ell), 2)
            assert z_recurrence(k, ell, 2) == z_seq(k, ell, 2)


@pytest.mark.parametrize("k, ell, alpha, gamma", [
    (4, 1, F(2, 3), F(14, 5)),
    (5, 1, F(1, 2), F(35, 9)),
    (6, 1, None, F(69, 14)),
    (4, 2, F(1, 2), None),
])
def test_listing_examples(k, ell, alpha, gamma):
    ex = listing_exponents(k, ell, 2)
    if alpha is not None:
        assert ex.alpha == alpha
    if gamma is not None:
        assert ex.gamma == gamma


def test_four_two_runtime_pair():
    ex = listing_exponents(4, 2, 2)
    assert (ex.alpha, 1 - ex.ell * ex.alpha / ex.k) == (F(1, 2), F(3, 4))


@given(st.fractions(F(2), F(3), max_denominator=1000))
def test_alpha_three_symbolic(omega):
    assert alpha_k(3, omega) == 3 * (omega - 1) / (5 - omega)


@given(st.fractions(F(2), F(3), max_denominator=1000), st.integers(3, 9))
def test_alpha_recurrence_matches_closed_form(omega, k):
    assert alpha_recurrence(k, omega) == alpha_k(k, omega)


def test_gamma_two_routes_agree_at_two():
    for k in range(3, 12):
        for ell in range(2, k):
            assert (1 - epsilon_kl(k, ell, 2)) * F(k, ell) == gamma_kl(k, ell, 2)


def test_gamma_beyond_two_flagged():
    ex = listing_exponents(5, 2, F(237, 100))
    assert not ex.gamma_exact
    assert listing_exponents(5, 1, F(237, 100)).gamma_exact
    assert gamma_k(2, 2) == 0


@pytest.mark.parametrize("s, want", [
    (1, (F(2, 11), F(65, 66), 11 - F(1, 65))),
    (2, (F(4, 5), F(14, 15), 10 - F(1, 7))),
    (3, (F(2), F(5, 6), 9 - F(3, 5))),
    (4, (F(4), F(2, 3), F(6))),
])
def test_twelve_one_reduction(s, want):
    assert reduction_exponent(12, 1, s, 2) == want


def test_twelve_one_regimes():
    got = [(r["s"], r["from"], r["delta_exp"], r["t_exp"]) for r in reduction_regimes(12, 1)]
    assert got == [
        (1, 11 - F(1, 65), F(2, 11), F(65, 66)),
        (2, 10 - F(1, 7), F(4, 5), F(14, 15)),
        (3, 9 - F(3, 5), F(2), F(5, 6)),
        (4, F(6), F(4), F(2, 3)),
        (4, F(0), F(8), F(0)),
    ]


def test_reduction_width_k_minus_one():
    for k in range(3, 9):
        for ell in range(1, k):
            if reduction_valid(k, ell, k - 1):
                d, _, thr = reduction_exponent(k, ell, k - 1)
                assert d == F(2 * (k - 1), ell) and thr == 0


def test_reduction_invalid():
    with pytest.raises(ValueError):
        reduction_exponent(6, 5, 3)


def test_plan_four_small_t():
    n, t = 100, 10 ** 4
    plan = make_plan(4, 1, n, 2000, n, t, tag="dense-sparse")
    assert plan.x == n and plan.lam == max(1, -(-24 * t // (n * n)))


def test_plan_five_large_t():
    n = 16
    t = int(n ** 4)
    plan = make_plan(5, 1, n, 100, n, t, tag="dense-sparse")
    assert plan.x == -(-int(round(n ** 0.5 * t ** 0.1 * 1e6)) // 10 ** 6)


def test_plan_six_small_t():
    plan = make_plan(6, 1, 64, 1000, 64, 1)
    assert (plan.tag, plan.rho, plan.x) == ("six-I", 1, 1)


def test_plan_dispatch():
    assert make_plan(3, 1, 10, 30, 10, 5).tag == "dense-sparse"
    n = 10
    assert make_plan(12, 1, n, 40, n, n ** 9).s == 3
    assert make_plan(12, 1, n, 40, n, n ** 7).s == 4


def test_plan_parameters_positive():
    for k, ell in [(4, 1), (5, 2), (4, 3), (6, 1), (7, 3)]:
        for t in (1, 50, 10 ** 6):
            plan = make_plan(k, ell, 30, 200, 150, t)
            assert min(plan.lam, plan.x, plan.y, plan.rho, plan.s) >= 1


def test_as_rational():
    assert as_rational("5/2") == F(5, 2)
    assert as_rational(2.5) == F(5, 2)
