"""Scalar bound families: frozen examples, oracle cross-checks, properties."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meanbound import scalar
from meanbound.scalar import (
    DomainError,
    compare_gap_bounds,
    comparison_poly_f,
    comparison_poly_g,
    corollary_one_term,
    fundamental_log_slack,
    heinz_reverse_main,
    heinz_reverse_sc,
    heinz_scalar,
    kittaneh_manasrah,
    lemma_sm_reverse,
    limit_inequality_slack,
    log_limit_gap,
    refinement_sum_s,
    reverse_young_basic,
    sababheh_choi_forward,
    sababheh_indices,
    theorem_extended_sc,
    theorem_main_reverse,
    weighted_geometric,
    young_lhs,
    zhao_wu_forward,
    zhao_wu_reverse,
)

import oracles

REL = 5e-15  # float64 agreement with the 50-digit oracle

positive = st.floats(min_value=1e-3, max_value=1e3)
unit_weight = st.floats(min_value=0.0, max_value=1.0)
wide_weight = st.floats(min_value=-6.0, max_value=6.0)
depth = st.integers(min_value=1, max_value=8)


def close(value, expected, rel=REL, abs_tol=0.0):
    assert value == pytest.approx(expected, rel=rel, abs=abs_tol), (value, expected)


# ---------------------------------------------------------------------------
# Elementary means
# ---------------------------------------------------------------------------

def test_young_lhs_examples():
    close(young_lhs(1.0, 16.0, 0.125), 2.875)
    assert young_lhs(5.0, 5.0, 0.3) == 5.0
    close(young_lhs(1.0, 4.0, 2.0), 7.0)


def test_weighted_geometric_examples():
    close(weighted_geometric(1.0, 16.0, 0.125), 1.4142135623730951, rel=1e-12)
    close(weighted_geometric(7.0, 7.0, -3.2), 7.0, rel=1e-12)
    close(weighted_geometric(2.0, 8.0, 2.0), 32.0, rel=1e-12)


def test_heinz_scalar_examples():
    close(heinz_scalar(1.0, 16.0, 0.125), 6.363961030678928, rel=1e-12)
    close(heinz_scalar(9.0, 9.0, 0.77), 9.0, rel=1e-12)
    close(heinz_scalar(1.0, 16.0, 0.5), 4.0, rel=1e-12)


def test_domain_errors():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            weighted_geometric(bad, 1.0, 0.5)
    with pytest.raises(DomainError):
        young_lhs(1.0, 1.0, math.nan)
    with pytest.raises(DomainError):
        theorem_main_reverse(1.0, 2.0, 0.1, 0, "i")
    with pytest.raises(DomainError):
        theorem_main_reverse(1.0, 2.0, 0.1, 31, "i")
    with pytest.raises(DomainError):
        heinz_reverse_main(1.0, 2.0, 0.1, 1, "i")  # needs n >= 2
    with pytest.raises(DomainError):
        corollary_one_term(1.0, 2.0, 0.1, "iii")


@given(a=positive, v=st.floats(min_value=-5.0, max_value=5.0))
def test_fixed_point_at_equal_operands(a, v):
    assert weighted_geometric(a, a, v) == pytest.approx(a, rel=1e-13)
    assert heinz_scalar(a, a, v) == pytest.approx(a, rel=1e-13)


@given(a=positive, b=positive, v=wide_weight)
def test_weighted_geometric_matches_oracle(a, b, v):
    # the exponent (1-v) ln a + v ln b reaches ~90, so allow ~exp(eps*90)
    close(weighted_geometric(a, b, v), float(oracles.wg(a, b, v)), rel=1e-13)


# ---------------------------------------------------------------------------
# Reverse families: frozen examples
# ---------------------------------------------------------------------------

def test_reverse_young_basic_examples():
    rep = reverse_young_basic(1.0, 4.0, 2.0)
    assert rep.hypothesis_ok and rep.holds
    close(rep.gap, 9.0, rel=1e-12)
    rep = reverse_young_basic(3.0, 3.0, 5.0)
    assert rep.hypothesis_ok and rep.holds
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = reverse_young_basic(1.0, 16.0, 0.125)
    assert not rep.hypothesis_ok
    assert rep.gap < 0.0  # the hypothesis really is necessary here


def test_corollary_one_term_examples():
    rep = corollary_one_term(4.0, 1.0, 2.0, "i")
    assert rep.hypothesis_ok and rep.holds
    close(rep.lhs, -2.0)
    close(rep.rhs, 2.25, rel=1e-12)
    close(rep.gap, 4.25, rel=1e-12)
    rep = corollary_one_term(6.0, 6.0, 0.9, "i")
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = corollary_one_term(1.0, 16.0, 0.125, "ii")
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 9.289213562373095, rel=1e-12)
    close(rep.lhs, 2.875)


def test_theorem_main_reverse_examples():
    rep = theorem_main_reverse(1.0, 16.0, 0.125, 2, "i")
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 6.289213562373095, rel=1e-13)
    close(rep.gap, 3.414213562373095, rel=1e-13)
    rep = theorem_main_reverse(2.0, 2.0, 0.9, 5, "i")
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = theorem_main_reverse(16.0, 1.0, 0.875, 2, "ii")
    close(rep.gap, 3.414213562373095, rel=1e-13)


def test_theorem_main_reverse_windows():
    assert theorem_main_reverse(1.0, 2.0, 0.5, 3, "i").hypothesis_ok is False
    assert theorem_main_reverse(1.0, 2.0, 0.625, 3, "i").hypothesis_ok is False
    assert theorem_main_reverse(1.0, 2.0, 0.6251, 3, "i").hypothesis_ok is True
    assert theorem_main_reverse(1.0, 2.0, 0.25, 2, "ii").hypothesis_ok is False
    assert theorem_main_reverse(1.0, 2.0, 0.2499, 2, "ii").hypothesis_ok is True


def test_sababheh_indices_examples():
    assert sababheh_indices(0.25, 2) == (2, 0, 1, 0.5)
    assert sababheh_indices(0.0, 7) == (7, 0, 0, 0.0)
    assert sababheh_indices(0.25, 1) == (1, 0, 0, 0.25)
    with pytest.raises(DomainError):
        sababheh_indices(1.5, 2)
    with pytest.raises(DomainError):
        sababheh_indices(0.5, 0)


def test_refinement_sum_examples():
    close(refinement_sum_s(0.25, 4.0, 16.0, 2), 1.6862915010152396, rel=1e-13)
    assert refinement_sum_s(0.0, 3.0, 11.0, 5) == 0.0
    close(refinement_sum_s(0.5, 4.0, 16.0, 1), 2.0, rel=1e-13)


def test_lemma_sm_reverse_examples():
    rep = lemma_sm_reverse(1.0, 16.0, 0.125, 2, "i")
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 7.602922061357856, rel=1e-13)
    rep = lemma_sm_reverse(10.0, 10.0, 0.3, 3, "i")
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = lemma_sm_reverse(16.0, 1.0, 0.875, 2, "ii")
    close(rep.gap, 4.727922061357856, rel=1e-13)
    with pytest.raises(DomainError):
        lemma_sm_reverse(1.0, 2.0, 0.7, 2, "i")  # branch i needs v <= 1/2


def test_kittaneh_manasrah_examples():
    rep = kittaneh_manasrah(1.0, 16.0, 0.125)
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 2.5392135623730951, rel=1e-13)
    close(rep.gap, 0.33578643762690495, rel=1e-12)
    rep = kittaneh_manasrah(7.5, 7.5, 0.4)
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = kittaneh_manasrah(1.0, 16.0, 0.5)
    close(rep.rhs, 8.5, rel=1e-13)
    close(rep.gap, 0.0, abs_tol=1e-9)
    assert kittaneh_manasrah(1.0, 2.0, 1.5).hypothesis_ok is False


def test_zhao_wu_forward_examples():
    rep = zhao_wu_forward(1.0, 16.0, 0.125)
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 2.789213562373095, rel=1e-13)
    close(rep.gap, 0.08578643762690495, rel=1e-11)
    rep = zhao_wu_forward(3.0, 3.0, 0.2)
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = zhao_wu_forward(16.0, 1.0, 0.875)
    close(rep.gap, 0.08578643762690495, rel=1e-11)


def test_zhao_wu_reverse_examples():
    rep = zhao_wu_reverse(1.0, 16.0, 0.125, "lemma")
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 8.289213562373095, rel=1e-13)
    rep = zhao_wu_reverse(5.0, 5.0, 0.6)
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = zhao_wu_reverse(1.0, 16.0, 0.125, "proposition")
    close(rep.rhs, 8.289213562373095, rel=1e-13)


def test_sababheh_choi_forward_examples():
    rep = sababheh_choi_forward(1.0, 16.0, 0.125, 1)
    close(rep.rhs, kittaneh_manasrah(1.0, 16.0, 0.125).rhs, rel=1e-15)
    rep = sababheh_choi_forward(2.5, 2.5, 0.7, 4)
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = sababheh_choi_forward(1.0, 16.0, 0.125, 2)
    close(rep.rhs, 2.789213562373095, rel=1e-13)
    with pytest.raises(DomainError):
        sababheh_choi_forward(1.0, 2.0, 1.5, 2)


def test_theorem_extended_sc_examples():
    rep = theorem_extended_sc(1.0, 4.0, 2.0, 1, "i")
    assert rep.hypothesis_ok and rep.holds
    close(rep.rhs, 18.0, rel=1e-12)
    close(rep.gap, 11.0, rel=1e-12)
    rep = theorem_extended_sc(1.0, 4.0, 2.0, 2, "i")
    close(rep.rhs, 18.68629150101524, rel=1e-13)
    rep = theorem_extended_sc(4.0, 4.0, -2.0, 3, "ii")
    close(rep.gap, 0.0, abs_tol=1e-12)


@given(a=positive, b=positive,
       v=st.floats(min_value=1e-3, max_value=6.0),
       n=st.integers(min_value=1, max_value=7))
def test_extended_sc_rhs_nondecreasing_in_depth_for_positive_weight(a, b, v, n):
    # each added summand is v times a nonnegative square, so for v > 0 the
    # bound can only grow (and its excluded window only shrinks) with n
    lo = theorem_extended_sc(a, b, v, n, "i").rhs
    hi = theorem_extended_sc(a, b, v, n + 1, "i").rhs
    assert hi >= lo - 1e-12 * (abs(lo) + a + b)
    assert scalar.gap_bound_extended_sc(a, b, 1.0, n + 1) >= \
        scalar.gap_bound_extended_sc(a, b, 1.0, n) - 1e-12 * (a + b)


def test_theorem_extended_sc_windows():
    assert theorem_extended_sc(1.0, 2.0, 0.125, 3, "i").hypothesis_ok is False
    assert theorem_extended_sc(1.0, 2.0, 0.1251, 3, "i").hypothesis_ok is True
    assert theorem_extended_sc(1.0, 2.0, -0.001, 3, "i").hypothesis_ok is True
    assert theorem_extended_sc(1.0, 2.0, 0.9, 3, "ii").hypothesis_ok is False
    assert theorem_extended_sc(1.0, 2.0, 1.01, 3, "ii").hypothesis_ok is True


def test_heinz_reverse_main_examples():
    rep = heinz_reverse_main(1.0, 16.0, 0.125, 2, "ii")
    assert rep.hypothesis_ok and rep.holds
    close(rep.lhs, 8.5)
    close(rep.rhs, 9.363961030678928, rel=1e-13)
    close(rep.gap, 0.8639610306789277, rel=1e-12)
    rep = heinz_reverse_main(3.0, 3.0, 2.0, 2, "i")
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = heinz_reverse_main(1.0, 16.0, 0.875, 2, "i")
    close(rep.rhs, 9.363961030678928, rel=1e-13)


def test_heinz_reverse_sc_examples():
    rep = heinz_reverse_sc(1.0, 4.0, 2.0, 1, "i")
    assert rep.hypothesis_ok and rep.holds
    close(rep.lhs, 2.5)
    close(rep.rhs, 10.125, rel=1e-12)
    close(rep.gap, 7.625, rel=1e-12)
    rep = heinz_reverse_sc(9.0, 9.0, -1.0, 3, "i")
    close(rep.gap, 0.0, abs_tol=1e-12)
    rep = heinz_reverse_sc(1.0, 4.0, -1.0, 1, "ii")
    close(rep.rhs, 10.125, rel=1e-12)
    close(rep.lhs, 2.5)


# ---------------------------------------------------------------------------
# Oracle cross-checks on random points
# ---------------------------------------------------------------------------

@settings(max_examples=60)
@given(a=positive, b=positive, v=wide_weight, n=depth)
def test_main_reverse_matches_oracle(a, b, v, n):
    for branch in ("i", "ii"):
        rep = theorem_main_reverse(a, b, v, n, branch)
        ref = float(oracles.rhs_main_reverse(a, b, v, n, branch))
        close(rep.rhs, ref, rel=5e-14, abs_tol=5e-14 * (abs(ref) + a + b))


@settings(max_examples=60)
@given(a=positive, b=positive, v=unit_weight, n=depth)
def test_sm_reverse_matches_oracle(a, b, v, n):
    branch = "i" if v <= 0.5 else "ii"
    rep = lemma_sm_reverse(a, b, v, n, branch)
    close(rep.rhs, float(oracles.rhs_sm_reverse(a, b, v, n, branch)))


@settings(max_examples=60)
@given(a=positive, b=positive, v=wide_weight, n=depth)
def test_extended_sc_matches_oracle(a, b, v, n):
    for branch in ("i", "ii"):
        rep = theorem_extended_sc(a, b, v, n, branch)
        ref = float(oracles.rhs_extended_sc(a, b, v, n, branch))
        close(rep.rhs, ref, rel=5e-14, abs_tol=5e-14 * (abs(ref) + a + b))


@settings(max_examples=40)
@given(a=positive, b=positive, v=wide_weight,
       n=st.integers(min_value=2, max_value=8))
def test_heinz_families_match_oracle(a, b, v, n):
    for branch in ("i", "ii"):
        ref = float(oracles.rhs_heinz_main(a, b, v, n, branch))
        close(heinz_reverse_main(a, b, v, n, branch).rhs, ref,
              rel=5e-14, abs_tol=5e-14 * (abs(ref) + a + b))
        ref = float(oracles.rhs_heinz_sc(a, b, v, n, branch))
        close(heinz_reverse_sc(a, b, v, n, branch).rhs, ref,
              rel=5e-14, abs_tol=5e-14 * (abs(ref) + a + b))


@settings(max_examples=60)
@given(v=unit_weight, a=positive, b=positive, n=st.integers(min_value=1, max_value=10))
def test_refinement_sum_matches_oracle_and_is_nonnegative(v, a, b, n):
    value = refinement_sum_s(v, a, b, n)
    close(value, float(oracles.refinement_sum(v, a, b, n)),
          abs_tol=1e-15 * (a + b))
    assert value >= -1e-15 * (a + b)


# ---------------------------------------------------------------------------
# Structural properties
# ---------------------------------------------------------------------------

@given(v=unit_weight, k=st.integers(min_value=1, max_value=20))
def test_index_coherence(v, k):
    idx = sababheh_indices(v, k)
    assert idx.r in (2 * idx.j, 2 * idx.j + 1)
    nxt = sababheh_indices(v, k + 1)
    assert nxt.j in (2 * idx.j, 2 * idx.j + 1)
    assert -1e-12 <= idx.s <= 0.5 + 1e-12


@given(a=positive, b=positive, v=wide_weight, n=depth)
def test_main_reverse_mirror_is_exact(a, b, v, n):
    lo = theorem_main_reverse(a, b, v, n, "ii")
    hi = theorem_main_reverse(b, a, 1.0 - v, n, "i")
    assert lo.rhs == hi.rhs and lo.lhs == hi.lhs and lo.gap == hi.gap
    assert lo.hypothesis_ok == hi.hypothesis_ok


@given(a=positive, b=positive, v=st.floats(min_value=0.5, max_value=1.0), n=depth)
def test_sm_mirror_is_exact(a, b, v, n):
    lo = lemma_sm_reverse(a, b, v, n, "ii")
    hi = lemma_sm_reverse(b, a, 1.0 - v, n, "i")
    assert lo.rhs == hi.rhs and lo.lhs == hi.lhs and lo.gap == hi.gap


@given(a=positive, b=positive, v=wide_weight,
       n=st.integers(min_value=2, max_value=8))
def test_heinz_swap_invariance_is_exact(a, b, v, n):
    assert heinz_reverse_main(a, b, v, n, "ii").rhs == \
        heinz_reverse_main(b, a, 1.0 - v, n, "i").rhs
    assert heinz_reverse_sc(a, b, v, n, "ii").rhs == \
        heinz_reverse_sc(b, a, 1.0 - v, n, "i").rhs


@given(a=positive, b=positive, v=unit_weight)
def test_zhao_wu_restatement_identity_is_exact(a, b, v):
    lemma = zhao_wu_reverse(a, b, v, "lemma")
    proposition = zhao_wu_reverse(a, b, v, "proposition")
    assert lemma.rhs == proposition.rhs


@given(a=positive, b=positive, v=wide_weight)
def test_reduction_to_one_term_bound(a, b, v):
    # empty tail sum: depth-1 dyadic branch i is bitwise the one-term branch ii
    assert theorem_main_reverse(a, b, v, 1, "i").rhs == \
        corollary_one_term(a, b, v, "ii").rhs
    assert theorem_main_reverse(a, b, v, 1, "i").hypothesis_ok == \
        corollary_one_term(a, b, v, "ii").hypothesis_ok
    # the mirrored branch agrees up to rounding of the swapped weight
    close(theorem_main_reverse(a, b, v, 1, "ii").rhs,
          corollary_one_term(a, b, v, "i").rhs, rel=1e-13,
          abs_tol=1e-13 * (a + b))


@given(a=positive, v=wide_weight, n=depth)
def test_equality_at_equal_operands(a, v, n):
    reports = [
        reverse_young_basic(a, a, v),
        corollary_one_term(a, a, v, "i"),
        corollary_one_term(a, a, v, "ii"),
        theorem_main_reverse(a, a, v, n, "i"),
        theorem_main_reverse(a, a, v, n, "ii"),
        theorem_extended_sc(a, a, v, n, "i"),
        theorem_extended_sc(a, a, v, n, "ii"),
        heinz_reverse_sc(a, a, v, n, "i"),
    ]
    if 0.0 <= v <= 1.0:
        reports += [
            kittaneh_manasrah(a, a, v),
            zhao_wu_forward(a, a, v),
            zhao_wu_reverse(a, a, v, "lemma"),
            sababheh_choi_forward(a, a, v, n),
            lemma_sm_reverse(a, a, v, n, "i" if v <= 0.5 else "ii"),
        ]
    for rep in reports:
        tau = scalar.REL_TOL * (abs(rep.lhs) + abs(rep.rhs))
        assert abs(rep.gap) <= tau, rep


def test_verdict_tolerance_contract():
    rep = theorem_main_reverse(1.0, 16.0, 0.125, 2, "i")
    tau = scalar.REL_TOL * (abs(rep.lhs) + abs(rep.rhs))
    assert rep.holds == (rep.gap >= -tau)


# ---------------------------------------------------------------------------
# Logarithmic limit behavior
# ---------------------------------------------------------------------------

def test_log_limit_gap_examples():
    b = math.exp(2.0)
    assert log_limit_gap(1.0, b, 20) <= 1e-5
    assert log_limit_gap(3.0, 3.0, 12) == 0.0
    assert limit_inequality_slack(1.0, 16.0, 0.5) == 0.0


@given(a=positive, b=positive, n=st.integers(min_value=5, max_value=20))
def test_log_limit_gap_matches_oracle(a, b, n):
    close(log_limit_gap(a, b, n), float(oracles.delta_log_limit(a, b, n)),
          abs_tol=1e-13 * (1.0 + abs(math.log(b / a))))


@given(x=st.floats(min_value=1e-6, max_value=1e6))
def test_fundamental_log_slack_nonnegative(x):
    assert fundamental_log_slack(x) >= 0.0


@given(a=positive, b=positive, v=wide_weight)
def test_limit_inequality_slack_nonnegative(a, b, v):
    assert limit_inequality_slack(a, b, v) >= 0.0


# ---------------------------------------------------------------------------
# Comparison polynomials and gap-bound comparison
# ---------------------------------------------------------------------------

def test_comparison_poly_examples():
    assert comparison_poly_f(1.0, 0.3) == pytest.approx(0.0, abs=1e-12)
    close(comparison_poly_f(2.0, 0.75), 20.0, rel=1e-12)
    close(comparison_poly_f(0.5, 1.0), 0.8125, rel=1e-12)
    assert comparison_poly_g(1.0, -2.0) == pytest.approx(0.0, abs=1e-12)
    close(comparison_poly_g(2.0, 0.75), 32.5, rel=1e-12)
    close(comparison_poly_g(3.0, 1.0), 1000.0, rel=1e-12)
    with pytest.raises(DomainError):
        comparison_poly_f(0.0, 0.8)
    with pytest.raises(DomainError):
        comparison_poly_g(-1.0, 0.8)


@given(x=st.floats(min_value=1e-2, max_value=1e2),
       v=st.floats(min_value=0.75, max_value=1.0))
def test_comparison_polys_nonnegative_on_their_window(x, v):
    scale = 20.0 * max(1.0, x) ** 6
    assert comparison_poly_f(x, v) >= -1e-12 * scale
    assert comparison_poly_g(x, v) >= -1e-12 * scale


def test_compare_gap_bounds_reference_point():
    rep = compare_gap_bounds(1.0, 16.0, 0.125, 3)
    values = {g.label: g for g in rep.bounds}
    dyadic = values["theorem-main-reverse/i/n2"]
    assert dyadic.hypothesis_ok
    assert abs(dyadic.value - 4.875) <= 1e-12
    sm = values["lemma-sm-reverse/i/n2"]
    assert sm.hypothesis_ok
    close(sm.value, 6.188708498984760, rel=1e-9)
    assert ("theorem-main-reverse/i/n2", "lemma-sm-reverse/i/n2") in {
        (t, l) for (t, l, _) in rep.dominance}
    close(rep.true_gap, 2.875 - 1.4142135623730951, rel=1e-13)


def test_compare_gap_bounds_equal_operands():
    rep = compare_gap_bounds(4.0, 4.0, 0.3, 3)
    assert abs(rep.true_gap) <= 1e-12
    for bound in rep.bounds:
        assert abs(bound.value) <= 1e-12


@settings(max_examples=40)
@given(a=positive, b=positive, v=unit_weight)
def test_valid_gap_bounds_dominate_true_gap(a, b, v):
    rep = compare_gap_bounds(a, b, v, 3)
    for bound in rep.bounds:
        if bound.hypothesis_ok:
            assert bound.value - rep.true_gap >= \
                -1e-9 * (abs(bound.value) + abs(rep.true_gap)) - 1e-13 * (a + b)
