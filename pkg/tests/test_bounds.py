from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repst import bounds as bd, partitions as pt, snoracle as sn
from conftest import partition_strategy


def test_dimension_lower_bound_known_values():
    assert bd.dimension_lower_bound(6, (6,)) == 1
    assert bd.dimension_lower_bound(4, (2, 2)) == Fraction(3, 2)
    assert bd.dimension_lower_bound(4, (3, 1)) == Fraction(27, 16)
    with pytest.raises(sn.SizeMismatchError):
        bd.dimension_lower_bound(5, (2, 2))


@given(mu=partition_strategy(max_n=14, min_n=1))
def test_bound_never_exceeds_dimension(mu):
    assert sn.hook_dim(mu) >= bd.dimension_lower_bound(sum(mu), mu)


@given(mu=partition_strategy(max_n=12))
def test_amgm_check_passes_everywhere(mu):
    assert bd.amgm_check(mu)


@given(mu=partition_strategy(max_n=12))
def test_amgm_factors_multiply_to_something_below_the_power_bound(mu):
    if not mu:
        return
    n, d = sum(mu), mu[0]
    product = Fraction(1)
    for f in bd.row_peel_factors(mu):
        product *= f
    assert product <= Fraction(n, d) ** d


@given(mu=partition_strategy(max_n=12, min_n=1))
def test_row_peel_identity_is_exact(mu):
    # hook_dim(mu) * prod(1 + (c_i - 1)/i) == hook_dim(mu minus first row) * binom(n, d)
    assert bd.peel_identity_holds(mu)


@pytest.mark.parametrize("n", [1, 4, 12, 18])
def test_bound_sweep_passes(n):
    report = bd.bound_sweep(n)
    assert report.passed
    assert report.partition_count == len(pt.partitions_of(n))
    assert report.min_slack >= 0


def test_bound_sweep_n18_has_385_partitions():
    assert bd.bound_sweep(18).partition_count == 385


def test_bound_sweep_json():
    data = bd.bound_sweep(4).to_json()
    assert data["check"] == "bound-sweep"
    assert data["pass"] is True
    assert data["partitions"] == 5
    num, den = data["minSlack"]
    assert Fraction(int(num), int(den)) >= 0


def test_lemma_scan_trivial_cases():
    # C=1, k=0: only the two one-dimensional representations qualify, and
    # both have a full-length first row or column
    for n in range(1, 13):
        assert bd.lemma_scan(Fraction(1), 0, n) == []


def test_lemma_scan_k1_window():
    for n in range(10, 16):
        assert bd.lemma_scan(Fraction(1), 1, n) == []
    qualifying = [mu for mu in pt.partitions_of(10) if sn.hook_dim(mu) <= 10]
    assert sorted(qualifying) == sorted([(10,), (9, 1), (2,) + (1,) * 8, (1,) * 10])


def test_lemma_scan_small_n_can_fail():
    # the long-row-or-column conclusion is only eventually true; at n = 6
    # with a quadratic budget there are genuine violations, reported not hidden
    violations = bd.lemma_scan(Fraction(1), 2, 6)
    assert violations
    for mu in violations:
        assert mu[0] < 4 and len(mu) < 4
        assert sn.hook_dim(mu) <= 36


@given(c=st.fractions(min_value="1/2", max_value=4, max_denominator=4),
       k=st.integers(0, 2), n=st.integers(1, 12))
@settings(max_examples=40)
def test_lemma_scan_filter_self_consistency(c, k, n):
    for mu in bd.lemma_scan(c, k, n):
        assert mu[0] < n - k and len(mu) < n - k
        assert sn.hook_dim(mu) <= c * Fraction(n) ** k


def test_find_threshold():
    assert bd.find_threshold(Fraction(1), 0, 12) == 1
    threshold = bd.find_threshold(Fraction(1), 1, 15)
    assert threshold is not None and threshold <= 15
    for n in range(threshold, 16):
        assert bd.lemma_scan(Fraction(1), 1, n) == []
    assert bd.lemma_scan(Fraction(1), 1, threshold - 1) != []


def test_find_threshold_none_when_last_point_fails():
    # pick a budget so generous that n_max itself has violations
    assert bd.find_threshold(Fraction(10 ** 6), 3, 8) is None
