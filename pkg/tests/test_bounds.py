import math
from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, strategies as st

from gpcover import bounds
from gpcover.bounds import (
    C4,
    PowerBound,
    central_weight_exceeds_exp,
    coefficient_table,
    crossover_even,
    even_coefficients,
    even_residual,
    finite_bound,
    finite_bound_trace,
    lemma3_bound,
    lower_bound_coefficient,
    middle_pair_closed_form,
    odd_coefficient,
    odd_coefficients,
    pairing_gain_bound,
    prior_coefficient,
    smallest_odd_below_one,
    theorem1_closed_form,
)
from gpcover.errors import DomainError, MissingDependency, NotFound


@pytest.fixture(scope="module")
def evens():
    return even_coefficients(120)


@pytest.fixture(scope="module")
def odds():
    return odd_coefficients(301)


# -- even coefficients -------------------------------------------------------


def test_small_even_coefficients(evens):
    assert evens[4].value == Fraction(14, 15)
    # (2^3 - 2) c_6 = 6 c_2 c_4
    assert evens[6].value == Fraction(6, 6) * Fraction(14, 15)
    # (2^4 - 2) c_8 = 8 c_2 c_6 + 6 c_4^2
    assert evens[8].value == (8 * Fraction(14, 15) + 6 * Fraction(14, 15) ** 2) / 14 == Fraction(68, 75)
    # (2^5 - 2) c_10 = 10 c_2 c_8 + 20 c_4 c_6
    assert evens[10].value == (10 * Fraction(68, 75) + 20 * Fraction(14, 15) ** 2) / 30 == Fraction(596, 675)


def test_even_residuals_vanish(evens):
    assert all(even_residual(m, evens) == 0 for m in range(6, 121, 2))


def test_even_coefficients_below_closed_form(evens):
    for m in range(6, 121, 2):
        assert evens[m].value ** 6 <= C4**m
        assert PowerBound.of(evens[m].value) <= bounds.closed_form_coefficient(m)


def test_even_coefficients_decrease(evens):
    vals = [evens[m].value for m in range(4, 121, 2)]
    assert all(x >= y for x, y in zip(vals, vals[1:]))


def _float_even(max_m):
    """Float re-derivation: c_m = 2^(-m/2) sum_j C(m/2, j) c_2j c_(m-2j)."""
    c = {0: 1.0, 2: 1.0, 4: 14 / 15}
    for m in range(6, max_m + 1, 2):
        h = m // 2
        inner = sum(math.comb(h, j) * c[2 * j] * c[m - 2 * j] for j in range(1, h))
        c[m] = inner / 2**h / (1 - 2 / 2**h)
    return c


def test_even_coefficients_match_float_oracle(evens):
    ref = _float_even(120)
    for m in range(0, 121, 2):
        assert float(evens[m].value) == pytest.approx(ref[m], rel=1e-12)


def test_even_coefficients_domain():
    with pytest.raises(DomainError):
        even_coefficients(5)


# -- odd coefficients --------------------------------------------------------


def test_c5_is_one(evens):
    c5 = odd_coefficient(5, evens, {})
    assert c5.value == 1
    middle = c5.pair_choices[1]
    assert middle.product_value == 2 and middle.option == "lemma1"


def test_pairing_weights_sum_to_one(evens, odds):
    for r in (5, 57, 113, 125):
        assert sum(p.weight for p in odds[r].pair_choices) == 1


@pytest.mark.parametrize("r", [5, 11, 41, 113, 125, 201])
def test_all_interval_pairing_is_exactly_one(evens, odds, r):
    assert odd_coefficient(r, evens, odds, allow_products=False).value == 1


def test_missing_dependency(evens):
    with pytest.raises(MissingDependency):
        odd_coefficient(9, evens, {})
    memo = odd_coefficients(7)
    with pytest.raises(MissingDependency):
        odd_coefficient(9, {m: evens[m] for m in (0, 2, 4)}, memo)


def test_c113_below_one(odds):
    assert odds[113].value < 1
    assert odds[111].value == 1
    chosen = [p.t for p in odds[113].pair_choices if p.option == "product"]
    assert 28 in chosen  # the middle pair 2 c_56 c_57


def test_c125_middle_pair(evens, odds):
    middle = odds[125].pair_choices[31]
    assert middle.option == "product"
    assert middle.product_value == 2 * evens[62].value * odds[63].value
    assert odds[63].value == 1
    assert middle.product_value <= Fraction(981, 1000)


def test_middle_pair_closed_form_value():
    x = middle_pair_closed_form(125)
    assert x == PowerBound(2, C4, Fraction(31, 3))
    # sixth powers: 2^6 (14/15)^62 <= 0.981^6
    assert 2**6 * C4**62 <= Fraction(981, 1000) ** 6
    assert x <= Fraction(981, 1000)
    assert x > Fraction(980, 1000)


def test_threshold_search(odds):
    r_star, table = smallest_odd_below_one(301)
    assert r_star <= 113
    assert [r for r, _ in table] == list(range(5, 302, 2))
    assert all(0 < v <= 1 for _, v in table)
    assert all(v == odds[r].value for r, v in table)


def test_threshold_not_found_below_51():
    with pytest.raises(NotFound):
        smallest_odd_below_one(51)


def _float_threshold(r_max):
    """Independent float run of the pairing recurrence."""
    c = {j: v for j, v in _float_even(r_max).items()}
    c[1] = c[3] = 1.0
    for r in range(5, r_max + 1, 2):
        k = (r - 1) // 2
        total = 0.0
        for t in range(k + 1):
            cost = 1.0
            if 0 < t < k:
                cost = min(1.0, c[2 * t] * c[r - 2 * t] + c[2 * t + 1] * c[r - 2 * t - 1])
            total += math.comb(k, t) / 2**k * cost
        c[r] = total
    return next(r for r in range(5, r_max + 1, 2) if c[r] < 1 - 1e-12)


def test_threshold_matches_float_oracle():
    assert smallest_odd_below_one(301)[0] == _float_threshold(301)


def test_upper_at_least_lower():
    for r, c in coefficient_table(140).items():
        assert lower_bound_coefficient(r) <= c.value <= 1


def test_middle_pair_gain_bounds(evens, odds):
    for r in range(113, 302, 4):
        d = (r - 1) // 4
        middle = odds[r].pair_choices[d].cost
        assert middle < 1
        gain = pairing_gain_bound(r, middle)
        assert odds[r].value <= gain
        # gain <= 1 - (1 - m) e^(-r/2) because C(2d, d)/4^d >= e^(-r/2)
        assert central_weight_exceeds_exp(d)
        assert mpmath.mpf(gain.numerator) / gain.denominator <= lemma3_bound(r, middle)


# -- closed forms and comparisons ----------------------------------------------


def test_closed_form_m6():
    for n in (6, 10, 100):
        expected = Fraction(14, 15) * n**3 / 6
        got = theorem1_closed_form(6, n)
        assert got == pytest.approx(float(expected) + n * n * math.log(n), rel=1e-14)
    assert theorem1_closed_form(6, 6) >= 1


def test_closed_form_ratio_decreases():
    ratios = [theorem1_closed_form(8, n) / comb(n, 4) for n in (256, 512, 1024, 2048, 4096)]
    assert all(mpmath.isfinite(x) for x in ratios)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_closed_form_domain():
    with pytest.raises(DomainError):
        theorem1_closed_form(8, 7)
    with pytest.raises(DomainError):
        theorem1_closed_form(7, 20)


def test_exponential_pair_bound_examples():
    assert lemma3_bound(125, 1) == 1
    v = lemma3_bound(125, Fraction(981, 1000))
    assert v < 1
    with mpmath.workprec(300):
        deficit = float(1 - v)
    assert deficit == pytest.approx(0.019 * math.exp(-62.5), rel=1e-12)
    with pytest.raises(DomainError):
        lemma3_bound(5, 0)


def test_central_weight_exceeds_exp_for_all_d():
    assert all(central_weight_exceeds_exp(d) for d in range(0, 201))


def test_exponential_pair_bound_dominates_pair_value():
    alpha = Fraction(981, 1000)
    for d in (1, 5, 31, 100):
        r = 4 * d + 1
        gain = pairing_gain_bound(r, alpha)
        assert mpmath.mpf(gain.numerator) / gain.denominator <= lemma3_bound(r, alpha)


@pytest.mark.parametrize("r, value", [(2, 1), (3, 1), (4, Fraction(1, 3)), (5, Fraction(1, 3)), (6, Fraction(1, 10))])
def test_lower_bound_coefficient(r, value):
    assert lower_bound_coefficient(r) == value


def test_prior_coefficient_examples():
    assert prior_coefficient(295) < 1
    assert Fraction(295, 2) ** 4 * C4**295 < 1
    assert prior_coefficient(4) > 1
    assert prior_coefficient(4) == PowerBound(2, C4, 1)
    assert prior_coefficient(113) > 1


def _log_gap(r):
    with mpmath.workdps(50):
        return 12 * mpmath.log(mpmath.mpf(r) / 2) + r * mpmath.log(mpmath.mpf(14) / 15)


def test_crossover():
    assert crossover_even(2000) == 1096
    assert Fraction(548) ** 12 * C4**1096 > 1
    assert Fraction(549) ** 12 * C4**1098 < 1
    assert Fraction(4) ** 12 * C4**8 > 1
    # high-precision logarithms as an independent check
    assert _log_gap(1096) > 0 > _log_gap(1098)
    assert max(r for r in range(8, 2001, 2) if _log_gap(r) > 0) == 1096


def test_crossover_small_limit():
    assert crossover_even(100) == 100
    with pytest.raises(DomainError):
        crossover_even(101)


@given(
    st.fractions(min_value=Fraction(1, 10), max_value=10),
    st.integers(-30, 30),
    st.integers(1, 12),
    st.fractions(min_value=Fraction(1, 10), max_value=10),
)
def test_power_bound_comparison_agrees_with_high_precision(factor, num, den, other):
    p = PowerBound(factor, C4, Fraction(num, den))
    with mpmath.workdps(60):
        diff = p.value(200) - mpmath.mpf(other.numerator) / other.denominator
    if abs(diff) > mpmath.mpf(10) ** -40:
        assert (p < other) == (diff < 0)
    assert (p == other) == (p._cmp(other) == 0)


# -- finite oracle ------------------------------------------------------------


def test_trace_r2_is_graham_pollak():
    for n, b, ratio in finite_bound_trace(2, 12):
        assert b == n - 1
        assert ratio == Fraction(n - 1, n) <= 1


def test_trace_r4_tends_to_cited_value():
    trace = finite_bound_trace(4, 14)
    tail = [ratio for n, _, ratio in trace if n >= 512]
    assert all(a > b for a, b in zip(tail, tail[1:]))
    assert all(ratio > C4 for ratio in tail)
    assert tail[-1] - C4 < Fraction(1, 100)


def test_trace_r6_near_c6_at_1024():
    n, _, ratio = finite_bound_trace(6, 10)[-1]
    assert n == 1024
    assert abs(ratio - Fraction(14, 15)) <= Fraction(5, 100)


def test_finite_bound_never_exceeds_baseline():
    from gpcover.constructions import baseline_count

    for r in range(2, 9):
        for k in range(1, 10):
            n = 2**k
            if n >= r:
                assert finite_bound(r, n) <= baseline_count(n, r)


def test_coefficients_are_reproducible():
    assert even_coefficients(60) == even_coefficients(60)
    assert odd_coefficients(121)[121] == odd_coefficients(121)[121]
