"""
Generalized Fibonacci numbers, recurrences, growth roots, polynomial fits,
the regime ladder and the explicit speed bounds.
"""

from math import comb

import pytest
from pydantic import ValidationError
from pytest import approx

from ordspeed.decomposition import homogeneous_blocks
from ordspeed.enumeration import SpeedSequence, iter_all_graphs
from ordspeed.exceptions import InputError
from ordspeed.speeds import (Recurrence, RegimeCase, RegimeClassification,
                             accumulation_family, binomial_value,
                             blocks_upper_bound, classify_regime,
                             empirical_growth, family_coefficients, fib,
                             fib_terms, fit_polynomial, geton_lower_bound,
                             growth_root, is_supermultiplicative,
                             partition_bound, recurrence_eval,
                             recurrence_terms, remark_speed, shifted_family,
                             structure_speed_bounds)

GOLDEN = (1 + 5 ** 0.5) / 2
TRIBONACCI = 1.839286755214161

# -- Helpers -----------------------------------------------------------------


def _factorials(count):
    values = [1]
    for n in range(2, count + 1):
        values.append(values[-1] * n)
    return values


def _residual(coeffs, x):
    k = len(coeffs) - 1
    return abs(x ** (k + 1) - sum(a * x ** i for i, a in enumerate(coeffs)))


# == 1. Fibonacci numbers and recurrences ====================================

class TestFib:
    def test_base(self):
        assert fib(0, 2) == 1

    def test_fibonacci(self):
        assert fib(5, 2) == 8
        assert fib_terms(5, 2) == [1, 1, 2, 3, 5, 8]

    def test_tribonacci_start(self):
        assert fib(3, 3) == 4

    def test_negative_index(self):
        assert fib(-1, 2) == 0

    def test_bad_order(self):
        with pytest.raises(InputError):
            fib(3, 0)

    def test_order_one(self):
        assert fib_terms(6, 1) == [1] * 7

    def test_powers_of_two(self):
        for n in range(1, 20):
            for k in range(n, n + 3):
                assert fib(n, k) == 2 ** (n - 1)

    def test_supermultiplicative(self):
        for ell in range(1, 7):
            terms = fib_terms(40, ell)
            for m in range(1, 21):
                for n in range(1, 21):
                    assert terms[m + n] >= terms[m] * terms[n]

    def test_big_integers(self):
        assert fib(300, 2) > 2 ** 200


class TestRecurrence:
    def test_fibonacci(self):
        assert recurrence_eval((1, 1), 5) == 8

    def test_block_profile_recurrence(self):
        r = Recurrence(coeffs=(1, 2, 1, 1, 1))
        assert r.k == 4
        assert recurrence_terms(r, 6) == [1, 1, 2, 4, 9, 18, 36]
        assert recurrence_eval(r, 6) == 36

    def test_initial_condition(self):
        assert recurrence_eval((3, 1, 4), 0) == 1
        assert recurrence_eval((3, 1, 4), -2) == 0

    def test_all_ones_is_fib(self):
        for k in range(1, 7):
            assert recurrence_terms((1,) * k, 30) == fib_terms(30, k)

    def test_leading_coefficient(self):
        with pytest.raises(ValidationError):
            Recurrence(coeffs=(1, 0))
        with pytest.raises(ValidationError):
            Recurrence(coeffs=())

    def test_negative_coefficient(self):
        with pytest.raises(ValidationError):
            Recurrence(coeffs=(-1, 1))


# == 2. Growth roots =========================================================

class TestGrowthRoot:
    def test_golden_ratio(self):
        assert growth_root((1, 1)) == approx(GOLDEN, abs=1e-11)

    def test_tribonacci(self):
        assert growth_root((1, 1, 1)) == approx(TRIBONACCI, abs=1e-9)

    def test_block_profile_root(self):
        assert growth_root((1, 2, 1, 1, 1)) == approx(2.03, abs=0.01)

    def test_trivial_root(self):
        assert growth_root((1,)) == approx(1.0, abs=1e-11)

    def test_residual(self, rng):
        for _ in range(50):
            coeffs = [rng.randint(0, 4) for _ in range(rng.randint(1, 7))]
            coeffs[-1] = max(coeffs[-1], 1)
            root = growth_root(coeffs)
            k = len(coeffs) - 1
            assert _residual(coeffs, root) <= 1e-9 * root ** (k + 1)

    def test_all_zero(self):
        with pytest.raises(InputError):
            growth_root((0, 0))

    def test_negative(self):
        with pytest.raises(InputError):
            growth_root((1, -1))


class TestAccumulationFamilies:
    def test_coefficients(self):
        assert family_coefficients((2, 3), 3) == [
            (2, 3), (1, 2, 3), (1, 1, 2, 3),
        ]
        assert family_coefficients((), 2) == [(1,), (1, 1)]

    def test_ones_approach_two(self):
        roots = accumulation_family((), 12)
        assert roots[1] == approx(GOLDEN, abs=1e-11)
        assert all(a < b for a, b in zip(roots, roots[1:]))
        assert all(root < 2 for root in roots)
        assert roots[-1] > 1.9995

    def test_shifted_family_increases(self):
        roots = shifted_family((), 12)
        assert roots[0] == approx(2.0, abs=1e-11)
        assert all(a < b for a, b in zip(roots, roots[1:]))
        assert all(root < 3 for root in roots)

    def test_prefixed_family_increases(self):
        roots = accumulation_family((1, 2, 1, 1, 1), 8)
        assert all(a < b for a, b in zip(roots, roots[1:]))


# == 3. Polynomial fits ======================================================

class TestFitPolynomial:
    def test_identity(self):
        fit = fit_polynomial([1, 2, 3, 4, 5, 6, 7])
        assert fit.coefficients == [0, 1]
        assert fit.onset == 1
        assert fit.degree == 1

    def test_constant(self):
        fit = fit_polynomial([1, 1, 1, 1, 1])
        assert fit.coefficients == [1]
        assert fit.onset == 1

    def test_bounded_matching_speeds(self):
        values = [remark_speed(n, 2) for n in range(1, 11)]
        assert values == [1, 2, 3, 5, 8, 12, 17, 23, 30, 38]
        fit = fit_polynomial(values)
        assert fit.coefficients == [3, -1, 1]
        assert fit.onset == 2

    def test_recovers_coefficients(self, rng):
        for _ in range(30):
            size = rng.randint(1, 4)
            coefficients = [rng.randint(-5, 5) for _ in range(size)]
            coefficients[-1] = rng.choice([-3, -2, -1, 1, 2, 3])
            values = [binomial_value(coefficients, n) for n in range(1, 15)]
            fit = fit_polynomial(values)
            assert fit.coefficients == coefficients

    def test_late_onset(self):
        values = [7, 1, 1, 1, 1, 1, 1]
        fit = fit_polynomial(values)
        assert fit.coefficients == [1]
        assert fit.onset == 2

    def test_exponential_has_no_fit(self):
        assert fit_polynomial([2 ** n for n in range(12)]) is None

    def test_uses_exact_prefix(self):
        seq = SpeedSequence(
            counts=[1, 2, 3, 4, 5, 6, 99], exact=[True] * 6 + [False],
        )
        assert fit_polynomial(seq).coefficients == [0, 1]


# == 4. Regime classification ================================================

class TestClassifyRegime:
    def test_constant(self):
        result = classify_regime([1, 1, 1, 1, 1, 1])
        assert result.case == RegimeCase.CONSTANT
        assert result.constant == 1

    def test_fibonacci(self):
        result = classify_regime([1, 2, 3, 5, 8, 13, 21])
        assert result.case == RegimeCase.FIBONACCI
        assert result.k == 2
        assert result.ratio_degree == 0

    def test_long_fibonacci_run(self):
        result = classify_regime([fib(n, 2) for n in range(1, 21)])
        assert result.case == RegimeCase.FIBONACCI
        assert result.k == 2

    def test_factorials(self):
        result = classify_regime(_factorials(6))
        assert result.case == RegimeCase.EXPONENTIAL
        assert result.window == (1, 6)

    def test_powers_of_two_skip_fibonacci(self):
        result = classify_regime([2 ** (n - 1) for n in range(1, 13)])
        assert result.case == RegimeCase.EXPONENTIAL
        assert result.k is None
        assert "seq reaches 2^(n-1) everywhere" in result.diagnostics


    def test_polynomial(self):
        values = [remark_speed(n, 2) for n in range(1, 11)]
        result = classify_regime(values)
        assert result.case == RegimeCase.POLYNOMIAL
        assert result.coefficients == [3, -1, 1]
        assert result.onset == 2

    def test_fibonacci_times_polynomial(self):
        values = [n * fib(n, 2) for n in range(1, 16)]
        result = classify_regime(values, max_k=2)
        assert result.case == RegimeCase.FIBONACCI
        assert result.k == 2
        assert result.ratio_degree == 1

    def test_largest_fitting_order_wins(self):
        values = [n * fib(n, 2) for n in range(1, 16)]
        result = classify_regime(values)
        assert result.k == 5
        assert result.ratio_degree == 0

    def test_inconclusive(self):
        result = classify_regime([1, 1, 2, 3, 5, 8, 13, 21])
        assert result.case == RegimeCase.INCONCLUSIVE
        assert result.k is None

    def test_diagnostics_are_heuristic(self):
        result = classify_regime([1, 1, 1, 1, 1, 1])
        assert result.diagnostics[0].startswith("heuristic")

    def test_too_short(self):
        with pytest.raises(InputError):
            classify_regime([1, 2, 3])

    def test_params_match_case(self):
        with pytest.raises(ValidationError):
            RegimeClassification(case=RegimeCase.CONSTANT)
        with pytest.raises(ValidationError):
            RegimeClassification(
                case=RegimeCase.EXPONENTIAL, window=(1, 6), constant=3,
            )


class TestEmpiricalGrowth:
    def test_fibonacci_ratio(self):
        report = empirical_growth([fib(n, 2) for n in range(1, 21)])
        assert report.first_n == 11
        assert report.fitted_root == approx(GOLDEN, abs=1e-3)

    def test_constant(self):
        report = empirical_growth([5] * 10)
        assert report.ratios == [1.0] * len(report.ratios)
        assert report.nth_roots[-1] < 1.2
        assert report.nth_roots == sorted(report.nth_roots, reverse=True)

    def test_powers_of_two(self):
        report = empirical_growth([2 ** (n - 1) for n in range(1, 13)])
        assert report.ratios == [2.0] * len(report.ratios)
        assert report.fitted_root == 2.0

    def test_zero_entry(self):
        with pytest.raises(InputError):
            empirical_growth([1, 0, 1])

    def test_empty(self):
        with pytest.raises(InputError):
            empirical_growth([])


# == 5. Bounds ===============================================================

class TestBounds:
    def test_remark_speed_is_fibonacci_when_unbounded(self):
        for n in range(1, 20):
            assert remark_speed(n, n) == fib(n, 2)

    def test_remark_speed_grows_polynomially(self):
        for n in range(4, 30):
            assert remark_speed(n, 1) == n
            assert remark_speed(n, 2) == 1 + (n - 1) + comb(n - 2, 2)

    def test_blocks_upper_bound(self):
        assert blocks_upper_bound(7, 0, 0) == 1
        assert blocks_upper_bound(3, 1, 1) == 288

    def test_blocks_upper_bound_counts_compositions(self):
        for n in range(1, 6):
            compositions = {
                tuple(homogeneous_blocks(g).sizes())
                for g in iter_all_graphs(n)
            }
            for k in range(3):
                for m in range(3):
                    within = [
                        c for c in compositions
                        if sum(sorted(c, reverse=True)[k + 1:]) <= m
                    ]
                    assert len(within) <= blocks_upper_bound(n, k, m)


    def test_geton_lower_bound(self):
        assert geton_lower_bound(10, 1) == 5
        assert geton_lower_bound(4, 1) == 0
        assert geton_lower_bound(6, 0) == 1

    def test_negative_arguments(self):
        with pytest.raises(InputError):
            remark_speed(-1, 2)
        with pytest.raises(InputError):
            blocks_upper_bound(3, -1, 0)

    def test_partition_bound(self):
        assert partition_bound(2) == 4096

    def test_structure_speed_bounds(self):
        assert structure_speed_bounds(5, 2) == (16, 13)
        with pytest.raises(InputError):
            structure_speed_bounds(0, 2)

    def test_supermultiplicative(self):
        assert is_supermultiplicative(_factorials(8)) is None
        assert is_supermultiplicative([fib(n, 3) for n in range(1, 15)]) \
            is None
        assert is_supermultiplicative([2, 3, 4]) == (1, 1)
