import math
from fractions import Fraction

import mpmath
import pytest

from wzeta import precision
from wzeta.dsl import parse_term
from wzeta.errors import DomainError, MonotonicityViolation, NonAlternating
from wzeta.series import single_term_series


def reference_digits(count):
    """First `count` decimals of the limit, truncated, via mpmath."""
    with mpmath.workdps(count + 20):
        text = mpmath.nstr(mpmath.zeta(3), count + 10, strip_zeros=False)
    return text[: count + 2]  # "1." + count digits


def test_twenty_digit_anchor(cat):
    report = precision.sum_to_digits(cat.series_by_name("s1"), 20)
    assert report.decimal_string == "1.20205690315959428539"
    assert report.certified_digits == 20
    assert report.rounding_bound == 0


@pytest.mark.parametrize("name", ["s1", "s2", "s3"])
@pytest.mark.parametrize("digits", [1, 30, 200])
def test_certified_digits_match_reference(cat, name, digits):
    report = precision.sum_to_digits(cat.series_by_name(name), digits)
    assert report.certified_digits == digits
    assert report.decimal_string == reference_digits(digits)


@pytest.mark.parametrize("name", ["s1", "s2", "s3"])
def test_soundness_against_longer_run(cat, name):
    series = cat.series_by_name(name)
    report = precision.sum_to_digits(series, 60)
    reference = series.partial_sum(report.terms_used + 400)
    partial = series.partial_sum(report.terms_used)
    assert abs(reference - partial) <= report.tail_bound + report.rounding_bound


def test_stopping_rule(cat):
    series = cat.series_by_name("s2")
    digits = 40
    report = precision.sum_to_digits(series, digits)
    threshold = Fraction(1, 10 ** (digits + 2))
    first_omitted = series.term_at(series.start_index + report.terms_used)
    last_used = series.term_at(series.start_index + report.terms_used - 1)
    assert abs(first_omitted) < threshold <= abs(last_used)
    assert report.tail_bound == abs(first_omitted)


def test_scaled_mode_agrees_with_exact(cat):
    for name in ("s1", "s3"):
        exact = precision.sum_to_digits(cat.series_by_name(name), 50, mode="exact")
        scaled = precision.sum_to_digits(cat.series_by_name(name), 50, mode="scaled")
        common = min(exact.certified_digits, scaled.certified_digits)
        assert common >= 48
        assert exact.decimal_string[: 2 + common] == scaled.decimal_string[: 2 + common]
        assert scaled.rounding_bound > 0


def test_scaled_rounding_bound_is_terms_over_scale(cat):
    series = cat.series_by_name("s1")
    report = precision.sum_to_digits(series, 30, mode="scaled")
    estimate = precision._estimated_terms(series, 30)
    assert report.terms_used <= estimate  # rate estimate was adequate
    guard = 10 + math.ceil(math.log10(estimate))
    assert report.rounding_bound == Fraction(report.terms_used, 10 ** (30 + guard))
    assert report.rounding_bound < Fraction(1, 10**35)


def test_monotone_refinement(cat):
    series = cat.series_by_name("s3")
    previous = None
    for digits in (5, 12, 40, 90):
        report = precision.sum_to_digits(series, digits)
        if previous is not None:
            assert report.decimal_string.startswith(previous.decimal_string)
        previous = report


def test_guard_recompute_on_unknown_rate(cat):
    # a series with no rate estimate starts from a 64-term guess; at 60
    # digits the fast series needs more, forcing the scaled path to re-run
    from wzeta import accelerate

    fast = accelerate(cat.pair_by_name("s1"))
    assert fast.rate_estimate is None
    report = precision.sum_to_digits(fast, 60, mode="scaled")
    assert report.terms_used > 64
    assert report.decimal_string[:22] == "2.40411380631918857079"  # 2*zeta(3)


def test_report_serialization(cat):
    report = precision.sum_to_digits(cat.series_by_name("s1"), 1)
    assert report.serialize() == "\n".join(
        [
            "1.2",
            "terms=3",
            "tail_bound=1/1792",
            "rounding_bound=0",
            "certified_digits=1",
            "mode=exact",
            "series=s1",
        ]
    )


def test_rejects_bad_arguments(cat):
    series = cat.series_by_name("s1")
    with pytest.raises(DomainError):
        precision.sum_to_digits(series, 0)
    with pytest.raises(DomainError):
        precision.sum_to_digits(series, 10, mode="float")


def test_rejects_non_alternating_series(cat):
    with pytest.raises(NonAlternating):
        precision.sum_to_digits(cat.series_by_name("lhs_s1"), 5)


def test_rejects_growing_terms():
    series = single_term_series("grow", parse_term("(-1)^n * (n+1)"))
    with pytest.raises(MonotonicityViolation):
        precision.sum_to_digits(series, 5)


def test_truncated_decimal():
    assert precision.truncated_decimal(Fraction(1999, 1000), 3) == "1.999"
    assert precision.truncated_decimal(Fraction(19999, 10000), 3) == "1.999"
    assert precision.truncated_decimal(Fraction(-1, 3), 4) == "-0.3333"
    assert precision.truncated_decimal(Fraction(7), 0) == "7"
    assert precision.truncated_decimal(Fraction(1, 8), 6) == "0.125000"


def test_compare_series(cat):
    s1 = cat.series_by_name("s1")
    s2 = cat.series_by_name("s2")
    s3 = cat.series_by_name("s3")
    assert precision.compare_series(s1, s2, 100) == 100
    assert precision.compare_series(s1, s3, 100) == 100
    assert precision.compare_series(s1, s1, 50) == 50


def test_compare_series_rejects_mismatched_limits(cat):
    with pytest.raises(DomainError):
        precision.compare_series(
            cat.series_by_name("s1"), cat.series_by_name("lhs_s1"), 10
        )


@pytest.mark.parametrize(
    "name,expected", [("s1", 0.602), ("s2", 1.431), ("s3", 1.806)]
)
def test_measure_rate(cat, name, expected):
    rate = precision.measure_rate(cat.series_by_name(name), 100, 200)
    assert abs(rate - expected) <= 0.02


def test_measure_rate_bad_range(cat):
    series = cat.series_by_name("s1")
    with pytest.raises(DomainError):
        precision.measure_rate(series, 0, 10)  # below start
    with pytest.raises(DomainError):
        precision.measure_rate(series, 10, 10)


def test_block_partial_sum_matches_sequential(cat):
    series = cat.series_by_name("s1")
    for count, workers in ((50, 4), (37, 5), (3, 8), (0, 2)):
        assert precision.block_partial_sum(series, count, workers) == (
            series.partial_sum(count)
        )


def test_precision_context_invariants():
    with pytest.raises(DomainError):
        precision.PrecisionContext(10, 9)
    context = precision.PrecisionContext(10, 10)
    assert context.scale == 10**20
