import itertools
from fractions import Fraction

import pytest

from wzeta.algebra import Polynomial, RationalFunction
from wzeta.dsl import parse_term
from wzeta.errors import (
    DomainError,
    MonotonicityViolation,
    NonAlternating,
    NotHypergeometric,
    TailBoundError,
)
from wzeta.series import ALTERNATING, POSITIVE, SeriesSpec, single_term_series
from wzeta import accelerate


def alt_series(text, start=0, **kwargs):
    return single_term_series("t", parse_term(text), start_index=start, **kwargs)


@pytest.mark.parametrize("name", ["s1", "s2", "s3", "lhs_s1", "lhs_s2"])
def test_terms_recurrence_matches_direct(cat, name):
    series = cat.series_by_name(name)
    for n, value in itertools.islice(series.terms(), 100):
        assert value == series.term_at(n)


@pytest.mark.parametrize("name", ["s1", "s2", "s3", "lhs_s1", "lhs_s2"])
def test_term_ratio_recurrence_identity(cat, name):
    series = cat.series_by_name(name)
    ratio = series.term_ratio()
    start = series.start_index
    for n in range(start, start + 60):
        assert series.term_at(n + 1) == ratio.evaluate(n, 0) * series.term_at(n)


def test_term_ratio_closed_forms(cat):
    n = Polynomial.variable("n")
    one = Polynomial.const(1)
    # slow series ratio: ((n+1)/(n+2))^3
    expected = RationalFunction((n + one) ** 3, (n + one + one) ** 3)
    assert cat.series_by_name("lhs_s1").term_ratio() == expected
    # fast series ratio: -n^3 / (2(2n+1)(n+1)^2)
    expected = RationalFunction(
        -n**3, Polynomial.const(2) * (n.scaled(2) + one) * (n + one) ** 2
    )
    assert cat.series_by_name("s1").term_ratio() == expected


def test_terms_from_index(cat):
    series = cat.series_by_name("s2")
    gen = series.terms(first_index=7)
    n, value = next(gen)
    assert n == 7 and value == series.term_at(7)
    with pytest.raises(DomainError):
        next(series.terms(first_index=0))  # below start


def test_term_at_below_start(cat):
    with pytest.raises(DomainError):
        cat.series_by_name("s1").term_at(0)


def test_partial_sum(cat):
    series = cat.series_by_name("s1")
    assert series.partial_sum(2) == Fraction(5, 4) - Fraction(5, 96)
    assert series.partial_sum(0) == 0


def test_multi_component_series_has_no_single_ratio(cat):
    fast = accelerate(cat.pair_by_name("s1"))
    assert len(fast.components) == 2
    with pytest.raises(NotHypergeometric):
        fast.term_ratio()
    # but terms still come from per-component recurrences
    for n, value in itertools.islice(fast.terms(), 30):
        assert value == fast.term_at(n)


def test_alternating_tail_bound_is_first_omitted_term(cat):
    series = cat.series_by_name("s1")
    for count in (3, 10, 25):
        assert series.tail_bound(count) == abs(series.term_at(1 + count))


def test_alternating_tail_bound_soundness(cat):
    # |true tail| computed from a much longer partial sum
    for name in ("s1", "s2", "s3"):
        series = cat.series_by_name(name)
        far = series.partial_sum(300)
        for count in (5, 20, 60):
            tail = abs(far - series.partial_sum(count))
            assert tail <= series.tail_bound(count)


def test_positive_tail_bound_soundness(cat):
    for name in ("lhs_s1", "lhs_s2"):
        series = cat.series_by_name(name)
        far = series.partial_sum(6000)
        for count in (10, 50, 300):
            observed_tail = far - series.partial_sum(count)
            bound = series.tail_bound(count)
            assert observed_tail < bound
            # not absurdly loose either: within ~4x of the observed tail
            assert bound < 4 * observed_tail


def test_positive_tail_bound_rejects_negative_terms():
    series = alt_series("(-1)^n / (n+1)^3", sign_pattern=POSITIVE)
    with pytest.raises(TailBoundError):
        series.tail_bound(1)


def test_tail_bound_requires_summed_terms(cat):
    with pytest.raises(DomainError):
        cat.series_by_name("s1").tail_bound(0)


def test_alternating_spot_check_catches_same_sign():
    series = alt_series("1 / (n+1)^3")  # positive but declared alternating
    with pytest.raises(NonAlternating):
        series.tail_bound(2)


def test_alternating_spot_check_catches_growth():
    series = alt_series("(-1)^n * (n+1)")  # alternating but growing
    with pytest.raises(MonotonicityViolation):
        series.tail_bound(2)


def test_unknown_sign_pattern():
    series = alt_series("1 / (n+1)^3", sign_pattern="mystery")
    with pytest.raises(TailBoundError):
        series.tail_bound(2)


def test_zero_multiplier_metadata(cat):
    assert cat.series_by_name("s1").zeta3_multiple == 1
    assert cat.series_by_name("lhs_s1").zeta3_multiple == 2
    assert cat.series_by_name("s3").sign_pattern == ALTERNATING
    assert cat.series_by_name("lhs_s2").sign_pattern == POSITIVE
