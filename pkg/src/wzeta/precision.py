"""Certified decimal evaluation of alternating series.

sum_to_digits sums a series until the next term is negligible for the
requested precision and reports a truncated decimal string together with
exact rational error bounds: the first omitted term bounds the tail
(alternation and monotonicity are checked on every term consumed), and in
scaled mode the per-term fixed-point truncation is charged to a separate
rounding bound. The certified digit count is cut back whenever the
partial sum sits too close to a decimal boundary for the bounds to pin
the truncated digits down.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    MonotonicityViolation,
    NonAlternating,
    TailBoundError,
)
from .series import SeriesSpec

EXACT = "exact"
SCALED = "scaled"


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for one summation run."""

    target_digits: int
    guard_digits: int

    def __post_init__(self):
        if self.target_digits < 1:
            raise DomainError("target_digits must be at least 1")
        if self.guard_digits < 10:
            raise DomainError("guard_digits must be at least 10")

    @property
    def scale(self) -> int:
        return 10 ** (self.target_digits + self.guard_digits)


@dataclass(frozen=True)
class EvalReport:
    series: str
    mode: str
    decimal_string: str
    terms_used: int
    tail_bound: Fraction
    rounding_bound: Fraction
    certified_digits: int

    def serialize(self) -> str:
        return "\n".join(
            [
                self.decimal_string,
                f"terms={self.terms_used}",
                f"tail_bound={self.tail_bound}",
                f"rounding_bound={self.rounding_bound}",
                f"certified_digits={self.certified_digits}",
                f"mode={self.mode}",
                f"series={self.series}",
            ]
        )


def _estimated_terms(series: SeriesSpec, digits: int) -> int:
    if series.rate_estimate:
        return max(8, math.ceil((digits + 2) / series.rate_estimate) + 8)
    return 64


def sum_to_digits(series: SeriesSpec, digits: int, mode: str = EXACT) -> EvalReport:
    """Sum an alternating series to `digits` certified decimal places.

    Raises NonAlternating/MonotonicityViolation if the observed terms
    break the assumptions behind the first-omitted-term tail bound.
    """
    if mode not in (EXACT, SCALED):
        raise DomainError(f"unknown mode {mode!r}")
    if digits < 1:
        raise DomainError("digits must be at least 1")

    threshold = Fraction(1, 10 ** (digits + 2))
    estimate = _estimated_terms(series, digits)
    while True:
        guard = 10 + max(0, math.ceil(math.log10(estimate)))
        context = PrecisionContext(digits, guard)
        partial, terms_used, tail = _accumulate(series, threshold, mode, context)
        if mode == SCALED and terms_used > estimate:
            estimate = terms_used  # guard was sized for fewer terms; redo
            continue
        break

    rounding = Fraction(0) if mode == EXACT else Fraction(terms_used, context.scale)
    error = tail + rounding

    certified = digits
    while certified >= 0:
        unit = 10**certified
        if math.floor((partial - error) * unit) == math.floor((partial + error) * unit):
            break
        certified -= 1
    if certified < 0:
        raise TailBoundError("error bounds certify no digits at all")

    return EvalReport(
        series=series.name,
        mode=mode,
        decimal_string=truncated_decimal(partial, certified),
        terms_used=terms_used,
        tail_bound=tail,
        rounding_bound=rounding,
        certified_digits=certified,
    )


def _accumulate(series, threshold, mode, context):
    """One summation pass; returns (partial sum, terms used, tail bound)."""
    exact_sum = Fraction(0)
    scaled_sum = 0
    terms_used = 0
    previous = None
    for n, value in series.terms():
        if value == 0:
            raise NonAlternating(f"term at n={n} is zero")
        if previous is not None:
            if (value > 0) == (previous > 0):
                raise NonAlternating(f"terms at n={n - 1} and n={n} share a sign")
            if abs(value) >= abs(previous):
                raise MonotonicityViolation(
                    f"|term| did not decrease from n={n - 1} to n={n}"
                )
        if abs(value) < threshold:
            _check_ratio_sane(series, n)
            tail = abs(value)
            break
        if mode == EXACT:
            exact_sum += value
        else:
            scaled_sum += math.floor(value * context.scale)
        terms_used += 1
        previous = value
    partial = exact_sum if mode == EXACT else Fraction(scaled_sum, context.scale)
    return partial, terms_used, tail


def _check_ratio_sane(series, n):
    """At the stopping index the term ratio must have modulus < 1, or the
    first-omitted-term bound is meaningless."""
    if len(series.components) != 1:
        return
    try:
        ratio = series.term_ratio().evaluate(n, 0)
    except ZeroDivisionError:
        return
    if abs(ratio) >= 1:
        raise MonotonicityViolation(
            f"term ratio at n={n} has modulus {abs(ratio)} >= 1"
        )


def truncated_decimal(value: Fraction, places: int) -> str:
    """Decimal string of value truncated (toward zero) to `places`
    fractional digits."""
    sign = "-" if value < 0 else ""
    magnitude = abs(value)
    integer = magnitude.numerator // magnitude.denominator
    if places == 0:
        return f"{sign}{integer}"
    scaled = magnitude.numerator * 10**places // magnitude.denominator
    fractional = scaled - integer * 10**places
    return f"{sign}{integer}.{fractional:0{places}d}"


def measure_rate(series: SeriesSpec, n_lo: int, n_hi: int) -> float:
    """Least-squares slope of -log10|term(n)| over n in [n_lo, n_hi]:
    decimal digits gained per term."""
    if n_lo < series.start_index or n_hi <= n_lo:
        raise DomainError(
            f"need start_index <= n_lo < n_hi, got [{n_lo}, {n_hi}] "
            f"with start_index {series.start_index}"
        )
    xs, ys = [], []
    for n, value in series.terms(first_index=n_lo):
        if n > n_hi:
            break
        if value == 0:
            raise DomainError(f"term at n={n} is zero; rate undefined")
        ys.append(
            math.log10(abs(value.numerator)) - math.log10(value.denominator)
        )
        xs.append(n)
    slope = statistics.linear_regression(xs, [-y for y in ys]).slope
    return slope


def compare_series(a: SeriesSpec, b: SeriesSpec, digits: int) -> int:
    """Number of leading fractional digits on which certified sums of two
    series agree, capped at the smaller certified count."""
    if a.zeta3_multiple != b.zeta3_multiple:
        raise DomainError(
            "series claim different multiples of the limit "
            f"({a.zeta3_multiple} vs {b.zeta3_multiple})"
        )
    report_a = sum_to_digits(a, digits)
    report_b = sum_to_digits(b, digits)
    int_a, _, frac_a = report_a.decimal_string.partition(".")
    int_b, _, frac_b = report_b.decimal_string.partition(".")
    if int_a != int_b:
        return 0
    agree = 0
    for da, db in zip(frac_a, frac_b):
        if da != db:
            break
        agree += 1
    return min(agree, report_a.certified_digits, report_b.certified_digits)


def block_partial_sum(series: SeriesSpec, count: int, workers: int = 4) -> Fraction:
    """Exact partial sum of the first `count` terms, computed as disjoint
    contiguous index blocks summed concurrently and combined in order.
    Exact rational addition is associative, so this equals the sequential
    sum bit-for-bit."""
    if count < 0:
        raise DomainError("count must be nonnegative")
    if workers < 1:
        raise DomainError("workers must be positive")

    edges = [count * i // workers for i in range(workers + 1)]

    def block(lo: int, hi: int) -> Fraction:
        total = Fraction(0)
        if lo == hi:
            return total
        for consumed, (_, value) in enumerate(
            series.terms(first_index=series.start_index + lo)
        ):
            if consumed >= hi - lo:
                break
            total += value
        return total

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(block, edges[i], edges[i + 1]) for i in range(workers)]
        return sum((f.result() for f in futures), Fraction(0))
