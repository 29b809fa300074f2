"""Single-variable series built from hypergeometric terms.

A SeriesSpec is a list of one-variable HyperTerm components sharing an
index n; the series term is the sum of the component values. Catalog
series have a single component; series produced by telescoping-sum
rearrangement have two (see wz.accelerate / wz.lhs_series).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Polynomial, RationalFunction
from .errors import (
    DomainError,
    MonotonicityViolation,
    NonAlternating,
    NotHypergeometric,
    TailBoundError,
)
from .terms import HyperTerm

ALTERNATING = "alternating"
POSITIVE = "positive"

# how many consecutive terms past the cut to spot-check when using the
# first-omitted-term bound (a runtime sanity check, not a proof; the
# summation loop re-checks every term it consumes)
_SPOT_CHECK = 8


@dataclass(frozen=True)
class SeriesSpec:
    """A concrete series Σ_{n≥start_index} term_at(n).

    zeta3_multiple records what multiple of the common limit the series
    converges to, so differently normalized series can be compared.
    rate_estimate is the expected asymptotic decimal-digits-per-term
    (None when unknown).
    """

    name: str
    components: tuple[HyperTerm, ...]
    start_index: int = 0
    sign_pattern: str = ALTERNATING
    zeta3_multiple: Fraction = Fraction(1)
    rate_estimate: float | None = None

    def term_at(self, n: int) -> Fraction:
        if n < self.start_index:
            raise DomainError(
                f"series {self.name!r} starts at index {self.start_index}, got {n}"
            )
        return sum((c.value_at(n, 0) for c in self.components), Fraction(0))

    def term_ratio(self) -> RationalFunction:
        """term_at(n+1)/term_at(n) as a rational function of n.

        Only defined when the series is a single hypergeometric term.
        """
        if len(self.components) != 1:
            raise NotHypergeometric(
                f"series {self.name!r} is a sum of {len(self.components)} "
                "hypergeometric terms; the term ratio is not rational"
            )
        return self.components[0].shift_ratio(1, 0)

    def terms(self, first_index: int | None = None) -> Iterator[tuple[int, Fraction]]:
        """Yield (index, term value) from first_index (default: the start
        of the series) onward, forever, via the first-order term
        recurrences of the components (one rational-function evaluation
        and one multiply per component per step)."""
        n = self.start_index if first_index is None else first_index
        if n < self.start_index:
            raise DomainError(
                f"series {self.name!r} starts at index {self.start_index}, got {n}"
            )
        values = [c.value_at(n, 0) for c in self.components]
        ratios = [c.shift_ratio(1, 0) for c in self.components]
        while True:
            yield n, sum(values, Fraction(0))
            for i, comp in enumerate(self.components):
                if values[i] == 0:
                    values[i] = comp.value_at(n + 1, 0)
                    continue
                try:
                    values[i] *= ratios[i].evaluate(n, 0)
                except ZeroDivisionError:
                    values[i] = comp.value_at(n + 1, 0)
            n += 1

    def partial_sum(self, count: int) -> Fraction:
        """Sum of the first `count` terms."""
        total = Fraction(0)
        for consumed, (_, value) in enumerate(self.terms()):
            if consumed >= count:
                break
            total += value
        return total

    def tail_bound(self, count: int) -> Fraction:
        """Exact rational upper bound on |sum of all terms after the
        first `count`|.

        Alternating series use the first-omitted-term bound (with a
        spot check that signs keep alternating and magnitudes keep
        decreasing just past the cut). Positive series use a telescoping
        comparison certified by a polynomial-coefficient check.
        """
        if count < 1:
            raise DomainError("tail_bound requires at least one summed term")
        cut = self.start_index + count
        if self.sign_pattern == ALTERNATING:
            self._check_alternating_window(cut)
            return abs(self.term_at(cut))
        if self.sign_pattern == POSITIVE:
            return self._positive_tail_bound(cut)
        raise TailBoundError(f"unknown sign pattern {self.sign_pattern!r}")

    def _check_alternating_window(self, cut: int) -> None:
        previous = None
        for n in range(cut, cut + _SPOT_CHECK):
            value = self.term_at(n)
            if value == 0:
                raise NonAlternating(f"term at n={n} is zero")
            if previous is not None:
                if (previous > 0) == (value > 0):
                    raise NonAlternating(
                        f"terms at n={n - 1} and n={n} share a sign"
                    )
                if abs(value) >= abs(previous):
                    raise MonotonicityViolation(
                        f"|term| did not decrease from n={n - 1} to n={n}"
                    )
            previous = value

    def _positive_tail_bound(self, cut: int) -> Fraction:
        """Compare against C/(n(n+1)...(n+d-1)) for the largest d whose
        ratio inequality certifies, then telescope.

        If t(n+1)/t(n) = P(n)/Q(n) ≤ n/(n+d) for all n ≥ cut (certified
        by nonnegativity of the coefficients of n·Q(n+cut) − (n+d)·P(n+cut)),
        then by induction t(n) ≤ C/(n···(n+d−1)) with equality at n=cut,
        and the tail telescopes to t(cut)·(cut+d−1)/(d−1).
        """
        ratio = self.term_ratio()  # NotHypergeometric for multi-term series
        first = self.term_at(cut)
        if first < 0:
            raise TailBoundError(f"term at n={cut} is negative")
        if first == 0:
            raise TailBoundError(f"term at n={cut} is zero")
        if cut < 1:
            raise TailBoundError("comparison bound needs a positive cut index")
        p, q = ratio.num, ratio.den
        if not (_shifted_coeffs_nonneg(p, cut) and _shifted_coeffs_nonneg(q, cut)):
            raise TailBoundError(
                "term ratio is not certifiably positive past the cut"
            )
        x = Polynomial.variable("n")
        for d in range(6, 1, -1):
            margin = x * q - (x + Polynomial.const(d)) * p
            if _shifted_coeffs_nonneg(margin, cut):
                return first * Fraction(cut + d - 1, d - 1)
        raise TailBoundError(
            f"no telescoping comparison certificate found at n={cut} "
            f"for series {self.name!r}"
        )


def _shifted_coeffs_nonneg(poly: Polynomial, shift: int) -> bool:
    """True if poly(n + shift) has only nonnegative coefficients — a
    sufficient certificate that poly ≥ 0 for all n ≥ shift."""
    return all(c >= 0 for c in poly.shifted(shift, 0).coeffs.values())


def single_term_series(
    name: str,
    term: HyperTerm,
    start_index: int = 0,
    sign_pattern: str = ALTERNATING,
    zeta3_multiple: Fraction = Fraction(1),
    rate_estimate: float | None = None,
) -> SeriesSpec:
    return SeriesSpec(
        name=name,
        components=(term,),
        start_index=start_index,
        sign_pattern=sign_pattern,
        zeta3_multiple=zeta3_multiple,
        rate_estimate=rate_estimate,
    )
