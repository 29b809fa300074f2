"""Pair verification and telescoping-sum acceleration.

A pair (F, G) of hypergeometric terms satisfying

    F(n+1, k) - F(n, k) = G(n, k+1) - G(n, k)

can be verified either by exact evaluation over a finite grid or, once
the certificate R = G/F is known to be rational, symbolically up to a
degree bound. Summing the identity over the triangle k < n turns the
slowly convergent column sum Σ_n G(n, 0) into the diagonal series
Σ_n [F(n, n-1) + G(n-1, n-1)] with the same limit, which for the bundled
pairs converges geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import RationalFunction
from .errors import DomainError, SingularGrid
from .series import ALTERNATING, POSITIVE, SeriesSpec
from .terms import Domain, HyperTerm, cross_ratio


@dataclass(frozen=True)
class WZPair:
    """A candidate pair for the discrete telescoping identity.

    check_domain is the (n, k) region on which all four values in the
    identity are defined; s tags which family the pair came from and is
    informational only.
    """

    name: str
    f: HyperTerm
    g: HyperTerm
    s: int
    check_domain: Domain


class FailurePoint(NamedTuple):
    n: int
    k: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class VerifyReport:
    mode: str  # "grid" or "symbolic"
    outcome: str  # "pass" or "fail"
    points_checked: int
    degree_bound: int | None = None
    failures: tuple[FailurePoint, ...] = ()

    @property
    def first_failure(self) -> FailurePoint | None:
        return self.failures[0] if self.failures else None

    def serialize(self) -> str:
        lines = [f"{p.n} {p.k} {p.lhs} {p.rhs} fail" for p in self.failures]
        if self.mode == "grid":
            lines.append(
                f"mode=grid points_checked={self.points_checked} outcome={self.outcome}"
            )
        else:
            lines.append(
                f"mode=symbolic degree_bound={self.degree_bound} "
                f"points_checked={self.points_checked} outcome={self.outcome}"
            )
        return "\n".join(lines)


def verify_grid(pair: WZPair, n_max: int) -> VerifyReport:
    """Check the pair identity exactly at every point of check_domain
    with n ≤ n_max."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    domain = pair.check_domain
    n_start = domain.n_min if domain.n_min is not None else 0
    checked = 0
    failures = []
    for n in range(n_start, n_max + 1):
        k_range = domain.k_range(n)
        if k_range is None:
            continue
        lo, hi = k_range
        for k in range(lo, hi + 1):
            lhs = pair.f.value_at(n + 1, k) - pair.f.value_at(n, k)
            rhs = pair.g.value_at(n, k + 1) - pair.g.value_at(n, k)
            checked += 1
            if lhs != rhs:
                failures.append(FailurePoint(n, k, lhs, rhs))
    outcome = "pass" if not failures else "fail"
    return VerifyReport("grid", outcome, checked, failures=tuple(failures))


def certificate(pair: WZPair) -> RationalFunction:
    """The rational function R(n, k) = G(n, k)/F(n, k)."""
    return cross_ratio(pair.g, pair.f)


def verify_symbolic(pair: WZPair) -> VerifyReport:
    """Prove or refute the pair identity up to a degree bound.

    Dividing the identity by F(n, k) gives

        r1(n,k) - 1 = R(n, k+1)·r2(n,k) - R(n,k)

    with r1 = F(n+1,k)/F(n,k), r2 = F(n,k+1)/F(n,k) and R = G/F, all
    rational. Cleared of denominators this is a polynomial identity
    P(n,k) ≡ 0 whose degrees are bounded by the factor degrees without
    expanding P; evaluating exactly on a zero-free integer grid of
    (deg_n+1)×(deg_k+1) points therefore decides it completely.
    """
    r1 = pair.f.shift_ratio(1, 0)
    r2 = pair.f.shift_ratio(0, 1)
    cert = certificate(pair)
    cert_up = cert.shifted(0, 1)  # R(n, k+1)

    denominators = [r1.den, r2.den, cert.den, cert_up.den]

    def degree_bound(var: str) -> int:
        d = lambda poly: max(poly.degree(var), 0)
        term1 = max(d(r1.num), d(r1.den)) + d(r2.den) + d(cert.den) + d(cert_up.den)
        term2 = d(cert_up.num) + d(r2.num) + d(r1.den) + d(cert.den)
        term3 = d(cert.num) + d(r1.den) + d(r2.den) + d(cert_up.den)
        return max(term1, term2, term3)

    need_n = degree_bound("n") + 1
    need_k = degree_bound("k") + 1
    n_values, k_values = _zero_free_grid(denominators, need_n, need_k)

    checked = 0
    failures = []
    for n in n_values:
        for k in k_values:
            lhs = r1.evaluate(n, k) - 1
            rhs = cert_up.evaluate(n, k) * r2.evaluate(n, k) - cert.evaluate(n, k)
            checked += 1
            if lhs != rhs:
                failures.append(FailurePoint(n, k, lhs, rhs))
    outcome = "pass" if not failures else "fail"
    return VerifyReport(
        "symbolic",
        outcome,
        checked,
        degree_bound=max(need_n, need_k) - 1,
        failures=tuple(failures),
    )


def _zero_free_grid(denominators, need_n: int, need_k: int):
    """Find integer values S_n × S_k with no denominator vanishing at
    any grid point. Each axis window slides independently within 10
    strides, so factors like (n-k-c) that vanish along diagonals are
    escaped by separating the windows."""
    for i in range(10):
        n_base = 1 + i * need_n
        n_values = range(n_base, n_base + need_n)
        for j in range(10):
            k_base = 1 + j * need_k
            k_values = range(k_base, k_base + need_k)
            if all(
                den.evaluate(n, k) != 0
                for den in denominators
                for n in n_values
                for k in k_values
            ):
                return n_values, k_values
    raise SingularGrid(
        f"no {need_n}x{need_k} zero-free evaluation grid within the search window"
    )


def accelerate(pair: WZPair) -> SeriesSpec:
    """The diagonal series Σ_{n≥1} b_n, b_n = F(n, n-1) + G(n-1, n-1).

    For a verified pair this has the same limit as Σ_{n≥0} G(n, 0);
    for the bundled pairs that limit is 2ζ(3), hence zeta3_multiple=2.
    Verification is the caller's responsibility.
    """
    f_diag = pair.f.specialized((1, 0), (1, -1), n_min=1)  # F(n, n-1)
    g_diag = pair.g.specialized((1, -1), (1, -1), n_min=1)  # G(n-1, n-1)
    return SeriesSpec(
        name=f"accel({pair.name})",
        components=(f_diag, g_diag),
        start_index=1,
        sign_pattern=ALTERNATING,
        zeta3_multiple=Fraction(2),
    )


def lhs_series(pair: WZPair) -> SeriesSpec:
    """The column series Σ_{n≥0} G(n, 0) (the slow side for the bundled
    pairs, with positive terms and polynomial-rate decay)."""
    g_column = pair.g.specialized((1, 0), (0, 0), n_min=0)  # G(n, 0)
    return SeriesSpec(
        name=f"lhs({pair.name})",
        components=(g_column,),
        start_index=0,
        sign_pattern=POSITIVE,
        zeta3_multiple=Fraction(2),
    )


def two_sided_gap(
    pair: WZPair, lhs_count: int = 300, accel_count: int = 50
) -> tuple[Fraction, Fraction]:
    """(gap, bound) where gap = |partial sums of the two sides| and
    bound = sum of their tail bounds; gap ≤ bound for a true pair."""
    slow = lhs_series(pair)
    fast = accelerate(pair)
    gap = abs(slow.partial_sum(lhs_count) - fast.partial_sum(accel_count))
    bound = slow.tail_bound(lhs_count) + fast.tail_bound(accel_count)
    return gap, bound
