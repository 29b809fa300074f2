"""Exact two-variable hypergeometric terms.

A term is a product

    constant * (-1)^(linear form) * prod (linear form)!^e * p(n,k) / q(n,k)

with integer-linear factorial arguments, integer-coefficient polynomials
p, q and an exact rational constant. Terms evaluate exactly at integer
points inside their validity domain, and quotients of structurally
compatible terms reduce to rational functions of n and k.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LinearForm, Polynomial, RationalFunction
from .errors import DomainError, IncompatibleTerms

_ONE = Polynomial.const(1)


@dataclass(frozen=True)
class Domain:
    """Validity region: n >= n_min plus a list of linear forms kept >= 0.

    ``n_min=None`` leaves n unconstrained. The constraints are expected to
    imply nonnegativity of every factorial argument of the owning term;
    evaluation re-checks the factorial arguments anyway, so a too-loose
    domain fails loudly instead of corrupting results.
    """

    n_min: int | None = None
    constraints: tuple[LinearForm, ...] = ()

    def contains(self, n: int, k: int = 0) -> bool:
        if self.n_min is not None and n < self.n_min:
            return False
        return all(form.value(n, k) >= 0 for form in self.constraints)

    def k_range(self, n: int) -> tuple[int, int] | None:
        """Inclusive k interval at fixed n, or None if empty.

        Raises ValueError when the constraints do not bound k above and
        below (such a domain cannot be swept by a grid check).
        """
        if self.n_min is not None and n < self.n_min:
            return None
        lo = None
        hi = None
        for form in self.constraints:
            if form.b == 0:
                if form.value(n, 0) < 0:
                    return None
            elif form.b > 0:
                # k >= ceil(-(a*n + c) / b)
                bound = -((form.a * n + form.c) // form.b)
                lo = bound if lo is None else max(lo, bound)
            else:
                # k <= floor((a*n + c) / (-b))
                bound = (form.a * n + form.c) // (-form.b)
                hi = bound if hi is None else min(hi, bound)
        if lo is None or hi is None:
            raise ValueError("domain does not bound k on both sides")
        if lo > hi:
            return None
        return lo, hi

    def shifted(self, dn: int, dk: int) -> "Domain":
        n_min = None if self.n_min is None else self.n_min - dn
        return Domain(n_min, tuple(f.shifted(dn, dk) for f in self.constraints))

    def substituted(self, n_map, k_map, n_min=None) -> "Domain":
        return Domain(n_min, tuple(f.substituted(n_map, k_map) for f in self.constraints))


class HyperTerm:
    """Immutable hypergeometric term; see the module docstring.

    Construction canonicalizes: factorial factors with equal arguments are
    merged, constant-argument factorials and the parity of the sign
    exponent are folded into the rational constant, integer content of the
    polynomials moves into the constant, and the constant is kept in
    lowest terms (Fraction guarantees that).
    """

    __slots__ = ("sign_exponent", "factorials", "poly_num", "poly_den",
                 "constant", "domain", "_key")

    def __init__(
        self,
        sign_exponent: LinearForm = LinearForm(),
        factorials: tuple[tuple[LinearForm, int], ...] = (),
        poly_num: Polynomial = _ONE,
        poly_den: Polynomial = _ONE,
        constant: Fraction = Fraction(1),
        domain: Domain | None = None,
    ):
        constant = Fraction(constant)

        sign = LinearForm(sign_exponent.a % 2, sign_exponent.b % 2, sign_exponent.c % 2)
        if sign.is_constant and sign.c:
            constant = -constant
            sign = LinearForm()

        merged: dict[LinearForm, int] = defaultdict(int)
        for form, exp in factorials:
            merged[form] += exp
        kept = []
        for form in sorted(merged):
            exp = merged[form]
            if exp == 0:
                continue
            if form.is_constant:
                if form.c < 0:
                    raise DomainError(f"factorial of negative constant {form.c}")
                constant *= Fraction(math.factorial(form.c)) ** exp
            else:
                kept.append((form, exp))

        if poly_den.is_zero:
            raise DomainError("zero denominator polynomial")
        num_content = poly_num.content()
        if num_content:
            if poly_num.leading_coefficient() < 0:
                num_content = -num_content
            poly_num = poly_num.divided_by_int(num_content)
            constant *= num_content
        den_content = poly_den.content()
        if poly_den.leading_coefficient() < 0:
            den_content = -den_content
        poly_den = poly_den.divided_by_int(den_content)
        constant /= den_content

        object.__setattr__(self, "sign_exponent", sign)
        object.__setattr__(self, "factorials", tuple(kept))
        object.__setattr__(self, "poly_num", poly_num)
        object.__setattr__(self, "poly_den", poly_den)
        object.__setattr__(self, "constant", constant)
        if domain is None:
            domain = Domain(None, tuple(form for form, _ in kept))
        object.__setattr__(self, "domain", domain)
        object.__setattr__(
            self, "_key", (sign, tuple(kept), poly_num, poly_den, constant)
        )

    def __setattr__(self, name, value):
        raise AttributeError("HyperTerm is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperTerm) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def with_domain(self, domain: Domain) -> "HyperTerm":
        return HyperTerm(self.sign_exponent, self.factorials, self.poly_num,
                         self.poly_den, self.constant, domain)

    def value_at(self, n: int, k: int = 0) -> Fraction:
        """Exact value at an integer point; DomainError outside the domain."""
        if not self.domain.contains(n, k):
            raise DomainError(f"(n={n}, k={k}) outside term domain")
        numerator = 1
        denominator = 1
        for form, exp in self.factorials:
            arg = form.value(n, k)
            if arg < 0:
                raise DomainError(f"factorial argument {form} = {arg} < 0 at (n={n}, k={k})")
            if exp > 0:
                numerator *= math.factorial(arg) ** exp
            else:
                denominator *= math.factorial(arg) ** (-exp)
        den_val = self.poly_den.evaluate(n, k)
        if den_val == 0:
            raise DomainError(f"denominator polynomial vanishes at (n={n}, k={k})")
        numerator *= self.poly_num.evaluate(n, k)
        if self.sign_exponent.value(n, k) % 2:
            numerator = -numerator
        return self.constant * Fraction(numerator, denominator * den_val)

    def shifted(self, dn: int, dk: int) -> "HyperTerm":
        return HyperTerm(
            self.sign_exponent.shifted(dn, dk),
            tuple((f.shifted(dn, dk), e) for f, e in self.factorials),
            self.poly_num.shifted(dn, dk),
            self.poly_den.shifted(dn, dk),
            self.constant,
            self.domain.shifted(dn, dk),
        )

    def specialized(self, n_map: tuple[int, int], k_map: tuple[int, int],
                    n_min: int | None = None) -> "HyperTerm":
        """One-variable term obtained from the affine substitution
        n -> n_map[0]*n + n_map[1], k -> k_map[0]*n + k_map[1]."""
        n_poly = Polynomial({(1, 0): n_map[0], (0, 0): n_map[1]})
        k_poly = Polynomial({(1, 0): k_map[0], (0, 0): k_map[1]})
        return HyperTerm(
            self.sign_exponent.substituted(n_map, k_map),
            tuple((f.substituted(n_map, k_map), e) for f, e in self.factorials),
            self.poly_num.substituted(n_poly, k_poly),
            self.poly_den.substituted(n_poly, k_poly),
            self.constant,
            self.domain.substituted(n_map, k_map, n_min=n_min),
        )

    def shift_ratio(self, dn: int, dk: int) -> RationalFunction:
        """R(n,k) with term(n+dn, k+dk) = R(n,k) * term(n,k) where defined."""
        return cross_ratio(self.shifted(dn, dk), self)

    def as_rational_function(self) -> RationalFunction:
        """The term as a rational function of (n,k), if its factorial and
        sign factors cancel; raises IncompatibleTerms otherwise."""
        return cross_ratio(self, HyperTerm())

    def __repr__(self) -> str:
        from .dsl import render_term

        return f"HyperTerm({render_term(self)!r})"


def _factorial_quotient(num_factorials, den_factorials):
    """(num_poly, den_poly, constant) for prod(num!)/prod(den!).

    Factorial factors are grouped by the direction (a, b) of their
    argument; within a group the exponents must cancel, leaving only the
    finite rising products between the offsets. IncompatibleTerms if any
    group does not cancel.
    """
    groups: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for form, exp in num_factorials:
        groups[form.direction()].append((form.c, exp))
    for form, exp in den_factorials:
        groups[form.direction()].append((form.c, -exp))

    num = _ONE
    den = _ONE
    constant = Fraction(1)
    for (a, b), entries in groups.items():
        if (a, b) == (0, 0):
            for c, exp in entries:
                if c < 0:
                    raise IncompatibleTerms(f"factorial of negative constant {c}")
                constant *= Fraction(math.factorial(c)) ** exp
            continue
        if sum(exp for _, exp in entries) != 0:
            raise IncompatibleTerms(
                f"factorials in direction {LinearForm(a, b, 0)} do not cancel"
            )
        anchor = min(c for c, _ in entries)
        for c, exp in entries:
            for i in range(anchor + 1, c + 1):
                factor = LinearForm(a, b, i).to_polynomial()
                if exp > 0:
                    num = num * factor**exp
                else:
                    den = den * factor ** (-exp)
    return num, den, constant


def cross_ratio(g: HyperTerm, f: HyperTerm) -> RationalFunction:
    """R(n,k) with g(n,k) = R(n,k) * f(n,k) on the common domain.

    Requires the two terms' factorial structures to align (every factorial
    argument of g parallel to one of f, with matching total exponents) and
    their sign exponents to agree up to parity; IncompatibleTerms otherwise.
    """
    diff = g.sign_exponent - f.sign_exponent
    if diff.a % 2 or diff.b % 2:
        raise IncompatibleTerms("sign exponents differ in n or k")
    if f.constant == 0 or f.poly_num.is_zero:
        raise IncompatibleTerms("cannot divide by an identically zero term")

    num, den, constant = _factorial_quotient(g.factorials, f.factorials)
    constant *= g.constant / f.constant
    if diff.c % 2:
        constant = -constant

    num = num * g.poly_num * f.poly_den
    den = den * g.poly_den * f.poly_num
    num = num.scaled(constant.numerator)
    den = den.scaled(constant.denominator)
    return RationalFunction(num, den)
