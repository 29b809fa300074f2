"""Exact polynomial arithmetic in the two integer variables n and k.

Everything here is immutable and uses arbitrary-precision integers, so all
operations are exact. Rational functions are stored as a pair of
integer-coefficient polynomials reduced by integer content; equality is
decided by cross-multiplication, not by polynomial gcd.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class LinearForm:
    """Integer-linear expression a*n + b*k + c."""

    a: int = 0
    b: int = 0
    c: int = 0

    def value(self, n: int, k: int = 0) -> int:
        return self.a * n + self.b * k + self.c

    def shifted(self, dn: int, dk: int) -> "LinearForm":
        """The same form with n := n + dn, k := k + dk."""
        return LinearForm(self.a, self.b, self.c + self.a * dn + self.b * dk)

    def substituted(self, n_map: tuple[int, int], k_map: tuple[int, int]) -> "LinearForm":
        """Affine change of variables onto a single variable.

        ``n_map = (p, q)`` sends n to p*n + q and ``k_map = (r, t)`` sends
        k to r*n + t; the result is again a linear form (with b = 0).
        """
        p, q = n_map
        r, t = k_map
        return LinearForm(self.a * p + self.b * r, 0, self.a * q + self.b * t + self.c)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a - other.a, self.b - other.b, self.c - other.c)

    def scaled(self, m: int) -> "LinearForm":
        return LinearForm(self.a * m, self.b * m, self.c * m)

    @property
    def is_constant(self) -> bool:
        return self.a == 0 and self.b == 0

    def direction(self) -> tuple[int, int]:
        return (self.a, self.b)

    def to_polynomial(self) -> "Polynomial":
        coeffs = {}
        if self.a:
            coeffs[(1, 0)] = self.a
        if self.b:
            coeffs[(0, 1)] = self.b
        if self.c:
            coeffs[(0, 0)] = self.c
        return Polynomial(coeffs)

    def __str__(self) -> str:
        parts = []
        for coef, sym in ((self.a, "n"), (self.b, "k")):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else f"{abs(coef)}*"
            if not parts:
                parts.append(("-" if coef < 0 else "") + mag + sym)
            else:
                parts.append(("-" if coef < 0 else "+") + mag + sym)
        if self.c or not parts:
            if not parts:
                parts.append(str(self.c))
            else:
                parts.append(("-" if self.c < 0 else "+") + str(abs(self.c)))
        return "".join(parts)


class Polynomial:
    """Polynomial in n and k with exact integer coefficients.

    Coefficients are keyed by exponent pair (deg_n, deg_k); zero
    coefficients are never stored, and the zero polynomial has an empty
    coefficient map.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        clean = {key: c for key, c in (coeffs or {}).items() if c != 0}
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "_hash", None)

    @staticmethod
    def const(value: int) -> "Polynomial":
        return Polynomial({(0, 0): value})

    @staticmethod
    def variable(name: str) -> "Polynomial":
        if name == "n":
            return Polynomial({(1, 0): 1})
        if name == "k":
            return Polynomial({(0, 1): 1})
        raise ValueError(f"unknown variable {name!r}")

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def is_const(self) -> bool:
        return all(key == (0, 0) for key in self._coeffs)

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self._coeffs.get((0, 0), 0)

    def as_linear_form(self) -> LinearForm | None:
        """This polynomial as a linear form, or None if degree > 1."""
        if any(en + ek > 1 for en, ek in self._coeffs):
            return None
        return LinearForm(
            self._coeffs.get((1, 0), 0),
            self._coeffs.get((0, 1), 0),
            self._coeffs.get((0, 0), 0),
        )

    def degree(self, var: str) -> int:
        """Degree in one variable; the zero polynomial reports -1."""
        if not self._coeffs:
            return -1
        idx = 0 if var == "n" else 1
        return max(key[idx] for key in self._coeffs)

    def evaluate(self, n, k=0):
        total = 0
        for (en, ek), coef in self._coeffs.items():
            total += coef * n**en * k**ek
        return total

    def content(self) -> int:
        """Gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._coeffs.values()) if self._coeffs else 0

    def divided_by_int(self, d: int) -> "Polynomial":
        return Polynomial({key: c // d for key, c in self._coeffs.items()})

    def leading_coefficient(self) -> int:
        """Coefficient of the lexicographically largest monomial (0 if zero)."""
        if not self._coeffs:
            return 0
        return self._coeffs[max(self._coeffs)]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) - c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({key: -c for key, c in self._coeffs.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[tuple[int, int], int] = {}
        for (en1, ek1), c1 in self._coeffs.items():
            for (en2, ek2), c2 in other._coeffs.items():
                key = (en1 + en2, ek1 + ek2)
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(out)

    def scaled(self, m: int) -> "Polynomial":
        return Polynomial({key: c * m for key, c in self._coeffs.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substituted(self, n_poly: "Polynomial", k_poly: "Polynomial") -> "Polynomial":
        """Substitute polynomials for both variables."""
        total = Polynomial()
        for (en, ek), coef in self._coeffs.items():
            total = total + (n_poly**en * k_poly**ek).scaled(coef)
        return total

    def shifted(self, dn: int, dk: int) -> "Polynomial":
        if dn == 0 and dk == 0:
            return self
        n_poly = Polynomial({(1, 0): 1, (0, 0): dn})
        k_poly = Polynomial({(0, 1): 1, (0, 0): dk})
        return self.substituted(n_poly, k_poly)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._coeffs.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for (en, ek) in sorted(self._coeffs, reverse=True):
            coef = self._coeffs[(en, ek)]
            factors = []
            if en:
                factors.append("n" if en == 1 else f"n^{en}")
            if ek:
                factors.append("k" if ek == 1 else f"k^{ek}")
            if not factors or abs(coef) != 1:
                factors.insert(0, str(abs(coef)))
            text = "*".join(factors)
            if not parts:
                parts.append(("-" if coef < 0 else "") + text)
            else:
                parts.append(("-" if coef < 0 else "+") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


class RationalFunction:
    """Ratio of two integer-coefficient polynomials.

    The representation is reduced by integer content and the denominator's
    leading coefficient is kept positive; full polynomial-gcd reduction is
    deliberately not attempted. Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        content = math.gcd(num.content(), den.content())
        if content > 1:
            num = num.divided_by_int(content)
            den = den.divided_by_int(content)
        if den.leading_coefficient() < 0:
            num = -num
            den = -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(Polynomial.const(1), Polynomial.const(1))

    @staticmethod
    def from_fraction(q: Fraction) -> "RationalFunction":
        return RationalFunction(Polynomial.const(q.numerator), Polynomial.const(q.denominator))

    def evaluate(self, n, k=0) -> Fraction:
        den = self.den.evaluate(n, k)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at (n={n}, k={k})")
        return Fraction(self.num.evaluate(n, k), den)

    def substituted(self, n_poly: Polynomial, k_poly: Polynomial) -> "RationalFunction":
        return RationalFunction(
            self.num.substituted(n_poly, k_poly), self.den.substituted(n_poly, k_poly)
        )

    def shifted(self, dn: int, dk: int) -> "RationalFunction":
        return RationalFunction(self.num.shifted(dn, dk), self.den.shifted(dn, dk))

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def is_one(self) -> bool:
        return self.num == self.den

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (equality is by cross-multiplication)")

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
