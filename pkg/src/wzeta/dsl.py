"""Plain-text expression language for hypergeometric terms.

An expression is a product/quotient of factors::

    5/2 * (-1)^(n+1) * n!^2 / (2*n)! / (n^3)

Allowed factors are unsigned integer literals, the variables n and k,
``(-1)`` raised to a variable or a parenthesized integer-linear form,
factorials of linear forms, and parenthesized integer polynomials in n and
k; every factor may carry an integer power written with ``^``. ``*`` and
``/`` associate left and ``^`` binds tighter. Whitespace never matters.

Inside parentheses the conventional algebraic notation is accepted, so
polynomials can be pasted verbatim ("56n^2-32n+5"); outside parentheses
multiplication must be explicit ("2*n", never "2n"). A factorial ``!``
applies to a bare variable or literal at top level, or to a parenthesized
group anywhere; within a polynomial group a stray ``!`` is a parse error.

``parse_term`` turns expression text into a HyperTerm and ``render_term``
does the reverse; the pair round-trips up to canonical form (values agree
at every point, factor order and polynomial expansion may differ).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LinearForm, Polynomial
from .errors import ParseError, StructureError
from .terms import HyperTerm

_MAX_EXPONENT = 999

_ATOM_STARTS = ("integer", "n", "k", "(")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "var" | one of "+-*/^()!" | "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < length and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif ch in ("n", "k"):
            tokens.append(_Token("var", ch, i))
            i += 1
        elif ch in "+-*/^()!":
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, _ATOM_STARTS)
    tokens.append(_Token("end", "", length))
    return tokens


class _Product:
    """Accumulated product of allowed factors (mutable parser scratch)."""

    __slots__ = ("sign", "factorials", "num", "den")

    def __init__(self, sign=LinearForm(), factorials=(), num=None, den=None):
        self.sign = sign
        self.factorials = list(factorials)
        self.num = num if num is not None else Polynomial.const(1)
        self.den = den if den is not None else Polynomial.const(1)

    @staticmethod
    def from_poly(poly: Polynomial) -> "_Product":
        return _Product(num=poly)

    @property
    def is_polynomial(self) -> bool:
        return (
            self.sign == LinearForm()
            and not self.factorials
            and self.den == Polynomial.const(1)
        )

    def times(self, other: "_Product") -> "_Product":
        return _Product(
            self.sign + other.sign,
            self.factorials + other.factorials,
            self.num * other.num,
            self.den * other.den,
        )

    def over(self, other: "_Product") -> "_Product":
        if other.num.is_zero:
            raise StructureError("division by an identically zero factor")
        return _Product(
            self.sign - other.sign,
            self.factorials + [(f, -e) for f, e in other.factorials],
            self.num * other.den,
            self.den * other.num,
        )

    def negated(self) -> "_Product":
        return _Product(self.sign, self.factorials, -self.num, self.den)

    def powered(self, exponent: int) -> "_Product":
        if abs(exponent) > _MAX_EXPONENT:
            raise StructureError(f"exponent {exponent} out of range")
        base = self if exponent >= 0 else _Product().over(self)
        e = abs(exponent)
        return _Product(
            base.sign.scaled(e),
            [(f, x * e) for f, x in base.factorials],
            base.num**e,
            base.den**e,
        )

    def to_term(self) -> HyperTerm:
        return HyperTerm(self.sign, tuple(self.factorials), self.num, self.den)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(
                f"unexpected {token.text!r}" if token.kind != "end" else "unexpected end of input",
                token.offset,
                (kind,),
            )
        return self.advance()

    def parse(self) -> HyperTerm:
        value = self.expr(depth=0)
        trailing = self.peek()
        if trailing.kind != "end":
            raise ParseError(
                f"unexpected trailing input {trailing.text!r}",
                trailing.offset,
                ("*", "/", "end"),
            )
        return value.to_term()

    # expr := ["-"]? term { ("+"|"-") term }   (sums must stay polynomial)
    def expr(self, depth: int) -> _Product:
        negate = False
        if depth > 0 and self.peek().kind == "-":
            self.advance()
            negate = True
        value = self.term(depth)
        if negate:
            value = value.negated()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term(depth)
            if not (value.is_polynomial and rhs.is_polynomial):
                raise StructureError(
                    "'+' and '-' may only combine polynomial parts "
                    f"(near offset {op.offset})"
                )
            combined = value.num + rhs.num if op.kind == "+" else value.num - rhs.num
            value = _Product.from_poly(combined)
        return value

    # term := factor { ("*"|"/") factor | factor-if-adjacent (depth>0 only) }
    def term(self, depth: int) -> _Product:
        value = self.factor(depth)
        while True:
            token = self.peek()
            if token.kind in ("*", "/"):
                self.advance()
                rhs = self.factor(depth)
                value = value.times(rhs) if token.kind == "*" else value.over(rhs)
            elif token.kind in ("int", "var", "("):
                if depth == 0:
                    raise ParseError(
                        "implicit multiplication is only allowed inside parentheses",
                        token.offset,
                        ("*", "/", "end"),
                    )
                value = value.times(self.factor(depth))
            else:
                return value

    # factor := atom [ "!" ] [ "^" exponent ]
    def factor(self, depth: int) -> _Product:
        value, parenthesized = self.atom(depth)
        if self.peek().kind == "!":
            bang = self.advance()
            if depth > 0 and not parenthesized:
                raise ParseError(
                    "'!' inside a polynomial group must follow a parenthesized linear form",
                    bang.offset,
                    ("+", "-", "*", "/", ")"),
                )
            value = self.apply_factorial(value)
        if self.peek().kind == "^":
            self.advance()
            value = self.apply_power(value, depth)
        return value

    def atom(self, depth: int) -> tuple[_Product, bool]:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            return _Product.from_poly(Polynomial.const(int(token.text))), False
        if token.kind == "var":
            self.advance()
            return _Product.from_poly(Polynomial.variable(token.text)), False
        if token.kind == "(":
            self.advance()
            inner = self.expr(depth + 1)
            self.expect(")")
            return inner, True
        raise ParseError(
            f"unexpected {token.text!r}" if token.kind != "end" else "unexpected end of input",
            token.offset,
            _ATOM_STARTS,
        )

    @staticmethod
    def apply_factorial(value: _Product) -> _Product:
        if not value.is_polynomial:
            raise StructureError("'!' requires a polynomial argument")
        form = value.num.as_linear_form()
        if form is None:
            raise StructureError("'!' requires an integer-linear argument")
        if form.is_constant and form.c < 0:
            raise StructureError(f"factorial of negative constant {form.c}")
        return _Product(factorials=((form, 1),))

    def apply_power(self, base: _Product, depth: int) -> _Product:
        token = self.peek()
        # integer exponent, possibly negative
        if token.kind in ("int", "-"):
            negative = token.kind == "-"
            if negative:
                self.advance()
            literal = self.expect("int")
            exponent = -int(literal.text) if negative else int(literal.text)
            return base.powered(exponent)
        # symbolic exponent: only (-1)^var or (-1)^(linear form)
        if token.kind == "var":
            self.advance()
            exponent_form = LinearForm(1, 0, 0) if token.text == "n" else LinearForm(0, 1, 0)
        elif token.kind == "(":
            self.advance()
            inner = self.expr(depth + 1)
            self.expect(")")
            if not inner.is_polynomial:
                raise StructureError("exponent must be an integer or a linear form")
            form = inner.num.as_linear_form()
            if form is None:
                raise StructureError("exponent must be an integer or a linear form")
            if form.is_constant:
                return base.powered(form.c)
            exponent_form = form
        else:
            raise ParseError(
                f"unexpected {token.text!r}" if token.kind != "end" else "unexpected end of input",
                token.offset,
                ("integer", "n", "k", "("),
            )
        if not (base.is_polynomial and base.num == Polynomial.const(-1)):
            raise StructureError("only (-1) may carry a symbolic exponent")
        return _Product(sign=exponent_form)


def parse_term(text: str) -> HyperTerm:
    """Parse expression text into a HyperTerm.

    Raises ParseError (with byte offset and expected-token set) for
    malformed input and StructureError when the expression is well-formed
    but not a product/quotient of allowed factors.
    """
    return _Parser(text).parse()


def _render_linear(form: LinearForm) -> str:
    if form == LinearForm(1, 0, 0):
        return "n"
    if form == LinearForm(0, 1, 0):
        return "k"
    return f"({form})"


def render_term(term: HyperTerm) -> str:
    """Canonical expression text for a term; parse_term(render_term(t))
    evaluates identically to t at every valid point."""
    num_parts: list[str] = []
    den_parts: list[str] = []

    p, q = term.constant.numerator, term.constant.denominator
    if p < 0:
        num_parts.append(f"({p})")
    elif p != 1:
        num_parts.append(str(p))
    if q != 1:
        den_parts.append(str(q))

    if term.sign_exponent != LinearForm():
        exponent = term.sign_exponent
        if exponent in (LinearForm(1, 0, 0), LinearForm(0, 1, 0)):
            num_parts.append(f"(-1)^{_render_linear(exponent)}")
        else:
            num_parts.append(f"(-1)^({exponent})")

    for form, exp in term.factorials:
        text = ("n!" if form == LinearForm(1, 0, 0)
                else "k!" if form == LinearForm(0, 1, 0)
                else f"({form})!")
        if abs(exp) != 1:
            text += f"^{abs(exp)}"
        (num_parts if exp > 0 else den_parts).append(text)

    one = Polynomial.const(1)
    if term.poly_num != one:
        num_parts.append(f"({term.poly_num})")
    if term.poly_den != one:
        den_parts.append(f"({term.poly_den})")

    text = " * ".join(num_parts) if num_parts else ("1" if p == 1 else str(p))
    for part in den_parts:
        text += f" / {part}"
    return text
