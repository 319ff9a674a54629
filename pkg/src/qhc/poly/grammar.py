"""Polynomial text format: pyparsing grammar and canonical printer.

Grammar (whitespace insignificant)::

    poly   := ['-'] term (('+' | '-') term)*
    term   := coeff ('*'? factor)* | factor ('*'? factor)*
    factor := ('x' | 'y') ['^' nat] | '(' poly ')' ['^' nat]
    coeff  := number | 'i' | '(' ['-'] number [('+' | '-') [number] 'i'] ')'
    number := nat ['/' nat]          (float mode also accepts decimals)

Parenthesised sub-polynomials let products such as ``x*(y-x)*(y-2x)`` be typed
directly. Canonical output uses only the flat form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from qhc.poly.bipoly import BiPoly
from qhc.poly.scalar import EXACT, Field, FloatComplex, GaussianRational, Mode, Scalar


class PolynomialSyntaxError(ValueError):
    """Raised when polynomial text violates the grammar."""

    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} (at column {position + 1})")

    @property
    def column(self) -> int:
        return self.position + 1


class NonRationalLiteralError(PolynomialSyntaxError):
    """Raised when exact mode meets a decimal literal."""


_DECIMAL = r"\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+"


@lru_cache(maxsize=None)
def _grammar(field: Field) -> pp.ParserElement:
    nat = pp.Word(pp.nums)

    def to_rational(s: str, loc: int, toks: pp.ParseResults) -> Fraction:
        numerator = int(toks[0])
        denominator = int(toks[1]) if len(toks) > 1 else 1
        if denominator == 0:
            raise PolynomialSyntaxError("zero denominator", loc, s)
        return Fraction(numerator, denominator)

    def to_decimal(s: str, loc: int, toks: pp.ParseResults) -> float:
        if field.is_exact:
            raise NonRationalLiteralError(
                f"non-rational literal {toks[0]!r} in exact mode (use --mode float)", loc, s
            )
        return float(toks[0])

    rational = (nat + pp.Optional(pp.Suppress("/") + nat)).set_parse_action(to_rational)
    decimal = pp.Regex(_DECIMAL).set_parse_action(to_decimal)
    number = decimal | rational

    def to_complex(s: str, loc: int, toks: pp.ParseResults) -> Scalar:
        value = field(toks[1]) if toks[0] == "+" else -field(toks[1])
        if len(toks) > 2:
            imaginary = field(toks[3]) * field.i
            value = value + imaginary if toks[2] == "+" else value - imaginary
        return value

    imaginary_part = pp.one_of("+ -") + pp.Optional(number, default=Fraction(1)) + pp.Suppress("i")
    paren_coeff = (
        pp.Suppress("(")
        + pp.Optional(pp.Literal("-"), default="+")
        + number
        + pp.Optional(imaginary_part)
        + pp.Suppress(")")
    ).set_parse_action(to_complex)
    bare_i = pp.Literal("i").set_parse_action(lambda s, loc, toks: field.i)
    plain = number.copy().add_parse_action(lambda s, loc, toks: field(toks[0]))
    coeff = paren_coeff | bare_i | plain

    def power(base: BiPoly, toks: pp.ParseResults) -> BiPoly:
        return base ** int(toks[1]) if len(toks) > 1 else base

    variables = {"x": BiPoly.x(field), "y": BiPoly.y(field)}
    atom = (pp.one_of("x y") + pp.Optional(pp.Suppress("^") + nat)).set_parse_action(
        lambda s, loc, toks: power(variables[toks[0]], toks)
    )

    poly = pp.Forward()
    group = pp.Suppress("(") + poly + pp.Suppress(")") + pp.Optional(pp.Suppress("^") + nat)
    group.set_parse_action(lambda s, loc, toks: power(toks[0], toks))
    factor = atom | group
    factors = pp.ZeroOrMore(pp.Optional(pp.Suppress("*")) + factor)

    def product(s: str, loc: int, toks: pp.ParseResults) -> BiPoly:
        result = BiPoly.constant(1, field)
        for tok in toks:
            result = result * tok
        return result

    term = ((coeff + factors) | (factor + factors)).set_parse_action(product)

    def total(s: str, loc: int, toks: pp.ParseResults) -> BiPoly:
        items = list(toks)
        sign = 1
        if isinstance(items[0], str):
            sign = -1
            items = items[1:]
        result = items[0] if sign > 0 else -items[0]
        for op, value in zip(items[1::2], items[2::2]):
            result = result + value if op == "+" else result - value
        return result

    poly <<= (
        pp.Optional(pp.Literal("-")) + term + pp.ZeroOrMore(pp.one_of("+ -") - term)
    ).set_parse_action(total)
    return poly


def parse_poly(text: str, mode: Mode | Field = Mode.EXACT) -> BiPoly:
    """Parse polynomial text.

    Args:
        text: Polynomial in the grammar above.
        mode: Arithmetic mode, or a full field (mode plus tolerance).

    Returns:
        The polynomial with zero coefficients pruned.

    Raises:
        PolynomialSyntaxError: On a grammar violation; ``position`` is the offset of the
            offending character.
        NonRationalLiteralError: On a decimal literal in exact mode.
    """
    field = mode if isinstance(mode, Field) else (EXACT if mode is Mode.EXACT else Field(mode))
    try:
        result = _grammar(field).parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise PolynomialSyntaxError(f"syntax error: {exc.msg}", exc.loc, text) from exc
    return result[0]


def signed_coefficient(c: Scalar) -> tuple[bool, str]:
    """Split a coefficient into (negative, magnitude text) for a term.

    The magnitude text is empty for a unit coefficient.
    """
    if isinstance(c, GaussianRational):
        re, im = c.re, c.im
        negative = re < 0 or (re == 0 and im < 0)
        if negative:
            re, im = -re, -im
        if im == 0:
            if re == 1:
                return negative, ""
            return negative, str(re) if re.denominator == 1 else f"({re})"
        if re == 0:
            return negative, "i" if im == 1 else f"(0+{im}i)"
        im_text = "i" if abs(im) == 1 else f"{abs(im)}i"
        return negative, f"({re}{'+' if im > 0 else '-'}{im_text})"
    assert isinstance(c, FloatComplex)
    re, im = c.value.real, c.value.imag
    negative = re < 0 or (re == 0 and im < 0)
    if negative:
        re, im = -re, -im
    if im == 0:
        return negative, "" if re == 1 else repr(re)
    if re == 0:
        return negative, f"(0.0+{im!r}i)"
    return negative, f"({re!r}{'+' if im > 0 else '-'}{abs(im)!r}i)"


def _monomial_text(i: int, j: int) -> str:
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    return "*".join(factors)


def format_poly(P: BiPoly) -> str:
    """Canonical text of ``P``.

    Terms are ordered by the exponent of ``y``, then of ``x``, highest first, so
    ``{(0,2): 1, (3,0): -1}`` prints as ``y^2 - x^3``.
    """
    if P.is_zero:
        return "0"
    pieces: list[str] = []
    for index, (i, j) in enumerate(sorted(P.terms, key=lambda e: (e[1], e[0]), reverse=True)):
        negative, magnitude = signed_coefficient(P.terms[(i, j)])
        monomial = _monomial_text(i, j)
        if magnitude and monomial:
            body = f"{magnitude}*{monomial}"
        else:
            body = magnitude or monomial or "1"
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
