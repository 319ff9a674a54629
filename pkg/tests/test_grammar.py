"""Tests for the polynomial grammar and the canonical printer."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qhc.poly import (
    EXACT,
    BiPoly,
    Field,
    Mode,
    NonRationalLiteralError,
    PolynomialSyntaxError,
    format_poly,
    parse_poly,
)
from tests.utils import random_gaussian

x, y = BiPoly.x(), BiPoly.y()


def _random_poly(rng: random.Random) -> BiPoly:
    terms = {
        (rng.randint(0, 6), rng.randint(0, 6)): random_gaussian(rng, 9, (1, 2, 5, 7))
        for _ in range(rng.randint(1, 6))
    }
    return BiPoly(terms)


class TestParse:
    """Test parsing of valid input."""

    def test_cusp(self) -> None:
        """The standard cusp."""
        assert parse_poly("y^2 - x^3") == y**2 - x**3

    def test_implicit_products_and_groups(self) -> None:
        """Juxtaposition multiplies and parenthesised factors expand."""
        assert parse_poly("x*(y-x)*(y-2x)") == x * (y - x) * (y - 2 * x)
        assert parse_poly("(y - x)^2") == (y - x) ** 2

    def test_complex_coefficients(self) -> None:
        """Bracketed complex coefficients and a bare i."""
        P = parse_poly("(1/2+3i)*x - i*y^2 + (-2-i)")
        assert P.coefficient(1, 0) == EXACT.gaussian(Fraction(1, 2), 3)
        assert P.coefficient(0, 2) == EXACT.gaussian(0, -1)
        assert P.constant_term() == EXACT.gaussian(-2, -1)

    def test_leading_minus(self) -> None:
        """A leading minus negates the first term."""
        assert parse_poly("-x^3 + y^2") == y**2 - x**3

    def test_whitespace_is_insignificant(self) -> None:
        """Spacing does not change the result."""
        assert parse_poly("  y ^ 2-x^3 ") == parse_poly("y^2 - x^3")

    def test_decimals_in_float_mode(self) -> None:
        """Float mode accepts decimal literals."""
        P = parse_poly("y^2 + 0.5*x", Mode.FLOAT)
        assert P.field.mode is Mode.FLOAT
        assert P.coefficient(1, 0) == Field(Mode.FLOAT)(0.5)


class TestSyntaxErrors:
    """Test reporting of malformed input."""

    def test_double_operator_position(self) -> None:
        """The offending character of 'y^2 - - x' is at offset 6."""
        with pytest.raises(PolynomialSyntaxError) as excinfo:
            parse_poly("y^2 - - x")
        assert excinfo.value.position == 6
        assert excinfo.value.column == 7
        assert excinfo.value.text == "y^2 - - x"

    @pytest.mark.parametrize("text", ["x^", "", "y^2 +", "x**2", "(y - x", "z"])
    def test_malformed(self, text: str) -> None:
        """Grammar violations raise PolynomialSyntaxError."""
        with pytest.raises(PolynomialSyntaxError):
            parse_poly(text)

    def test_decimal_rejected_in_exact_mode(self) -> None:
        """Exact mode refuses decimals."""
        with pytest.raises(NonRationalLiteralError):
            parse_poly("y^2 + 0.5*x")

    def test_zero_denominator(self) -> None:
        """A rational with denominator zero is a syntax error."""
        with pytest.raises(PolynomialSyntaxError):
            parse_poly("1/0*x")


class TestFormat:
    """Test the canonical printer."""

    @pytest.mark.parametrize(
        ("text", "canonical"),
        [
            ("-x^3 + y^2", "y^2 - x^3"),
            ("x*y - x^2*(1/2)", "x*y - (1/2)*x^2"),
            ("(0+2i)*y", "(0+2i)*y"),
            ("-i*y + x", "-i*y + x"),
            ("y - (1+i)*x^2", "y - (1+i)*x^2"),
            ("3", "3"),
            ("x - x", "0"),
        ],
    )
    def test_canonical_text(self, text: str, canonical: str) -> None:
        """Terms print by descending y then x exponent."""
        assert format_poly(parse_poly(text)) == canonical

    def test_round_trip(self) -> None:
        """Printing then parsing returns the same polynomial."""
        rng = random.Random(7)
        for _ in range(1000):
            P = _random_poly(rng)
            assert parse_poly(format_poly(P)) == P, format_poly(P)
