"""Tests for quasi-homogeneous weight detection."""

from __future__ import annotations

import pytest

from qhc.poly import BiPoly, ZeroPolynomialError, parse_poly
from qhc.quasihom import NotQuasiHomogeneousError, Weights, detect_weights, require_weights


class TestDetectWeights:
    """Test the weighted-degree line through the support."""

    @pytest.mark.parametrize(
        ("text", "weights"),
        [
            ("y^2 - x^3", Weights(2, 3, 6)),
            ("x^2 - y^3", Weights(3, 2, 6)),
            ("x*y*(y^2 - x^3)", Weights(2, 3, 11)),
            ("y - x^5", Weights(1, 5, 5)),
            ("x^2 + x*y + y^2", Weights(1, 1, 2)),
            ("x^4*y^2", Weights(1, 1, 6)),
            ("y^4 - 2*x^6", Weights(2, 3, 12)),
        ],
    )
    def test_quasi_homogeneous(self, text: str, weights: Weights) -> None:
        """Coprime weights and the weighted degree."""
        assert detect_weights(parse_poly(text)) == weights

    @pytest.mark.parametrize("text", ["y^2 - x^3 + x^2", "x^2 + x", "y + x*y", "1 + x"])
    def test_not_quasi_homogeneous(self, text: str) -> None:
        """No admissible line through the support."""
        assert detect_weights(parse_poly(text)) is None
        with pytest.raises(NotQuasiHomogeneousError):
            require_weights(parse_poly(text))

    def test_zero(self) -> None:
        """The zero polynomial has no weights."""
        with pytest.raises(ZeroPolynomialError):
            detect_weights(BiPoly({}))

    def test_str(self) -> None:
        """Weights print as a triple."""
        assert str(Weights(2, 3, 6)) == "(2,3,6)"
