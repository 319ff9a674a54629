"""Tests for orbit searches on configurations and canonical keys."""

from __future__ import annotations

import random
from collections.abc import Callable
from fractions import Fraction

import pytest

from qhc.moduli import (
    Affine,
    Configuration,
    ConfigurationError,
    GroupElement,
    Mobius,
    Scaling,
    Space,
    affine_equivalent,
    canonical_key,
    configurations_equivalent,
    p1_equivalent,
    scaling_equivalent,
)
from qhc.poly import EXACT, INFINITY, Field, GaussianRational, Mode, PointP1
from tests.utils import (
    random_affine,
    random_configuration,
    random_gaussian,
    random_mobius,
    random_scaling,
)

FAMILIES: list[tuple[Space, Callable[[random.Random], GroupElement]]] = [
    (Space.P1, random_mobius),
    (Space.AFF, random_affine),
    (Space.STAR, random_scaling),
]


def _p1(*points: PointP1 | GaussianRational | int | Fraction) -> Configuration:
    return Configuration.of(
        Space.P1, [p if isinstance(p, PointP1) else PointP1(EXACT(p)) for p in points]
    )


class TestRandomOrbits:
    """Test that images under a random group element are recognised."""

    @pytest.mark.parametrize(("space", "element"), FAMILIES)
    def test_image_is_equivalent(
        self, space: Space, element: Callable[[random.Random], GroupElement]
    ) -> None:
        """200 random configurations and their images."""
        rng = random.Random(13)
        for _ in range(200):
            A = random_configuration(rng, space, rng.randint(0, 6))
            B = element(rng).act(A)
            found = configurations_equivalent(A, B)
            assert found is not None, f"{A} -> {B}"
            assert B.same_points(found.apply(point) for point in A.points)
            assert canonical_key(A) == canonical_key(B)

    @pytest.mark.parametrize("space", list(Space))
    def test_search_is_symmetric(self, space: Space) -> None:
        """A ~ B exactly when B ~ A."""
        rng = random.Random(17)
        for _ in range(50):
            size = rng.randint(2, 5)
            A = random_configuration(rng, space, size)
            B = random_configuration(rng, space, size)
            forward = configurations_equivalent(A, B) is not None
            backward = configurations_equivalent(B, A) is not None
            assert forward == backward
            assert forward == (canonical_key(A) == canonical_key(B))


class TestP1:
    """Test PSL(2,C) orbits."""

    def test_at_most_three_points(self) -> None:
        """Any two sets of up to three points are equivalent."""
        A, B = _p1(0, 1, INFINITY), _p1(5, EXACT.gaussian(0, 1), Fraction(-2, 3))
        m = p1_equivalent(A, B)
        assert m is not None
        assert B.same_points(m.apply(point) for point in A.points)
        assert p1_equivalent(_p1(), _p1()) == Mobius.identity()

    def test_cross_ratio_orbit_accepted(self) -> None:
        """2 and -1 share a cross-ratio orbit."""
        assert p1_equivalent(_p1(0, 1, INFINITY, 2), _p1(0, 1, INFINITY, -1)) is not None

    def test_cross_ratio_orbit_rejected(self) -> None:
        """3 and 2 do not."""
        assert p1_equivalent(_p1(0, 1, INFINITY, 3), _p1(0, 1, INFINITY, 2)) is None

    def test_harmonic_orbit(self) -> None:
        """-1, 2 and 1/2 form one orbit."""
        harmonic = _p1(0, 1, INFINITY, -1)
        half = EXACT.gaussian(Fraction(1, 2), 0)
        assert p1_equivalent(harmonic, _p1(0, 1, INFINITY, half)) is not None
        assert p1_equivalent(harmonic, _p1(0, 1, INFINITY, 3)) is None

    def test_size_mismatch(self) -> None:
        """Different sizes cannot be compared."""
        with pytest.raises(ConfigurationError):
            p1_equivalent(_p1(0, 1), _p1(0, 1, 2))


class TestAffine:
    """Test Aff(C) orbits."""

    def test_translation_for_one_point(self) -> None:
        """One point moves anywhere by a translation."""
        A = Configuration.of(Space.AFF, [3])
        B = Configuration.of(Space.AFF, [EXACT.gaussian(1, 1)])
        g = affine_equivalent(A, B)
        assert g == Affine(EXACT.one, EXACT.gaussian(-2, 1))

    def test_arithmetic_progressions(self) -> None:
        """{0, 1, 2} ~ {5, 3, 1}, but not {0, 1, 3}."""
        A = Configuration.of(Space.AFF, [0, 1, 2])
        assert affine_equivalent(A, Configuration.of(Space.AFF, [5, 3, 1])) is not None
        assert affine_equivalent(A, Configuration.of(Space.AFF, [0, 1, 3])) is None


class TestScaling:
    """Test GL(1,C) orbits."""

    def test_rotation_by_i(self) -> None:
        """{1, 2} ~ {i, 2i} via z -> i*z."""
        A = Configuration.of(Space.STAR, [1, 2])
        B = Configuration.of(Space.STAR, [EXACT.gaussian(0, 1), EXACT.gaussian(0, 2)])
        assert scaling_equivalent(A, B) == Scaling(EXACT.i)

    def test_ratio_is_invariant(self) -> None:
        """{1, 2} is not {1, 3}."""
        A = Configuration.of(Space.STAR, [1, 2])
        assert scaling_equivalent(A, Configuration.of(Space.STAR, [1, 3])) is None

    def test_empty(self) -> None:
        """Empty configurations are related by the identity."""
        empty = Configuration.of(Space.STAR, [])
        assert scaling_equivalent(empty, empty) == Scaling.identity()


class TestFloatMode:
    """Test tolerant comparisons."""

    def test_perturbed_image(self) -> None:
        """Images perturbed below the tolerance still match."""
        field = Field(Mode.FLOAT, 1e-8)
        A = Configuration.of(Space.STAR, [1.0, 2.5, -1.0 + 1j], field)
        B = Configuration.of(Space.STAR, [2.0 + 1e-12, 5.0, -2.0 + 2j], field)
        g = scaling_equivalent(A, B)
        assert g is not None
        assert g.a.to_complex() == pytest.approx(2.0)


class TestCanonicalKey:
    """Test canonical keys."""

    @pytest.mark.parametrize(
        ("configuration", "key"),
        [
            (Configuration.of(Space.P1, []), "[]"),
            (Configuration.of(Space.P1, [7, 8]), "[0,1]"),
            (Configuration.of(Space.P1, [0, 1, INFINITY, 2]), "[0,1,∞,-1]"),
            (Configuration.of(Space.AFF, [5]), "[0]"),
            (Configuration.of(Space.AFF, [4, 6, 5]), "[0,1,-1]"),
            (Configuration.of(Space.STAR, [3]), "[1]"),
            (Configuration.of(Space.STAR, [2, -2]), "[-1,1]"),
        ],
    )
    def test_keys(self, configuration: Configuration, key: str) -> None:
        """Keys for small configurations."""
        assert canonical_key(configuration) == key

    def test_key_is_invariant_under_random_maps(self) -> None:
        """Random images share the key of their source."""
        rng = random.Random(19)
        for _ in range(50):
            values = [random_gaussian(rng) for _ in range(4)]
            if len(set(values)) < 4 or any(v.is_zero() for v in values):
                continue
            A = Configuration.of(Space.STAR, values)
            assert canonical_key(A) == canonical_key(random_scaling(rng).act(A))
