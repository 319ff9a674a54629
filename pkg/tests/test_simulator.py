"""Tests for the symbolic blowup simulator."""

from __future__ import annotations

from math import gcd

import pytest

from qhc.poly import EXACT, INFINITY, Field, Mode, PointP1, parse_poly
from qhc.quasihom import NonReducedError, NormalForm, normal_form
from qhc.resolution import (
    BranchLabel,
    ResolutionError,
    ResolutionTree,
    chain_self_intersections,
    simulate_resolution,
    trees_isomorphic,
)

SWEEP = [(1, 1)] + [(p, q) for q in range(2, 31) for p in range(1, q) if gcd(p, q) == 1]


def _resolve(text: str, mode: Mode = Mode.EXACT) -> ResolutionTree:
    return simulate_resolution(normal_form(parse_poly(text, mode)))


def _labels(tree: ResolutionTree) -> dict[str, list[tuple[int, str]]]:
    found: dict[str, list[tuple[int, str]]] = {}
    for attachment in tree.attachments:
        found.setdefault(attachment.label.value, []).append(
            (attachment.line, str(attachment.representative))
        )
    return found


class TestKnownCurves:
    """Test resolutions worked out by hand."""

    def test_cusp(self) -> None:
        """Three blowups; the branch meets the -1 line at lambda."""
        tree = _resolve("y^2 - x^3")
        assert tree.chain == [-3, -1, -2]
        assert tree.blowup_count == 3
        assert _labels(tree) == {"branch": [(2, "1")]}

    def test_smooth_branch(self) -> None:
        """y - x^2 needs two blowups."""
        assert _resolve("y - x^2").chain == [-2, -1]

    def test_three_lines(self) -> None:
        """One blowup separates lines; representatives are their slopes."""
        tree = _resolve("x*(y-x)*(y-2x)")
        assert tree.chain == [-1]
        representatives = {str(a.representative) for a in tree.attachments}
        assert representatives == {"∞", "1", "2"}
        assert {a.label for a in tree.attachments} == {BranchLabel.X_AXIS, BranchLabel.BRANCH}

    def test_axes_attach_to_ends(self) -> None:
        """x*y*(y^2 - x^3) sends each axis to one end of the chain."""
        tree = _resolve("x*y*(y^2 - x^3)")
        assert tree.chain == [-3, -1, -2]
        assert _labels(tree) == {
            "x-axis": [(1, "∞")],
            "y-axis": [(3, "0")],
            "branch": [(2, "1")],
        }

    def test_swapped_labels(self) -> None:
        """The x factor of x*(x^2 - y^3) ends where y does for y*(y^2 - x^3)."""
        tree = _resolve("x*(x^2 - y^3)")
        assert tree.chain == [-3, -1, -2]
        assert [a.line for a in tree.attachments if a.label is BranchLabel.X_AXIS] == [3]
        assert not any(a.label is BranchLabel.Y_AXIS for a in tree.attachments)

    def test_lambdas_become_representatives(self) -> None:
        """Several branches meet the principal line at their own lambdas."""
        tree = _resolve("(y^2 - x^3)*(y^2 + x^3)*(y^2 - 4*x^3)")
        principal = tree.principal()
        assert principal is not None
        points = {a.representative for a in tree.attachments if a.line == principal.index}
        assert points == {PointP1(EXACT(v)) for v in (1, -1, 4)}

    def test_float_mode(self) -> None:
        """Float lambdas resolve the same way."""
        tree = _resolve("y^2 - 2*x^3", Mode.FLOAT)
        assert tree.chain == [-3, -1, -2]

    def test_non_reduced(self) -> None:
        """Repeated factors are rejected."""
        with pytest.raises(NonReducedError):
            _resolve("(y^2 - x^3)^2")

    def test_blowup_cap(self) -> None:
        """The simulator stops at its blowup cap."""
        with pytest.raises(ResolutionError):
            simulate_resolution(normal_form(parse_poly("y^2 - x^3")), max_blowups=2)

    def test_history_is_conserved(self) -> None:
        """Every blowup adds a line and lowers the total as expected."""
        tree = _resolve("x*y*(y^3 - x^5)")
        counts = [record.line_count for record in tree.history]
        assert counts == list(range(1, tree.blowup_count + 1))
        assert tree.history[-1].total_self_intersection == sum(tree.chain)


class TestAgainstFormula:
    """Test the simulator against the Euclid chain formula."""

    @pytest.mark.slow
    @pytest.mark.parametrize(("p", "q"), SWEEP)
    def test_single_branch(self, p: int, q: int) -> None:
        """y^p - x^q resolves to the formula chain."""
        nf = NormalForm(EXACT.one, 0, 0, p, q, (EXACT.one,))
        tree = simulate_resolution(nf)
        assert tree.chain == chain_self_intersections(p, q)
        assert tree.attachments[0].representative == PointP1(EXACT.one)
        assert trees_isomorphic(tree, ResolutionTree.from_chain(chain_self_intersections(p, q)))

    @pytest.mark.parametrize(("p", "q"), [(2, 3), (3, 4), (2, 7), (4, 9)])
    def test_with_axes_and_branches(self, p: int, q: int) -> None:
        """Axes and extra branches do not change the chain."""
        nf = NormalForm(EXACT.one, 1, 1, p, q, (EXACT(1), EXACT(-2), EXACT.gaussian(0, 1)))
        tree = simulate_resolution(nf)
        assert tree.chain == chain_self_intersections(p, q)
        labels = sorted(a.label.value for a in tree.attachments)
        assert labels == ["branch", "branch", "branch", "x-axis", "y-axis"]

    def test_float_field_chain(self) -> None:
        """Float arithmetic gives the same chain."""
        field = Field(Mode.FLOAT, 1e-9)
        nf = NormalForm(field(1.0), 0, 1, 3, 5, (field(0.5), field(2.0)), field=field)
        assert simulate_resolution(nf).chain == chain_self_intersections(3, 5)

    def test_x_axis_attaches_at_infinity(self) -> None:
        """The x axis meets the first line at ∞."""
        nf = NormalForm(EXACT.one, 1, 0, 2, 5, (EXACT.one,))
        tree = simulate_resolution(nf)
        x_axis = [a for a in tree.attachments if a.label is BranchLabel.X_AXIS]
        assert [(a.line, a.representative) for a in x_axis] == [(1, INFINITY)]
