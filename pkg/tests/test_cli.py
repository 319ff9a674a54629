"""Tests for CLI behavior."""

from __future__ import annotations

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from qhc.cli import main
from qhc.resolution import ResolutionError


class TestNoArgumentsShowsHelp:
    """Test that running qhc with no arguments shows help text."""

    def test_no_arguments_exits_with_zero(self) -> None:
        """qhc with no args should exit with code 0."""
        result = main([])
        assert result == 0

    def test_help_flag_exits_with_zero(self) -> None:
        """qhc --help should exit with code 0."""
        result = main(["--help"])
        assert result == 0

    def test_debug_flag_alone_shows_help(self) -> None:
        """qhc --debug with no command should show help and exit with code 0."""
        result = main(["--debug"])
        assert result == 0

    def test_debug_flag_configures_logging(self) -> None:
        """qhc --debug with a command should set up the log file."""
        with patch("qhc.cli._configure_debug_logging") as mock_logging:
            result = main(["--debug", "euclid", "2", "3"])
            assert result == 0
            mock_logging.assert_called_once()


class TestClassifyCommand:
    """Test the classify command."""

    def test_cusp(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The cusp is of type (2,3,1) with configuration {1} in C*."""
        result = main(["classify", "y^2 - x^3"])
        out = capsys.readouterr().out
        assert result == 0
        assert "weights: (2,3,6)" in out
        assert "type: (2,3,1) (p,q,n)" in out
        assert "parities: m=0, k=0" in out
        assert "configuration: {1} in C*" in out
        assert "canonical key: [1]" in out

    def test_monomial(self, capsys: pytest.CaptureFixture[str]) -> None:
        """x*y is a normal crossing."""
        assert main(["classify", "x*y"]) == 0
        assert "monomial curve: normal crossing" in capsys.readouterr().out

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """JSON output carries the type and key."""
        assert main(["classify", "x*(y-x)*(y-2x)", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["type"]["triple"] == [1, 1, 3]
        assert payload["type"]["configuration"]["points"] == ["1", "2", "∞"]
        assert payload["canonical_key"] == "[0,1,∞]"

    def test_syntax_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Syntax errors exit 2 and point at the offending character."""
        assert main(["classify", "y^2 - - x"]) == 2
        err = capsys.readouterr().err
        assert "error: syntax error" in err
        assert "  y^2 - - x\n        ^" in err

    @pytest.mark.parametrize("poly", ["y^2 - x^3 + x^2", "0", "(y - x)^2", "y^2 - 2*x^2"])
    def test_unsupported(self, poly: str) -> None:
        """Non-quasi-homogeneous, zero, non-reduced and non-split input exit 3."""
        assert main(["classify", poly]) == 3

    def test_reduce(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--reduce takes the squarefree part with a warning."""
        assert main(["classify", "x^2*(y - x)^2", "--reduce"]) == 0
        captured = capsys.readouterr()
        assert "warning: --reduce replaced the curve by x*(y - x)" in captured.err
        assert "type: (1,1,2)" in captured.out

    def test_reduce_swapped(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Swapped curves are reported in their own coordinates."""
        assert main(["classify", "y^2*(x^2 - y^3)^2", "--reduce"]) == 0
        captured = capsys.readouterr()
        assert "replaced the curve by y*(-y^3 + x^2) (dropped: y, (-y^3 + x^2))" in captured.err
        assert "factored: y*(-y^3 + x^2)" in captured.out

    def test_float_mode(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Float mode splits y^2 - 2x^2 and reports the separation."""
        assert main(["classify", "y^2 - 2*x^2", "--mode", "float"]) == 0
        assert "min separation: 2.828e+00" in capsys.readouterr().out

    def test_dot_is_only_for_resolve(self) -> None:
        """--format dot is a usage error outside resolve."""
        assert main(["classify", "y^2 - x^3", "--format", "dot"]) == 2


class TestEquivCommand:
    """Test the equiv command."""

    def test_equivalent(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A scaled cusp prints the symbolic and the exact witness."""
        assert main(["equiv", "y^2 - x^3", "y^2 - 5*x^3"]) == 0
        out = capsys.readouterr().out
        assert "equivalent: yes" in out
        assert "group element: z -> 5*z" in out
        assert "witness: T(x,y) = (x, 5^(1/2)*y)" in out
        assert "exact witness: T(x,y) = (5*x, 25*y)" in out
        assert "alpha: 625" in out

    def test_not_equivalent(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Different types exit 1 with a reason."""
        assert main(["equiv", "y^2 - x^3", "y^3 - x^4"]) == 1
        assert "reason: type (2,3,1) ≠ (3,4,1)" in capsys.readouterr().out

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """JSON output carries the witness."""
        assert main(["equiv", "y^2 - x^3", "x^2 - y^3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["equivalent"] is True
        assert payload["witness"]["plane_map"] == ["y", "x"]

    def test_json_failure(self, capsys: pytest.CaptureFixture[str]) -> None:
        """JSON output names the failing invariant."""
        result = main(
            ["equiv", "x*y*(y-x)*(y-2x)", "x*y*(y-x)*(y-3x)", "--format", "json"]
        )
        assert result == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["failure"] == "configuration"


class TestResolveCommand:
    """Test the resolve command."""

    def test_cusp(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Formula and simulator agree on the cusp."""
        assert main(["resolve", "y^2 - x^3"]) == 0
        out = capsys.readouterr().out
        assert "tree: D1(-3) — D2(-1) — D3(-2); branch@D2" in out
        assert "formula chain: [-3,-1,-2]" in out
        assert "simulator chain: [-3,-1,-2]" in out
        assert "blowups: 3" in out

    def test_dot(self, capsys: pytest.CaptureFixture[str]) -> None:
        """DOT output records both chains in a comment."""
        assert main(["resolve", "y^2 - x^3", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert "// formula chain [-3,-1,-2], simulator chain [-3,-1,-2]" in out
        assert "graph resolution {" in out

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """JSON output includes both chains."""
        assert main(["resolve", "x*y*(y^2 - x^3)", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["formula_chain"] == payload["simulator_chain"] == [-3, -1, -2]
        assert len(payload["attachments"]) == 3

    def test_mismatch_exits_4(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A disagreement between the two chains is an internal error."""
        with patch("qhc.cli.chain_self_intersections", return_value=[-2, -1]):
            assert main(["resolve", "y^2 - x^3"]) == 4
        assert "disagree" in capsys.readouterr().err

    def test_simulator_failure_exits_4(self) -> None:
        """Resolution errors map to exit code 4."""
        with patch("qhc.cli.simulate_resolution", side_effect=ResolutionError("boom")):
            assert main(["resolve", "y^2 - x^3"]) == 4


class TestEuclidCommand:
    """Test the euclid command."""

    def test_cusp(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Steps, chain, arms and recovered weights of (2,3)."""
        assert main(["euclid", "2", "3"]) == 0
        out = capsys.readouterr().out
        assert "steps: [(3,2,1,1),(2,1,2,0)]" in out
        assert "blowups: 3" in out
        assert "chain: [-3,-1,-2]" in out
        assert "arms: [-3] | [-2]" in out
        assert "weights from chain: (2,3)" in out

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """JSON output lists the steps."""
        assert main(["euclid", "5", "7", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["chain"] == [-4, -2, -1, -3, -2]
        assert payload["weights_from_chain"] == [5, 7]

    def test_not_coprime(self) -> None:
        """Non-coprime weights are a usage error."""
        assert main(["euclid", "2", "4"]) == 2

    def test_dot_rejected(self) -> None:
        """euclid has no DOT output."""
        assert main(["euclid", "2", "3", "--format", "dot"]) == 2


class TestConfigFile:
    """Test defaults from a YAML config file."""

    def test_config_option(self, tmp_path: Path) -> None:
        """mode: float in the config file enables float mode."""
        path = tmp_path / "qhc.yaml"
        path.write_text("mode: float\n")
        assert main(["--config", str(path), "classify", "y^2 - 2*x^2"]) == 0

    def test_config_env(
        self,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """QHC_CONFIG points at the config file."""
        path = tmp_path / "qhc.yaml"
        path.write_text("format: json\n")
        monkeypatch.setenv("QHC_CONFIG", str(path))
        assert main(["euclid", "2", "3"]) == 0
        assert json.loads(capsys.readouterr().out)["chain"] == [-3, -1, -2]

    def test_command_line_wins(self, tmp_path: Path) -> None:
        """Options override the config file."""
        path = tmp_path / "qhc.yaml"
        path.write_text("mode: float\n")
        args = ["--config", str(path), "classify", "y^2 - 2*x^2", "--mode", "exact"]
        assert main(args) == 3

    def test_bad_config(self, tmp_path: Path) -> None:
        """An invalid config file is a usage error."""
        path = tmp_path / "qhc.yaml"
        path.write_text("tol: -1.0\n")
        assert main(["--config", str(path), "euclid", "2", "3"]) == 2
