"""qhc CLI - normal forms, equivalence and resolution chains of quasi-homogeneous curves.

Exit codes: 0 success or equivalent, 1 not equivalent, 2 parse or argument error,
3 not quasi-homogeneous or not reduced, 4 internal cross-check failure.
"""

from __future__ import annotations

import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click

from qhc.config import QHC_CONFIG_ENV, CliConfig, ConfigError, load_config
from qhc.moduli.configuration import Configuration, ConfigurationError
from qhc.moduli.curves import EquivalenceVerdict, WitnessVerificationError, compare_curves
from qhc.moduli.keys import canonical_key
from qhc.poly.bipoly import BiPoly, ZeroPolynomialError
from qhc.poly.grammar import PolynomialSyntaxError, format_poly, parse_poly
from qhc.poly.roots import IrreducibleFactorError, RootSolverError
from qhc.poly.scalar import Mode, format_scalar
from qhc.quasihom.classify import CurveType, NonReducedError, classify_type, reduce
from qhc.quasihom.normal_form import NonCommodeError, NormalForm, normal_form
from qhc.quasihom.weights import NotQuasiHomogeneousError, require_weights
from qhc.resolution.euclid import (
    ChainError,
    chain_arms,
    chain_self_intersections,
    euclid_chain,
    weights_from_chain,
)
from qhc.resolution.export import ExportFormat, to_dot, to_json_payload, to_text
from qhc.resolution.simulator import simulate_resolution
from qhc.resolution.tree import ResolutionError

QHC_DEBUG_ENV = "QHC_DEBUG"

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4

_EXIT_CODES: tuple[tuple[type[Exception], int], ...] = (
    (PolynomialSyntaxError, EXIT_USAGE),
    (ConfigurationError, EXIT_USAGE),
    (ChainError, EXIT_USAGE),
    (ConfigError, EXIT_USAGE),
    (ZeroPolynomialError, EXIT_UNSUPPORTED),
    (NotQuasiHomogeneousError, EXIT_UNSUPPORTED),
    (NonCommodeError, EXIT_UNSUPPORTED),
    (IrreducibleFactorError, EXIT_UNSUPPORTED),
    (NonReducedError, EXIT_UNSUPPORTED),
    (RootSolverError, EXIT_INTERNAL),
    (WitnessVerificationError, EXIT_INTERNAL),
    (ResolutionError, EXIT_INTERNAL),
)


@click.group(
    help="Normal forms, analytic equivalence and resolution chains of quasi-homogeneous curves.",
    epilog=(
        "\b\n"
        "Environment variables:\n"
        f"  {QHC_DEBUG_ENV}=true      Enable debug logging\n"
        f"  {QHC_CONFIG_ENV}=<path>   YAML file with default mode, tol, reduce and format"
    ),
    invoke_without_command=True,
)
@click.option(
    "--debug",
    is_flag=True,
    envvar=QHC_DEBUG_ENV,
    help=f"Enable debug logging (env: {QHC_DEBUG_ENV}=true)",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    envvar=QHC_CONFIG_ENV,
    help=f"YAML config file (env: {QHC_CONFIG_ENV})",
)
@click.version_option(None, "-V", "--version", package_name="qhcurves")
@click.pass_context
def cli(ctx: click.Context, debug: bool, config_path: Path | None) -> None:
    """Global flags handler and help display when no command."""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        sys.exit(0)

    if debug:
        _configure_debug_logging()

    try:
        ctx.obj = load_config(config_path)
    except ConfigError as e:
        raise click.UsageError(str(e)) from e


def _configure_debug_logging() -> None:
    """Configure debug logging to write to a timestamped file.

    Creates a log file at ~/.qhc/logs/YYYY-MM-DD-HH-MM-SS.log and prints its
    path on stderr.
    """
    from datetime import datetime

    logs_dir = Path.home() / ".qhc" / "logs"
    logs_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y-%m-%d-%H-%M-%S")
    log_file = logs_dir / f"{timestamp}.log"

    logging.basicConfig(
        level=logging.DEBUG,
        format="%(asctime)s %(levelname)s:%(name)s:%(message)s",
        filename=str(log_file),
    )

    click.echo(f"Debug logging enabled: {log_file}", err=True)


def _analysis_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """The options shared by every command that reads polynomials."""
    command = click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in ExportFormat]),
        help="Output format (dot only for resolve)",
    )(command)
    command = click.option(
        "--reduce",
        "reduce_flag",
        is_flag=True,
        default=False,
        help="Take the squarefree part of non-reduced input (prints a warning)",
    )(command)
    command = click.option(
        "--tol", type=float, help="Float-mode tolerance (ignored in exact mode)"
    )(command)
    command = click.option(
        "--mode",
        type=click.Choice([m.value for m in Mode]),
        help="Exact Gaussian-rational or tolerant float arithmetic",
    )(command)
    return command


def _command_config(
    ctx: click.Context,
    mode: str | None,
    tol: float | None,
    reduce_flag: bool,
    fmt: str | None,
    *,
    allow_dot: bool = False,
) -> CliConfig:
    base: CliConfig = ctx.obj if isinstance(ctx.obj, CliConfig) else CliConfig()
    try:
        config = base.merged(mode=mode, tol=tol, reduce=True if reduce_flag else None, format=fmt)
    except ConfigError as e:
        raise click.UsageError(str(e)) from e
    if config.format is ExportFormat.DOT and not allow_dot:
        raise click.UsageError(f"--format dot is only available for resolve ({ctx.info_name})")
    return config


def _guarded(action: Callable[[], int]) -> int:
    """Run ``action`` and turn library errors into their exit codes."""
    try:
        return action()
    except Exception as e:
        for error_type, code in _EXIT_CODES:
            if isinstance(e, error_type):
                click.echo(f"error: {e}", err=True)
                if isinstance(e, PolynomialSyntaxError) and e.text:
                    click.echo(f"  {e.text}\n  {' ' * e.position}^", err=True)
                return code
        raise


def _analyse(text: str, config: CliConfig) -> tuple[BiPoly, NormalForm]:
    """Parse, decompose and, when requested, reduce one polynomial."""
    P = parse_poly(text, config.field)
    nf = normal_form(P)
    if config.reduce:
        nf, dropped = reduce(nf)
        removed = ", ".join(dropped) if dropped else "nothing"
        click.echo(
            f"warning: --reduce replaced the curve by {nf.factored()} (dropped: {removed})",
            err=True,
        )
    return P, nf


def _points(configuration: Configuration) -> list[str]:
    return [str(point) for point in configuration.points]


def _separation_text(configuration: Configuration) -> str:
    separation = configuration.min_separation()
    return "n/a" if separation is None else f"{separation:.3e}"


def _normal_form_payload(nf: NormalForm) -> dict[str, Any]:
    return {
        "mu": format_scalar(nf.mu),
        "m": nf.m,
        "n": nf.n,
        "p": nf.p,
        "q": nf.q,
        "lambdas": [format_scalar(lam) for lam in nf.lambdas],
        "swapped": nf.swapped,
        "factored": nf.factored(),
    }


def _type_payload(curve_type: CurveType) -> dict[str, Any]:
    configuration = curve_type.configuration
    return {
        "kind": curve_type.kind.value,
        "triple": list(curve_type.triple),
        "m_parity": curve_type.m_parity,
        "k_parity": curve_type.k_parity,
        "configuration": {"space": configuration.space.value, "points": _points(configuration)},
    }


def _classify(text: str, config: CliConfig) -> int:
    P, nf = _analyse(text, config)
    weights = require_weights(P)
    curve_type = classify_type(nf)
    configuration = curve_type.configuration
    key = canonical_key(configuration)
    if config.format is ExportFormat.JSON:
        payload: dict[str, Any] = {
            "polynomial": format_poly(P),
            "weights": [weights.a, weights.b, weights.d],
            "normal_form": _normal_form_payload(nf),
            "type": _type_payload(curve_type),
            "canonical_key": key,
        }
        if config.mode is Mode.FLOAT:
            payload["min_separation"] = configuration.min_separation()
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
        return EXIT_OK
    click.echo(f"polynomial: {format_poly(P)}")
    click.echo(f"weights: {weights}")
    click.echo(f"normal form: {nf}")
    click.echo(f"factored: {nf.factored()}")
    click.echo(f"type: {curve_type} {curve_type.kind.value}")
    parities = f"m={curve_type.m_parity}"
    if curve_type.k_parity is not None:
        parities += f", k={curve_type.k_parity}"
    click.echo(f"parities: {parities}")
    click.echo(f"configuration: {configuration} in {configuration.space.display}")
    click.echo(f"canonical key: {key}")
    if not nf.lambdas:
        shape = "smooth" if nf.m + nf.n == 1 else "normal crossing"
        click.echo(f"monomial curve: {shape}")
    if config.mode is Mode.FLOAT:
        click.echo(f"min separation: {_separation_text(configuration)}")
    return EXIT_OK


def _verdict_payload(verdict: EquivalenceVerdict) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "equivalent": verdict.equivalent,
        "type_a": _type_payload(verdict.type_a),
        "type_b": _type_payload(verdict.type_b),
    }
    witness = verdict.witness
    if witness is None:
        payload["failure"] = verdict.failure.value if verdict.failure else None
        payload["reason"] = verdict.reason
        return payload
    payload["witness"] = {
        "plane_map": [format_poly(component) for component in witness.plane_map],
        "alpha": format_scalar(witness.alpha),
        "group_element": str(witness.group_element),
        "symbolic": witness.symbolic,
    }
    return payload


def _equiv(text_a: str, text_b: str, config: CliConfig) -> int:
    _, nf_a = _analyse(text_a, config)
    _, nf_b = _analyse(text_b, config)
    verdict = compare_curves(nf_a, nf_b)
    code = EXIT_OK if verdict.equivalent else EXIT_NOT_EQUIVALENT
    if config.format is ExportFormat.JSON:
        payload = _verdict_payload(verdict)
        if config.mode is Mode.FLOAT:
            payload["min_separation"] = [
                verdict.type_a.configuration.min_separation(),
                verdict.type_b.configuration.min_separation(),
            ]
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
        return code
    witness = verdict.witness
    click.echo(f"equivalent: {'yes' if witness is not None else 'no'}")
    click.echo(f"type: {verdict.type_a} / {verdict.type_b}")
    if witness is None:
        click.echo(f"reason: {verdict.reason}")
    else:
        click.echo(f"group element: {witness.group_element}")
        if witness.symbolic is not None:
            click.echo(f"witness: {witness.symbolic}")
            click.echo(f"exact witness: {witness}")
        else:
            click.echo(f"witness: {witness}")
        click.echo(f"alpha: {format_scalar(witness.alpha)}")
    if config.mode is Mode.FLOAT:
        separations = (
            _separation_text(verdict.type_a.configuration),
            _separation_text(verdict.type_b.configuration),
        )
        click.echo(f"min separation: {separations[0]} / {separations[1]}")
    return code


def _chain_text(chain: list[int]) -> str:
    return "[" + ",".join(str(c) for c in chain) + "]"


def _resolve(text: str, config: CliConfig) -> int:
    _, nf = _analyse(text, config)
    tree = simulate_resolution(nf)
    formula = chain_self_intersections(nf.p, nf.q)
    simulated = tree.chain
    agree = simulated in (formula, formula[::-1])
    if config.format is ExportFormat.JSON:
        payload = to_json_payload(tree)
        payload["formula_chain"] = formula
        payload["simulator_chain"] = simulated
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    elif config.format is ExportFormat.DOT:
        comment = f"formula chain {_chain_text(formula)}, simulator chain {_chain_text(simulated)}"
        click.echo(to_dot(tree, comment=comment))
    else:
        click.echo(f"tree: {to_text(tree)}")
        click.echo(f"formula chain: {_chain_text(formula)}")
        click.echo(f"simulator chain: {_chain_text(simulated)}")
        click.echo(f"blowups: {tree.blowup_count}")
    if not agree:
        click.echo(
            f"error: formula chain {_chain_text(formula)} and simulator chain "
            f"{_chain_text(simulated)} disagree",
            err=True,
        )
        return EXIT_INTERNAL
    return EXIT_OK


def _euclid(p: int, q: int, config: CliConfig) -> int:
    euclid = euclid_chain(p, q)
    chain = chain_self_intersections(p, q)
    left, right = chain_arms(chain)
    recovered = weights_from_chain(chain)
    if config.format is ExportFormat.JSON:
        payload = {
            "p": p,
            "q": q,
            "steps": [list(step) for step in euclid.steps],
            "quotients": list(euclid.quotients),
            "blowups": euclid.blowups,
            "chain": chain,
            "arms": {"left": left, "right": right},
            "weights_from_chain": list(recovered),
        }
        click.echo(json.dumps(payload, indent=2))
        return EXIT_OK
    click.echo(f"steps: {euclid}")
    click.echo(f"quotients: {_chain_text(list(euclid.quotients))}")
    click.echo(f"blowups: {euclid.blowups}")
    click.echo(f"chain: {_chain_text(chain)}")
    click.echo(f"arms: {_chain_text(left)} | {_chain_text(right)}")
    click.echo(f"weights from chain: ({recovered[0]},{recovered[1]})")
    return EXIT_OK


@cli.command()
@click.argument("poly")
@_analysis_options
@click.pass_context
def classify(
    ctx: click.Context,
    poly: str,
    mode: str | None,
    tol: float | None,
    reduce_flag: bool,
    fmt: str | None,
) -> None:
    """Weights, normal form, type, configuration and canonical key of POLY."""
    config = _command_config(ctx, mode, tol, reduce_flag, fmt)
    sys.exit(_guarded(lambda: _classify(poly, config)))


@cli.command()
@click.argument("poly_a")
@click.argument("poly_b")
@_analysis_options
@click.pass_context
def equiv(
    ctx: click.Context,
    poly_a: str,
    poly_b: str,
    mode: str | None,
    tol: float | None,
    reduce_flag: bool,
    fmt: str | None,
) -> None:
    """Decide whether POLY_A and POLY_B define analytically equivalent curves."""
    config = _command_config(ctx, mode, tol, reduce_flag, fmt)
    sys.exit(_guarded(lambda: _equiv(poly_a, poly_b, config)))


@cli.command()
@click.argument("poly")
@_analysis_options
@click.pass_context
def resolve(
    ctx: click.Context,
    poly: str,
    mode: str | None,
    tol: float | None,
    reduce_flag: bool,
    fmt: str | None,
) -> None:
    """Minimal resolution of POLY, cross-checked against the Euclid chain."""
    config = _command_config(ctx, mode, tol, reduce_flag, fmt, allow_dot=True)
    sys.exit(_guarded(lambda: _resolve(poly, config)))


@cli.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), help="Output format")
@click.pass_context
def euclid(ctx: click.Context, p: int, q: int, fmt: str | None) -> None:
    """Euclid steps, blowup count and self-intersection chain of the weights (P, Q)."""
    config = _command_config(ctx, None, None, False, fmt)
    sys.exit(_guarded(lambda: _euclid(p, q, config)))


def main(argv: list[str] | None = None) -> int:
    """Run the qhc CLI."""
    try:
        cli(argv, standalone_mode=False)
        return 0
    except click.exceptions.ClickException as e:
        e.show()
        return e.exit_code
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1


if __name__ == "__main__":
    raise SystemExit(main())
