"""CLI entry point for gradedargs."""

from __future__ import annotations

import argparse
import logging
import sys
import tomllib
from dataclasses import dataclass, replace
from pathlib import Path

from .dsl_error import DslError
from .enumeration import DEFAULT_CAP, SizeLimitExceededError, brute_force, enumerate_labellings
from .graph_dsl import parse_graph, serialize_graph
from .graph_error import GraphError
from .logic import LOGICS
from .phi import PhiFunction, PhiSpec, SigmoidNearest, StepThreshold
from .probability import DistributionSpec, ProbabilityError
from .query_dsl import parse_queries
from .semantics import SemanticsChoice, SemanticsKind
from .session import Session, render_json, render_text, run_session
from .truth_degree import TruthDegreeError

# ANSI escape sequences
_RESET = "\033[0m"
_BOLD_RED = "\033[1;31m"
_BOLD_GREEN = "\033[1;32m"

_FORMATS = ("text", "json")
_SEMANTICS = tuple(kind.value for kind in SemanticsKind)
_CONFIG_KEYS = ("n", "phi", "semantics", "logic", "format", "cap", "workers")

# Errors that mean the input (files or flags) is unusable; reported on stderr with exit 2.
_INPUT_ERRORS = (
    OSError,
    UnicodeDecodeError,
    DslError,
    GraphError,
    TruthDegreeError,
    ProbabilityError,
    SizeLimitExceededError,
)


def _warn(message: str) -> None:
    """Report a configuration problem on stderr, keeping stdout for the report."""
    print(f"gradedargs: {message}", file=sys.stderr)


@dataclass(frozen=True)
class RunConfig:
    """Resolved defaults for ``run``; explicit flags override every field.

    The default instance is the "nothing configured" state.
    """

    n: int = 5
    phi: str = "sigmoid"
    semantics: str = SemanticsKind.PHI_COHERENT.value
    logic: str = "goedel"
    format: str = "text"
    cap: int = DEFAULT_CAP
    workers: int = 1


def _phi_function(value: str) -> PhiFunction:
    """Parse ``sigmoid``, ``step`` or ``step:T`` into a φ function."""
    if value == "sigmoid":
        return SigmoidNearest()
    if value == "step":
        return StepThreshold()
    kind, _, threshold = value.partition(":")
    if kind == "step" and threshold:
        try:
            return StepThreshold(float(threshold))
        except ValueError:
            pass
    msg = f"invalid φ: {value!r} (expected sigmoid, step or step:T)"
    raise ValueError(msg)


def _phi_argument(value: str) -> str:
    """Argparse type for ``--phi``, so bad input exits 2 like any usage error."""
    try:
        _phi_function(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e
    return value


def _positive_int(value: str) -> int:
    """Argparse type for a positive integer."""
    try:
        number = int(value)
    except ValueError as e:
        msg = f"invalid integer: {value!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if number < 1:
        msg = f"expected a positive integer, got {number}"
        raise argparse.ArgumentTypeError(msg)
    return number


def _read_toml_table(config_path: Path, keys: tuple[str, ...]) -> dict | None:
    """Read a nested table out of a TOML file, or `None` if it isn't there.

    A missing file is silent; a malformed one warns, since the user clearly meant to
    configure something.
    """
    if not config_path.is_file():
        return None
    try:
        with config_path.open("rb") as f:
            data = tomllib.load(f)
    except (tomllib.TOMLDecodeError, OSError) as e:
        _warn(f"ignoring {config_path}: {e}")
        return None
    table: object = data
    for key in keys:
        if not isinstance(table, dict):
            return None
        table = table.get(key)
    return table if isinstance(table, dict) else None


def _config_value(table: dict, key: str) -> object | None:
    """Return a validated config value, or warn and return `None`."""
    value = table[key]
    if key in ("n", "cap", "workers"):
        # bool is a subclass of int, and `n = true` is a mistake, not 1.
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            _warn(f"ignoring {key}: expected a positive integer, got {value!r}")
            return None
        return value
    choices = {
        "semantics": _SEMANTICS,
        "logic": tuple(LOGICS),
        "format": _FORMATS,
    }.get(key)
    if choices is not None:
        if value not in choices:
            _warn(f"ignoring {key}: expected one of {', '.join(choices)}")
            return None
        return value
    try:
        _phi_function(value if isinstance(value, str) else repr(value))
    except ValueError as e:
        _warn(f"ignoring phi: {e}")
        return None
    return value


def _load_config(path: Path) -> RunConfig:
    """Read ``run`` defaults for the project at `path`.

    A standalone `gradedargs.toml` wins entirely over `[tool.gradedargs]` in
    `pyproject.toml`; the two are never merged. In `gradedargs.toml` the keys sit at
    the top level. Unknown keys and unusable values are reported and dropped.
    """
    standalone = path / "gradedargs.toml"
    if standalone.is_file():
        table = _read_toml_table(standalone, ())
    else:
        table = _read_toml_table(path / "pyproject.toml", ("tool", "gradedargs"))
    if table is None:
        return RunConfig()

    values: dict[str, object] = {}
    for key in table:
        if key not in _CONFIG_KEYS:
            _warn(f"ignoring unknown key {key!r}")
            continue
        value = _config_value(table, key)
        if value is not None:
            values[key] = value
    return replace(RunConfig(), **values)


def _configure_logging(*, verbose: bool) -> None:
    """Send library logging to stderr when asked to."""
    if not verbose:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("gradedargs: %(levelname)s %(name)s: %(message)s"))
    logger = logging.getLogger("gradedargs")
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)


def _distribution(value: str) -> DistributionSpec:
    if value == "uniform":
        return DistributionSpec()
    return DistributionSpec(path=Path(value))


def _build_session(args: argparse.Namespace, config: RunConfig) -> Session:
    """Read the input files and assemble a session from flags and config."""
    resolution = args.n or config.n
    parsed = parse_graph(args.graph.read_text(encoding="utf-8"))
    kind = SemanticsKind(args.semantics or config.semantics)
    if kind is SemanticsKind.PHI_COHERENT:
        default = _phi_function(args.phi or config.phi)
        semantics = SemanticsChoice.phi_coherent(PhiSpec(default, parsed.phi_overrides))
    else:
        if parsed.phi_overrides:
            _warn(f"ignoring phi lines in {args.graph}: the {kind.value} semantics does not use φ")
        semantics = SemanticsChoice(kind)
    statements = ()
    if args.queries is not None:
        statements = parse_queries(args.queries.read_text(encoding="utf-8"), parsed.graph, resolution)
    return Session(
        graph=parsed.graph,
        resolution=resolution,
        semantics=semantics,
        logic=LOGICS[args.logic or config.logic],
        distribution=_distribution(args.dist),
        statements=statements,
        workers=args.workers or config.workers,
    )


def _check_oracle(session: Session, cap: int) -> None:
    """Compare the search with brute force; exit 1 if they disagree."""
    searched = enumerate_labellings(session.graph, session.resolution, session.semantics, workers=session.workers)
    filtered = brute_force(session.graph, session.resolution, session.semantics, cap=cap)
    if searched.labellings != filtered.labellings:
        print(
            f"✗ search found {len(searched)} labellings but brute force found {len(filtered)}",
            file=sys.stderr,
        )
        sys.exit(1)


def _print_summary(failed: int, total: int) -> None:
    use_color = hasattr(sys.stdout, "isatty") and sys.stdout.isatty()
    if failed:
        msg = f"✗ {failed} of {total} checks not satisfied"
        print(f"{_BOLD_RED}{msg}{_RESET}" if use_color else msg)
    else:
        label = "check" if total == 1 else "checks"
        msg = f"✓ {total} {label} satisfied"
        print(f"{_BOLD_GREEN}{msg}{_RESET}" if use_color else msg)


def _run(args: argparse.Namespace) -> None:
    """Execute the run subcommand."""
    _configure_logging(verbose=args.verbose)
    config = _load_config(args.config_dir)
    output_format = args.format or config.format
    try:
        session = _build_session(args, config)
        if args.oracle:
            _check_oracle(session, args.cap or config.cap)
        report = run_session(session)
    except _INPUT_ERRORS as e:
        _warn(str(e))
        sys.exit(2)

    if output_format == "json":
        print(render_json(report), end="")
    else:
        print(render_text(report), end="")
        checks = sum(1 for result in report.statements if result.kind == "check")
        if checks:
            print()
            _print_summary(report.failed_checks, checks)

    if args.strict and report.failed_checks:
        sys.exit(1)


def _format_graph(args: argparse.Namespace) -> None:
    """Execute the format-graph subcommand."""
    try:
        parsed = parse_graph(args.graph.read_text(encoding="utf-8"))
    except _INPUT_ERRORS as e:
        _warn(f"{args.graph}: {e}")
        sys.exit(2)
    print(serialize_graph(parsed.graph, parsed.phi_overrides), end="")


def main(argv: list[str] | None = None) -> None:
    """Entry point for the gradedargs CLI."""
    parser = argparse.ArgumentParser(
        prog="gradedargs",
        description="Preferential reasoning and fuzzy-event probabilities over weighted argumentation graphs.",
    )
    subparsers = parser.add_subparsers(dest="command")

    run_parser = subparsers.add_parser("run", help="Enumerate labellings and answer a query file.")
    run_parser.add_argument("--graph", type=Path, required=True, help="Graph file.")
    run_parser.add_argument("--queries", type=Path, default=None, help="Query file (optional).")
    run_parser.add_argument("--n", type=_positive_int, default=None, help="Resolution n of C_n (default 5).")
    run_parser.add_argument(
        "--phi",
        type=_phi_argument,
        default=None,
        help="Default φ for the phi semantics: sigmoid (default), step or step:T. Graph phi lines override it.",
    )
    run_parser.add_argument("--semantics", choices=_SEMANTICS, default=None, help="Labelling class (default phi).")
    run_parser.add_argument("--logic", choices=tuple(LOGICS), default=None, help="Truth functions (default goedel).")
    run_parser.add_argument(
        "--dist",
        default="uniform",
        help="Distribution over Σ: uniform (default) or a file of '<index> <weight>' lines.",
    )
    run_parser.add_argument("--format", choices=_FORMATS, default=None, help="Output format (default text).")
    run_parser.add_argument(
        "--cap",
        type=_positive_int,
        default=None,
        help=f"Largest candidate space brute force may visit with --oracle (default {DEFAULT_CAP}).",
    )
    run_parser.add_argument(
        "--oracle",
        action="store_true",
        help="Cross-check the search against brute force before answering; exit 1 if they differ.",
    )
    run_parser.add_argument("--workers", type=_positive_int, default=None, help="Enumeration processes (default 1).")
    run_parser.add_argument("--strict", action="store_true", help="Exit with code 1 if any check is not satisfied.")
    run_parser.add_argument("--verbose", action="store_true", help="Log search details to stderr.")
    run_parser.add_argument(
        "--config-dir",
        type=Path,
        default=Path(),
        dest="config_dir",
        help="Directory holding gradedargs.toml or pyproject.toml (default: current directory).",
    )

    format_parser = subparsers.add_parser("format-graph", help="Print a graph file in canonical form.")
    format_parser.add_argument("graph", type=Path, help="Graph file.")

    args = parser.parse_args(argv)

    if args.command == "run":
        _run(args)
    elif args.command == "format-graph":
        _format_graph(args)
    else:
        parser.print_help()
        sys.exit(2)
