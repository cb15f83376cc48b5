"""Command-line front end.

Every artifact the commands write starts with a ``# hyperfan <command> ...``
header line recording the settings that produced it. Failures are reported as
one JSON error record on stderr with exit status 1.

.. code-block:: console

    $ hyperfan fan 6 > fan6.json
    $ hyperfan lambda fan6.json
    $ hyperfan scan 9 --dedupe --workers 4 --cache memory
    $ hyperfan asymptotics 10 100 1000
"""

from __future__ import annotations
import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any, NoReturn, Optional, TextIO

from pydantic import ValidationError
from redis.exceptions import RedisError

from . import exceptions
from .config import cache_config
from .hypercore import shadow
from .models.cli import CliInvocation, Subcommand
from .outerplanar import enumerate_triangulations, fan, is_maximal_outerplanar, is_outerplanar_hypergraph
from .serialization import (
    config_header,
    dump_hypergraph,
    dump_perron,
    format_float,
    load_hypergraph,
    write_bound_csv,
    write_scan_csv,
)
from .solver_pool import SolverPool
from .verify import DEFAULT_ASYMPTOTIC_NS, asymptotic_table, check_fan_bound, extremal_scan, summarize_scan

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .caching.base import BaseCache
    from .models.hypergraph import UniformHypergraph
    from .models.spectral import PerronResult

logger = logging.getLogger("hyperfan")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise exceptions.UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the ``hyperfan`` executable."""
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="solver bracket tolerance")
    common.add_argument("--max-iter", type=int, default=1_000_000, help="solver iteration budget")
    common.add_argument("--seed", type=int, default=0, help="seed of the starting vector")
    common.add_argument("--shift", type=float, default=1.0, help="diagonal shift of the iteration")
    common.add_argument("--dedupe", action="store_true", help="one triangulation per symmetry class")
    common.add_argument("--out", dest="output", default=None, help="write to this file instead of stdout")
    common.add_argument("--workers", type=int, default=1, help="solver processes for scan")
    common.add_argument("--max-n", type=int, default=12, help="largest n accepted by scan")
    common.add_argument("--cache", choices=("none", "memory", "redis"), default="none", help="result cache")
    common.add_argument("--redis-host", default="localhost")
    common.add_argument("--redis-port", type=int, default=6379)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")

    parser = _Parser(prog="hyperfan", description="Spectral radii of outerplanar 3-uniform hypergraphs.")
    commands = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name, help_text in (
        ("fan", "print the fan hypergraph F_n"),
        ("enumerate", "list the triangulations of the n-gon"),
        ("scan", "rank every triangulation of the n-gon by spectral radius"),
        ("bound", "check lambda(F_n) against the witness lower bound"),
    ):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("n", type=int)
    for name, help_text in (
        ("lambda", "spectral radius of a hypergraph document"),
        ("check", "structural report and spectral radius of a hypergraph document"),
    ):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("input_path", nargs="?", default="-", help="document path, '-' for stdin")
    command = commands.add_parser("asymptotics", parents=[common], help="lambda(F_n) / cbrt(4n) table")
    command.add_argument("ns", type=int, nargs="*")
    return parser


def parse_invocation(argv: Optional[Sequence[str]] = None) -> tuple[CliInvocation, int]:
    """Parse a command line.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns:
        tuple[CliInvocation, int]: The validated invocation and the verbosity count.

    Raises:
        UsageError: If the arguments are malformed or out of range.

    """
    namespace = vars(build_parser().parse_args(argv))
    verbose = int(namespace.pop("verbose"))
    if "ns" in namespace:
        namespace["ns"] = tuple(namespace["ns"])
    try:
        return CliInvocation.model_validate(namespace), verbose
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        message = f"{field}: {error['msg']}" if field else str(error["msg"])
        raise exceptions.UsageError(message, {"field": field}) from e


def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        msg = f"cannot read {path}: {e.strerror or e}"
        raise exceptions.InputFileError(msg, {"path": path}) from e


def _cache_for(inv: CliInvocation) -> Optional[BaseCache]:
    if inv.cache == "none":
        return None
    return cache_config.create_cache(inv.cache, host=inv.redis_host, port=inv.redis_port)


def _solver_fields(inv: CliInvocation) -> dict[str, Any]:
    return {"tol": inv.tol, "max_iter": inv.max_iter, "seed": inv.seed, "shift": inv.shift}


def _solve(inv: CliInvocation, hypergraph: UniformHypergraph, cache: Optional[BaseCache]) -> PerronResult:
    with SolverPool(inv.solver_config(), cache=cache) as pool:
        return pool.solve(hypergraph, use_cache=cache is not None)


def _fan(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    n = int(inv.n or 0)
    out.write(dump_hypergraph(fan(n), config_header("fan", n=n)))


def _lambda(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    hypergraph = load_hypergraph(_read_input(inv.input_path, stdin))
    result = _solve(inv, hypergraph, cache)
    header = config_header("lambda", input=inv.input_path, **_solver_fields(inv))
    out.write(dump_perron(result, header))


def _enumerate(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    n = int(inv.n or 0)
    out.write(config_header("enumerate", n=n, dedupe=inv.dedupe) + "\n")
    count = 0
    for triangulation in enumerate_triangulations(n, dedupe=inv.dedupe):
        out.write(triangulation.to_text() + "\n")
        count += 1
    out.write(f"count: {count}\n")


def _scan(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    n = int(inv.n or 0)
    records = extremal_scan(
        n,
        inv.solver_config(),
        inv.dedupe,
        workers=inv.workers,
        use_cache=cache is not None,
        cache=cache,
        max_n=inv.max_n,
    )
    header = config_header("scan", n=n, dedupe=inv.dedupe, max_n=inv.max_n, **_solver_fields(inv))
    write_scan_csv(records, out, header, summarize_scan(n, records))


def _bound(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    n = int(inv.n or 0)
    header = config_header("bound", n=n, **_solver_fields(inv))
    write_bound_csv([check_fan_bound(n, inv.solver_config())], out, header)


def _asymptotics(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    ns = inv.ns or DEFAULT_ASYMPTOTIC_NS
    header = config_header("asymptotics", ns=list(ns), **_solver_fields(inv))
    write_bound_csv(asymptotic_table(ns, inv.solver_config()), out, header)


def _check(inv: CliInvocation, out: TextIO, stdin: TextIO, cache: Optional[BaseCache]) -> None:
    hypergraph = load_hypergraph(_read_input(inv.input_path, stdin))
    graph = shadow(hypergraph)
    degrees = [graph.degree(v) for v in range(graph.n)]
    lines = [
        config_header("check", input=inv.input_path, **_solver_fields(inv)),
        f"vertices: {hypergraph.n}",
        f"hyperedges: {hypergraph.edge_count}",
        f"uniformity: {hypergraph.r}",
        f"shadow_edges: {graph.edge_count}",
        f"shadow_min_degree: {min(degrees, default=0)}",
        f"shadow_max_degree: {max(degrees, default=0)}",
    ]
    if hypergraph.r == 3:  # noqa: PLR2004
        report = is_outerplanar_hypergraph(hypergraph)
        lines.append(f"outerplanar: {'true' if report.ok else 'false'}")
        if report.ok:
            lines.append(f"outer_cycle: {','.join(str(v) for v in report.outer_cycle or ())}")
        else:
            lines.append(f"failure_reason: {report.failure_reason.value if report.failure_reason else ''}")
        lines.append(f"maximal: {'true' if is_maximal_outerplanar(hypergraph) else 'false'}")
    else:
        lines.append("outerplanar: n/a")
    result = _solve(inv, hypergraph, cache)
    lines.append(f"lambda: {format_float(result.lambda_)}")
    lines.append(f"residual: {format_float(result.residual)}")
    lines.append(f"iterations: {result.iterations}")
    out.write("\n".join(lines) + "\n")


_COMMANDS = {
    Subcommand.FAN: _fan,
    Subcommand.LAMBDA: _lambda,
    Subcommand.ENUMERATE: _enumerate,
    Subcommand.SCAN: _scan,
    Subcommand.BOUND: _bound,
    Subcommand.ASYMPTOTICS: _asymptotics,
    Subcommand.CHECK: _check,
}


def _report(error: exceptions.HyperfanError, stderr: TextIO) -> int:
    logger.debug(f"Command failed: {error!r}")
    stderr.write(json.dumps(error.to_record()) + "\n")
    return 1


def run(
    inv: CliInvocation,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    """Execute a validated invocation.

    The artifact is assembled in memory and written only when the command
    succeeds, so a failing command leaves no partial output behind.

    Args:
        inv (CliInvocation): The invocation.
        stdout (Optional[TextIO]): Artifact stream when ``inv.output`` is unset. Defaults to ``sys.stdout``.
        stderr (Optional[TextIO]): Error record stream. Defaults to ``sys.stderr``.
        stdin (Optional[TextIO]): Source for the ``-`` input path. Defaults to ``sys.stdin``.

    Returns:
        int: 0 on success, 1 on failure.

    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    buffer = io.StringIO()
    try:
        cache = _cache_for(inv)
        _COMMANDS[inv.subcommand](inv, buffer, stdin, cache)
    except exceptions.HyperfanError as e:
        return _report(e, stderr)
    except RedisError as e:
        return _report(exceptions.UsageError(f"redis cache unavailable: {e}", {"cache": "redis"}), stderr)

    if inv.output is None:
        stdout.write(buffer.getvalue())
        return 0
    try:
        Path(inv.output).write_text(buffer.getvalue(), encoding="utf-8")
    except OSError as e:
        error = exceptions.UsageError(f"cannot write {inv.output}: {e.strerror or e}", {"output": inv.output})
        return _report(error, stderr)
    logger.info(f"Wrote {inv.subcommand.value} output to {inv.output}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``hyperfan`` executable.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns:
        int: The exit status.

    """
    try:
        inv, verbose = parse_invocation(argv)
    except exceptions.UsageError as e:
        return _report(e, sys.stderr)
    level = logging.DEBUG if verbose > 1 else logging.INFO if verbose == 1 else logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    logger.debug(f"Running {inv.subcommand.value} with {inv.model_dump(exclude_defaults=True)}")
    return run(inv)
