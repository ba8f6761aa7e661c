"""Command-line interface for chow-defect."""

import functools
import sys
from pathlib import Path

import click
from rich.console import Console
from rich.table import Table

from chowdefect import __version__
from chowdefect.catalog import (
    CaseJob,
    base_case,
    dump_case,
    families,
    list_cases,
    split_versal_law,
    verify_jobs,
)
from chowdefect.config import FORMATS, METHODS, get_config, reload_config, set_config
from chowdefect.errors import (
    CatalogError,
    ChowDefectError,
    ConfigError,
    ContainmentError,
    MethodDisagreement,
)
from chowdefect.log import get_logger, setup_logging
from chowdefect.report import emit_reports, render_law, render_suite
from chowdefect.suites import SuiteResult, dickson_suite, invariants_suite, steenrod_suite

console = Console(stderr=True)
logger = get_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _fail(message: str, code: int) -> None:
    console.print(f"[red]✗ {message}[/red]")
    sys.exit(code)


def handle_errors(fn):
    """Map engine errors to exit codes: 1 for failed checks, 2 for bad input."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ContainmentError as e:
            console.print("[red]✗ containment check failed[/red]")
            for name in e.offending:
                console.print(f"    not in Ker: {name}")
            _fail(str(e), EXIT_FAILED)
        except MethodDisagreement as e:
            console.print("[red]✗ Hilbert function methods disagree[/red]")
            console.print(f"    ideal:     {e.ideal}")
            console.print(f"    degree:    {e.degree}")
            console.print(f"    staircase: {e.staircase}")
            console.print(f"    linalg:    {e.linalg}")
            for line in e.slice_dump:
                console.print(f"    {line}", markup=False)
            _fail(str(e), EXIT_FAILED)
        except ChowDefectError as e:
            _fail(str(e), EXIT_USAGE)
    return wrapper


def _configure(**overrides):
    config = get_config().override(**overrides)
    errors = config.validate()
    if errors:
        raise ConfigError("; ".join(errors))
    set_config(config)
    return config


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        console.print(f"[green]✓[/green] Report written to {output}")
    else:
        click.echo(text, nl=False)


def _finish(passed: bool) -> None:
    sys.exit(EXIT_OK if passed else EXIT_FAILED)


@click.group()
@click.version_option(version=__version__)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging")
@click.option(
    "--env-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Read CHOWD_* settings from this file",
)
def main(verbose: bool, env_file: str | None):
    """chow-defect - verify defect quotients of mod-p Chow rings of flag varieties."""
    if verbose:
        setup_logging(level="DEBUG", force=True)
    if env_file:
        reload_config(env_file)


@main.command("list-cases")
def list_cases_cmd():
    """List built-in cases and parametrized families."""
    table = Table(title="Case families")
    table.add_column("Pattern", style="cyan")
    table.add_column("Listed ids")
    table.add_column("Claim")
    for family in families():
        table.add_row(family.pattern, "\n".join(family.listed), family.summary)
    Console().print(table)
    for case_id in list_cases():
        click.echo(case_id)


def _verify_options(fn):
    options = [
        click.option("--scenario", default=None, help="Scenario (split, versal, λ0, λ1, ...)"),
        click.option("-N", "--max-degree", type=int, default=None, help="Truncation degree"),
        click.option("--method", type=click.Choice(METHODS), default=None, help="Hilbert function method"),
        click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Report path"),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Report format"),
        click.option("--suites", is_flag=True, help="Attach the case's identity suites"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@main.command()
@click.option("--case", "case_ids", multiple=True, required=True, help="Case id (repeatable)")
@_verify_options
@click.option("-w", "--workers", type=int, default=None, help="Parallel case workers")
@handle_errors
def verify(case_ids, scenario, max_degree, method, output, fmt, suites, workers):
    """Verify built-in cases."""
    config = _configure(max_degree=max_degree, method=method, output_format=fmt, workers=workers)
    jobs = [
        CaseJob(case_id=case_id, scenario=scenario, max_degree=config.max_degree,
                method=config.method, suites=suites)
        for case_id in case_ids
    ]
    reports = verify_jobs(jobs, workers=config.workers)
    _write(emit_reports(reports, config.output_format), output)
    _finish(all(r.passed for r in reports))


@main.command("case-file")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@_verify_options
@handle_errors
def case_file(path, scenario, max_degree, method, output, fmt, suites):
    """Verify a case described by a JSON case file."""
    config = _configure(max_degree=max_degree, method=method, output_format=fmt)
    job = CaseJob(path=path, scenario=scenario, max_degree=config.max_degree,
                  method=config.method, suites=suites)
    reports = verify_jobs([job])
    _write(emit_reports(reports, config.output_format), output)
    _finish(reports[0].passed)


@main.command("dump-case")
@click.argument("case_id")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def dump_case_cmd(case_id, output):
    """Print a built-in case in the case-file format."""
    _write(dump_case(base_case(case_id)), output)


def _run_suites(results: list[SuiteResult], fmt: str | None, output: str | None) -> None:
    config = _configure(output_format=fmt)
    _write("".join(render_suite(s, config.output_format) for s in results), output)
    _finish(all(s.passed for s in results))


@main.command("steenrod-check")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def steenrod_check(fmt, output):
    """Reduced powers of Toda's classes and Milnor operations on the Euler class."""
    _run_suites([steenrod_suite(), dickson_suite()], fmt, output)


@main.command("dickson-check")
@click.option("--h", "h", type=click.IntRange(1, 4), required=True, help="Rank of the elementary abelian group")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def dickson_check(h, fmt, output):
    """Dickson expansion and Milnor operations for one h."""
    _run_suites([dickson_suite((h,), max_h=get_config().dickson_max_h)], fmt, output)


@main.command("invariants-check")
@click.option("-N", "--max-degree", type=click.IntRange(0, None), default=15, help="Highest slice degree")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def invariants_check(max_degree, fmt, output):
    """W(F4) invariants over F_3 and Pontryagin invariance under signed permutations."""
    _run_suites([invariants_suite(max_degree)], fmt, output)


@main.command("law-check")
@click.option("--family", required=True, help="spin7, spin9 or so_odd:<l>")
@click.option("-N", "--max-degree", type=int, default=None)
@click.option("--method", type=click.Choice(METHODS), default=None)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def law_check(family, max_degree, method, fmt, output):
    """Check D(split) - D(versal) against the family's gap series."""
    if not (family in ("spin7", "spin9") or family.startswith("so_odd:")):
        raise CatalogError(f"no split/versal pair for '{family}'")
    config = _configure(max_degree=max_degree, method=method, output_format=fmt)
    result = split_versal_law(family, config.max_degree, config.method)
    _write(render_law(result, config.output_format), output)
    _finish(result.ok)


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        main.main(args=argv, prog_name="chowd", standalone_mode=True)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else EXIT_FAILED)
    return EXIT_OK


if __name__ == "__main__":
    main()
