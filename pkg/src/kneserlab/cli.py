"""Command-line front end."""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from pathlib import Path

import click
import typer
from loguru import logger
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from kneserlab.basecase import SearchBudget, SearchOutcome, verify_base_cases
from kneserlab.coloring import (
    Coloring,
    c1_coloring,
    ck1_coloring,
    greedy_random_coloring,
    load_coloring,
    parse_beta,
    star_report,
    validate,
)
from kneserlab.config import get_settings, use_config_file
from kneserlab.core import InstanceParams
from kneserlab.descent import DescentMode, descend_batch, descend_once, reduce_fully, schedule
from kneserlab.exceptions import (
    CapExceededError,
    ColoringFormatError,
    InsufficientStarClassesError,
    InvalidParametersError,
    KneserLabError,
    NoStarShapedClassError,
    ReductionError,
)
from kneserlab.log import configure_logging
from kneserlab.translate import GadgetVariant, kneser_cnf, size_report, tucker_cnf
from kneserlab.translate.counting import Encoding
from kneserlab.tucker import (
    AntipodalMap,
    check_lift_soundness,
    exhaust_truncated_tucker,
    find_k_complementary,
    lambda_from_coloring,
    lift_lambda,
    random_antipodal_map,
    sample_truncated_tucker,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

console = Console()

app = typer.Typer(
    name="kneserlab",
    help="Kneser-graph colorings, descent reductions, Tucker sweeps and propositional translations.",
    no_args_is_help=True,
)
gen_app = typer.Typer(help="Generate CNF instances in DIMACS format.", no_args_is_help=True)
construct_app = typer.Typer(help="Construct colorings as JSON.", no_args_is_help=True)
verify_app = typer.Typer(help="Verify artifacts.", no_args_is_help=True)
tucker_app = typer.Typer(help="Truncated Tucker checks.", no_args_is_help=True)
app.add_typer(gen_app, name="gen")
app.add_typer(construct_app, name="construct")
app.add_typer(verify_app, name="verify")
app.add_typer(tucker_app, name="tucker")


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"
    CSV = "csv"
    DIMACS = "dimacs"


class RunConfig(BaseModel):
    """Everything a run depends on, with settings resolved up front; logged before dispatch."""

    subcommand: str
    n: int | None = None
    k: int | None = None
    m: int | None = None
    beta: str | None = None
    seed: int | None = None
    mode: DescentMode | None = None
    variant: GadgetVariant | None = None
    max_nodes: int
    max_seconds: float
    symmetry_breaking: bool
    base_case_limit: int
    exhaust_cap: int
    counting: Encoding
    sweeps: int
    output: Path | None = None
    format: OutputFormat = OutputFormat.JSON

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(max_nodes=self.max_nodes, max_seconds=self.max_seconds)


def _start(subcommand: str, **fields: object) -> RunConfig:
    """Build the run's config; options left unset fall back to the current settings."""
    settings = get_settings()
    resolved: dict[str, object] = {
        "max_nodes": settings.search.max_nodes,
        "max_seconds": settings.search.max_seconds,
        "symmetry_breaking": settings.search.symmetry_breaking,
        "base_case_limit": settings.descent.base_case_limit,
        "exhaust_cap": settings.tucker.exhaust_cap,
        "counting": settings.translate.counting,
        "sweeps": settings.greedy.sweeps,
    }
    resolved.update({key: value for key, value in fields.items() if value is not None})
    config = RunConfig(subcommand=subcommand, **resolved)
    logger.debug("run config: {}", config.model_dump_json())
    return config


def _emit(text: str, output: Path | None) -> None:
    """Write an artifact to ``output`` or stdout."""
    if output is None:
        typer.echo(text, nl=not text.endswith("\n"))
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info("wrote {}", output)


def _json(data: object) -> str:
    return json.dumps(data, indent=2)


@app.callback()
def main_callback(
    log_level: str | None = typer.Option(None, "--log-level", help="Logging level (default from settings)."),
    config: Path | None = typer.Option(None, "--config", help="YAML settings file."),
) -> None:
    if config is not None:
        use_config_file(config)
    settings = get_settings()
    configure_logging(log_level or settings.logging.level, settings.logging.json_output)


# --- gen -------------------------------------------------------------------


@gen_app.command("kneser")
def gen_kneser(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    m: int | None = typer.Option(None, "--m", help="Color count (default n-2k+1)."),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    """Kneser coloring CNF: satisfiable iff a proper m-coloring exists."""
    run = _start("gen kneser", n=n, k=k, m=m, output=out, format=OutputFormat.DIMACS)
    _emit(kneser_cnf(run.n, run.k, run.m).to_dimacs(), run.output)


@gen_app.command("tucker")
def gen_tucker(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    merge: bool = typer.Option(False, "--merge-antipodal", help="One variable per orbit and label."),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    """Truncated Tucker CNF: satisfiable iff some map has no k-complementary pair."""
    run = _start("gen tucker", n=n, k=k, output=out, format=OutputFormat.DIMACS)
    _emit(tucker_cnf(run.n, run.k, merge_antipodal=merge).to_dimacs(), run.output)


# --- construct ---------------------------------------------------------------


@construct_app.command("c1")
def construct_c1(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    run = _start("construct c1", n=n, k=k, output=out)
    _emit(c1_coloring(run.n, run.k).to_json(), run.output)


@construct_app.command("ck1")
def construct_ck1(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    run = _start("construct ck1", n=n, k=k, output=out)
    _emit(ck1_coloring(run.n, run.k).to_json(), run.output)


@construct_app.command("greedy")
def construct_greedy(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    m: int | None = typer.Option(None, "--m", help="Color count (default n-2k+2)."),
    seed: int = typer.Option(0, "--seed"),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    m = n - 2 * k + 2 if m is None else m
    run = _start("construct greedy", n=n, k=k, m=m, seed=seed, output=out)
    params = InstanceParams(n=run.n, k=run.k, m=run.m)
    coloring = greedy_random_coloring(params, run.seed, sweeps=run.sweeps)
    _emit(coloring.to_json(), run.output)


# --- verify ------------------------------------------------------------------


@verify_app.command("coloring")
def verify_coloring(
    source: Path = typer.Option(..., "--in", help="Coloring JSON file."),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
) -> None:
    """Check properness and report star-shaped classes."""
    _start("verify coloring", format=fmt)
    coloring = load_coloring(source)
    verdict = validate(coloring)
    report = star_report(coloring)
    if fmt is OutputFormat.JSON:
        payload = {
            "ok": verdict.ok,
            "violation": verdict.violation.model_dump() if verdict.violation else None,
            **report.summary(),
        }
        _emit(_json(payload), None)
    else:
        status = "ok" if verdict.ok else f"violation {verdict.violation}"
        console.print(
            f"{status}, alpha={report.alpha}, non-star classes={report.non_star_colors}"
        )
        table = Table(title=f"Color classes of ({coloring.n},{coloring.k}) with {coloring.m} colors")
        for column in ("color", "size", "star-shaped", "centrals"):
            table.add_column(column)
        for info in report.classes:
            table.add_row(
                str(info.color), str(info.size), "yes" if info.star_shaped else "no",
                ",".join(map(str, info.centrals)),
            )
        console.print(table)
    if not verdict.ok:
        raise typer.Exit(EXIT_VIOLATION)


# --- descend -----------------------------------------------------------------


@app.command("descend")
def descend(
    source: Path = typer.Option(..., "--in", help="Coloring JSON file."),
    mode: DescentMode = typer.Option(DescentMode.SINGLE, "--mode"),
    full: bool = typer.Option(False, "--full", help="Reduce down to the base-case threshold."),
    base_limit: int | None = typer.Option(None, "--base-limit"),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    """Apply one descent step, or a full reduction with --full."""
    run = _start("descend", mode=mode, base_case_limit=base_limit, output=out)
    coloring = load_coloring(source)
    verdict = validate(coloring)
    if not verdict.ok:
        logger.error("input coloring is improper: {}", verdict.violation)
        raise typer.Exit(EXIT_VIOLATION)
    try:
        if full:
            trace = reduce_fully(coloring, run.mode, base_case_limit=run.base_case_limit)
            _emit(trace.model_dump_json(indent=2), run.output)
            return
        step_fn = descend_once if run.mode is DescentMode.SINGLE else descend_batch
        reduced, step = step_fn(coloring)
    except (NoStarShapedClassError, InsufficientStarClassesError, ReductionError) as exc:
        logger.error("{}", exc)
        raise typer.Exit(EXIT_VIOLATION) from exc
    payload = {"step": step.model_dump(mode="json"), "coloring": reduced.model_dump(mode="json")}
    _emit(_json(payload), run.output)


@app.command("schedule")
def schedule_command(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    beta: str = typer.Option("1/2", "--beta", help="Exact rational in (0,1)."),
) -> None:
    """Node counts of the batch descent rounds."""
    run = _start("schedule", n=n, k=k, beta=beta)
    sizes = schedule(run.n, run.k, parse_beta(run.beta))
    payload = {"n": run.n, "k": run.k, "beta": str(Fraction(run.beta)), "rounds": len(sizes), "sizes": sizes}
    _emit(_json(payload), None)


# --- basecase ----------------------------------------------------------------


@app.command("basecase")
def basecase(
    k: int = typer.Option(..., "--k"),
    n_max: int = typer.Option(..., "--n-max"),
    max_nodes: int | None = typer.Option(None, "--max-nodes"),
    max_seconds: float | None = typer.Option(None, "--max-seconds"),
    symmetry: bool | None = typer.Option(
        None, "--symmetry/--no-symmetry", help="Value symmetry breaking (default from settings)."
    ),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
) -> None:
    """Exhaustively refute (n-2k+1)-colorings for 2k <= n <= n_max."""
    run = _start(
        "basecase",
        k=k,
        max_nodes=max_nodes,
        max_seconds=max_seconds,
        symmetry_breaking=symmetry,
        format=fmt,
    )
    report = verify_base_cases(run.k, n_max, budget=run.budget, symmetry_breaking=run.symmetry_breaking)
    if fmt is OutputFormat.JSON:
        _emit(report.model_dump_json(indent=2), None)
    else:
        table = Table(title=f"Base cases k={k}")
        for column in ("n", "m", "outcome", "nodes", "seconds"):
            table.add_column(column)
        for r in report.results:
            table.add_row(str(r.n), str(r.m), r.outcome.value, str(r.nodes_explored), f"{r.elapsed:.3f}")
        console.print(table)
    if report.colorable:
        raise typer.Exit(EXIT_VIOLATION)
    if any(r.outcome is SearchOutcome.BUDGET_EXCEEDED for r in report.results):
        raise typer.Exit(EXIT_BUDGET)


# --- tucker ------------------------------------------------------------------


@tucker_app.command("exhaust")
def tucker_exhaust(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    samples: int | None = typer.Option(None, "--samples", help="Check seeded random maps instead."),
    seed: int = typer.Option(0, "--seed"),
) -> None:
    """Confirm that every antipodal map has a k-complementary pair."""
    run = _start("tucker exhaust", n=n, k=k, seed=seed)
    if samples is None:
        report = exhaust_truncated_tucker(run.n, run.k, cap=run.exhaust_cap)
    else:
        report = sample_truncated_tucker(run.n, run.k, samples, run.seed)
    _emit(report.model_dump_json(indent=2, exclude={"first_counterexample"}), None)
    if not report.ok:
        raise typer.Exit(EXIT_VIOLATION)


@tucker_app.command("witness")
def tucker_witness(
    map_file: Path | None = typer.Option(None, "--map", help="Antipodal map JSON."),
    coloring_file: Path | None = typer.Option(None, "--from-coloring", help="Coloring JSON."),
    n: int | None = typer.Option(None, "--n"),
    k: int | None = typer.Option(None, "--k"),
    seed: int | None = typer.Option(None, "--seed", help="Use a random map on (n, k)."),
) -> None:
    """Search a map for a k-complementary pair.

    Maps built from a proper coloring must have none; any other map must
    have one.
    """
    run = _start("tucker witness", n=n, k=k, seed=seed)
    expect_witness = True
    if coloring_file is not None:
        coloring = load_coloring(coloring_file)
        if not validate(coloring).ok:
            raise InvalidParametersError("the coloring is not proper")
        lam = lambda_from_coloring(coloring)
        expect_witness = False
    elif map_file is not None:
        try:
            lam = AntipodalMap.from_json(map_file.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ColoringFormatError(f"cannot read {map_file}: {exc}") from exc
    elif run.seed is not None and run.n is not None and run.k is not None:
        lam = random_antipodal_map(run.n, run.k, run.seed)
    else:
        raise click.UsageError("give --map, --from-coloring, or --seed with --n and --k")
    witness = find_k_complementary(lam)
    payload = {
        "n": lam.n,
        "k": lam.k,
        "widened": lam.widened,
        "witness": witness.model_dump(mode="json") if witness else None,
    }
    _emit(_json(payload), None)
    if (witness is not None) != expect_witness:
        raise typer.Exit(EXIT_VIOLATION)


@tucker_app.command("lift-check")
def tucker_lift_check(
    n: int = typer.Option(..., "--n"),
    k: int = typer.Option(..., "--k"),
    seeds: int = typer.Option(50, "--seeds"),
    seed: int = typer.Option(0, "--seed", help="First seed."),
) -> None:
    """Lift seeded random maps to the full ball and re-check the case analysis."""
    run = _start("tucker lift-check", n=n, k=k, seed=seed)
    violations = complementary = 0
    for s in range(run.seed, run.seed + seeds):
        lam = random_antipodal_map(run.n, run.k, s)
        report = check_lift_soundness(lam, lift_lambda(lam))
        violations += len(report.violations)
        complementary += report.complementary_pairs
        for violation in report.violations:
            logger.warning("seed {}: {} {}", s, violation.kind.value, violation.detail)
    _emit(
        _json({"n": run.n, "k": run.k, "maps": seeds, "complementary_pairs": complementary, "violations": violations}),
        None,
    )
    if violations:
        raise typer.Exit(EXIT_VIOLATION)


# --- sizes -------------------------------------------------------------------


@app.command("sizes")
def sizes(
    k: int = typer.Option(..., "--k"),
    n_list: str = typer.Option(..., "--n-list", help="Comma-separated node counts."),
    variant: GadgetVariant = typer.Option(GadgetVariant.EF, "--variant"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
    out: Path | None = typer.Option(None, "--out"),
) -> None:
    """Measure formula sizes for one descent round per n."""
    try:
        ns = [int(part) for part in n_list.split(",") if part.strip()]
    except ValueError as exc:
        raise click.BadParameter(f"not a list of integers: {n_list!r}", param_hint="--n-list") from exc
    run = _start("sizes", k=k, variant=variant, output=out, format=fmt)
    report = size_report(run.k, ns, run.variant, encoding=run.counting)
    text = report.to_csv() if fmt is OutputFormat.CSV else report.model_dump_json(indent=2)
    _emit(text, run.output)


def main(argv: list[str] | None = None) -> int:
    """Entry point: run the app and translate failures into exit codes."""
    command = typer.main.get_command(app)
    try:
        result = command.main(args=argv, prog_name="kneserlab", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_VIOLATION
    except (InvalidParametersError, ColoringFormatError) as exc:
        logger.error("{}", exc)
        return EXIT_USAGE
    except CapExceededError as exc:
        logger.error("{}", exc)
        return EXIT_BUDGET
    except KneserLabError as exc:
        logger.error("{}", exc)
        return EXIT_VIOLATION
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
