"""
Command-line front end.

Charts come either from a JSON chart file (--chart) or inline from one of
the family constructors (--spun/--turned-spun/--symmetry-spun with a braid
word).  Quandles come from a prime modulus (--quandle 3) or a table file.
Reports print as aligned text by default or as JSON with
--format structured.

Exit codes: 0 on success, 1 when a computation or validation fails (the
message names the violated invariant), 2 on usage errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import bounds as bounds_mod
from . import charts as charts_mod
from . import quandles as quandles_mod
from .braids import format_braid, infer_degree, parse_braid
from .charts import ChartValidationError
from .quandles import StateCapExceeded

_FAILURE_EXIT = 1


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(_FAILURE_EXIT)


def _parse_word(text: str, degree: int | None):
    if degree is None:
        degree = infer_degree(text)
    return parse_braid(text, degree)


def _chart_from_options(chart, spun, turned_spun, symmetry_spun, degree):
    sources = [s for s in (chart, spun, turned_spun, symmetry_spun) if s is not None]
    if len(sources) != 1:
        raise click.UsageError(
            "provide exactly one chart source: --chart, --spun, --turned-spun or --symmetry-spun"
        )
    if chart is not None:
        return charts_mod.load_chart(chart)
    if spun is not None:
        return charts_mod.spun_chart(_parse_word(spun, degree))
    if turned_spun is not None:
        return charts_mod.turned_spun_chart(_parse_word(turned_spun, degree))
    return charts_mod.symmetry_spun_chart(_parse_word(symmetry_spun, degree))


def _quandle_from_option(spec: str):
    try:
        p = int(spec)
    except ValueError:
        with open(spec, "r", encoding="utf-8") as handle:
            return quandles_mod.parse_quandle_table(handle.read())
    return quandles_mod.dihedral(p)


_chart_source_options = [
    click.option("--chart", type=click.Path(exists=True), help="Chart JSON file."),
    click.option("--spun", metavar="WORD", help="Spun chart of the braid word."),
    click.option("--turned-spun", metavar="WORD", help="Turned spun chart of the braid word."),
    click.option("--symmetry-spun", metavar="WORD", help="Symmetry-spun chart of the braid word."),
    click.option("--degree", type=int, default=None, help="Strand count (default: inferred)."),
]


def _with_chart_source(command):
    for option in reversed(_chart_source_options):
        command = option(command)
    return command


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
    help="Output style.",
)


@click.group()
def main() -> None:
    """Torus-covering charts, coloring invariants, and unknotting bounds."""


@main.command()
@_with_chart_source
@click.option("--quandle", "quandle_spec", default=None, metavar="P|FILE",
              help="Validate a quandle table instead of a chart.")
def validate(chart, spun, turned_spun, symmetry_spun, degree, quandle_spec) -> None:
    """Check a chart (or quandle table) against its structural invariants."""
    if quandle_spec is not None:
        try:
            quandle = _quandle_from_option(quandle_spec)
        except (ValueError, OSError) as exc:
            _fail(str(exc))
        click.echo(f"valid quandle of order {quandle.order}")
        return
    try:
        loaded = _chart_from_options(chart, spun, turned_spun, symmetry_spun, degree)
    except (ChartValidationError, ValueError, OSError) as exc:
        _fail(str(exc))
    click.echo(
        f"valid chart: degree {loaded.degree}, boundary braids "
        f"{format_braid(loaded.v_braid)} and {format_braid(loaded.h_braid)}, "
        f"class {charts_mod.classify(loaded)}"
    )


@main.command(name="color-count")
@click.option("--braid", required=True, metavar="WORD", help="Closed braid to color.")
@click.option("--degree", type=int, default=None, help="Strand count (default: inferred).")
@click.option("--quandle", "quandle_spec", default="3", show_default=True, metavar="P|FILE")
@format_option
def color_count(braid, degree, quandle_spec, fmt) -> None:
    """Count quandle colorings of the closure of a braid word."""
    try:
        word = _parse_word(braid, degree)
        quandle = _quandle_from_option(quandle_spec)
        count = quandles_mod.coloring_count(quandle, word)
    except (ValueError, OSError, StateCapExceeded) as exc:
        _fail(str(exc))
    if fmt == "structured":
        click.echo(json.dumps({"braid": format_braid(word), "degree": word.degree,
                               "order": quandle.order, "count": count}))
    else:
        click.echo(str(count))


@main.command()
@_with_chart_source
@click.option("--quandle", "modulus", type=int, default=3, show_default=True,
              help="Dihedral modulus for the lower bound.")
@format_option
def bounds(chart, spun, turned_spun, symmetry_spun, degree, modulus, fmt) -> None:
    """Lower and upper unknotting bounds for a covering chart."""
    try:
        loaded = _chart_from_options(chart, spun, turned_spun, symmetry_spun, degree)
        report = bounds_mod.unknotting_bounds(loaded, p=modulus)
    except (ChartValidationError, ValueError, OSError, StateCapExceeded) as exc:
        _fail(str(exc))
    if fmt == "structured":
        click.echo(json.dumps(report.to_dict()))
    else:
        click.echo(f"coloring count: {report.coloring_count}")
        click.echo(f"lower bound:    {report.lower}")
        click.echo(f"upper bound:    {report.upper if report.upper is not None else 'none'}")
        click.echo(f"exact:          {report.exact if report.exact is not None else 'open'}")
        for note in report.notes:
            click.echo(f"  {note}")


@main.command()
@_with_chart_source
@format_option
def turn(chart, spun, turned_spun, symmetry_spun, degree, fmt) -> None:
    """Apply the turning operation (v, h) -> (v, h v) and print the chart."""
    try:
        loaded = _chart_from_options(chart, spun, turned_spun, symmetry_spun, degree)
        turned = charts_mod.turn(loaded)
    except (ChartValidationError, ValueError, OSError) as exc:
        _fail(str(exc))
    data = charts_mod.chart_to_dict(turned)
    if fmt == "structured":
        click.echo(json.dumps(data))
    else:
        for key, value in data.items():
            click.echo(f"{key}: {value}")


@main.command()
@_with_chart_source
def components(chart, spun, turned_spun, symmetry_spun, degree) -> None:
    """Number of components of the covering link."""
    try:
        loaded = _chart_from_options(chart, spun, turned_spun, symmetry_spun, degree)
        count = charts_mod.component_count(loaded)
    except (ChartValidationError, ValueError, OSError) as exc:
        _fail(str(exc))
    click.echo(str(count))


@main.command(name="handle-experiment")
@click.option("--braid", required=True, metavar="WORD")
@click.option("--degree", type=int, default=None, help="Strand count (default: inferred).")
@click.option("--quandle", "modulus", type=int, default=3, show_default=True)
@format_option
def handle_experiment(braid, degree, modulus, fmt) -> None:
    """Constrained coloring counts for every pair of closed-braid grid positions."""
    try:
        word = _parse_word(braid, degree)
        results = bounds_mod.handle_surgery_experiment(word, p=modulus)
        phi = quandles_mod.coloring_count(quandles_mod.dihedral(modulus), word)
    except (ValueError, OSError, StateCapExceeded) as exc:
        _fail(str(exc))
    dichotomy = all(c == phi or c * modulus == phi for _pair, c in results)
    if fmt == "structured":
        click.echo(json.dumps({
            "braid": format_braid(word),
            "coloring_count": phi,
            "dichotomy_holds": dichotomy,
            "pairs": [
                {"first": list(pair[0]), "second": list(pair[1]), "count": count}
                for pair, count in results
            ],
        }))
        return
    click.echo(f"coloring count: {phi}")
    for (pos1, pos2), count in results:
        click.echo(f"  {pos1} = {pos2}  ->  {count}")
    click.echo(f"every count in {{{phi}, {phi // modulus}}}: {'yes' if dichotomy else 'NO'}")
    if not dichotomy:
        sys.exit(_FAILURE_EXIT)


@main.command(name="reproduce-thm")
@click.option("--max-n", type=int, default=6, show_default=True,
              help="Largest chain length to check.")
@format_option
def reproduce_thm(max_n, fmt) -> None:
    """Unknotting bounds for spun and turned spun charts of s1^3 ... sn^3.

    For each n both bounds meet at n, so the unknotting number of these
    covering knots is exactly n.
    """
    try:
        rows = bounds_mod.unknotting_table(max_n)
    except (ChartValidationError, ValueError, StateCapExceeded) as exc:
        _fail(str(exc))
    if fmt == "structured":
        click.echo(json.dumps(rows))
    else:
        header = f"{'n':>2}  {'chart':<12}{'phi':>8}  {'lower':>5}  {'upper':>5}  {'exact':>5}"
        click.echo(header)
        for row in rows:
            click.echo(
                f"{row['n']:>2}  {row['chart']:<12}{row['coloring_count']:>8}  "
                f"{row['lower']:>5}  {row['upper']:>5}  {row['exact']:>5}"
            )
    failures = [row for row in rows if row["exact"] != row["n"]]
    if failures:
        _fail(f"{len(failures)} rows did not meet at the expected value")


if __name__ == "__main__":
    main()
