"""
Command-line interface.

Machine output goes to stdout (exact rationals as "a/b", JSON or CSV); logs
and errors go to stderr.
"""
import functools
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click

from .schemas import (GadgetOut, ImplementedPointOut, PointClassOut, PointOut, PolynomialOut,
                      ReductionOut, SignReportOut)
from ..arith.rational import decimal_hint, format_rational, parse_rational
from ..gadgets.constructions import ConstructionEngine
from ..graphs.io import GraphFile, read_graph
from ..graphs.multigraph import complete_weights
from ..reduction.sign_reduction import MODES, SCHEDULES, SignReduction
from ..regions.classifier import classify, grid_to_csv, grid_to_json, scan_grid
from ..regions.point import PlanePoint
from ..signs.dispatch import METHODS, SignDispatcher
from ..tutte.evaluator import tutte_value, z_multivariate
from ..tutte.specializations import chromatic_poly, flow_poly
from ..errors import TutteSignError
from config.settings import get_config, load_config

logger = logging.getLogger(__name__)


class RationalType(click.ParamType):
    """Exact rational flag value: "a", "-a" or "a/b" """
    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return parse_rational(str(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


RATIONAL = RationalType()


def domain_errors(func):
    """Report domain errors as a one-line message with exit status 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (TutteSignError, ValueError) as e:
            raise click.ClickException(str(e)) from None
    return wrapper


def _load(path: str) -> GraphFile:
    return read_graph(path)


def _parse_weight_list(text: Optional[str]) -> Optional[List]:
    if text is None:
        return None
    return [parse_rational(part) for part in text.split(",") if part.strip()]


@click.group()
@click.option("--config", "config_file", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration overlay")
@click.option("--log-level", default=None, help="Logging level (default from APP_LOG_LEVEL)")
def cli(config_file, log_level):
    """Exact Tutte / random-cluster evaluation, sign algorithms and complexity regions."""
    if config_file:
        load_config(config_file)
    level = (log_level or get_config().log_level).upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.INFO),
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")


@cli.command("eval")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--q", type=RATIONAL, default=None, help="Cluster weight")
@click.option("--gamma", type=RATIONAL, default=None, help="Uniform edge weight")
@click.option("--x", type=RATIONAL, default=None, help="Classical x (with --y)")
@click.option("--y", type=RATIONAL, default=None, help="Classical y (with --x)")
@click.option("--weights", default=None, help="Comma-separated per-edge weights in file order")
@click.option("--tutte", is_flag=True, help="Print T(G; x, y) instead of Z")
@click.option("--human", is_flag=True, help="Append a decimal approximation")
@domain_errors
def eval_command(graph_path, q, gamma, x, y, weights, tutte, human):
    """Exact Z(G; q, gamma) or T(G; x, y)."""
    parsed = _load(graph_path)
    graph = parsed.graph
    if (x is None) != (y is None):
        raise click.UsageError("--x and --y go together")
    if x is not None:
        if q is not None or gamma is not None:
            raise click.UsageError("give either --q/--gamma or --x/--y")
        if tutte:
            value = tutte_value(graph, x, y)
            click.echo(format_rational(value) + (f"  {decimal_hint(value)}" if human else ""))
            return
        q, gamma = (x - 1) * (y - 1), y - 1
    elif tutte:
        raise click.UsageError("--tutte needs --x and --y")
    if q is None:
        raise click.UsageError("missing --q (or --x/--y)")

    partial = dict(parsed.weights)
    listed = _parse_weight_list(weights)
    if listed is not None:
        if len(listed) != graph.edge_count:
            raise click.UsageError(f"--weights has {len(listed)} entries for {graph.edge_count} edges")
        partial = dict(zip(graph.labels, listed))
    value = z_multivariate(graph, q, complete_weights(graph, partial, gamma))
    click.echo(format_rational(value) + (f"  {decimal_hint(value)}" if human else ""))


@cli.command("sign")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--x", type=RATIONAL, required=True)
@click.option("--y", type=RATIONAL, required=True)
@click.option("--method", type=click.Choice(METHODS), default=None)
@domain_errors
def sign_command(graph_path, x, y, method):
    """Sign of Z at (x, y) as a JSON report."""
    point = PlanePoint(x, y)
    report = SignDispatcher().dispatch(_load(graph_path).graph, point, method)
    click.echo(SignReportOut.from_domain(point, report).model_dump_json(indent=2))


@cli.command("classify")
@click.option("--x", type=RATIONAL, required=True)
@click.option("--y", type=RATIONAL, required=True)
@domain_errors
def classify_command(x, y):
    """Region and complexity status of (x, y)."""
    point = PlanePoint(x, y)
    click.echo(PointClassOut.from_domain(point, classify(point)).model_dump_json(indent=2))


@cli.command("map")
@click.option("--xmin", type=RATIONAL, required=True)
@click.option("--xmax", type=RATIONAL, required=True)
@click.option("--ymin", type=RATIONAL, required=True)
@click.option("--ymax", type=RATIONAL, required=True)
@click.option("--step", type=RATIONAL, required=True)
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--workers", type=int, default=None)
@domain_errors
def map_command(xmin, xmax, ymin, ymax, step, output_format, workers):
    """Classify a lattice of points (x outer, y inner)."""
    rows = scan_grid((xmin, xmax), (ymin, ymax), step, max_workers=workers)
    click.echo(grid_to_csv(rows) if output_format == "csv" else grid_to_json(rows), nl=output_format == "json")


@cli.command("chromatic")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False))
@domain_errors
def chromatic_command(graph_path):
    """Chromatic polynomial P(G; q)."""
    poly = chromatic_poly(_load(graph_path).graph)
    click.echo(PolynomialOut.from_domain("chromatic", poly).model_dump_json(indent=2))


@cli.command("flow")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False))
@domain_errors
def flow_command(graph_path):
    """Flow polynomial F(G; q)."""
    poly = flow_poly(_load(graph_path).graph)
    click.echo(PolynomialOut.from_domain("flow", poly).model_dump_json(indent=2))


@cli.command("gadget")
@click.option("--construction", "--lemma", "construction", required=True,
              help="Construction name, e.g. two-stretch-lift or even-stretch-cd")
@click.option("--x", type=RATIONAL, required=True)
@click.option("--y", type=RATIONAL, required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Write the gadget file(s) here; later ones get .2, .3, ... suffixes")
@domain_errors
def gadget_command(construction, x, y, out_path):
    """Build and certify the gadgets of a named construction."""
    point = PlanePoint(x, y)
    built = ConstructionEngine().construct(point, construction)
    if out_path:
        for index, (_, gadget) in enumerate(built, 1):
            target = Path(out_path if index == 1 else f"{out_path}.{index}")
            target.write_text(gadget.to_text())
            logger.info(f"Wrote {gadget.edge_count}-edge gadget to {target}")
    result = GadgetOut(construction=construction, start=PointOut.from_point(point),
                       points=[ImplementedPointOut.from_domain(p, g) for p, g in built])
    click.echo(result.model_dump_json(indent=2))


@cli.command("mincut")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--s", "source", type=int, default=None, help="Source (default: the file's terminal s)")
@click.option("--t", "sink", type=int, default=None, help="Sink (default: the file's terminal t)")
@click.option("--q", type=RATIONAL, required=True)
@click.option("--mode", type=click.Choice(MODES), default=None)
@click.option("--schedule", type=click.Choice(SCHEDULES), default=None)
@domain_errors
def mincut_command(graph_path, source, sink, q, mode, schedule):
    """Count minimum (s,t)-cuts through sign queries only."""
    parsed = _load(graph_path)
    source = source if source is not None else parsed.terminals.get("s")
    sink = sink if sink is not None else parsed.terminals.get("t")
    if source is None or sink is None:
        raise click.UsageError("give --s and --t or terminal lines in the graph file")
    report = SignReduction().run(parsed.graph, source, sink, q, mode, schedule)
    click.echo(ReductionOut.from_domain(q, report).model_dump_json(indent=2))


def main(argv=None) -> int:
    """Entry point returning the exit status"""
    try:
        cli.main(args=argv, prog_name="tutte-sign", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return 0
