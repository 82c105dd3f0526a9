"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 verification failed, 3 budget exceeded.
Results go to stdout, logs and diagnostics to stderr.
"""
import functools
import json
import logging
import sys
from pathlib import Path
from typing import Optional

import click

from app.core.config import settings
from app.core.errors import BudgetExceededError, DomainError
from app.core.logging import configure_logging
from app.models.chemgraph import Family, MolecularGraph
from app.models.polynomial import BivariatePolynomial, parse_polynomial
from app.schemas.polynomial import PolynomialResponse
from app.services.catalogue_service import search_benzenoids
from app.services.cube_service import embedding_to_schema, find_qkl_embeddings
from app.services.resonance_service import export_resonance_graph, resonance_to_dot
from app.services.structure_service import StructureService
from app.services.verification_service import VerificationService, summarize

logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_FAILED = 2
EXIT_BUDGET = 3


def handle_errors(command):
    """Translate domain errors into the documented exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BudgetExceededError as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_BUDGET)
        except DomainError as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_INVALID)
    return wrapper


def structure_source(command):
    """Input selection shared by every command that reads a structure."""
    command = click.argument("path", required=False, type=click.Path(exists=True, dir_okay=False, path_type=Path))(command)
    command = click.option("--preset", help="Preset name, e.g. linear:3, zigzag:4, tube:2,2,1, c20.")(command)
    command = click.option(
        "--format", "family",
        type=click.Choice([f.value for f in Family]),
        help="Input format; detected from the file suffix or contents when omitted.",
    )(command)
    return command


def budget_options(command):
    command = click.option("--threads", type=click.IntRange(min=1), help="Worker cap for subgraph search.")(command)
    command = click.option("--max-vertices", type=click.IntRange(min=1), help="Molecular-graph vertex budget.")(command)
    command = click.option(
        "--max-resonance-vertices", type=click.IntRange(min=1), help="Resonance-graph vertex budget."
    )(command)
    return command


def _load(path: Optional[Path], preset: Optional[str], family: Optional[str]) -> MolecularGraph:
    service = StructureService()
    return service.build(service.resolve(preset=preset, path=path, family=Family(family) if family else None))


def _print_polynomial(polynomial, g: MolecularGraph, as_json: bool) -> None:
    if as_json:
        click.echo(PolynomialResponse.from_polynomial(polynomial, summarize(g)).model_dump_json(indent=2))
    else:
        click.echo(str(polynomial))


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from LOG_LEVEL).")
def cli(log_level: Optional[str]):
    """Generalized Zhang-Zhang and cube polynomials of benzenoids, tubulenes and fullerenes."""
    configure_logging(log_level or settings.LOG_LEVEL)


@cli.command()
@structure_source
@click.option("--max-vertices", type=click.IntRange(min=1), help="Molecular-graph vertex budget.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of the polynomial string.")
@handle_errors
def gzz(path, preset, family, max_vertices, as_json):
    """Generalized Zhang-Zhang polynomial of a structure."""
    g = _load(path, preset, family)
    _print_polynomial(VerificationService(g, max_vertices).gzz(), g, as_json)


@cli.command()
@structure_source
@click.option("--max-vertices", type=click.IntRange(min=1), help="Molecular-graph vertex budget.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of the polynomial string.")
@handle_errors
def zz(path, preset, family, max_vertices, as_json):
    """Classic Zhang-Zhang polynomial (the y = 0 slice)."""
    g = _load(path, preset, family)
    _print_polynomial(VerificationService(g, max_vertices).gzz().y0_slice(), g, as_json)


@cli.command()
@structure_source
@budget_options
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of the polynomial string.")
@click.option("--subgraphs", is_flag=True, help="Also list every convex Q_{k,l} found, as JSON.")
@handle_errors
def gc(path, preset, family, threads, max_vertices, max_resonance_vertices, as_json, subgraphs):
    """Generalized cube polynomial of the resonance graph."""
    g = _load(path, preset, family)
    service = VerificationService(g, max_vertices, max_resonance_vertices, threads)
    polynomial = service.gc()
    if not subgraphs:
        _print_polynomial(polynomial, g, as_json)
        return
    r = service.resonance_graph()
    listing = [
        embedding_to_schema(e).model_dump()
        for k, l in polynomial.terms
        for e in find_qkl_embeddings(r, k, l, convex=True, workers=service.threads)
    ]
    click.echo(json.dumps({"polynomial": str(polynomial), "subgraphs": listing}, indent=2))


@cli.command()
@structure_source
@budget_options
@click.option("--json", "as_json", is_flag=True, help="Print the full run report as JSON.")
@handle_errors
def verify(path, preset, family, threads, max_vertices, max_resonance_vertices, as_json):
    """Check GZZ = GC, the cover/subgraph bijection and the 4-cycle labelling."""
    g = _load(path, preset, family)
    report = VerificationService(g, max_vertices, max_resonance_vertices, threads).run()
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(f"GZZ = {BivariatePolynomial.from_json(report.gzz)}")
        click.echo(f"GC  = {BivariatePolynomial.from_json(report.gc)}")
        click.echo(f"equal: {str(report.equal).lower()}")
        if report.bijection:
            click.echo(f"bijection: {'pass' if report.bijection.passed else 'FAIL'} ({len(report.bijection.shapes)} shape classes)")
        if report.four_cycles:
            click.echo(f"4-cycles: {'pass' if report.four_cycles.passed else 'FAIL'} ({report.four_cycles.cycles} cycles)")
    if report.passed:
        return
    # the JSON report already carries the counterexamples
    if not as_json:
        failure = {
            "equal": report.equal,
            "bijection": report.bijection.counterexample if report.bijection else None,
            "four_cycles": report.four_cycles.counterexample if report.four_cycles else None,
        }
        click.echo(json.dumps({"counterexample": failure}, indent=2))
    sys.exit(EXIT_FAILED)


@cli.command()
@click.argument("name")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), help="Write to this file instead of stdout.")
@handle_errors
def gen(name, output):
    """Write the canonical input file of a preset."""
    service = StructureService()
    structure = service.resolve(preset=name)
    service.build(structure)
    if output is None:
        click.echo(service.structure_repo.serialize(structure), nl=False)
    else:
        service.structure_repo.save(output, structure)


@cli.command()
@structure_source
@click.option("--max-vertices", type=click.IntRange(min=1), help="Molecular-graph vertex budget.")
@click.option("--max-resonance-vertices", type=click.IntRange(min=1), help="Resonance-graph vertex budget.")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False, path_type=Path), help="Write DOT to this file.")
@click.option("--json", "as_json", is_flag=True, help="Print the JSON export on stdout.")
@handle_errors
def resgraph(path, preset, family, max_vertices, max_resonance_vertices, dot_path, as_json):
    """Export the resonance graph as DOT and/or JSON (DOT on stdout by default)."""
    g = _load(path, preset, family)
    service = VerificationService(g, max_vertices, max_resonance_vertices)
    r = service.resonance_graph()
    if dot_path is not None:
        dot_path.write_text(resonance_to_dot(r))
        logger.info(f"Wrote resonance graph to {dot_path}")
    if as_json:
        click.echo(export_resonance_graph(r, service.matchings()).model_dump_json(indent=2))
    elif dot_path is None:
        click.echo(resonance_to_dot(r), nl=False)


@cli.command()
@click.argument("polynomial")
@click.option("--max-hexagons", default=6, show_default=True, type=click.IntRange(min=1))
@handle_errors
def search(polynomial, max_hexagons):
    """Find catalogue benzenoids whose GZZ polynomial equals POLYNOMIAL."""
    target = parse_polynomial(polynomial)
    matches = search_benzenoids(target, max_hexagons)
    if not matches:
        click.echo(f"no benzenoid with at most {max_hexagons} hexagons has GZZ = {target}", err=True)
        sys.exit(EXIT_INVALID)
    for hexagons in matches:
        click.echo(" ".join(f"{h.q},{h.r}" for h in hexagons))


if __name__ == "__main__":
    cli()
