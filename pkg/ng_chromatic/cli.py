"""CLI interface for Nordhaus-Gaddum chromatic checks."""

import json
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, List, NoReturn, Optional, Tuple

import typer
import yaml
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ng_chromatic.coloring import (
    VariantKind,
    validate_coloring,
    variant_chromatic,
    variant_target,
)
from ng_chromatic.constructions import FamilyError, FamilySpec, build, vertex_labels
from ng_chromatic.enhanced_logger import logger
from ng_chromatic.formats import (
    EdgeListError,
    Graph6Error,
    export_dot,
    parse_edge_list,
    parse_graph6,
    read_graph6_stream,
    write_edge_list,
    write_graph6,
)
from ng_chromatic.graph import Graph, GraphError, complement
from ng_chromatic.verify import (
    DEFAULT_CHUNK_SIZE,
    MAX_ENUMERATION_ORDER,
    SweepError,
    check_theorems,
    default_workers,
    evaluate_graph,
    labeled_count,
    sweep,
    sweep_constructions,
)

EXIT_VIOLATION = 1
EXIT_UNREADABLE = 3
EXIT_MALFORMED = 4
EXIT_INVALID_PARAMETER = 5

# Undecodable bytes are reported like any other malformed record.
MALFORMED_INPUT = (Graph6Error, EdgeListError, GraphError, UnicodeDecodeError)


class OutputFormat(str, Enum):
    """Output format options."""

    TABLE = "table"
    JSON = "json"
    YAML = "yaml"


class VariantChoice(str, Enum):
    """Variant names accepted by ``compute --variant``."""

    PROPER = "proper"
    TWO_PROPER = "two-proper"
    INJECTIVE = "injective"
    SQUARE = "square"
    ALL = "all"


class GraphFormat(str, Enum):
    """Graph text formats accepted by ``convert``."""

    G6 = "g6"
    EDGES = "edges"
    DOT = "dot"


app = typer.Typer(help="Exact chromatic variants and Nordhaus-Gaddum bound checks")


@app.callback()
def callback(
    ctx: typer.Context,
    debug: bool = typer.Option(
        False,
        "--debug",
        envvar="NGC_DEBUG",
        help="Enable debug mode with additional logging (env: NGC_DEBUG)",
    ),
    output: OutputFormat = typer.Option(
        OutputFormat.TABLE,
        "--output",
        "-o",
        envvar="NGC_OUTPUT_FORMAT",
        help="Output format (table, json, or yaml) (env: NGC_OUTPUT_FORMAT)",
    ),
):
    """Set up output and logging."""
    logger.set_debug(debug)
    if debug:
        logger.debug("Debug mode enabled")

    ctx.obj = {"output_format": output, "debug": debug}


def handle_error(error_msg: str, output_format: OutputFormat) -> None:
    """Report an error in the selected output format."""
    if output_format == OutputFormat.TABLE:
        logger.error(escape(error_msg))
    elif output_format == OutputFormat.JSON:
        print(json.dumps({"error": error_msg}))
    elif output_format == OutputFormat.YAML:
        print(yaml.dump({"error": error_msg}))


def fail(error_msg: str, output_format: OutputFormat, code: int) -> NoReturn:
    handle_error(error_msg, output_format)
    sys.exit(code)


def output_document(data: Dict[str, Any], output_format: OutputFormat) -> None:
    """Print a machine-readable document in JSON or YAML mode."""
    if output_format == OutputFormat.JSON:
        print(json.dumps(data, indent=2))
    elif output_format == OutputFormat.YAML:
        print(yaml.dump(data, sort_keys=False))


def read_text(path: str) -> str:
    """Read a file, or standard input for ``-``."""
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def selected_variants(choices: Optional[List[VariantChoice]], everything: bool) -> List[VariantKind]:
    if everything or not choices or VariantChoice.ALL in choices:
        return list(VariantKind)
    return [VariantKind(choice.value) for choice in dict.fromkeys(choices)]


def collect_graphs(
    g6: List[str], edges: Optional[str], file: Optional[str]
) -> Iterator[Tuple[str, Graph]]:
    """Yield ``(source, graph)`` for every input given to ``compute``."""
    for record in g6:
        yield record, parse_graph6(record)
    if edges is not None:
        yield edges, parse_edge_list(read_text(edges))
    if file is not None:
        source = "stdin" if file == "-" else file
        for line_no, g in read_graph6_stream(read_text(file)):
            yield f"{source}:{line_no}", g


def certificate_document(g: Graph, kind: VariantKind, verify: bool) -> Dict[str, Any]:
    """Optimal colorings of one variant on both sides, optionally replayed."""
    document: Dict[str, Any] = {}
    for side, graph in (("g", g), ("complement", complement(g))):
        result = variant_chromatic(graph, kind)
        entry = result.to_dict()
        if verify:
            valid = validate_coloring(variant_target(graph, kind), result.assignment)
            entry["certificate_valid"] = valid
            if not valid:
                raise RuntimeError(f"{kind.value} certificate failed validation on {side}")
        document[side] = entry
    return document


@app.command("compute")
def compute(
    ctx: typer.Context,
    g6: List[str] = typer.Option(
        [], "--g6", help="graph6 record (repeatable)"
    ),
    edges: Optional[str] = typer.Option(
        None, "--edges", help="Edge-list file ('-' for stdin)"
    ),
    file: Optional[str] = typer.Option(
        None, "--file", "-f", help="graph6 file, one record per line ('-' for stdin)"
    ),
    variant: Optional[List[VariantChoice]] = typer.Option(
        None,
        "--variant",
        envvar="NGC_VARIANTS",
        help="Variant certificates to report (repeatable, default all) (env: NGC_VARIANTS)",
    ),
    everything: bool = typer.Option(False, "--all", help="Report every variant"),
    verify_certificates: bool = typer.Option(
        False, "--verify-certificates", help="Replay every certificate against its graph"
    ),
):
    """Compute all parameters of each graph and its complement, then check every bound."""
    output_format = ctx.obj["output_format"]
    if not g6 and edges is None and file is None:
        raise typer.BadParameter("Provide at least one of --g6, --edges or --file")
    kinds = selected_variants(variant, everything)

    documents = []
    violations = 0
    try:
        for source, g in collect_graphs(g6, edges, file):
            logger.debug(f"Evaluating {escape(source)} (n = {g.order})")
            profile = evaluate_graph(g)
            report = check_theorems(profile)
            violations += len(report.violations)
            certificates = {
                kind.value: certificate_document(g, kind, verify_certificates) for kind in kinds
            }

            if output_format == OutputFormat.TABLE:
                logger.print_profile(profile.to_dict())
                logger.print_report([r.to_dict() for r in report.results])
                logger.print_certificates(certificates)
                if verify_certificates:
                    logger.success(f"{len(kinds)} certificate pair(s) verified")
            else:
                documents.append(
                    {
                        "source": source,
                        **profile.to_dict(),
                        "checks": [r.to_dict() for r in report.results],
                        "certificates": certificates,
                    }
                )
    except OSError as e:
        fail(f"Error reading input: {str(e)}", output_format, EXIT_UNREADABLE)
    except MALFORMED_INPUT as e:
        fail(f"Malformed graph record: {str(e)}", output_format, EXIT_MALFORMED)
    except RuntimeError as e:
        fail(str(e), output_format, EXIT_VIOLATION)

    output_document({"graphs": documents, "violation_count": violations}, output_format)
    if violations:
        if output_format == OutputFormat.TABLE:
            logger.error(f"{violations} violation(s) found")
        sys.exit(EXIT_VIOLATION)


@app.command("construct")
def construct(
    ctx: typer.Context,
    tokens: List[str] = typer.Argument(..., help="Family name followed by its parameters"),
    as_g6: bool = typer.Option(False, "--g6", help="Emit graph6 (default)"),
    as_dot: bool = typer.Option(False, "--dot", help="Emit DOT"),
    as_edges: bool = typer.Option(False, "--edges", help="Emit an edge list"),
    color: Optional[VariantChoice] = typer.Option(
        None, "--color", help="Fill DOT vertices with an optimal coloring of this variant"
    ),
):
    """Build a named graph family."""
    output_format = ctx.obj["output_format"]
    if as_g6 + as_dot + as_edges > 1:
        raise typer.BadParameter("Choose at most one of --g6, --dot, --edges")
    if color == VariantChoice.ALL:
        raise typer.BadParameter("--color takes a single variant")

    try:
        spec = FamilySpec.parse(tokens)
        g = build(spec)
        if as_dot:
            coloring = None
            if color is not None:
                coloring = variant_chromatic(g, VariantKind(color.value)).assignment
            text = export_dot(g, vertex_labels(spec), coloring, name=str(spec))
            kind = GraphFormat.DOT
        elif as_edges:
            text = write_edge_list(g)
            kind = GraphFormat.EDGES
        else:
            text = write_graph6(g) + "\n"
            kind = GraphFormat.G6
    except (FamilyError, GraphError, Graph6Error) as e:
        fail(f"Invalid family: {str(e)}", output_format, EXIT_INVALID_PARAMETER)

    if output_format == OutputFormat.TABLE:
        sys.stdout.write(text)
    else:
        output_document(
            {"family": str(spec), "order": g.order, "format": kind.value, "data": text},
            output_format,
        )


def sweep_orders(
    order: Optional[int], min_order: Optional[int], max_order: Optional[int], file: Optional[str]
) -> Optional[List[int]]:
    """Resolve the order flags; None means a stream sweep."""
    if order is not None and (min_order is not None or max_order is not None):
        raise typer.BadParameter("--order cannot be combined with --min-order/--max-order")
    ranged = order is not None or min_order is not None or max_order is not None
    if ranged == (file is not None):
        raise typer.BadParameter("Provide exactly one of --order, --min-order/--max-order or --file")
    if file is not None:
        return None
    if order is not None:
        return [order]
    low = 1 if min_order is None else min_order
    high = min_order if max_order is None else max_order
    return list(range(low, high + 1))


@app.command("sweep")
def sweep_command(
    ctx: typer.Context,
    order: Optional[int] = typer.Option(None, "--order", "-n", help="Sweep one order"),
    min_order: Optional[int] = typer.Option(None, "--min-order", help="Lowest order of a range"),
    max_order: Optional[int] = typer.Option(None, "--max-order", help="Highest order of a range (default: --min-order)"),
    file: Optional[str] = typer.Option(
        None, "--file", "-f", help="graph6 file to sweep instead ('-' for stdin)"
    ),
    workers: Optional[int] = typer.Option(
        None,
        "--workers",
        "-w",
        envvar="NGC_WORKERS",
        help="Worker processes (default: available CPUs, at most 32) (env: NGC_WORKERS)",
    ),
    chunk_size: int = typer.Option(
        DEFAULT_CHUNK_SIZE,
        "--chunk-size",
        envvar="NGC_CHUNK_SIZE",
        help="Graphs per work unit (env: NGC_CHUNK_SIZE)",
    ),
):
    """Check every bound on every labeled graph of the given orders."""
    output_format = ctx.obj["output_format"]
    orders = sweep_orders(order, min_order, max_order, file)
    worker_count = default_workers() if workers is None else workers

    try:
        stream = read_text(file).splitlines() if file is not None else None
        if output_format == OutputFormat.TABLE:
            source = file if file is not None else f"orders {orders}"
            logger.status(f"Sweeping {escape(source)} with {worker_count} worker(s)...")
            if orders and max(orders) == MAX_ENUMERATION_ORDER:
                logger.warning(
                    f"Order {MAX_ENUMERATION_ORDER} has {labeled_count(MAX_ENUMERATION_ORDER)} labeled graphs; "
                    "this sweep takes hours"
                )
            with Progress(
                TextColumn("[cyan]Sweeping"),
                BarColumn(),
                MofNCompleteColumn(),
                console=logger.console,
                transient=True,
            ) as bar:
                task = bar.add_task("sweep", total=None)

                def advance(completed: int, total: Optional[int]) -> None:
                    bar.update(task, completed=completed, total=total)

                summary = sweep(orders, stream, worker_count, chunk_size, advance)
        else:
            summary = sweep(orders, stream, worker_count, chunk_size)
    except OSError as e:
        fail(f"Error reading input: {str(e)}", output_format, EXIT_UNREADABLE)
    except (Graph6Error, UnicodeDecodeError) as e:
        fail(f"Malformed graph record: {str(e)}", output_format, EXIT_MALFORMED)
    except SweepError as e:
        fail(f"Invalid sweep parameter: {str(e)}", output_format, EXIT_INVALID_PARAMETER)

    if output_format == OutputFormat.TABLE:
        logger.print_sweep_summary(summary.to_dict())
    else:
        output_document(summary.to_dict(), output_format)
    if summary.violation_count:
        sys.exit(EXIT_VIOLATION)


def decode_records(text: str, source: GraphFormat) -> List[Graph]:
    if source == GraphFormat.EDGES:
        return [parse_edge_list(text)]
    return [g for _, g in read_graph6_stream(text)]


def encode_record(g: Graph, target: GraphFormat) -> str:
    if target == GraphFormat.G6:
        return write_graph6(g) + "\n"
    if target == GraphFormat.EDGES:
        return write_edge_list(g)
    return export_dot(g)


@app.command("convert")
def convert(
    ctx: typer.Context,
    input_path: str = typer.Argument(..., metavar="INPUT", help="Input file ('-' for stdin)"),
    source: GraphFormat = typer.Option(GraphFormat.G6, "--from", help="Input format (g6 or edges)"),
    target: GraphFormat = typer.Option(GraphFormat.EDGES, "--to", help="Output format"),
):
    """Transcode between graph6, edge-list and DOT."""
    output_format = ctx.obj["output_format"]
    if source == GraphFormat.DOT:
        raise typer.BadParameter("DOT is an output-only format")

    try:
        records = [encode_record(g, target) for g in decode_records(read_text(input_path), source)]
    except OSError as e:
        fail(f"Error reading input: {str(e)}", output_format, EXIT_UNREADABLE)
    except MALFORMED_INPUT as e:
        fail(f"Malformed graph record: {str(e)}", output_format, EXIT_MALFORMED)

    if output_format == OutputFormat.TABLE:
        sys.stdout.write("".join(records))
    else:
        output_document({"format": target.value, "records": records}, output_format)


@app.command("check-families")
def check_families(ctx: typer.Context):
    """Confirm that each constructed family attains the bound it is built for."""
    output_format = ctx.obj["output_format"]

    if output_format == OutputFormat.TABLE:
        logger.status("Evaluating extremal constructions...")
    outcomes = sweep_constructions()
    failed = [o for o in outcomes if not o.result.extremal]

    if output_format == OutputFormat.TABLE:
        logger.print_constructions([o.to_dict() for o in outcomes])
        if failed:
            logger.error(f"{len(failed)} construction(s) did not attain their bound")
        else:
            logger.success(f"All {len(outcomes)} constructions attain their bound")
    else:
        output_document(
            {"constructions": [o.to_dict() for o in outcomes], "failed_count": len(failed)},
            output_format,
        )
    if failed:
        sys.exit(EXIT_VIOLATION)


if __name__ == "__main__":
    app()
