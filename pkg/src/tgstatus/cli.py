"""Command-line front end.

Exit codes: 0 success, 1 validation or bounds failure, 2 input error.
Output is byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import json
import sys
from typing import NoReturn

import click

from .finite_graph import (
    FiniteGraph,
    GraphError,
    Witness,
    enumerate_connected_graphs,
    extremal_search,
)
from .model import (
    DocumentError,
    TransfiniteGraph,
    ValidationFailed,
    load_document,
    parse_document,
    parse_finite_document,
    rank0_document,
)
from .model import validate as validate_model
from .replacement import build_replacement
from .status import StatusError, StatusReport, mu_status, status_report

EXIT_FAILURE = 1
EXIT_INPUT = 2


def _input_error(message: str) -> NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        _input_error(f"cannot read {path}: {exc.strerror or exc}")


def _load_transfinite(path: str) -> TransfiniteGraph:
    try:
        return parse_document(_read_file(path))
    except DocumentError as exc:
        _input_error(f"{path}: {exc}")


def _load_finite(path: str) -> FiniteGraph:
    try:
        return parse_finite_document(_read_file(path))
    except DocumentError as exc:
        _input_error(f"{path}: {exc}")


def _load_any(path: str) -> TransfiniteGraph | FiniteGraph:
    try:
        return load_document(_read_file(path))
    except DocumentError as exc:
        _input_error(f"{path}: {exc}")


def _validation_failure(exc: ValidationFailed) -> NoReturn:
    for violation in exc.report.violations:
        click.echo(f"{violation.condition}: {violation.message}", err=True)
    click.echo("error: validation failed", err=True)
    sys.exit(EXIT_FAILURE)


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" + ("" if n == 1 else "s")


def _ids_or_none(ids: tuple[str, ...]) -> str:
    return " ".join(ids) if ids else "(none)"


def _echo_json(obj: object) -> None:
    click.echo(json.dumps(obj, indent=2))


@click.group()
def main() -> None:
    """Statuses (sums of distances) in finite and transfinite graphs."""


@main.command("validate")
@click.argument("file")
@click.option("--walk-based", is_flag=True, help="Skip the nondisconnectable-tips check.")
def validate_command(file: str, walk_based: bool) -> None:
    """Check a transfinite document against the admissibility conditions."""
    graph = _load_transfinite(file)
    report = validate_model(graph, walk_based)
    if report.passed:
        click.echo("passed")
    else:
        click.echo(f"failed: {_count(len(report.violations), 'violation')}")
        for violation in report.violations:
            click.echo(f"{violation.condition}: {violation.message}")
    for note in report.notes:
        click.echo(f"note: {note}")
    if not report.passed:
        sys.exit(EXIT_FAILURE)


@main.command()
@click.argument("file")
@click.option("--dot", "as_dot", is_flag=True, help="Emit DOT text.")
@click.option("--json", "as_json", is_flag=True, help="Emit a rank-0 document.")
def replace(file: str, as_dot: bool, as_json: bool) -> None:
    """Build and print the replacement 0-graph of a transfinite document."""
    if as_dot and as_json:
        _input_error("--dot and --json are mutually exclusive")
    graph = _load_transfinite(file)
    try:
        result = build_replacement(graph)
    except ValidationFailed as exc:
        _validation_failure(exc)
    if as_dot:
        click.echo(result.graph.to_dot(), nl=False)
        return
    if as_json:
        _echo_json(rank0_document(result.graph))
        return
    click.echo(f"p: {result.graph.p}")
    click.echo(f"q: {result.graph.q}")
    for node in result.graph.nodes:
        if node in result.mu_node_of_node:
            click.echo(f"{node} mu-node {result.mu_node_of_node[node]}")
        elif node in result.section_of_node:
            click.echo(f"{node} section {result.section_of_node[node]}")
        else:
            click.echo(f"{node} singleton {result.singleton_of_node[node]}")
    for u, v in result.graph.edges:
        click.echo(f"{u} -- {v}")


def _report_lines(report: StatusReport, with_entries: bool = True) -> list[str]:
    lines = [
        f"rank: {report.rank}",
        f"p: {report.p}",
        f"q: {report.q}",
        f"lower: {report.lower}",
        f"upper: {report.upper}",
    ]
    if with_entries:
        for entry in report.entries:
            lines.append(f"{entry.id} {entry.kind} {entry.status}")
    lines.append(f"achieved_lower: {_ids_or_none(report.achieved_lower)}")
    lines.append(f"achieved_upper: {_ids_or_none(report.achieved_upper)}")
    if report.included_singletons:
        lines.append(f"included_singletons: {' '.join(report.included_singletons)}")
    return lines


@main.command()
@click.argument("file")
@click.option("--node", "node_id", default=None, help="Report one node's status only.")
@click.option("--walk-based", is_flag=True, help="Skip the nondisconnectable-tips check.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def status(file: str, node_id: str | None, walk_based: bool, as_json: bool) -> None:
    """Report the statuses and bounds of a transfinite document."""
    graph = _load_transfinite(file)
    try:
        report = status_report(graph, walk_based=walk_based)
    except ValidationFailed as exc:
        _validation_failure(exc)
    if node_id is not None:
        result = build_replacement(graph, walk_based=walk_based)
        try:
            value = mu_status(graph, result, node_id)
        except StatusError as exc:
            _input_error(str(exc))
        if as_json:
            _echo_json({"id": node_id, "status": str(value)})
        else:
            click.echo(str(value))
        return
    if as_json:
        _echo_json(report.to_json_obj())
    else:
        click.echo("\n".join(_report_lines(report)))


@main.command()
@click.argument("file")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def bounds(file: str, as_json: bool) -> None:
    """Print p, q, the status bounds and which nodes achieve them."""
    doc = _load_any(file)
    if isinstance(doc, FiniteGraph):
        try:
            result = doc.status_bounds()
            statuses = {node: doc.status(node) for node in doc.nodes}
        except GraphError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_FAILURE)
        achieved_lower = tuple(n for n in doc.nodes if statuses[n] == result.lower)
        achieved_upper = tuple(n for n in doc.nodes if statuses[n] == result.upper)
        if as_json:
            _echo_json(
                {
                    "rank": 0,
                    "p": result.p,
                    "q": result.q,
                    "lower": result.lower,
                    "upper": result.upper,
                    "achieved_lower": list(achieved_lower),
                    "achieved_upper": list(achieved_upper),
                }
            )
        else:
            click.echo(
                "\n".join(
                    [
                        "rank: 0",
                        f"p: {result.p}",
                        f"q: {result.q}",
                        f"lower: {result.lower}",
                        f"upper: {result.upper}",
                        f"achieved_lower: {_ids_or_none(achieved_lower)}",
                        f"achieved_upper: {_ids_or_none(achieved_upper)}",
                    ]
                )
            )
        return
    try:
        report = status_report(doc)
    except ValidationFailed as exc:
        _validation_failure(exc)
    if as_json:
        obj = report.to_json_obj()
        del obj["nodes"]
        _echo_json(obj)
    else:
        click.echo("\n".join(_report_lines(report, with_entries=False)))


@main.command("ejs-check")
@click.argument("file")
def ejs_check(file: str) -> None:
    """Verify the status bounds for every node of a rank-0 document."""
    graph = _load_finite(file)
    if not graph.is_connected():
        click.echo("violation: graph is not connected")
        sys.exit(EXIT_FAILURE)
    result = graph.status_bounds()
    click.echo(f"p: {result.p}")
    click.echo(f"q: {result.q}")
    click.echo(f"lower: {result.lower}")
    click.echo(f"upper: {result.upper}")
    violations = 0
    for node in graph.nodes:
        s = graph.status(node)
        if not result.lower <= s <= result.upper:
            click.echo(f"violation: node {node} status {s} outside [{result.lower}, {result.upper}]")
            violations += 1
    click.echo(f"checked {_count(graph.p, 'node')}, {_count(violations, 'violation')}")
    if violations:
        sys.exit(EXIT_FAILURE)


@main.command("verify-ejs")
@click.option("--max-p", "max_p", type=int, required=True, help="Largest node count (<= 7).")
def verify_ejs(max_p: int) -> None:
    """Exhaustively verify the status bounds on all small connected graphs."""
    if not 1 <= max_p <= 7:
        _input_error(f"--max-p must be between 1 and 7, got {max_p}")
    total_graphs = 0
    total_violations = 0
    for p in range(1, max_p + 1):
        graphs = 0
        violations = 0
        for graph in enumerate_connected_graphs(p):
            graphs += 1
            result = graph.status_bounds()
            for node in graph.nodes:
                s = graph.status(node)
                if not result.lower <= s <= result.upper:
                    violations += 1
        click.echo(f"p={p}: {_count(graphs, 'graph')}, {_count(violations, 'violation')}")
        total_graphs += graphs
        total_violations += violations
    click.echo(f"checked {_count(total_graphs, 'graph')}, {_count(total_violations, 'violation')}")
    if total_violations:
        sys.exit(EXIT_FAILURE)


def _witness_obj(witness: Witness) -> dict[str, object]:
    return {
        "status": witness.status,
        "node": witness.node,
        "nodes": list(witness.graph.nodes),
        "edges": [list(pair) for pair in witness.graph.edges],
    }


def _witness_line(label: str, witness: Witness) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in witness.graph.edges)
    return f"{label}: {witness.status} at {witness.node} in graph {edges}"


@main.command()
@click.option("--p", "p", type=int, required=True, help="Node count.")
@click.option("--q", "q", type=int, required=True, help="Edge count.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def extremal(p: int, q: int, as_json: bool) -> None:
    """Search for nodes achieving the lower and upper status bound."""
    try:
        lower_witness, upper_witness = extremal_search(p, q)
    except GraphError as exc:
        _input_error(str(exc))
    if as_json:
        _echo_json(
            {
                "p": p,
                "q": q,
                "lower": _witness_obj(lower_witness),
                "upper": _witness_obj(upper_witness),
            }
        )
    else:
        click.echo(f"p: {p}")
        click.echo(f"q: {q}")
        click.echo(_witness_line("lower", lower_witness))
        click.echo(_witness_line("upper", upper_witness))


if __name__ == "__main__":
    main()
