"""Replacement of a transfinite graph by a finite 0-graph.

Each nonsingleton mu-node becomes a 0-node, each section is collapsed to
a 0-node standing for its representative, and one branch joins them per
incidence, so every section turns into a star centered at its
representative.  An optionally included singleton mu-node becomes a leaf
attached to the center of its home section.  Hop distances in the result,
scaled by w^mu, reproduce the transfinite distances of the source graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .finite_graph import FiniteGraph
from .model import TransfiniteGraph, ValidationFailed, validate
from .ordinal import Ordinal, omega_term

__all__ = [
    "AbstractPath",
    "PathError",
    "ReplacementResult",
    "build_replacement",
    "iter_simple_paths",
    "path_mu_length",
    "translate_path",
    "verify_length_relation",
]


class PathError(ValueError):
    """A path is inconsistent with the graph it is evaluated against."""


@dataclass(frozen=True)
class AbstractPath:
    """A path at section / mu-node granularity.

    Elements alternate between section ids and mu-node ids, consecutive
    elements are incident, and no element repeats.  Travel inside a
    section is free, so this granularity captures everything that
    contributes to a transfinite length.
    """

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))


@dataclass(frozen=True)
class ReplacementResult:
    """A finite 0-graph plus the correspondence with its source graph."""

    graph: FiniteGraph
    node_of_mu_node: dict[str, str]
    node_of_section: dict[str, str]
    node_of_singleton: dict[str, str]
    mu_node_of_node: dict[str, str]
    section_of_node: dict[str, str]
    singleton_of_node: dict[str, str]


def build_replacement(
    graph: TransfiniteGraph, *, walk_based: bool = False
) -> ReplacementResult:
    """Construct the replacement 0-graph of a validated transfinite graph.

    0-nodes reuse source identifiers: a nonsingleton mu-node keeps its
    id, a section is represented by its representative's id, an included
    singleton keeps its id.  Nodes are ordered mu-nodes first, then
    sections, then singletons, each in declaration order.  Raises
    ValidationFailed when validation (in the given mode) does not pass.
    """
    report = validate(graph, walk_based)
    if not report.passed:
        raise ValidationFailed(report)

    nodes: list[str] = []
    node_of_mu_node: dict[str, str] = {}
    for mu_node in graph.nonsingleton_mu_nodes:
        node_of_mu_node[mu_node.id] = mu_node.id
        nodes.append(mu_node.id)
    node_of_section: dict[str, str] = {}
    for section in graph.sections:
        node_of_section[section.id] = section.representative
        nodes.append(section.representative)
    node_of_singleton: dict[str, str] = {}
    for mu_id in graph.include_singletons:
        node_of_singleton[mu_id] = mu_id
        nodes.append(mu_id)

    edges: list[tuple[str, str]] = []
    for section in graph.sections:
        center = node_of_section[section.id]
        for mu_node in graph.nonsingleton_mu_nodes:
            if section.id in mu_node.incident_sections:
                edges.append((center, node_of_mu_node[mu_node.id]))
    for mu_id in graph.include_singletons:
        home = graph.mu_node(mu_id).tips[0].section
        edges.append((node_of_section[home], node_of_singleton[mu_id]))

    return ReplacementResult(
        graph=FiniteGraph(nodes, edges),
        node_of_mu_node=node_of_mu_node,
        node_of_section=node_of_section,
        node_of_singleton=node_of_singleton,
        mu_node_of_node={v: k for k, v in node_of_mu_node.items()},
        section_of_node={v: k for k, v in node_of_section.items()},
        singleton_of_node={v: k for k, v in node_of_singleton.items()},
    )


def _resolve_elements(
    graph: TransfiniteGraph, path: AbstractPath
) -> list[tuple[str, str]]:
    """Classify path elements as ('section' | 'mu', id) and check validity."""
    if not path.elements:
        raise PathError("a path needs at least one element")
    resolved: list[tuple[str, str]] = []
    seen: set[str] = set()
    for element in path.elements:
        if element in seen:
            raise PathError(f"element {element!r} repeats; paths are simple")
        seen.add(element)
        if graph.has_section(element):
            resolved.append(("section", element))
        elif graph.has_mu_node(element):
            resolved.append(("mu", element))
        else:
            raise PathError(f"element {element!r} is neither a section nor a mu-node")
    for (kind_a, id_a), (kind_b, id_b) in zip(resolved, resolved[1:]):
        if kind_a == kind_b:
            raise PathError(
                f"consecutive elements {id_a!r} and {id_b!r} do not alternate "
                "between sections and mu-nodes"
            )
        mu_id, section_id = (id_a, id_b) if kind_a == "mu" else (id_b, id_a)
        if section_id not in graph.mu_node(mu_id).incident_sections:
            raise PathError(f"mu-node {mu_id!r} is not incident to section {section_id!r}")
    return resolved


def path_mu_length(graph: TransfiniteGraph, path: AbstractPath) -> Ordinal:
    """The transfinite length w^mu * n of a path.

    n counts incidences with mu-nodes: one for a terminal mu-node entry,
    two for an interior one.  A single-element path has length 0.
    """
    resolved = _resolve_elements(graph, path)
    if len(resolved) == 1:
        return omega_term(graph.rank, 0)
    last = len(resolved) - 1
    incidences = 0
    for position, (kind, _) in enumerate(resolved):
        if kind == "mu":
            incidences += 1 if position in (0, last) else 2
    return omega_term(graph.rank, incidences)


def translate_path(result: ReplacementResult, path: AbstractPath) -> list[str]:
    """The corresponding 0-node sequence in the replacement graph.

    Its branch count equals the incidence count of the source path.
    Fails on elements without a 0-node counterpart, in particular on
    singleton mu-nodes that were not included in the replacement.
    """
    if not path.elements:
        raise PathError("a path needs at least one element")
    sequence: list[str] = []
    for element in path.elements:
        if element in result.node_of_mu_node:
            sequence.append(result.node_of_mu_node[element])
        elif element in result.node_of_section:
            sequence.append(result.node_of_section[element])
        elif element in result.node_of_singleton:
            sequence.append(result.node_of_singleton[element])
        else:
            raise PathError(
                f"element {element!r} has no replacement 0-node (unknown id or a "
                "singleton mu-node that is not included)"
            )
    if len(set(sequence)) != len(sequence):
        raise PathError("path visits a 0-node twice")
    for u, v in zip(sequence, sequence[1:]):
        if not result.graph.has_edge(u, v):
            raise PathError(f"0-nodes {u!r} and {v!r} are not adjacent")
    return sequence


def verify_length_relation(
    graph: TransfiniteGraph, result: ReplacementResult, path: AbstractPath
) -> bool:
    """Whether the path length equals w^mu times its 0-image's length."""
    branches = len(translate_path(result, path)) - 1
    return path_mu_length(graph, path) == omega_term(graph.rank, 1).scale(branches)


def iter_simple_paths(
    graph: TransfiniteGraph, *, include_trivial: bool = False
) -> Iterator[AbstractPath]:
    """Enumerate every simple path over sections, nonsingleton mu-nodes
    and included singletons, in deterministic order.

    Both orientations of each path are produced.  Intended for
    desk-scale instances; the count grows quickly with density.
    """
    elements: list[str] = [m.id for m in graph.nonsingleton_mu_nodes]
    elements += [section.id for section in graph.sections]
    elements += list(graph.include_singletons)
    adjacency: dict[str, list[str]] = {element: [] for element in elements}
    for mu_node in graph.nonsingleton_mu_nodes:
        for home in mu_node.incident_sections:
            adjacency[mu_node.id].append(home)
            adjacency[home].append(mu_node.id)
    for mu_id in graph.include_singletons:
        home = graph.mu_node(mu_id).tips[0].section
        adjacency[mu_id].append(home)
        adjacency[home].append(mu_id)

    def extend(trail: list[str]) -> Iterator[AbstractPath]:
        if len(trail) >= 2 or include_trivial:
            yield AbstractPath(tuple(trail))
        for neighbor in adjacency[trail[-1]]:
            if neighbor not in trail:
                trail.append(neighbor)
                yield from extend(trail)
                trail.pop()

    for start in elements:
        yield from extend([start])
