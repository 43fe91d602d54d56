"""Transfinite distances, geodesics, statuses and their bounds.

All quantities are computed through the replacement 0-graph: the
distance between two nodes is w^mu times the hop distance between their
0-nodes, any internal node of a section stands at its representative's
0-node, and the status of a node is the ordinal sum of its distances to
every nonsingleton mu-node and every section representative (plus any
included singletons).  With p 0-nodes and q branches every status lies
in [w^mu*(p-1), w^mu*((p-1)(p+2)/2 - q)].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

from .finite_graph import status_bounds_values
from .model import TransfiniteGraph, ValidationFailed, validate
from .ordinal import Ordinal, omega_term
from .replacement import AbstractPath, ReplacementResult, build_replacement

__all__ = [
    "KIND_INCLUDED_SINGLETON",
    "KIND_MU_NODE",
    "KIND_SECTION_REPRESENTATIVE",
    "MuBounds",
    "StatusEntry",
    "StatusError",
    "StatusReport",
    "geodesic",
    "mu_distance",
    "mu_status",
    "mu_status_bounds",
    "status_report",
]

KIND_MU_NODE = "mu-node"
KIND_SECTION_REPRESENTATIVE = "section-representative"
KIND_INCLUDED_SINGLETON = "included-singleton"


class StatusError(ValueError):
    """A distance or status query that cannot be answered."""


class MuBounds(NamedTuple):
    lower: Ordinal
    upper: Ordinal
    p: int
    q: int


@dataclass(frozen=True)
class StatusEntry:
    id: str
    kind: str
    status: Ordinal


@dataclass(frozen=True)
class StatusReport:
    """Statuses of every nonsingleton mu-node and section representative,
    together with the bounds they are guaranteed to satisfy."""

    rank: int
    p: int
    q: int
    lower: Ordinal
    upper: Ordinal
    entries: tuple[StatusEntry, ...]
    achieved_lower: tuple[str, ...]
    achieved_upper: tuple[str, ...]
    included_singletons: tuple[str, ...] = ()

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "rank": self.rank,
            "p": self.p,
            "q": self.q,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "nodes": [
                {"id": entry.id, "kind": entry.kind, "status": str(entry.status)}
                for entry in self.entries
            ],
            "achieved_lower": list(self.achieved_lower),
            "achieved_upper": list(self.achieved_upper),
        }
        if self.included_singletons:
            obj["included_singletons"] = list(self.included_singletons)
        return obj


def _resolve_target(
    graph: TransfiniteGraph, result: ReplacementResult, node_id: str
) -> str:
    """0-node standing for node_id when used as a distance endpoint."""
    if node_id in result.node_of_mu_node:
        return result.node_of_mu_node[node_id]
    home = graph.section_of_internal(node_id)
    if home is not None:
        return result.node_of_section[home.id]
    if node_id in result.node_of_singleton:
        return result.node_of_singleton[node_id]
    if graph.has_mu_node(node_id):
        raise StatusError(
            f"no path-based distance exists for singleton mu-node {node_id!r}; "
            "it is not included in the replacement"
        )
    raise StatusError(f"unknown node id {node_id!r}")


def _resolve_source(
    graph: TransfiniteGraph, result: ReplacementResult, node_id: str
) -> str:
    """0-node for a status source: a nonsingleton mu-node or internal node."""
    if node_id in result.node_of_mu_node:
        return result.node_of_mu_node[node_id]
    home = graph.section_of_internal(node_id)
    if home is not None:
        return result.node_of_section[home.id]
    if graph.has_mu_node(node_id):
        raise StatusError(
            f"status is defined only for nonsingleton nodes; {node_id!r} is a "
            "singleton mu-node"
        )
    raise StatusError(f"unknown node id {node_id!r}")


def _target_nodes(graph: TransfiniteGraph, result: ReplacementResult) -> list[str]:
    """0-nodes summed over by a status, in deterministic order."""
    targets = [result.node_of_mu_node[m.id] for m in graph.nonsingleton_mu_nodes]
    targets += [result.node_of_section[section.id] for section in graph.sections]
    targets += [result.node_of_singleton[mu_id] for mu_id in graph.include_singletons]
    return targets


def mu_distance(
    graph: TransfiniteGraph, result: ReplacementResult, a: str, b: str
) -> Ordinal:
    """The transfinite distance between two nodes.

    0 for nodes of one section (or a = b); otherwise w^mu times the hop
    distance between the corresponding 0-nodes.
    """
    node_a = _resolve_target(graph, result, a)
    node_b = _resolve_target(graph, result, b)
    hops = result.graph.bfs_distances(node_a)[node_b]
    if hops is None:
        raise StatusError(
            f"no distance between {a!r} and {b!r}: the replacement graph is not connected"
        )
    return omega_term(graph.rank, hops)


def geodesic(
    graph: TransfiniteGraph, result: ReplacementResult, a: str, b: str
) -> AbstractPath:
    """A path realizing the distance between a and b.

    Ties among shortest paths break toward the lexicographically
    smallest 0-node sequence.  Undefined for endpoints at distance 0.
    """
    node_a = _resolve_target(graph, result, a)
    node_b = _resolve_target(graph, result, b)
    if node_a == node_b:
        raise StatusError(
            f"{a!r} and {b!r} are at distance 0 (same node or same section); "
            "no geodesic between distinct 0-nodes exists"
        )
    dist = result.graph.bfs_distances(node_b)
    if dist[node_a] is None:
        raise StatusError(
            f"no path between {a!r} and {b!r}: the replacement graph is not connected"
        )
    sequence = [node_a]
    current = node_a
    while current != node_b:
        remaining = dist[current]
        assert remaining is not None
        current = min(
            neighbor
            for neighbor in result.graph.neighbors(current)
            if dist[neighbor] == remaining - 1
        )
        sequence.append(current)
    elements = []
    for node in sequence:
        if node in result.section_of_node:
            elements.append(result.section_of_node[node])
        elif node in result.mu_node_of_node:
            elements.append(result.mu_node_of_node[node])
        else:
            elements.append(result.singleton_of_node[node])
    return AbstractPath(tuple(elements))


def mu_status(graph: TransfiniteGraph, result: ReplacementResult, x: str) -> Ordinal:
    """The status of x: the ordinal sum of its distances to every
    nonsingleton mu-node, every section representative, and every
    included singleton (the self term contributes 0)."""
    source = _resolve_source(graph, result, x)
    dist = result.graph.bfs_distances(source)
    total = Ordinal()
    for target in _target_nodes(graph, result):
        hops = dist[target]
        if hops is None:
            raise StatusError(
                f"status of {x!r} is undefined: the replacement graph is not connected"
            )
        total = total + omega_term(graph.rank, hops)
    return total


def mu_status_bounds(graph: TransfiniteGraph, result: ReplacementResult) -> MuBounds:
    """Status bounds scaled by w^mu, from the replacement graph's p and q."""
    if not result.graph.is_connected():
        raise StatusError("bounds are undefined: the replacement graph is not connected")
    p, q = result.graph.p, result.graph.q
    lower, upper = status_bounds_values(p, q)
    return MuBounds(
        lower=omega_term(graph.rank, lower),
        upper=omega_term(graph.rank, upper),
        p=p,
        q=q,
    )


def status_report(graph: TransfiniteGraph, walk_based: bool = False) -> StatusReport:
    """Validate, build the replacement, and report every status.

    Entries list the nonsingleton mu-nodes in declaration order followed
    by the section representatives in section order.  Raises
    ValidationFailed when validation does not pass.
    """
    report = validate(graph, walk_based)
    if not report.passed:
        raise ValidationFailed(report)
    result = build_replacement(graph, walk_based=walk_based)
    bounds = mu_status_bounds(graph, result)
    entries = [
        StatusEntry(m.id, KIND_MU_NODE, mu_status(graph, result, m.id))
        for m in graph.nonsingleton_mu_nodes
    ]
    entries += [
        StatusEntry(
            section.representative,
            KIND_SECTION_REPRESENTATIVE,
            mu_status(graph, result, section.representative),
        )
        for section in graph.sections
    ]
    return StatusReport(
        rank=graph.rank,
        p=bounds.p,
        q=bounds.q,
        lower=bounds.lower,
        upper=bounds.upper,
        entries=tuple(entries),
        achieved_lower=tuple(e.id for e in entries if e.status == bounds.lower),
        achieved_upper=tuple(e.id for e in entries if e.status == bounds.upper),
        included_singletons=graph.include_singletons,
    )
