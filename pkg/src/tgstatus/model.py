"""Data model and validator for transfinite graphs of positive natural rank.

A rank-mu graph is recorded at section / mu-node granularity: sections
stand for the maximal lower-rank subgraphs (each with one designated
nonsingleton representative node), mu-nodes carry symbolic tips whose
home section encodes incidence, and nondisconnectability of tips is a
declared input relation.  Section interiors are not modeled beyond named
internal nodes because distances within a section are 0 by convention.

The JSON document format handled here is shared with the finite-graph
substrate: a ``rank: 0`` document carries plain ``nodes``/``edges``
arrays instead of sections and mu-nodes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .finite_graph import FiniteGraph, GraphError

__all__ = [
    "DocumentError",
    "InternalNode",
    "MuNode",
    "Section",
    "Tip",
    "TransfiniteGraph",
    "ValidationFailed",
    "ValidationReport",
    "Violation",
    "classify_mu_nodes",
    "load_document",
    "parse_document",
    "parse_finite_document",
    "rank0_document",
    "section_degree",
    "validate",
]

INTRA_SECTION_NOTE = (
    "distances within a section are 0 by convention; "
    "section interiors do not affect computed quantities"
)
WALK_MODE_NOTE = "walk mode: the nondisconnectable-tips check is not applied"


class DocumentError(ValueError):
    """Malformed or inconsistent graph document."""


@dataclass(frozen=True)
class Tip:
    """A graphical extremity of a mu-node, identified by its home section."""

    id: str
    section: str


@dataclass(frozen=True)
class MuNode:
    """A node of highest rank, holding one or more tips and nothing else."""

    id: str
    tips: tuple[Tip, ...]

    @property
    def is_nonsingleton(self) -> bool:
        return len(self.tips) >= 2

    @property
    def incident_sections(self) -> tuple[str, ...]:
        """Distinct home sections of the tips, in tip declaration order.

        Several tips into one section collapse to a single incidence, so
        the replacement graph stays simple.
        """
        seen: list[str] = []
        for tip in self.tips:
            if tip.section not in seen:
                seen.append(tip.section)
        return tuple(seen)


@dataclass(frozen=True)
class InternalNode:
    """A named lower-rank node inside a section."""

    id: str
    rank: int
    nonsingleton: bool


@dataclass(frozen=True)
class Section:
    """A maximal lower-rank subgraph with a designated representative."""

    id: str
    internal_nodes: tuple[InternalNode, ...]
    representative: str


@dataclass(frozen=True)
class TransfiniteGraph:
    rank: int
    sections: tuple[Section, ...]
    mu_nodes: tuple[MuNode, ...]
    nondisconnectable_pairs: tuple[tuple[str, str], ...] = ()
    include_singletons: tuple[str, ...] = ()

    @cached_property
    def _section_index(self) -> dict[str, Section]:
        return {section.id: section for section in self.sections}

    @cached_property
    def _mu_index(self) -> dict[str, MuNode]:
        return {mu_node.id: mu_node for mu_node in self.mu_nodes}

    @cached_property
    def _tip_owner(self) -> dict[str, MuNode]:
        return {tip.id: mu_node for mu_node in self.mu_nodes for tip in mu_node.tips}

    @cached_property
    def _internal_home(self) -> dict[str, Section]:
        return {
            internal.id: section
            for section in self.sections
            for internal in section.internal_nodes
        }

    @property
    def nonsingleton_mu_nodes(self) -> tuple[MuNode, ...]:
        return tuple(m for m in self.mu_nodes if m.is_nonsingleton)

    def has_section(self, section_id: str) -> bool:
        return section_id in self._section_index

    def section(self, section_id: str) -> Section:
        try:
            return self._section_index[section_id]
        except KeyError:
            raise KeyError(f"unknown section {section_id!r}") from None

    def has_mu_node(self, mu_id: str) -> bool:
        return mu_id in self._mu_index

    def mu_node(self, mu_id: str) -> MuNode:
        try:
            return self._mu_index[mu_id]
        except KeyError:
            raise KeyError(f"unknown mu-node {mu_id!r}") from None

    def owner_of_tip(self, tip_id: str) -> MuNode:
        try:
            return self._tip_owner[tip_id]
        except KeyError:
            raise KeyError(f"unknown tip {tip_id!r}") from None

    def section_of_internal(self, internal_id: str) -> Section | None:
        return self._internal_home.get(internal_id)


@dataclass(frozen=True)
class Violation:
    condition: str
    message: str
    ids: tuple[str, ...]


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    violations: tuple[Violation, ...]
    notes: tuple[str, ...] = ()


class ValidationFailed(ValueError):
    """An operation required a graph that passed validation."""

    def __init__(self, report: ValidationReport):
        summary = "; ".join(f"[{v.condition}] {v.message}" for v in report.violations)
        super().__init__(f"validation failed: {summary}")
        self.report = report


# --- document parsing -------------------------------------------------

_TOP_KEYS = {"rank", "sections", "mu_nodes", "nondisconnectable_pairs", "include_singletons"}
_SECTION_KEYS = {"id", "internal_nodes", "representative"}
_INTERNAL_KEYS = {"id", "rank", "nonsingleton"}
_MU_NODE_KEYS = {"id", "tips"}
_TIP_KEYS = {"id", "section"}
_FINITE_KEYS = {"rank", "nodes", "edges"}


def _json_object(text: str) -> dict[str, Any]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    return obj


def _check_keys(obj: dict[str, Any], allowed: set[str], context: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise DocumentError(f"{context}: unknown key {sorted(unknown)[0]!r}")


def _get_str(obj: dict[str, Any], key: str, context: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str) or not value:
        raise DocumentError(f"{context}: {key!r} must be a non-empty string")
    return value


def _get_int(obj: dict[str, Any], key: str, context: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"{context}: {key!r} must be an integer")
    return value


def _get_list(obj: dict[str, Any], key: str, context: str) -> list[Any]:
    value = obj.get(key)
    if not isinstance(value, list):
        raise DocumentError(f"{context}: {key!r} must be an array")
    return value


def _document_rank(obj: dict[str, Any]) -> int:
    if "rank" not in obj:
        raise DocumentError("document: missing 'rank'")
    rank = _get_int(obj, "rank", "document")
    if rank < 0:
        raise DocumentError(f"document: rank must be >= 0, got {rank}")
    return rank


def parse_document(text: str) -> TransfiniteGraph:
    """Parse a rank >= 1 document into a fully resolved model.

    Identifiers of sections, internal nodes, mu-nodes and tips share one
    namespace and must be globally unique; every reference (tip home
    section, representative, nondisconnectable pair member, singleton
    inclusion) must resolve.
    """
    obj = _json_object(text)
    if _document_rank(obj) == 0:
        raise DocumentError(
            "rank-0 documents carry plain nodes/edges and describe finite graphs"
        )
    return _transfinite_from_obj(obj)


def parse_finite_document(text: str) -> FiniteGraph:
    """Parse a rank-0 document (nodes/edges arrays) into a finite graph."""
    obj = _json_object(text)
    if _document_rank(obj) != 0:
        raise DocumentError("expected a rank-0 document")
    return _finite_from_obj(obj)


def load_document(text: str) -> TransfiniteGraph | FiniteGraph:
    """Dispatch on rank: 0 loads a finite graph, >= 1 a transfinite one."""
    obj = _json_object(text)
    if _document_rank(obj) == 0:
        return _finite_from_obj(obj)
    return _transfinite_from_obj(obj)


def rank0_document(graph: FiniteGraph) -> dict[str, Any]:
    """The rank-0 document object for a finite graph."""
    return {
        "rank": 0,
        "nodes": list(graph.nodes),
        "edges": [list(pair) for pair in graph.edges],
    }


def _finite_from_obj(obj: dict[str, Any]) -> FiniteGraph:
    _check_keys(obj, _FINITE_KEYS, "document")
    nodes = _get_list(obj, "nodes", "document")
    for node in nodes:
        if not isinstance(node, str) or not node:
            raise DocumentError(f"document: node id {node!r} must be a non-empty string")
    edges = []
    for entry in _get_list(obj, "edges", "document"):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(end, str) for end in entry)
        ):
            raise DocumentError(f"document: edge {entry!r} must be a pair of node ids")
        edges.append((entry[0], entry[1]))
    try:
        return FiniteGraph(nodes, edges)
    except GraphError as exc:
        raise DocumentError(str(exc)) from None


def _transfinite_from_obj(obj: dict[str, Any]) -> TransfiniteGraph:
    _check_keys(obj, _TOP_KEYS, "document")
    rank = _document_rank(obj)

    ids: set[str] = set()

    def claim(identifier: str, context: str) -> None:
        if identifier in ids:
            raise DocumentError(f"{context}: duplicate identifier {identifier!r}")
        ids.add(identifier)

    raw_sections = _get_list(obj, "sections", "document")
    if not raw_sections:
        raise DocumentError("document: at least one section is required")
    sections: list[Section] = []
    for raw in raw_sections:
        if not isinstance(raw, dict):
            raise DocumentError("sections: entries must be objects")
        _check_keys(raw, _SECTION_KEYS, "section")
        section_id = _get_str(raw, "id", "section")
        claim(section_id, "sections")
        internals: list[InternalNode] = []
        raw_internals = _get_list(raw, "internal_nodes", f"section {section_id}")
        if not raw_internals:
            raise DocumentError(f"section {section_id}: needs at least one internal node")
        for raw_internal in raw_internals:
            if not isinstance(raw_internal, dict):
                raise DocumentError(f"section {section_id}: internal nodes must be objects")
            _check_keys(raw_internal, _INTERNAL_KEYS, f"section {section_id}")
            internal_id = _get_str(raw_internal, "id", f"section {section_id}")
            claim(internal_id, f"section {section_id}")
            internal_rank = _get_int(raw_internal, "rank", f"internal node {internal_id}")
            if not 0 <= internal_rank < rank:
                raise DocumentError(
                    f"internal node {internal_id}: rank {internal_rank} must satisfy "
                    f"0 <= rank < {rank}"
                )
            nonsingleton = raw_internal.get("nonsingleton")
            if not isinstance(nonsingleton, bool):
                raise DocumentError(
                    f"internal node {internal_id}: 'nonsingleton' must be a boolean"
                )
            internals.append(InternalNode(internal_id, internal_rank, nonsingleton))
        representative = _get_str(raw, "representative", f"section {section_id}")
        if representative not in {internal.id for internal in internals}:
            raise DocumentError(
                f"section {section_id}: representative {representative!r} "
                "does not name one of its internal nodes"
            )
        sections.append(Section(section_id, tuple(internals), representative))
    section_ids = {section.id for section in sections}

    mu_nodes: list[MuNode] = []
    for raw in _get_list(obj, "mu_nodes", "document"):
        if not isinstance(raw, dict):
            raise DocumentError("mu_nodes: entries must be objects")
        _check_keys(raw, _MU_NODE_KEYS, "mu-node")
        mu_id = _get_str(raw, "id", "mu-node")
        claim(mu_id, "mu_nodes")
        raw_tips = _get_list(raw, "tips", f"mu-node {mu_id}")
        if not raw_tips:
            raise DocumentError(f"mu-node {mu_id}: needs at least one tip")
        tips: list[Tip] = []
        for raw_tip in raw_tips:
            if not isinstance(raw_tip, dict):
                raise DocumentError(f"mu-node {mu_id}: tips must be objects")
            _check_keys(raw_tip, _TIP_KEYS, f"mu-node {mu_id}")
            tip_id = _get_str(raw_tip, "id", f"mu-node {mu_id}")
            claim(tip_id, f"mu-node {mu_id}")
            home = _get_str(raw_tip, "section", f"tip {tip_id}")
            if home not in section_ids:
                raise DocumentError(f"tip {tip_id}: unknown section {home!r}")
            tips.append(Tip(tip_id, home))
        mu_nodes.append(MuNode(mu_id, tuple(tips)))
    tip_ids = {tip.id for mu_node in mu_nodes for tip in mu_node.tips}
    mu_ids = {mu_node.id for mu_node in mu_nodes}

    pairs: list[tuple[str, str]] = []
    seen_pairs: set[tuple[str, str]] = set()
    for raw in obj.get("nondisconnectable_pairs", []):
        if (
            not isinstance(raw, list)
            or len(raw) != 2
            or not all(isinstance(member, str) for member in raw)
        ):
            raise DocumentError(
                f"nondisconnectable_pairs: entry {raw!r} must be a pair of tip ids"
            )
        first, second = raw
        if first == second:
            raise DocumentError(f"nondisconnectable_pairs: {first!r} paired with itself")
        for member in (first, second):
            if member not in tip_ids:
                raise DocumentError(f"nondisconnectable_pairs: unknown tip {member!r}")
        pair = (first, second) if first <= second else (second, first)
        if pair in seen_pairs:
            raise DocumentError(f"nondisconnectable_pairs: duplicate pair {pair!r}")
        seen_pairs.add(pair)
        pairs.append(pair)

    include: list[str] = []
    for raw in obj.get("include_singletons", []):
        if not isinstance(raw, str):
            raise DocumentError(f"include_singletons: entry {raw!r} must be a mu-node id")
        if raw not in mu_ids:
            raise DocumentError(f"include_singletons: unknown mu-node {raw!r}")
        if raw in include:
            raise DocumentError(f"include_singletons: duplicate entry {raw!r}")
        include.append(raw)

    return TransfiniteGraph(
        rank=rank,
        sections=tuple(sections),
        mu_nodes=tuple(mu_nodes),
        nondisconnectable_pairs=tuple(pairs),
        include_singletons=tuple(include),
    )


# --- validation -------------------------------------------------------

def validate(graph: TransfiniteGraph, walk_based: bool = False) -> ValidationReport:
    """Check the admissibility conditions; findings become report entries.

    Checked conditions and their tags:

    * ``rank``: the rank is a positive natural number.
    * ``representative``: every section designates a nonsingleton
      internal node of rank below the graph rank.
    * ``include-singletons``: every inclusion names a singleton mu-node.
    * ``nondisconnectable-tips``: declared nondisconnectable tips share
      a mu-node or one of them is the sole tip of its mu-node (this
      guarantees path-based distances exist; skipped in walk mode,
      where walk-based distances exist regardless).
    * ``connectivity``: the replacement 0-graph is connected, the
      checkable surrogate for branchwise connectedness of the source
      graph.

    Pristineness and finiteness hold structurally in this model and
    produce no entries; the zero-distance convention inside sections is
    recorded as a note, not a check.
    """
    violations: list[Violation] = []

    if not isinstance(graph.rank, int) or isinstance(graph.rank, bool) or graph.rank < 1:
        violations.append(
            Violation(
                "rank",
                f"rank must be a positive natural number, got {graph.rank!r}",
                (),
            )
        )

    for section in graph.sections:
        internal = next(
            (n for n in section.internal_nodes if n.id == section.representative), None
        )
        if internal is None or not internal.nonsingleton or not (
            isinstance(graph.rank, int) and 0 <= internal.rank < graph.rank
        ):
            violations.append(
                Violation(
                    "representative",
                    f"section {section.id} has no valid nonsingleton representative "
                    f"({section.representative!r})",
                    (section.id, section.representative),
                )
            )

    for mu_id in graph.include_singletons:
        mu_node = graph._mu_index.get(mu_id)
        if mu_node is None or mu_node.is_nonsingleton:
            violations.append(
                Violation(
                    "include-singletons",
                    f"include_singletons entry {mu_id!r} does not name a singleton mu-node",
                    (mu_id,),
                )
            )

    if not walk_based:
        for first, second in graph.nondisconnectable_pairs:
            owner_a = graph._tip_owner.get(first)
            owner_b = graph._tip_owner.get(second)
            if owner_a is None or owner_b is None:
                missing = first if owner_a is None else second
                violations.append(
                    Violation(
                        "nondisconnectable-tips",
                        f"pair references unknown tip {missing!r}",
                        (first, second),
                    )
                )
                continue
            if owner_a.id == owner_b.id:
                continue
            if not owner_a.is_nonsingleton or not owner_b.is_nonsingleton:
                continue
            violations.append(
                Violation(
                    "nondisconnectable-tips",
                    f"tips {first} and {second} are nondisconnectable but lie in "
                    f"distinct nonsingleton mu-nodes {owner_a.id} and {owner_b.id}",
                    (first, second, owner_a.id, owner_b.id),
                )
            )

    unreached = _unreached_replacement_nodes(graph)
    if unreached:
        violations.append(
            Violation(
                "connectivity",
                "the replacement 0-graph is not connected; unreached: "
                + ", ".join(unreached),
                tuple(unreached),
            )
        )

    notes = [INTRA_SECTION_NOTE]
    if walk_based:
        notes.append(WALK_MODE_NOTE)
    return ValidationReport(
        passed=not violations, violations=tuple(violations), notes=tuple(notes)
    )


def _unreached_replacement_nodes(graph: TransfiniteGraph) -> tuple[str, ...]:
    """Ids of replacement-graph constituents not reached from the first one.

    Works directly on the incidence structure so it does not depend on
    the replacement construction itself.
    """
    elements: list[str] = [section.id for section in graph.sections]
    adjacency: dict[str, list[str]] = {section.id: [] for section in graph.sections}
    for mu_node in graph.nonsingleton_mu_nodes:
        elements.append(mu_node.id)
        adjacency[mu_node.id] = []
        for home in mu_node.incident_sections:
            if home in adjacency:
                adjacency[mu_node.id].append(home)
                adjacency[home].append(mu_node.id)
    for mu_id in graph.include_singletons:
        mu_node = graph._mu_index.get(mu_id)
        if mu_node is None or mu_node.is_nonsingleton:
            continue
        elements.append(mu_id)
        adjacency[mu_id] = []
        home = mu_node.tips[0].section
        if home in adjacency:
            adjacency[mu_id].append(home)
            adjacency[home].append(mu_id)
    if not elements:
        return ()
    reached = {elements[0]}
    stack = [elements[0]]
    while stack:
        current = stack.pop()
        for neighbor in adjacency[current]:
            if neighbor not in reached:
                reached.add(neighbor)
                stack.append(neighbor)
    return tuple(element for element in elements if element not in reached)


def classify_mu_nodes(graph: TransfiniteGraph) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Partition mu-node ids into (nonsingleton, singleton), declaration order."""
    nonsingleton = tuple(m.id for m in graph.mu_nodes if m.is_nonsingleton)
    singleton = tuple(m.id for m in graph.mu_nodes if not m.is_nonsingleton)
    return nonsingleton, singleton


def section_degree(graph: TransfiniteGraph, section_id: str) -> int:
    """Number of distinct nonsingleton mu-nodes incident to the section."""
    section = graph.section(section_id)
    return sum(
        1
        for mu_node in graph.nonsingleton_mu_nodes
        if section.id in mu_node.incident_sections
    )
