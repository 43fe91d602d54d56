"""Finite simple graphs: BFS distances, statuses and their sharp bounds.

The status of a node is the sum of its hop distances to all other nodes.
In a connected graph with p nodes and q edges every status s satisfies

    p - 1  <=  s  <=  (p - 1)(p + 2)/2 - q

and both ends are achievable for every feasible q.  This module provides
the graph substrate, the bounds check, exhaustive enumeration of small
labeled connected graphs, and an extremal search for bound witnesses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "BoundsResult",
    "FiniteGraph",
    "GraphError",
    "Witness",
    "enumerate_connected_graphs",
    "extremal_search",
    "status_bounds_values",
]

MAX_ENUMERATION_NODES = 7


class GraphError(ValueError):
    """Invalid construction or an operation on an unsuitable graph."""


class FiniteGraph:
    """Simple undirected graph with ordered nodes and canonical edge pairs.

    Nodes keep declaration order; edges are stored as sorted id pairs in
    insertion order.  Self-loops, duplicate edges and undeclared
    endpoints are rejected at construction.
    """

    __slots__ = ("_nodes", "_edges", "_edge_set", "_adj")

    def __init__(self, nodes: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        node_list = list(nodes)
        seen: set[str] = set()
        for node in node_list:
            if node in seen:
                raise GraphError(f"duplicate node id {node!r}")
            seen.add(node)
        adj: dict[str, list[str]] = {node: [] for node in node_list}
        edge_list: list[tuple[str, str]] = []
        edge_set: set[tuple[str, str]] = set()
        for u, v in edges:
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise GraphError(f"edge ({u!r}, {v!r}) references undeclared node {missing!r}")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            pair = (u, v) if u <= v else (v, u)
            if pair in edge_set:
                raise GraphError(f"duplicate edge {pair!r}")
            edge_set.add(pair)
            edge_list.append(pair)
            adj[u].append(v)
            adj[v].append(u)
        self._nodes = tuple(node_list)
        self._edges = tuple(edge_list)
        self._edge_set = frozenset(edge_set)
        self._adj = {node: tuple(nbrs) for node, nbrs in adj.items()}

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    @property
    def p(self) -> int:
        return len(self._nodes)

    @property
    def q(self) -> int:
        return len(self._edges)

    def has_node(self, node: str) -> bool:
        return node in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        pair = (u, v) if u <= v else (v, u)
        return pair in self._edge_set

    def neighbors(self, node: str) -> tuple[str, ...]:
        if node not in self._adj:
            raise GraphError(f"unknown node {node!r}")
        return self._adj[node]

    def degree(self, node: str) -> int:
        return len(self.neighbors(node))

    def is_connected(self) -> bool:
        """True when every node is reachable from every other.

        Empty and single-node graphs count as connected.
        """
        if len(self._nodes) <= 1:
            return True
        dist = self.bfs_distances(self._nodes[0])
        return all(d is not None for d in dist.values())

    def bfs_distances(self, source: str) -> dict[str, int | None]:
        """Hop distances from source; unreachable nodes map to None."""
        if source not in self._adj:
            raise GraphError(f"unknown node {source!r}")
        dist: dict[str, int | None] = {node: None for node in self._nodes}
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            base = dist[u]
            assert base is not None
            for v in self._adj[u]:
                if dist[v] is None:
                    dist[v] = base + 1
                    queue.append(v)
        return dist

    def status(self, node: str) -> int:
        """Sum of distances from node to all other nodes; needs connectivity."""
        total = 0
        for d in self.bfs_distances(node).values():
            if d is None:
                raise GraphError("status is undefined on a disconnected graph")
            total += d
        return total

    def status_bounds(self) -> "BoundsResult":
        if self.p < 1:
            raise GraphError("bounds need at least one node")
        if not self.is_connected():
            raise GraphError("bounds are undefined on a disconnected graph")
        lower, upper = status_bounds_values(self.p, self.q)
        return BoundsResult(p=self.p, q=self.q, lower=lower, upper=upper)

    def to_dot(self) -> str:
        """DOT text: nodes in declaration order, edges as sorted pairs."""
        lines = ["graph {"]
        for node in self._nodes:
            lines.append(f'  "{_dot_escape(node)}";')
        for u, v in sorted(self._edges):
            lines.append(f'  "{_dot_escape(u)}" -- "{_dot_escape(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self._nodes, self._edge_set))

    def __repr__(self) -> str:
        return f"FiniteGraph(p={self.p}, q={self.q})"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


@dataclass(frozen=True)
class BoundsResult:
    """Status bounds of a connected graph with p nodes and q edges."""

    p: int
    q: int
    lower: int
    upper: int


@dataclass(frozen=True)
class Witness:
    """A node achieving an exact status value in a concrete graph."""

    graph: FiniteGraph
    node: str
    status: int


def status_bounds_values(p: int, q: int) -> tuple[int, int]:
    """Lower and upper status bound for p nodes and q edges."""
    return p - 1, (p - 1) * (p + 2) // 2 - q


def _node_names(p: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(1, p + 1))


def enumerate_connected_graphs(p: int) -> Iterator[FiniteGraph]:
    """Yield every labeled connected simple graph on p nodes exactly once.

    Iterates all 2^(p(p-1)/2) edge subsets with a bitmask connectivity
    filter; supported for 1 <= p <= 7.
    """
    if not isinstance(p, int) or not 1 <= p <= MAX_ENUMERATION_NODES:
        raise GraphError(f"enumeration supports 1 <= p <= {MAX_ENUMERATION_NODES}, got {p!r}")
    names = _node_names(p)
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    full = (1 << p) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * p
        bits = mask
        while bits:
            k = (bits & -bits).bit_length() - 1
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            bits &= bits - 1
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                reach |= adj[v]
                f &= f - 1
            frontier = reach & ~seen
            seen |= frontier
        if seen == full:
            edges = [
                (names[i], names[j]) for k, (i, j) in enumerate(pairs) if mask >> k & 1
            ]
            yield FiniteGraph(names, edges)


def extremal_search(p: int, q: int) -> tuple[Witness, Witness]:
    """Find witness nodes achieving the lower and the upper status bound.

    Searches connected labeled graphs with exactly p nodes and q edges in
    deterministic order and returns the first witness for each bound.
    Both witnesses exist for every q with p - 1 <= q <= p(p-1)/2.
    """
    if not isinstance(p, int) or not 1 <= p <= MAX_ENUMERATION_NODES:
        raise GraphError(f"search supports 1 <= p <= {MAX_ENUMERATION_NODES}, got {p!r}")
    if not p - 1 <= q <= p * (p - 1) // 2:
        raise GraphError(
            f"q={q} outside the feasible range [{p - 1}, {p * (p - 1) // 2}] for p={p}"
        )
    names = _node_names(p)
    pairs = [(names[i], names[j]) for i in range(p) for j in range(i + 1, p)]
    lower, upper = status_bounds_values(p, q)
    lower_witness: Witness | None = None
    upper_witness: Witness | None = None
    for combo in combinations(pairs, q):
        graph = FiniteGraph(names, combo)
        if not graph.is_connected():
            continue
        for node in names:
            s = graph.status(node)
            if lower_witness is None and s == lower:
                lower_witness = Witness(graph, node, s)
            if upper_witness is None and s == upper:
                upper_witness = Witness(graph, node, s)
        if lower_witness is not None and upper_witness is not None:
            return lower_witness, upper_witness
    raise GraphError(
        f"no witness found for p={p}, q={q}; the exhaustive search should always succeed"
    )
