"""Test-local oracles and generators.

Everything here is deliberately independent of the package under test:
plain-dict graph handling, an integer BFS, a union-find connectivity
counter, and a seeded random document generator.  Acceptance tests
compare package results against these, so nothing in this module may
import from tgstatus.
"""

from __future__ import annotations

import json
import random
from itertools import combinations


def oracle_bfs(nodes, edges, source):
    """Hop distances from source as a dict; unreachable ids are absent."""
    adjacency = {node: set() for node in nodes}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def oracle_status(nodes, edges, source):
    """Sum of distances from source, or None when the graph is disconnected."""
    dist = oracle_bfs(nodes, edges, source)
    if len(dist) != len(list(nodes)):
        return None
    return sum(dist.values())


def oracle_connected_count(p):
    """Number of labeled connected graphs on p nodes, by union-find."""
    pairs = list(combinations(range(p), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(p))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = p
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    components -= 1
        if components == 1:
            count += 1
    return count


def oracle_replacement(doc):
    """(nodes, edges) of the replacement graph, from the raw document dict."""
    representative = {s["id"]: s["representative"] for s in doc["sections"]}
    nonsingleton = [m for m in doc["mu_nodes"] if len(m["tips"]) >= 2]
    included = doc.get("include_singletons", [])
    nodes = [m["id"] for m in nonsingleton]
    nodes += [representative[s["id"]] for s in doc["sections"]]
    nodes += list(included)
    edges = set()
    for m in nonsingleton:
        for tip in m["tips"]:
            edges.add(frozenset((m["id"], representative[tip["section"]])))
    by_id = {m["id"]: m for m in doc["mu_nodes"]}
    for w in included:
        home = by_id[w]["tips"][0]["section"]
        edges.add(frozenset((w, representative[home])))
    return nodes, sorted(tuple(sorted(e)) for e in edges)


def oracle_ordinal_text(mu, n):
    """Canonical text of w^mu * n, formatted without the package."""
    if n == 0:
        return "0"
    if mu == 0:
        return str(n)
    base = "w" if mu == 1 else f"w^{mu}"
    return base if n == 1 else f"{base}*{n}"


def random_document(rng: random.Random, *, max_mu=3, max_k=8, max_m=8, small=False):
    """A random valid document dict with a connected replacement graph.

    Sections and nonsingleton mu-nodes are wired by attaching each new
    element to one already reached, so connectivity holds by
    construction; extra tips, extra internal nodes, singleton mu-nodes
    (included or not) and benign nondisconnectable pairs are sprinkled
    on top.
    """
    if small:
        max_k, max_m = 3, 3
    mu = rng.randint(1, max_mu)
    k = rng.randint(0, max_k)
    m = 1 if k == 0 else rng.randint(1, max_m)

    sections = []
    for i in range(1, m + 1):
        internal = [{"id": f"y{i}", "rank": rng.randrange(mu), "nonsingleton": True}]
        for j in range(rng.choice([0, 0, 0, 1, 2])):
            internal.append(
                {
                    "id": f"z{i}_{j}",
                    "rank": rng.randrange(mu),
                    "nonsingleton": rng.random() < 0.5,
                }
            )
        sections.append(
            {"id": f"S{i}", "internal_nodes": internal, "representative": f"y{i}"}
        )

    tip_serial = [0]

    def new_tip(section_id):
        tip_serial[0] += 1
        return {"id": f"t{tip_serial[0]}", "section": section_id}

    mu_nodes = []
    tips_of = {}
    if k > 0:
        reached_sections = ["S1"]
        tips_of["X1"] = [new_tip("S1")]
        for i in range(2, k + 1):
            tips_of[f"X{i}"] = [new_tip(rng.choice(reached_sections))]
        for i in range(2, m + 1):
            owner = f"X{rng.randint(1, k)}"
            tips_of[owner].append(new_tip(f"S{i}"))
            reached_sections.append(f"S{i}")
        for name, tips in tips_of.items():
            while len(tips) < 2:
                tips.append(new_tip(f"S{rng.randint(1, m)}"))
            for _ in range(rng.choice([0, 0, 1])):
                tips.append(new_tip(f"S{rng.randint(1, m)}"))
        for i in range(1, k + 1):
            mu_nodes.append({"id": f"X{i}", "tips": tips_of[f"X{i}"]})

    include = []
    for i in range(rng.choice([0, 0, 0, 1, 2])):
        name = f"W{i + 1}"
        mu_nodes.append({"id": name, "tips": [new_tip(f"S{rng.randint(1, m)}")]})
        if rng.random() < 0.7:
            include.append(name)

    pairs = []
    seen_pairs = set()
    for mu_node in mu_nodes:
        if len(mu_node["tips"]) >= 2 and rng.random() < 0.2:
            a, b = rng.sample([t["id"] for t in mu_node["tips"]], 2)
            key = tuple(sorted((a, b)))
            if key not in seen_pairs:
                seen_pairs.add(key)
                pairs.append(list(key))

    return {
        "rank": mu,
        "sections": sections,
        "mu_nodes": mu_nodes,
        "nondisconnectable_pairs": pairs,
        "include_singletons": include,
    }


def document_text(doc):
    return json.dumps(doc)
