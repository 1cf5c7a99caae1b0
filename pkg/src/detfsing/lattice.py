"""Worklist explorer for the lattice of ideals preserved by a splitting.

Starting from (0), (1), and the seeds, the closure adds sums, intersections,
and colons (node by node and node by single variable) until nothing new
appears or the node cap is hit.  Every emitted node is re-verified to be
preserved by the map; the produced lattice is a set of candidates, not a
completeness certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import PreconditionViolated, SeedIncompatible
from .frobenius import compatibility_witness, is_compatible, is_split
from .ideals import Ideal
from .poly import Polynomial

DEFAULT_NODE_CAP = 512


@dataclass
class LatticeNode:
    ident: str
    ideal: Ideal
    origin: str

    def gens_text(self):
        gb = self.ideal.groebner()
        if not gb:
            return ["0"]
        return [str(g) for g in gb]

    def label(self):
        gb = self.ideal.groebner()
        if not gb:
            return "(0)"
        return "(" + ", ".join(str(g) for g in gb) + ")"


@dataclass
class CompatibleLattice:
    phi: object
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # Hasse covers: (small, large)
    capped: bool = False
    generation_log: dict = field(default_factory=dict)

    def node_count(self):
        return len(self.nodes)

    def ideals(self):
        return [n.ideal for n in self.nodes]


def compatible_closure(phi, seeds, node_cap=DEFAULT_NODE_CAP, stats=None, budget=None):
    """Close seeds (plus (0) and (1)) under sum, intersection, and colon.

    Requires phi to be a splitting; rejects incompatible seeds with a witness.
    """
    if not is_split(phi):
        raise PreconditionViolated("the map must be a splitting (phi(1) = 1)")
    ring = phi.ring
    for s in seeds:
        ring.check_same(s.ring)
        if not is_compatible(phi, s, stats, budget):
            bad = compatibility_witness(phi, s, stats, budget)
            raise SeedIncompatible(repr(s), str(bad[1]) if bad else "?")

    registry = {}
    order = []

    def canon(I):
        return I.canonical_key(stats, budget)

    def insert(I, origin):
        key = canon(I)
        if key in registry:
            return registry[key], False
        ident = f"n{len(order)}"
        node = LatticeNode(ident, I, origin)
        registry[key] = node
        order.append(node)
        return node, True

    lat = CompatibleLattice(phi=phi)
    insert(Ideal.zero(ring), "zero")
    insert(Ideal.unit(ring), "unit")
    for i, s in enumerate(seeds):
        insert(s, f"seed{i}")

    variables = [Polynomial.variable(ring, i) for i in range(ring.nvars)]

    def candidates(a, b):
        yield a.ideal.sum(b.ideal), f"sum({a.ident},{b.ident})"
        yield a.ideal.intersect(b.ideal, stats, budget), f"cap({a.ident},{b.ident})"
        if not b.ideal.is_zero_ideal():
            yield a.ideal.colon(b.ideal, stats, budget), f"colon({a.ident},{b.ident})"
        if not a.ideal.is_zero_ideal():
            yield b.ideal.colon(a.ideal, stats, budget), f"colon({b.ident},{a.ident})"

    frontier = list(order)
    while frontier:
        if len(order) > node_cap:
            lat.capped = True
            break
        fresh = []
        batch = list(order)
        for a in frontier:
            for b in batch:
                for cand, origin in candidates(a, b):
                    node, new = insert(cand, origin)
                    if new:
                        fresh.append(node)
            for i, v in enumerate(variables):
                cand = a.ideal.colon(Ideal(ring, (v,)), stats, budget)
                node, new = insert(cand, f"colon({a.ident},{ring.names[i]})")
                if new:
                    fresh.append(node)
            if len(order) > node_cap:
                lat.capped = True
                break
        if lat.capped:
            break
        frontier = fresh

    # re-verify every node against the map; closure theory says this holds,
    # so a failure is surfaced loudly instead of being filtered
    for node in order:
        if not is_compatible(phi, node.ideal, stats, budget):
            raise SeedIncompatible(repr(node.ideal), f"closure node {node.ident}")

    lat.nodes = order
    lat.generation_log = {n.ident: n.origin for n in order}
    lat.edges = _hasse_edges(order, stats, budget)
    return lat


def _hasse_edges(nodes, stats=None, budget=None):
    n = len(nodes)
    below = [[False] * n for _ in range(n)]
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and a.ideal.subset_of(b.ideal, stats, budget):
                key_a = a.ideal.canonical_key(stats, budget)
                key_b = b.ideal.canonical_key(stats, budget)
                if key_a != key_b:
                    below[i][j] = True
    edges = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                edges.append((nodes[i].ident, nodes[j].ident))
    return sorted(edges)


def lattice_export(lat):
    """Deterministic DOT digraph followed by a JSON node table."""
    items = sorted(lat.nodes, key=lambda nd: (len(nd.ideal.groebner()), nd.label()))
    index = {nd.ident: i for i, nd in enumerate(items)}
    rename = {nd.ident: f"n{i}" for i, nd in enumerate(items)}
    lines = ["digraph compatible_ideals {"]
    for i, nd in enumerate(items):
        lines.append(f'  n{i} [label="{nd.label()}"];')
    for ia, ib in sorted((index[a], index[b]) for a, b in lat.edges):
        lines.append(f"  n{ia} -> n{ib};")
    lines.append("}")
    table = {
        "nodes": [
            {
                "id": rename[nd.ident],
                "generators": nd.gens_text(),
                "origin": lat.generation_log.get(nd.ident, ""),
            }
            for nd in items
        ],
        "edges": [
            [f"n{ia}", f"n{ib}"]
            for ia, ib in sorted((index[a], index[b]) for a, b in lat.edges)
        ],
        "capped": lat.capped,
    }
    return "\n".join(lines) + "\n" + json.dumps(table, sort_keys=True)
