"""Graph classification, bamboo decomposition, and minimal certification.

Implements the blow-down contraction calculus, recognition of minimal
and weight-2 bamboo graphs, the embedding of a minimal graph into a
non-singular supergraph by attaching weight-1 vertices along a chosen
bamboo, and the propagation rule that transports non-inclusion proofs
from a quotient singularity back to the source.  `certify_minimal` ties
these together into a full certificate for every ordered divisor pair.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .cycles import fundamental_cycle, is_rational
from .errors import (
    NotInImage,
    NotMinimal,
    NotRational,
    SameVertex,
)
from .generators import an_graph
from .graph import (
    WeightedDualGraph,
    graph_is_negative_definite,
    make_graph,
    serialize_graph,
)
from .order import NashRelation, Verdict, an_relation, relation_matrix


def is_minimal(g: WeightedDualGraph) -> bool:
    """Weight >= valence at every vertex, on a rational graph."""
    if any(g.weights[i] < g.valence(i) for i in range(g.n)):
        return False
    return graph_is_negative_definite(g) and is_rational(g)


def is_an(g: WeightedDualGraph) -> int | None:
    """n when g is a path with all weights 2, else None."""
    if any(w != 2 for w in g.weights):
        return None
    if any(g.valence(i) > 2 for i in range(g.n)):
        return None
    return g.n  # a tree with max valence 2 is a path


@dataclass(frozen=True)
class BlowDownStep:
    vertex: str
    neighbors: tuple[str, ...]  # reconnected when there are two


@dataclass(frozen=True)
class ContractionTrace:
    steps: tuple[BlowDownStep, ...]
    remaining: WeightedDualGraph | None  # None means contracted to Empty

    @property
    def empty(self) -> bool:
        return self.remaining is None


def _contract(
    g: WeightedDualGraph,
    pick: Callable[[list[str]], str],
) -> ContractionTrace:
    weight = dict(zip(g.ids, g.weights))
    adj: dict[str, set[str]] = {vid: set() for vid in g.ids}
    for i, j in g.edges:
        adj[g.ids[i]].add(g.ids[j])
        adj[g.ids[j]].add(g.ids[i])
    order = {vid: k for k, vid in enumerate(g.ids)}
    steps: list[BlowDownStep] = []
    while weight:
        eligible = []
        for vid in weight:
            if weight[vid] != 1 or len(adj[vid]) > 2:
                continue
            if len(adj[vid]) == 2:
                a, b = sorted(adj[vid])
                if b in adj[a]:  # joining would create a multi-edge
                    continue
            eligible.append(vid)
        if not eligible:
            ids = sorted(weight, key=order.__getitem__)
            remaining = make_graph(
                [(vid, weight[vid]) for vid in ids],
                [
                    (a, b)
                    for a in ids
                    for b in sorted(adj[a])
                    if order[a] < order[b]
                ],
                auxiliary=True,
            )
            return ContractionTrace(steps=tuple(steps), remaining=remaining)
        vid = pick(sorted(eligible, key=order.__getitem__))
        nbrs = sorted(adj[vid], key=order.__getitem__)
        for u in nbrs:
            weight[u] -= 1
            adj[u].discard(vid)
        if len(nbrs) == 2:
            adj[nbrs[0]].add(nbrs[1])
            adj[nbrs[1]].add(nbrs[0])
        del weight[vid], adj[vid]
        steps.append(BlowDownStep(vertex=vid, neighbors=tuple(nbrs)))
    return ContractionTrace(steps=tuple(steps), remaining=None)


def contracts_to_empty(g: WeightedDualGraph) -> ContractionTrace:
    """Greedy blow-down of weight-1, valence <= 2 vertices, smallest index first."""
    return _contract(g, pick=lambda eligible: eligible[0])


@dataclass(frozen=True)
class DecompositionCertificate:
    """Embedding of a minimal graph into a non-singular supergraph.

    The bamboo is the x-y tree path prolonged to two leaves z_1, z_2 of
    the original graph; weight-1 vertices are attached per the
    weight-minus-valence counts; each attached vertex determines one
    path piece from z_1, and the designated piece runs through both x
    and y.  `m` counts the original-graph vertices on that piece, and
    `positions` are the 1-based places of x and y along it.
    """

    graph: WeightedDualGraph
    supergraph: WeightedDualGraph
    bamboo: tuple[str, ...]
    attached: dict[str, int]
    pieces: tuple[tuple[str, ...], ...]
    designated: int  # index into pieces
    m: int
    positions: tuple[int, int]
    contraction: ContractionTrace


def _extend_to_leaf(g: WeightedDualGraph, path: list[int], end: int) -> list[int]:
    """Prolong the path beyond `end` by smallest-index neighbors until a leaf."""
    on_path = set(path)
    tail = [end]
    while True:
        options = [u for u in g.neighbors(tail[-1]) if u not in on_path]
        if not options:
            return tail[1:]
        nxt = min(options)
        on_path.add(nxt)
        tail.append(nxt)


def decompose_minimal(g: WeightedDualGraph, x: str, y: str) -> DecompositionCertificate:
    """Bamboo decomposition of a minimal graph through the vertices x and y."""
    if x == y:
        raise SameVertex("decomposition needs two distinct vertices")
    if not is_minimal(g):
        raise NotMinimal("bamboo decomposition requires a minimal graph")
    xi, yi = g.index_of(x), g.index_of(y)

    core = list(g.path(xi, yi))
    head = _extend_to_leaf(g, core, core[0])
    tail = _extend_to_leaf(g, core, core[-1])
    bamboo = list(reversed(head)) + core + tail
    z1, z2 = bamboo[0], bamboo[-1]

    # attach weight-1 vertices; counts use weight and valence in g itself
    vertices = [(vid, w) for vid, w in zip(g.ids, g.weights)]
    edges = [(g.ids[i], g.ids[j]) for i, j in sorted(g.edges)]
    attached: dict[str, int] = {}
    for v in range(g.n):
        w, val = g.weights[v], g.valence(v)
        if v == z1:
            count = max(w - val - 1, 0)
        else:
            count = w - val
        attached[g.ids[v]] = count
        for k in range(count):
            aux_id = f"{g.ids[v]}+{k + 1}"
            vertices.append((aux_id, 1))
            edges.append((g.ids[v], aux_id))
    supergraph = make_graph(vertices, edges, auxiliary=True)

    # one piece per weight-1 vertex: the path from z_1 to it
    z1_id = g.ids[z1]
    aux_ids = [vid for vid, w in vertices if w == 1]
    pieces = []
    designated = None
    bamboo_ids = tuple(g.ids[v] for v in bamboo)
    for aux in aux_ids:
        p = supergraph.path(supergraph.index_of(z1_id), supergraph.index_of(aux))
        piece = tuple(supergraph.ids[v] for v in p)
        if designated is None and x in piece and y in piece:
            designated = len(pieces)
        pieces.append(piece)
    assert designated is not None  # z_2 is a leaf of g, so it carries an aux vertex

    positions = (bamboo.index(xi) + 1, bamboo.index(yi) + 1)
    trace = contracts_to_empty(supergraph)
    return DecompositionCertificate(
        graph=g,
        supergraph=supergraph,
        bamboo=bamboo_ids,
        attached=attached,
        pieces=tuple(pieces),
        designated=designated,
        m=len(bamboo_ids),
        positions=positions,
        contraction=trace,
    )


class Rule:
    ORDER_CRITERION = "OrderCriterion"
    PROPAGATION = "Propagation"
    SHAPE_CONDITIONAL = "ShapeConditional"


class Status:
    PROVEN = "Proven"
    OPEN = "Open"
    CONDITIONAL = "Conditional"


@dataclass
class CertificateEntry:
    alpha: str
    beta: str
    status: str
    rules: list[str] = field(default_factory=list)
    evidence: dict[str, Any] = field(default_factory=dict)


@dataclass
class Certificate:
    """Per-ordered-pair proof record that closure(N_alpha) is not in closure(N_beta)."""

    graph: WeightedDualGraph
    entries: dict[tuple[str, str], CertificateEntry]

    def open_pairs(self) -> list[tuple[str, str]]:
        return sorted(
            pair for pair, e in self.entries.items() if e.status == Status.OPEN
        )


def propagate(
    source: WeightedDualGraph,
    quotient: WeightedDualGraph,
    mapping: dict[int, int],
    pair: tuple[int, int],
    relation: NashRelation,
) -> list[tuple[int, int]]:
    """Pull a quotient non-inclusion result back along a dominant birational map.

    `mapping` sends quotient vertex indices to source vertex indices
    (injectively); returns the ordered source pairs proven by the
    quotient relation on `pair`.
    """
    for g in (source, quotient):
        if not (graph_is_negative_definite(g) and is_rational(g)):
            raise NotRational("propagation requires rational graphs on both sides")
    i, j = pair
    if i not in mapping or j not in mapping:
        raise NotInImage(f"pair {pair} not covered by the vertex mapping")
    if len(set(mapping.values())) != len(mapping):
        raise NotInImage("vertex mapping must be injective")
    si, sj = mapping[i], mapping[j]
    if relation.verdict is Verdict.INCOMPARABLE:
        return [(si, sj), (sj, si)]
    if relation.verdict is Verdict.LESS:
        return [(si, sj)]
    return [(sj, si)]


def certify_minimal(g: WeightedDualGraph) -> Certificate:
    """Prove every ordered-pair non-inclusion on a minimal graph.

    Each unordered pair {x, y} gets a bamboo decomposition whose
    designated piece realizes x and y as distinct divisors of a weight-2
    bamboo quotient; incomparability there propagates back to prove both
    directions.  Pairs the order criterion also settles directly on g
    are cross-annotated.
    """
    if not is_minimal(g):
        raise NotMinimal("certification requires a minimal graph")
    rm = relation_matrix(g)
    direct = rm.non_inclusions()
    entries: dict[tuple[str, str], CertificateEntry] = {}
    for xi in range(g.n):
        for yi in range(xi + 1, g.n):
            x, y = g.ids[xi], g.ids[yi]
            cert = decompose_minimal(g, x, y)
            piece = cert.pieces[cert.designated]
            quotient = an_graph(cert.m)
            px, py = cert.positions
            rel = an_relation(cert.m, px - 1, py - 1)
            mapping = {
                k: g.index_of(vid) for k, vid in enumerate(cert.bamboo)
            }
            proven = propagate(g, quotient, mapping, (px - 1, py - 1), rel)
            assert set(proven) == {(xi, yi), (yi, xi)}
            evidence = {
                "bamboo": list(cert.bamboo),
                "quotient": f"A_{cert.m}",
                "positions": list(cert.positions),
                "designated_piece": list(piece),
                "supergraph_contracts": cert.contraction.empty,
                "witness_ij": list(rel.witness_ij),
                "witness_ji": list(rel.witness_ji),
            }
            for a, b in ((xi, yi), (yi, xi)):
                entry = CertificateEntry(
                    alpha=g.ids[a],
                    beta=g.ids[b],
                    status=Status.PROVEN,
                    rules=[Rule.PROPAGATION],
                    evidence=dict(evidence),
                )
                if (a, b) in direct:
                    entry.rules.append(Rule.ORDER_CRITERION)
                    witness = rm.get(a, b).witness_ij
                    entry.evidence["order_witness"] = (
                        list(witness) if witness else None
                    )
                entries[(g.ids[a], g.ids[b])] = entry
    return Certificate(graph=g, entries=entries)


def same_configuration(g: WeightedDualGraph, reference: WeightedDualGraph) -> bool:
    """True iff the underlying unweighted trees are isomorphic."""
    return _tree_canon(g) == _tree_canon(reference)


def _tree_canon(g: WeightedDualGraph) -> str:
    """Canonical string of the unweighted tree (AHU from the centers)."""

    def rooted(v: int, parent: int | None) -> str:
        children = sorted(
            rooted(u, v) for u in g.neighbors(v) if u != parent
        )
        return "(" + "".join(children) + ")"

    return min(rooted(c, None) for c in _tree_centers(g))


def _tree_centers(g: WeightedDualGraph) -> list[int]:
    n = g.n
    if n == 1:
        return [0]
    degree = [g.valence(i) for i in range(n)]
    layer = [i for i in range(n) if degree[i] == 1]
    removed = [False] * n
    count = n
    while count > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            count -= 1
            for u in g.neighbors(v):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [i for i in range(n) if not removed[i]]


def serialize_certificate(c: Certificate) -> dict[str, Any]:
    return {
        "graph": serialize_graph(c.graph),
        "restriction": "order relation computed over a negative-definite graph",
        "fundamental_cycle": list(fundamental_cycle(c.graph)),
        "pairs": [
            {
                "alpha": e.alpha,
                "beta": e.beta,
                "status": e.status,
                "rules": e.rules,
                "evidence": e.evidence,
            }
            for _, e in sorted(c.entries.items())
        ],
        "open_pairs": [list(p) for p in c.open_pairs()],
    }


def serialize_decomposition(cert: DecompositionCertificate) -> dict[str, Any]:
    return {
        "graph": serialize_graph(cert.graph),
        "supergraph": serialize_graph(cert.supergraph),
        "bamboo": list(cert.bamboo),
        "attached": dict(cert.attached),
        "pieces": [list(p) for p in cert.pieces],
        "designated": cert.designated,
        "m": cert.m,
        "positions": list(cert.positions),
        "contracts_to_empty": cert.contraction.empty,
        "contraction_steps": [
            {"vertex": s.vertex, "neighbors": list(s.neighbors)}
            for s in cert.contraction.steps
        ],
    }


def supergraph_dot(cert: DecompositionCertificate) -> str:
    """DOT text of the supergraph with attached weight-1 vertices highlighted."""
    sg = cert.supergraph
    original = set(cert.graph.ids)
    lines = ["graph decomposition_supergraph {"]
    for vid, w in zip(sg.ids, sg.weights):
        style = "" if vid in original else ", style=filled, fillcolor=lightgrey"
        lines.append(f'  "{vid}" [label="{vid} ({w})"{style}];')
    for i, j in sorted(sg.edges):
        lines.append(f'  "{sg.ids[i]}" -- "{sg.ids[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
