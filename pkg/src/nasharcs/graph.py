"""Weighted dual resolution graphs.

A graph has one vertex per exceptional curve, an edge per intersection
point, and a positive integer weight per vertex equal to minus the
curve's self-intersection.  Graphs must be trees; weights must be >= 2
unless the graph is flagged auxiliary (auxiliary graphs carry the
weight-1 vertices produced by the embedding constructions).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable

from .errors import BadWeight, MalformedDocument, NotATree
from .rational import RationalMatrix, require_symmetric


@dataclass(frozen=True)
class WeightedDualGraph:
    """Immutable weighted tree; vertices are dense indices 0..n-1 with string ids."""

    ids: tuple[str, ...]
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # pairs (i, j) with i < j
    auxiliary: bool = False

    def __post_init__(self) -> None:
        n = len(self.ids)
        if n == 0:
            raise MalformedDocument("graph needs at least one vertex")
        if len(set(self.ids)) != n:
            raise MalformedDocument("duplicate vertex ids")
        if len(self.weights) != n:
            raise MalformedDocument("weights length does not match vertices")
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise BadWeight(f"weight {w!r} must be an integer >= 1")
            if w == 1 and not self.auxiliary:
                raise BadWeight("weight 1 only allowed on auxiliary graphs")
        for e in self.edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise MalformedDocument(f"edge {e} out of range")
            if i >= j:
                raise MalformedDocument(f"edge {e} not normalized or self-loop")
        if len(self.edges) != n - 1 or not self._connected():
            raise NotATree("graph must be a connected tree")

    def _connected(self) -> bool:
        n = len(self.ids)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    stack.append(u)
        return count == n

    @property
    def n(self) -> int:
        return len(self.ids)

    def index_of(self, vid: str) -> int:
        try:
            return self.ids.index(vid)
        except ValueError:
            raise MalformedDocument(f"unknown vertex id {vid!r}") from None

    def neighbors(self, i: int) -> tuple[int, ...]:
        return adjacency(self)[i]

    def valence(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def leaves(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.valence(i) <= 1)

    def path(self, i: int, j: int) -> tuple[int, ...]:
        """Unique tree path from i to j, endpoints included."""
        parent = {i: None}
        stack = [i]
        while stack:
            v = stack.pop()
            if v == j:
                break
            for u in self.neighbors(v):
                if u not in parent:
                    parent[u] = v
                    stack.append(u)
        out = [j]
        while out[-1] != i:
            out.append(parent[out[-1]])
        return tuple(reversed(out))


def make_graph(
    vertices: Iterable[tuple[str, int]],
    edges: Iterable[tuple[str, str]],
    auxiliary: bool = False,
) -> WeightedDualGraph:
    """Build a graph from (id, weight) pairs and id-labelled edges."""
    vlist = list(vertices)
    ids = tuple(v for v, _ in vlist)
    index = {v: k for k, (v, _) in enumerate(vlist)}
    if len(index) != len(vlist):
        raise MalformedDocument("duplicate vertex ids")
    norm = set()
    for a, b in edges:
        if a not in index or b not in index:
            raise MalformedDocument(f"edge ({a!r}, {b!r}) references unknown vertex")
        if a == b:
            raise MalformedDocument(f"self-loop on {a!r}")
        e = (min(index[a], index[b]), max(index[a], index[b]))
        if e in norm:
            raise MalformedDocument(f"multi-edge between {a!r} and {b!r}")
        norm.add(e)
    return WeightedDualGraph(
        ids=ids,
        weights=tuple(w for _, w in vlist),
        edges=frozenset(norm),
        auxiliary=auxiliary,
    )


def parse_graph(document: str | dict[str, Any]) -> WeightedDualGraph:
    """Parse the JSON graph schema; see `serialize_graph` for the format."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise MalformedDocument("document must be a JSON object")
    try:
        raw_vertices = document["vertices"]
        raw_edges = document.get("edges", [])
    except (TypeError, KeyError):
        raise MalformedDocument("missing 'vertices'") from None
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise MalformedDocument("'vertices' and 'edges' must be lists")
    vertices = []
    for v in raw_vertices:
        if not isinstance(v, dict) or "id" not in v or "w" not in v:
            raise MalformedDocument(f"bad vertex entry {v!r}")
        if not isinstance(v["id"], str) or not isinstance(v["w"], int):
            raise MalformedDocument(f"bad vertex entry {v!r}")
        vertices.append((v["id"], v["w"]))
    edges = []
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 2:
            raise MalformedDocument(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    auxiliary = bool(document.get("auxiliary", False))
    return make_graph(vertices, edges, auxiliary=auxiliary)


def serialize_graph(g: WeightedDualGraph) -> dict[str, Any]:
    """Emit the JSON schema; vertex order is preserved."""
    doc: dict[str, Any] = {
        "vertices": [{"id": vid, "w": w} for vid, w in zip(g.ids, g.weights)],
        "edges": sorted([g.ids[i], g.ids[j]] for i, j in g.edges),
    }
    if g.auxiliary:
        doc["auxiliary"] = True
    return doc


@lru_cache(maxsize=None)
def adjacency(g: WeightedDualGraph) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbor lists, computed once per graph."""
    out: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.edges:
        out[i].append(j)
        out[j].append(i)
    return tuple(tuple(sorted(nbrs)) for nbrs in out)


@lru_cache(maxsize=None)
def intersection_matrix(g: WeightedDualGraph) -> RationalMatrix:
    """M[i][i] = -w(i); M[i][j] = 1 iff i--j is an edge."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -g.weights[i]
    for i, j in g.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return RationalMatrix(rows)


def is_negative_definite(m: RationalMatrix) -> bool:
    """Sylvester criterion on -M with exact minors."""
    require_symmetric(m)
    return all(d > 0 for d in (-m).leading_principal_minors())


@lru_cache(maxsize=None)
def graph_is_negative_definite(g: WeightedDualGraph) -> bool:
    return is_negative_definite(intersection_matrix(g))
