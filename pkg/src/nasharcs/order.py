"""The divisorial order relation and its non-inclusion consequences.

Two exceptional divisors are compared through the orders that functions
on the singularity can take along them; computationally that reduces to
comparing rows of the inverted intersection matrix.  Each strict
comparison yields a proof that one Nash family closure is not contained
in the other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator

from .cycles import Cycle, is_anti_nef, order_cycle_witness
from .errors import EqualityDetected, InconsistentRelation, SameVertex
from .graph import WeightedDualGraph


class Verdict(enum.Enum):
    INCOMPARABLE = "incomparable"
    LESS = "less"
    GREATER = "greater"


@dataclass(frozen=True)
class NashRelation:
    """Verdict for an ordered vertex pair (i, j) with its witness cycles.

    witness_ij, when present, is an anti-nef cycle whose coefficient at i
    is strictly below the one at j (and symmetrically for witness_ji).
    Both present means incomparable; exactly one means a strict order.
    Both absent cannot happen over an invertible intersection matrix and
    raises instead of being represented.
    """

    verdict: Verdict
    witness_ij: Cycle | None
    witness_ji: Cycle | None

    def reversed(self) -> "NashRelation":
        flip = {
            Verdict.LESS: Verdict.GREATER,
            Verdict.GREATER: Verdict.LESS,
            Verdict.INCOMPARABLE: Verdict.INCOMPARABLE,
        }
        return NashRelation(flip[self.verdict], self.witness_ji, self.witness_ij)


def relate(g: WeightedDualGraph, i: int, j: int) -> NashRelation:
    """Decide the relation between divisors i and j."""
    if i == j:
        raise SameVertex("cannot relate a divisor to itself")
    w_ij = order_cycle_witness(g, i, j)
    w_ji = order_cycle_witness(g, j, i)
    if w_ij is not None and w_ji is not None:
        return NashRelation(Verdict.INCOMPARABLE, w_ij, w_ji)
    if w_ij is not None:
        return NashRelation(Verdict.LESS, w_ij, None)
    if w_ji is not None:
        return NashRelation(Verdict.GREATER, None, w_ji)
    raise EqualityDetected(
        f"divisors {i} and {j} compare equal on every ray; "
        "the intersection matrix cannot be invertible"
    )


@dataclass(frozen=True)
class RelationMatrix:
    """Complete relation table for a graph, plus the proven non-inclusions."""

    graph: WeightedDualGraph
    relations: tuple[tuple[tuple[int, int], NashRelation], ...]

    def get(self, i: int, j: int) -> NashRelation:
        for pair, rel in self.relations:
            if pair == (i, j):
                return rel
        raise SameVertex(f"no relation stored for pair ({i}, {j})")

    def pairs(self) -> Iterator[tuple[tuple[int, int], NashRelation]]:
        return iter(self.relations)

    def non_inclusions(self) -> frozenset[tuple[int, int]]:
        """Ordered pairs (a, b) with a proof that closure(N_a) is not in closure(N_b)."""
        out = set()
        for (i, j), rel in self.relations:
            if rel.verdict in (Verdict.INCOMPARABLE, Verdict.LESS):
                out.add((i, j))
        return frozenset(out)

    def open_pairs(self) -> frozenset[tuple[int, int]]:
        proven = self.non_inclusions()
        n = self.graph.n
        return frozenset(
            (i, j) for i in range(n) for j in range(n) if i != j and (i, j) not in proven
        )


def _verify_table(rm: RelationMatrix) -> None:
    """Post-hoc sanity: witness validity, antisymmetry, transitivity of Less."""
    g = rm.graph
    less = set()
    for (i, j), rel in rm.pairs():
        for vertex_lo, vertex_hi, w in (
            (i, j, rel.witness_ij),
            (j, i, rel.witness_ji),
        ):
            if w is not None and not (
                is_anti_nef(g, w) and w[vertex_lo] < w[vertex_hi]
            ):
                raise InconsistentRelation(f"bad witness for pair ({i}, {j})")
        if rel.verdict is Verdict.LESS:
            less.add((i, j))
        elif rel.verdict is Verdict.GREATER:
            less.add((j, i))
    for (a, b) in less:
        if (b, a) in less:
            raise InconsistentRelation(f"antisymmetry violated on ({a}, {b})")
        for c in range(g.n):
            if (b, c) in less and (a, c) not in less:
                raise InconsistentRelation(
                    f"transitivity violated on ({a}, {b}, {c})"
                )


@lru_cache(maxsize=None)
def relation_matrix(g: WeightedDualGraph) -> RelationMatrix:
    """Relate every ordered pair and verify the table's coherence."""
    relations = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            rel = relate(g, i, j)
            relations.append(((i, j), rel))
            relations.append(((j, i), rel.reversed()))
    rm = RelationMatrix(graph=g, relations=tuple(relations))
    _verify_table(rm)
    return rm


def less_pairs(rm: RelationMatrix) -> set[tuple[int, int]]:
    return {
        pair for pair, rel in rm.pairs() if rel.verdict is Verdict.LESS
    }


def hasse_edges(rm: RelationMatrix) -> list[tuple[int, int]]:
    """Transitive reduction of the strict order."""
    less = less_pairs(rm)
    out = []
    for (i, j) in sorted(less):
        if not any((i, k) in less and (k, j) in less for k in range(rm.graph.n)):
            out.append((i, j))
    return out


def hasse_export(rm: RelationMatrix) -> str:
    """DOT text for the order's Hasse diagram."""
    g = rm.graph
    lines = ["digraph divisor_order {"]
    for vid in g.ids:
        lines.append(f'  "{vid}";')
    for i, j in hasse_edges(rm):
        lines.append(f'  "{g.ids[i]}" -> "{g.ids[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def an_relation(m: int, i: int, j: int) -> NashRelation:
    """Closed-form relation on the weight-2 bamboo with m vertices.

    The order vectors of the two coordinate functions on z^(m+1) = x y
    are (1, 2, ..., m) and (m, ..., 2, 1); each separates any pair in one
    direction, so every pair is incomparable.  Indices are 0-based.
    """
    if i == j:
        raise SameVertex("cannot relate a divisor to itself")
    up = tuple(range(1, m + 1))
    down = tuple(range(m, 0, -1))
    w_ij = up if i < j else down
    w_ji = down if i < j else up
    return NashRelation(Verdict.INCOMPARABLE, w_ij, w_ji)


def serialize_relation_matrix(rm: RelationMatrix) -> dict[str, Any]:
    g = rm.graph
    pairs = []
    for (i, j), rel in sorted(rm.pairs()):
        pairs.append(
            {
                "i": g.ids[i],
                "j": g.ids[j],
                "verdict": rel.verdict.value,
                "witness_ij": list(rel.witness_ij) if rel.witness_ij else None,
                "witness_ji": list(rel.witness_ji) if rel.witness_ji else None,
            }
        )
    return {
        "vertices": list(g.ids),
        "pairs": pairs,
        "non_inclusions": sorted(
            [g.ids[a], g.ids[b]] for a, b in rm.non_inclusions()
        ),
    }
