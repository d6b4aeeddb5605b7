"""Hereditary saturated subsets, breaking vertices, and the ideal lattice.

The gauge-invariant ideal structure of the algebra of a finite-vertex
graph is indexed by admissible pairs (H, S): a hereditary saturated
vertex set H together with a set S of breaking vertices for H.  A
breaking vertex for H is an infinite emitter with finitely many, but at
least one, edges into the complement of H.  This module enumerates all
admissible pairs, orders them, and builds the restriction graph whose
algebra realizes a given pair's ideal up to stable isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .extnat import ExtNat
from .graph import Graph, is_hereditary, is_saturated


@dataclass(frozen=True)
class AdmissiblePair:
    """A hereditary saturated set H with breaking vertices S for it."""

    h: frozenset
    s: frozenset

    def to_json(self) -> dict:
        return {"H": sorted(self.h), "S": sorted(self.s)}


@dataclass(frozen=True)
class IdealLattice:
    """All admissible pairs of a graph under containment order.

    (H1, S1) <= (H2, S2) iff H1 ⊆ H2 and S1 ⊆ H2 ∪ S2.  The order has
    bottom (∅, ∅) and top (all vertices, ∅).
    """

    nodes: tuple
    order: frozenset  # of (i, j) index pairs with nodes[i] <= nodes[j]

    def leq(self, a: AdmissiblePair, b: AdmissiblePair) -> bool:
        return a.h <= b.h and a.s <= (b.h | b.s)

    def bottom(self) -> AdmissiblePair:
        return AdmissiblePair(frozenset(), frozenset())

    def top(self) -> AdmissiblePair:
        return max(self.nodes, key=lambda p: (len(p.h), len(p.s)))

    def hasse_edges(self) -> list:
        """Covering relations of the order, as index pairs."""
        strict = {
            (i, j) for (i, j) in self.order if i != j
        }
        out = []
        for i, j in sorted(strict):
            if not any((i, k) in strict and (k, j) in strict for k in range(len(self.nodes))):
                out.append((i, j))
        return out

    def to_json(self) -> dict:
        return {
            "nodes": [p.to_json() for p in self.nodes],
            "order": sorted([i, j] for (i, j) in self.order),
        }

    def to_dot(self) -> str:
        lines = ["digraph ideals {", "  rankdir=BT;"]
        for i, p in enumerate(self.nodes):
            h = ",".join(sorted(p.h)) or "∅"
            s = ",".join(sorted(p.s))
            label = f"({{{h}}},{{{s}}})" if s else f"({{{h}}},∅)"
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.hasse_edges():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def breaking_vertices(g: Graph, H) -> frozenset:
    """Infinite emitters with finitely many, but some, edges leaving into E⁰ \\ H."""
    H = frozenset(H)
    for v in H:
        g.index(v)
    if not is_hereditary(g, H):
        raise DomainError("H is not hereditary")
    if not is_saturated(g, H):
        raise DomainError("H is not saturated")
    out = []
    for v in g.vertices:
        if not g.is_infinite_emitter(v):
            continue
        leaving = ExtNat(0)
        for w in g.vertices:
            if w not in H:
                leaving = leaving + g.a(v, w)
        if leaving.is_finite and bool(leaving):
            out.append(v)
    return frozenset(out)


def saturated_hereditary_sets(g: Graph, max_vertices: int = 16) -> list:
    """All saturated hereditary subsets, by filtering the full power set."""
    if g.n > max_vertices:
        raise DomainError(
            f"refusing to enumerate 2^{g.n} subsets; raise max_vertices to force"
        )
    out = []
    vs = list(g.vertices)
    for k in range(g.n + 1):
        for combo in combinations(vs, k):
            H = frozenset(combo)
            if is_hereditary(g, H) and is_saturated(g, H):
                out.append(H)
    return out


def admissible_pairs(g: Graph, max_vertices: int = 16) -> IdealLattice:
    """Enumerate every admissible pair and the containment order between them."""
    nodes = []
    for H in saturated_hereditary_sets(g, max_vertices):
        bv = sorted(breaking_vertices(g, H))
        for k in range(len(bv) + 1):
            for combo in combinations(bv, k):
                nodes.append(AdmissiblePair(H, frozenset(combo)))
    nodes.sort(key=lambda p: (len(p.h), sorted(p.h), len(p.s), sorted(p.s)))
    nodes = tuple(nodes)
    order = frozenset(
        (i, j)
        for i, a in enumerate(nodes)
        for j, b in enumerate(nodes)
        if a.h <= b.h and a.s <= (b.h | b.s)
    )
    return IdealLattice(nodes, order)


def restriction_graph(g: Graph, pair: AdmissiblePair) -> Graph:
    """The subgraph carrying the ideal of an admissible pair.

    Vertices are H ∪ S.  All edges with source in H survive; vertices of
    S keep only their edges into H.
    """
    H, S = pair.h, pair.s
    for v in H | S:
        g.index(v)
    if not (is_hereditary(g, H) and is_saturated(g, H)):
        raise DomainError("H is not saturated hereditary")
    if not S <= breaking_vertices(g, H):
        raise DomainError("S contains non-breaking vertices")
    keep = [v for v in g.vertices if v in H | S]
    rows = []
    for x in keep:
        row = []
        for y in keep:
            if x in H and y in H:
                row.append(g.a(x, y))
            elif x in S and y in H:
                row.append(g.a(x, y))
            else:
                row.append(ExtNat(0))
        rows.append(row)
    return Graph(keep, rows)
