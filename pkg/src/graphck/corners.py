"""Stabilization, corner graphs, and the spike/star unitization graphs.

The stabilization of a graph attaches an infinite head
v ← v¹ ← v² ← ... to every vertex v.  A corner graph is the subgraph of
the stabilization induced on a hereditary vertex set containing every
base vertex, encoded compactly as the base graph plus a per-vertex head
length in ℕ₀ ∪ {∞}.  Corner graphs are exactly the receivers produced
by the projection calculus: a multiplicity vector n with every
n_v >= 1 yields head lengths n_v - 1.

For a hereditary set H the spike graph adds one fresh vertex per path
that enters H from outside, while the star graph funnels all those
paths through a single new vertex; the star graph realizes the minimal
unitization of the algebra carried by the corner graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CannotRealizeError, DomainError, ValidationError
from .extnat import INF, ExtNat
from .graph import Graph, dominates, is_hereditary


@dataclass(frozen=True)
class CornerGraph:
    """A base graph plus a head length h_v in ℕ₀ ∪ {∞} for every vertex."""

    base: Graph
    heads: tuple  # of (vertex, ExtNat), in base vertex order

    def __post_init__(self):
        names = [v for v, _ in self.heads]
        if names != list(self.base.vertices):
            raise ValidationError("heads must cover exactly the base vertices, in order")

    def head(self, v: str) -> ExtNat:
        return dict(self.heads)[v]

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "heads": {v: h.to_json() for v, h in self.heads},
        }

    @staticmethod
    def from_json(data) -> "CornerGraph":
        base = Graph.from_json(data["base"])
        heads = data.get("heads", {})
        try:
            pairs = tuple((v, ExtNat.of(heads[v])) for v in base.vertices)
        except KeyError as exc:
            raise ValidationError(f"missing head for vertex {exc}") from exc
        return CornerGraph(base, pairs)


def make_corner(base: Graph, heads: dict) -> CornerGraph:
    missing = [v for v in base.vertices if v not in heads]
    if missing:
        raise ValidationError(f"missing heads for {missing}")
    extra = [v for v in heads if not base.has_vertex(v)]
    if extra:
        raise ValidationError(f"heads for unknown vertices {extra}")
    return CornerGraph(base, tuple((v, ExtNat.of(heads[v])) for v in base.vertices))


def stabilize(g: Graph) -> CornerGraph:
    """The full stabilization: an infinite head on every vertex."""
    return CornerGraph(g, tuple((v, INF) for v in g.vertices))


def corner_graph(g: Graph, multiplicities: dict) -> CornerGraph:
    """Corner graph for a multiplicity vector with every n_v >= 1.

    Head lengths are n_v - 1; a zero multiplicity would drop a base
    vertex and is rejected.
    """
    missing = [v for v in g.vertices if v not in multiplicities]
    if missing:
        raise ValidationError(f"multiplicities missing for {missing}")
    heads = []
    for v in g.vertices:
        m = ExtNat.of(multiplicities[v])
        if not m:
            raise DomainError(f"multiplicity of {v!r} must be at least 1")
        heads.append((v, m.dec()))
    return CornerGraph(g, tuple(heads))


def realize(cg: CornerGraph) -> Graph:
    """Expand finite heads into explicit chain vertices v^i → v^(i-1) → ... → v."""
    if any(h.is_infinite for _, h in cg.heads):
        raise CannotRealizeError("infinite heads have no finite expansion")
    base = cg.base
    taken = set(base.vertices)
    chains = {}
    for v, h in cg.heads:
        chain = []
        for i in range(1, int(h) + 1):
            name = f"{v}^{i}"
            while name in taken:
                name += "'"
            taken.add(name)
            chain.append(name)
        chains[v] = chain
    vertices = list(base.vertices)
    for v in base.vertices:
        vertices.extend(chains[v])
    zero = ExtNat(0)
    index = {w: i for i, w in enumerate(vertices)}
    rows = [[zero] * len(vertices) for _ in vertices]
    for x in base.vertices:
        for y in base.vertices:
            rows[index[x]][index[y]] = base.a(x, y)
    one = ExtNat(1)
    for v in base.vertices:
        prev = v
        for name in chains[v]:
            rows[index[name]][index[prev]] = one
            prev = name
    return Graph(vertices, rows)


def build_EH(g: Graph, H) -> Graph:
    """The spike graph of a hereditary set H: one fresh source per entering path.

    Requires: H hereditary; the subgraph outside H acyclic and made of
    regular vertices, each of which dominates H; and a finite bound on
    the length of entering paths (automatic for a finite acyclic
    complement, but checked).  Paths are enumerated explicitly, so every
    vertex outside H must be a finite emitter.
    """
    H = frozenset(H)
    for v in H:
        g.index(v)
    if not is_hereditary(g, H):
        raise DomainError("H is not hereditary")
    comp = [v for v in g.vertices if v not in H]
    for v in comp:
        if not g.is_regular(v):
            raise DomainError(f"vertex {v!r} outside H is not regular")
        if not any(dominates(g, v, h) for h in H):
            raise DomainError(f"vertex {v!r} outside H does not dominate H")
    inner = g.induced(comp)
    if any(simple_cycles_exist(inner, v) for v in inner.vertices):
        raise DomainError("the subgraph outside H has a cycle")
    _longest_path_len(inner)  # the bound exists for a finite acyclic complement

    paths = _entering_paths(g, H, comp)
    names = []
    taken = set(g.vertices)
    for seq in paths:
        name = "·".join(f"e({e.src}→{e.dst},{e.index})" for e in seq)
        while name in taken:
            name += "'"
        taken.add(name)
        names.append(name)

    vs = [v for v in g.vertices if v in H] + names
    zero = ExtNat(0)
    index = {w: i for i, w in enumerate(vs)}
    rows = [[zero] * len(vs) for _ in vs]
    for x in H:
        for y in H:
            rows[index[x]][index[y]] = g.a(x, y)
    one = ExtNat(1)
    for name, seq in zip(names, paths):
        rows[index[name]][index[seq[-1].dst]] = one
    return Graph(vs, rows)


def simple_cycles_exist(g: Graph, v: str) -> bool:
    return dominates(g, v, v)


def _longest_path_len(dag: Graph) -> int:
    memo = {}

    def depth(v):
        if v not in memo:
            memo[v] = 1 + max((depth(w) for w in dag.successors(v)), default=0)
        return memo[v]

    return max((depth(v) for v in dag.vertices), default=0)


def _entering_paths(g: Graph, H: frozenset, comp: list) -> list:
    """All edge paths that stay outside H and then cross into it, in DFS order."""
    from .graph import EdgeRef

    out = []

    def extend(prefix, at):
        for w in g.vertices:
            m = g.a(at, w)
            if not m:
                continue
            count = int(m)  # complement vertices are regular, entries finite
            for i in range(count):
                e = EdgeRef(at, w, i)
                if w in H:
                    out.append(prefix + [e])
                else:
                    extend(prefix + [e], w)

    for start in comp:
        extend([], start)
    return out


def unitize(cg: CornerGraph) -> Graph:
    """The star graph of a corner graph: one fresh vertex emitting h_v edges to each v.

    Every head vertex contributes exactly one path entering the base, so
    the star vertex emits h_v edges toward v; it receives nothing.  The
    star is a finite emitter exactly when all heads are finite (and a
    sink when they are all zero).
    """
    base = cg.base
    star = "⋆"
    while base.has_vertex(star):
        star += "'"
    vs = list(base.vertices) + [star]
    zero = ExtNat(0)
    rows = []
    for x in base.vertices:
        rows.append([base.a(x, y) for y in base.vertices] + [zero])
    rows.append([cg.head(v) for v in base.vertices] + [zero])
    return Graph(vs, rows)
