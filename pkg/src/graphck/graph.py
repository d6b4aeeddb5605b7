"""Directed multigraphs with edge multiplicities in ℕ ∪ {∞}.

A graph is a finite ordered list of vertices together with a square
adjacency matrix over the extended naturals: ``A(u, v)`` is the number
of edges from ``u`` to ``v``.  Individual parallel edges are addressed
positionally as ``EdgeRef(src, dst, index)`` with ``index < A(src, dst)``
(every index is valid when the entry is ∞), so finite edge sets remain
representable even at vertices emitting infinitely many edges.

Traversals treat ``A(u, v) >= 1`` as "there is an edge" and never
enumerate infinite families.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, NotFoundError, ValidationError
from .extnat import ExtNat


class EdgeRef(NamedTuple):
    """One parallel edge from ``src`` to ``dst``, addressed by position."""

    src: str
    dst: str
    index: int

    def to_json(self):
        return [self.src, self.dst, self.index]

    @staticmethod
    def from_json(data) -> "EdgeRef":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise ValidationError(f"edge must be [src, dst, index], got {data!r}")
        src, dst, idx = data
        if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
            raise ValidationError(f"edge index must be a nonnegative int, got {idx!r}")
        return EdgeRef(str(src), str(dst), idx)


class Graph:
    """Immutable directed multigraph over a finite vertex list."""

    __slots__ = ("vertices", "adjacency", "_pos")

    def __init__(self, vertices: Sequence[str], adjacency: Sequence[Sequence]):
        vs = tuple(str(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise ValidationError("duplicate vertex names")
        rows = []
        if len(adjacency) != len(vs):
            raise ValidationError(
                f"adjacency has {len(adjacency)} rows for {len(vs)} vertices"
            )
        for row in adjacency:
            if len(row) != len(vs):
                raise ValidationError(
                    f"adjacency row of length {len(row)} for {len(vs)} vertices"
                )
            try:
                rows.append(tuple(ExtNat.of(x) for x in row))
            except DomainError as exc:
                raise ValidationError(str(exc)) from exc
        self.vertices = vs
        self.adjacency = tuple(rows)
        self._pos = {v: i for i, v in enumerate(vs)}

    # -- basic access --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise NotFoundError(f"no vertex named {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._pos

    def a(self, u: str, v: str) -> ExtNat:
        return self.adjacency[self.index(u)][self.index(v)]

    def row(self, v: str) -> tuple:
        return self.adjacency[self.index(v)]

    def out_degree(self, v: str) -> ExtNat:
        total = ExtNat(0)
        for x in self.row(v):
            total = total + x
        return total

    def in_degree(self, v: str) -> ExtNat:
        j = self.index(v)
        total = ExtNat(0)
        for row in self.adjacency:
            total = total + row[j]
        return total

    def is_sink(self, v: str) -> bool:
        return not any(self.row(v))

    def is_infinite_emitter(self, v: str) -> bool:
        return self.out_degree(v).is_infinite

    def is_regular(self, v: str) -> bool:
        d = self.out_degree(v)
        return d.is_finite and bool(d)

    def is_source(self, v: str) -> bool:
        return not bool(self.in_degree(v))

    def supports_loop(self, v: str) -> bool:
        return bool(self.a(v, v))

    def successors(self, v: str) -> tuple:
        row = self.row(v)
        return tuple(w for w, x in zip(self.vertices, row) if x)

    def predecessors(self, v: str) -> tuple:
        j = self.index(v)
        return tuple(u for u, row in zip(self.vertices, self.adjacency) if row[j])

    def edge_valid(self, e: EdgeRef) -> bool:
        if not (self.has_vertex(e.src) and self.has_vertex(e.dst)) or e.index < 0:
            return False
        m = self.a(e.src, e.dst)
        return m.is_infinite or e.index < int(m)

    def edges_from(self, v: str) -> tuple:
        """All out-edges of a finite emitter, in positional order."""
        if self.is_infinite_emitter(v):
            raise DomainError(f"cannot enumerate the edges of infinite emitter {v!r}")
        out = []
        for w, m in zip(self.vertices, self.row(v)):
            out.extend(EdgeRef(v, w, i) for i in range(int(m)))
        return tuple(out)

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.vertices, self.adjacency))

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {self.n}x{self.n})"

    # -- derived graphs -------------------------------------------------

    def to_lists(self) -> list:
        """Mutable copy of the adjacency, for building derived graphs."""
        return [list(row) for row in self.adjacency]

    def induced(self, keep: Iterable[str]) -> "Graph":
        """Induced subgraph on ``keep``, preserving this graph's vertex order."""
        keep = set(keep)
        vs = [v for v in self.vertices if v in keep]
        idx = [self.index(v) for v in vs]
        rows = [[self.adjacency[i][j] for j in idx] for i in idx]
        return Graph(vs, rows)

    def relabeled(self, mapping: dict) -> "Graph":
        return Graph([mapping.get(v, v) for v in self.vertices], self.adjacency)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "adjacency": [[x.to_json() for x in row] for row in self.adjacency],
        }

    @staticmethod
    def from_json(data) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data or "adjacency" not in data:
            raise ValidationError("graph JSON needs 'vertices' and 'adjacency'")
        return Graph(data["vertices"], data["adjacency"])

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), ensure_ascii=False)

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def to_dot(self, name: str = "G") -> str:
        """DOT text with one rendered edge per vertex pair, labeled by multiplicity."""
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for u in self.vertices:
            for w, m in zip(self.vertices, self.row(u)):
                if m:
                    label = "∞" if m.is_infinite else str(int(m))
                    lines.append(f'  "{u}" -> "{w}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def make_graph(vertices: Sequence[str], adjacency: Sequence[Sequence]) -> Graph:
    """Validate and build a graph from a vertex list and a square matrix.

    Entries may be ints, ``ExtNat`` values, or the string ``"inf"``.
    """
    return Graph(vertices, adjacency)


@dataclass(frozen=True)
class VertexClass:
    """Structural classification of a single vertex."""

    kind: str  # "regular" | "sink" | "infinite-emitter"
    is_source: bool
    supports_loop: bool
    loop_count: ExtNat

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "is_source": self.is_source,
            "supports_loop": self.supports_loop,
            "loop_count": self.loop_count.to_json(),
        }


def vertex_class(g: Graph, v: str) -> VertexClass:
    """Classify ``v`` as regular, sink or infinite emitter, with source/loop flags.

    A vertex is regular when it emits finitely many edges and at least
    one, a sink when it emits none, and an infinite emitter otherwise.
    """
    d = g.out_degree(v)
    if d.is_infinite:
        kind = "infinite-emitter"
    elif bool(d):
        kind = "regular"
    else:
        kind = "sink"
    return VertexClass(
        kind=kind,
        is_source=g.is_source(v),
        supports_loop=g.supports_loop(v),
        loop_count=g.a(v, v),
    )


def reaches(g: Graph, v: str, w: str) -> bool:
    """True when there is a path from ``v`` to ``w``, possibly of length zero."""
    if v == w:
        g.index(v)
        return True
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for y in g.successors(u):
            if y == w:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def dominates(g: Graph, v: str, w: str) -> bool:
    """True when there is a path of nonzero length from ``v`` to ``w``.

    For distinct vertices this agrees with :func:`reaches`; for
    ``v == w`` it demands an honest cycle through ``v``.
    """
    g.index(w)
    return any(reaches(g, u, w) for u in g.successors(v))


def shortest_nonzero_path(g: Graph, v: str, w: str) -> list:
    """A shortest path of length >= 1 from ``v`` to ``w``, as a vertex list.

    Raises :class:`NotFoundError` when ``v`` does not dominate ``w``.
    """
    best = None
    for u in g.successors(v):
        if u == w:
            return [v, w]
        prev = {u: None}
        queue = deque([u])
        found = None
        while queue:
            x = queue.popleft()
            for y in g.successors(x):
                if y not in prev:
                    prev[y] = x
                    if y == w:
                        found = y
                        queue.clear()
                        break
                    queue.append(y)
        if found is not None:
            path = [w]
            x = prev[w]
            while x is not None:
                path.append(x)
                x = prev[x]
            path.append(v)
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
    if best is None:
        raise NotFoundError(f"{v!r} does not dominate {w!r}")
    return best


def hereditary_closure(g: Graph, S: Iterable[str]) -> frozenset:
    """Smallest superset of ``S`` closed under forward reachability."""
    out = set()
    queue = deque()
    for v in S:
        g.index(v)
        if v not in out:
            out.add(v)
            queue.append(v)
    while queue:
        u = queue.popleft()
        for y in g.successors(u):
            if y not in out:
                out.add(y)
                queue.append(y)
    return frozenset(out)


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    H = set(H)
    return all(set(g.successors(v)) <= H for v in H)


def saturate(g: Graph, H: Iterable[str]) -> frozenset:
    """Smallest saturated superset of ``H``.

    A set is saturated when it contains every regular vertex all of
    whose edges land inside it.  The rule never applies to sinks or to
    infinite emitters.
    """
    out = set(H)
    for v in out:
        g.index(v)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v not in out and g.is_regular(v) and set(g.successors(v)) <= out:
                out.add(v)
                changed = True
    return frozenset(out)


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    H = set(H)
    return all(
        v in H
        for v in g.vertices
        if g.is_regular(v) and set(g.successors(v)) <= H
    )


def _clamped(m: ExtNat, cap: int) -> int:
    return cap if m.is_infinite else min(int(m), cap)


def simple_cycle_count_at(g: Graph, v: str, cap: int = 2) -> int:
    """Count the simple cycles based at ``v``, truncated at ``cap``.

    A cycle is simple when it returns to its base vertex only once.
    Parallel edges give distinct cycles, so multiplicities along a cycle
    multiply (an ∞ entry anywhere counts as at least ``cap``).  Interior
    vertices may repeat; any such cycle forces the count past 1 because
    dropping the interior detour leaves a second, shorter simple cycle.
    """
    g.index(v)
    total = 0
    found = []  # vertex tuples of interior-simple cycles, kept while total <= 1
    stack = [(v, frozenset(), 1, ())]
    while stack:
        cur, visited, prod, trail = stack.pop()
        for w, m in zip(g.vertices, g.row(cur)):
            if not m:
                continue
            p = min(prod * _clamped(m, cap), cap)
            if w == v:
                total += p
                found.append(trail)
                if total >= cap:
                    return cap
            elif w not in visited:
                stack.append((w, visited | {w}, p, trail + (w,)))
    if total == 1:
        # one interior-simple cycle; a detour cycle at any of its interior
        # vertices (avoiding v) would yield a second simple cycle
        for u in found[0]:
            if _on_cycle_avoiding(g, u, v):
                return cap
    return total


def _on_cycle_avoiding(g: Graph, u: str, avoid: str) -> bool:
    seen = set()
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.successors(x):
            if y == avoid:
                continue
            if y == u:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def condition_K(g: Graph) -> bool:
    """True when every vertex has either no cycle or at least two simple cycles."""
    for v in g.vertices:
        if g.a(v, v) >= 2:
            continue
        if simple_cycle_count_at(g, v) == 1:
            return False
    return True


def _entry_key(x: ExtNat):
    return (x.is_infinite, int(x) if x.is_finite else 0)


def _signature(g: Graph, i: int):
    row = g.adjacency[i]
    col = tuple(g.adjacency[j][i] for j in range(g.n))
    return (
        tuple(sorted(_entry_key(x) for x in row)),
        tuple(sorted(_entry_key(x) for x in col)),
        _entry_key(row[i]),
    )


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Graph isomorphism on adjacency matrices (edge indices are ignored)."""
    if g1.n != g2.n:
        return False
    sig1 = [_signature(g1, i) for i in range(g1.n)]
    sig2 = [_signature(g2, i) for i in range(g2.n)]
    if sorted(sig1) != sorted(sig2):
        return False
    candidates = [
        [j for j in range(g2.n) if sig2[j] == sig1[i]] for i in range(g1.n)
    ]
    order = sorted(range(g1.n), key=lambda i: len(candidates[i]))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def ok(i: int, j: int) -> bool:
        for i2, j2 in assign.items():
            if g1.adjacency[i][i2] != g2.adjacency[j][j2]:
                return False
            if g1.adjacency[i2][i] != g2.adjacency[j2][j]:
                return False
        return g1.adjacency[i][i] == g2.adjacency[j][j]

    def backtrack(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for j in candidates[i]:
            if j not in used and ok(i, j):
                assign[i] = j
                used.add(j)
                if backtrack(k + 1):
                    return True
                del assign[i]
                used.remove(j)
        return False

    return backtrack(0)


def fresh_names(base: str, count: int, taken: Iterable[str]) -> list:
    """Deterministic names ``base^1 .. base^count`` avoiding ``taken``."""
    taken = set(taken)
    out = []
    for i in range(1, count + 1):
        name = f"{base}^{i}"
        while name in taken:
            name += "'"
        taken.add(name)
        out.append(name)
    return out
