"""Elementary moves on graphs, with replayable provenance records.

Each move is a pure function from a graph to a new graph, defined by an
explicit adjacency transformation.  All of them preserve the stable
isomorphism class of the associated algebra, which at the level of this
package means they leave the integer-matrix K-theory pair unchanged;
that invariance is what the test suite certifies on random corpora.

The moves:

* ``out_split``       distribute a vertex's out-edges over fresh copies
* ``collapse``        remove a loopless regular vertex, composing edges
* ``remove_regular_sources``  delete regular sources to a fixed point
* ``move_T``          add an infinite parallel family along a path whose
                      first edge already has infinitely many parallels
* ``column_add``      a legal column operation on A - I
* ``column_ops_along_path``   the composite of column adds along a path
* ``split_breaking``  out-split separating the infinitely-parallel edges
                      of an infinite emitter from the finitely-parallel ones

Applying a move through :func:`apply_move` also yields a
:class:`MoveRecord` that replays bit-exactly via :func:`replay`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MoveError, ValidationError
from .extnat import INF, ExtNat
from .graph import EdgeRef, Graph, fresh_names


class _Remainder:
    """Marker for the class holding all not-otherwise-listed edges."""

    def __repr__(self):
        return "REMAINDER"


#: Placeholder usable once per partition; it may be the only infinite class.
REMAINDER = _Remainder()


@dataclass(frozen=True)
class Partition:
    """An ordered partition of the out-edges of one vertex.

    ``entries`` holds finite ``frozenset`` s of :class:`EdgeRef` with a
    common source, plus optionally the :data:`REMAINDER` marker standing
    for every remaining out-edge.  At most one class may be infinite,
    and only the remainder can be.
    """

    entries: tuple

    def __post_init__(self):
        ok = all(isinstance(c, (_Remainder, frozenset)) for c in self.entries)
        if not ok:
            raise ValidationError("partition classes must be edge sets or REMAINDER")
        if sum(1 for c in self.entries if isinstance(c, _Remainder)) > 1:
            raise ValidationError("at most one remainder class")

    def to_json(self) -> list:
        return [
            "rest" if isinstance(c, _Remainder) else [e.to_json() for e in sorted(c)]
            for c in self.entries
        ]

    @staticmethod
    def from_json(data) -> "Partition":
        entries = []
        for c in data:
            if c == "rest":
                entries.append(REMAINDER)
            else:
                entries.append(frozenset(EdgeRef.from_json(e) for e in c))
        return Partition(tuple(entries))


def _check_partition(g: Graph, u: str, p: Partition):
    """Validate ``p`` against the out-edges of ``u``; returns per-class counts.

    Returns a list parallel to ``p.entries`` whose items are dicts
    ``target -> count`` (ExtNat for the remainder class).
    """
    if g.is_sink(u):
        raise MoveError(f"cannot out-split the sink {u!r}")
    if not p.entries:
        raise MoveError("empty partition")
    seen: set = set()
    used: dict = {w: 0 for w in g.vertices}
    counts = []
    for c in p.entries:
        if isinstance(c, _Remainder):
            counts.append(None)  # filled in below
            continue
        if not c:
            raise MoveError("partition classes must be nonempty")
        for e in c:
            if e.src != u:
                raise MoveError(f"edge {e} does not leave {u!r}")
            if not g.edge_valid(e):
                raise MoveError(f"edge {e} is not an edge of the graph")
            if e in seen:
                raise MoveError(f"edge {e} appears in two classes")
            seen.add(e)
        counts.append({})
        for e in c:
            counts[-1][e.dst] = counts[-1].get(e.dst, 0) + 1
        for w, k in counts[-1].items():
            used[w] += k
    remainder = {}
    has_rest = False
    for w in g.vertices:
        m = g.a(u, w)
        if m.is_finite and used[w] > int(m):
            raise MoveError(f"partition uses more edges toward {w!r} than exist")
        rest = INF if m.is_infinite else ExtNat(int(m) - used[w])
        remainder[w] = rest
    rest_total = sum((int(x) for x in remainder.values() if x.is_finite), 0)
    rest_inf = any(x.is_infinite for x in remainder.values())
    for i, c in enumerate(p.entries):
        if isinstance(c, _Remainder):
            has_rest = True
            if rest_total == 0 and not rest_inf:
                raise MoveError("remainder class is empty")
            counts[i] = remainder
    if not has_rest and (rest_inf or rest_total > 0):
        raise MoveError("partition does not cover all out-edges and has no remainder")
    return counts


def out_split(g: Graph, u: str, p: Partition) -> Graph:
    """Out-split ``u`` along ``p`` into fresh vertices u^1 .. u^n.

    Each class becomes a new vertex emitting exactly its edges; every
    edge into ``u`` is duplicated toward each new vertex.  Edges of a
    class that looped at ``u`` now emit one copy toward every u^j.
    """
    counts = _check_partition(g, u, p)
    n = len(p.entries)
    others = [v for v in g.vertices if v != u]
    names = fresh_names(u, n, others)
    pos = g.index(u)
    new_vertices = list(g.vertices[:pos]) + names + list(g.vertices[pos + 1 :])

    def entry(x: str, y: str) -> ExtNat:
        if x in names:
            i = names.index(x)
            c = counts[i]
            if y in names:
                return ExtNat.of(c.get(u, 0))
            return ExtNat.of(c.get(y, 0))
        if y in names:
            return g.a(x, u)
        return g.a(x, y)

    rows = [[entry(x, y) for y in new_vertices] for x in new_vertices]
    return Graph(new_vertices, rows)


def collapse(g: Graph, u: str) -> Graph:
    """Remove a loopless regular non-source ``u``, composing edges through it."""
    if not g.is_regular(u):
        raise MoveError(f"{u!r} is not regular")
    if g.supports_loop(u):
        raise MoveError(f"{u!r} supports a loop")
    if g.is_source(u):
        raise MoveError(f"{u!r} is a source")
    keep = [v for v in g.vertices if v != u]
    rows = []
    for x in keep:
        rows.append([g.a(x, y) + g.a(x, u) * g.a(u, y) for y in keep])
    return Graph(keep, rows)


def remove_regular_sources(g: Graph) -> Graph:
    """Delete regular sources, and the ones so exposed, to a fixed point."""
    cur = g
    while True:
        doomed = [v for v in cur.vertices if cur.is_regular(v) and cur.is_source(v)]
        if not doomed:
            return cur
        cur = cur.induced(v for v in cur.vertices if v not in doomed)


def _remove_one_source(g: Graph, v: str) -> Graph:
    if not (g.is_regular(v) and g.is_source(v)):
        raise MoveError(f"{v!r} is not a regular source")
    return g.induced(w for w in g.vertices if w != v)


def move_T(g: Graph, path) -> Graph:
    """Adjoin a countable family of parallel paths along ``path``.

    The first edge of the path must already have infinitely many
    parallels; the effect on the adjacency is to set the entry from the
    path's source to its range to ∞.
    """
    path = list(path)
    if len(path) < 2:
        raise MoveError("path must have length at least one")
    for v in path:
        g.index(v)
    for a, b in zip(path, path[1:]):
        if not g.a(a, b):
            raise MoveError(f"no edge from {a!r} to {b!r} along the path")
    if not g.a(path[0], path[1]).is_infinite:
        raise MoveError("the first edge of the path must have infinitely many parallels")
    rows = g.to_lists()
    rows[g.index(path[0])][g.index(path[-1])] = INF
    return Graph(g.vertices, rows)


def column_add(g: Graph, u: str, v: str) -> Graph:
    """Legal column operation: (A' - I) = (A - I)·E_{u,v}.

    For every x the entry A(x, v) becomes A(x, v) + A(x, u), less one
    when x = u, in saturating arithmetic.  Requires ``u != v``, at least
    one edge from ``u`` to ``v``, and that ``u`` is neither a source nor
    a vertex of out-degree one: the operation is the composite of
    out-splitting the chosen edge off ``u`` and collapsing the split
    vertex, which needs a nonempty remainder class and an incoming edge.
    Without those, the operation can change the K-theory pair (it may
    silently delete a regular vertex's last edge).
    """
    if u == v:
        raise MoveError("column operation needs distinct vertices")
    if not g.a(u, v):
        raise MoveError(f"no edge from {u!r} to {v!r}")
    if g.is_source(u):
        raise MoveError(f"{u!r} is a source; the move cannot be realized")
    if g.out_degree(u) <= 1:
        raise MoveError(f"{u!r} has out-degree one; the move cannot be realized")
    rows = g.to_lists()
    j = g.index(v)
    for i, x in enumerate(g.vertices):
        new = g.adjacency[i][j] + g.a(x, u)
        if x == u:
            new = new.dec()
        rows[i][j] = new
    return Graph(g.vertices, rows)


def column_ops_along_path(g: Graph, path) -> Graph:
    """Successive column adds along a path through distinct vertices.

    The path needs length >= 2; it may close up at its starting vertex.
    The composite adds at least one edge from the path's source to its
    range.
    """
    path = list(path)
    if len(path) < 3:
        raise MoveError("need a path of length at least two")
    interior = path[:-1]
    if len(set(interior)) != len(interior):
        raise MoveError("path must pass through distinct vertices")
    if path[-1] in interior[1:]:
        raise MoveError("path may close up only at its starting vertex")
    cur = g
    for a, b in zip(path[1:], path[2:]):
        cur = column_add(cur, a, b)
    return cur


def split_breaking(g: Graph, u: str) -> Graph:
    """Out-split an infinite emitter into its infinitely-parallel part and the rest.

    u^1 keeps every edge with infinitely many parallels, u^2 the finitely
    many others and is then a finite emitter.  When every edge of ``u``
    has infinitely many parallels the graph is returned unchanged.
    """
    if not g.is_infinite_emitter(u):
        raise MoveError(f"{u!r} is not an infinite emitter")
    finite_part = []
    for w in g.vertices:
        m = g.a(u, w)
        if m and m.is_finite:
            finite_part.extend(EdgeRef(u, w, i) for i in range(int(m)))
    if not finite_part:
        return g
    return out_split(g, u, Partition((REMAINDER, frozenset(finite_part))))


# -- provenance -------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class MoveRecord:
    """A replayable record of one applied move."""

    kind: str
    params: dict
    input_hash: str
    output_hash: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "input-hash": self.input_hash,
            "output-hash": self.output_hash,
        }

    @staticmethod
    def from_json(data) -> "MoveRecord":
        try:
            return MoveRecord(
                kind=data["kind"],
                params=data["params"],
                input_hash=data["input-hash"],
                output_hash=data["output-hash"],
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad move record: {exc}") from exc


MOVE_KINDS = ("O", "S", "T", "COLLAPSE", "COLADD", "BREAKSPLIT")


def _dispatch(g: Graph, kind: str, params: dict) -> Graph:
    if kind == "O":
        return out_split(g, params["vertex"], Partition.from_json(params["classes"]))
    if kind == "S":
        return _remove_one_source(g, params["vertex"])
    if kind == "T":
        return move_T(g, params["path"])
    if kind == "COLLAPSE":
        return collapse(g, params["vertex"])
    if kind == "COLADD":
        return column_add(g, params["source"], params["target"])
    if kind == "BREAKSPLIT":
        return split_breaking(g, params["vertex"])
    raise ValidationError(f"unknown move kind {kind!r}")


def apply_move(g: Graph, kind: str, params: dict) -> tuple:
    """Apply a move by name, returning the new graph and its record."""
    out = _dispatch(g, kind, params)
    rec = MoveRecord(
        kind=kind,
        params=params,
        input_hash=g.digest(),
        output_hash=out.digest(),
    )
    return out, rec


def replay(g: Graph, record: MoveRecord) -> Graph:
    """Re-apply a recorded move, checking both hashes."""
    if g.digest() != record.input_hash:
        raise ValidationError("record does not apply: input hash differs")
    out = _dispatch(g, record.kind, record.params)
    if out.digest() != record.output_hash:
        raise ValidationError("replay produced a different graph")
    return out
