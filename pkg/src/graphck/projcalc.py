"""A symbolic calculus of projection coefficient systems.

A *coefficient system* over a graph is a finite collection of terms
(v, T) ↦ n with n a positive integer, v a vertex and T a finite set of
out-edges of v, nonempty only when v is an infinite emitter.  It stands
for the projection ⊕ n·(p_v − Σ_{e∈T} s_e s_e*) built from a generating
family of the graph's algebra; its K₀ class is Σ n·(χ_v − Σ_{e∈T}
χ_{r(e)}), computable by :mod:`graphck.ktheory`.

A *projection sequence* is a finite head of coefficient systems plus an
optional tail template repeated countably (with edge indices allocated
fresh per repetition); it encodes a strictly convergent sum of
projections.  The pipeline in :func:`corner_pipeline` normalizes a full
sequence over a stably complete graph until every term has empty T
except at vertices whose total T is infinite, at which point the sum
collapses to a multiplicity vector n_v ∈ ℕ₀ ∪ {∞}: the data of a corner
graph.

Three elimination rules drive the normalization, one per kind of
infinite emitter: with a loop, without a loop but dominated by a
regular vertex, and without any regular dominator.  The first two are
equivalences that preserve the K₀ class of the head exactly.  The third
is induced by an automorphism of the stabilized algebra; it shifts K₀
classes by a computable action (see :func:`undominated_k0_action`),
which the tests track explicitly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, InternalError, ValidationError
from .extnat import INF, ExtNat
from .graph import EdgeRef, Graph, dominates, hereditary_closure, reaches, saturate
from .ktheory import K0Class, k0_reduce
from .canonical import is_stably_complete


# -- data -------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientSystem:
    """Finite map (vertex, finite edge set) → positive multiplicity."""

    terms: tuple  # of (v, tuple_of_EdgeRef_sorted, n), canonically sorted

    @staticmethod
    def make(items) -> "CoefficientSystem":
        """Build from (v, edges, n) triples, merging equal (v, T) keys."""
        acc = {}
        for v, edges, n in items:
            edges = tuple(sorted(EdgeRef(*e) for e in edges))
            if len(set(edges)) != len(edges):
                raise ValidationError(f"duplicate edge in T of {v!r}")
            if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
                raise ValidationError(f"multiplicity must be a positive int, got {n!r}")
            key = (str(v), edges)
            acc[key] = acc.get(key, 0) + n
        terms = tuple(sorted((v, t, n) for (v, t), n in acc.items()))
        return CoefficientSystem(terms)

    @staticmethod
    def empty() -> "CoefficientSystem":
        return CoefficientSystem(())

    def as_dict(self) -> dict:
        return {(v, t): n for v, t, n in self.terms}

    def support(self) -> frozenset:
        return frozenset(v for v, _, _ in self.terms)

    def merge(self, *others: "CoefficientSystem") -> "CoefficientSystem":
        items = [(v, t, n) for v, t, n in self.terms]
        for o in others:
            items.extend(o.terms)
        return CoefficientSystem.make(items)

    def validate(self, g: Graph) -> None:
        for v, t, n in self.terms:
            g.index(v)
            for e in t:
                if e.src != v:
                    raise ValidationError(f"edge {e} in a term at {v!r}")
                if not g.edge_valid(e):
                    raise ValidationError(f"{e} is not an edge of the graph")
            if t and not g.is_infinite_emitter(v):
                raise ValidationError(
                    f"nonempty T at {v!r}, which is not an infinite emitter"
                )

    def k0_vector(self, g: Graph) -> list:
        """Integer vertex-vector Σ n·(χ_v − Σ_{e∈T} χ_{r(e)})."""
        vec = [0] * g.n
        for v, t, n in self.terms:
            vec[g.index(v)] += n
            for e in t:
                vec[g.index(e.dst)] -= n
        return vec

    def to_json(self) -> list:
        return [
            {"v": v, "T": [e.to_json() for e in t], "n": n} for v, t, n in self.terms
        ]

    @staticmethod
    def from_json(data) -> "CoefficientSystem":
        items = []
        for term in data:
            items.append(
                (term["v"], [EdgeRef.from_json(e) for e in term.get("T", [])], term["n"])
            )
        return CoefficientSystem.make(items)


@dataclass(frozen=True)
class ProjectionSequence:
    """A finite head of systems plus an optional countably-repeated template."""

    head: tuple  # of CoefficientSystem
    tail: Optional[CoefficientSystem] = None

    def support(self) -> frozenset:
        out = frozenset()
        for c in self.head:
            out |= c.support()
        if self.tail is not None:
            out |= self.tail.support()
        return out

    def validate(self, g: Graph) -> None:
        for c in self.head:
            c.validate(g)
        if self.tail is not None:
            self.tail.validate(g)
            for v, t, _ in self.tail.terms:
                for e in t:
                    if not g.a(e.src, e.dst).is_infinite:
                        raise ValidationError(
                            "tail template edges need infinitely many parallels "
                            f"to repeat, got {e} with finite multiplicity"
                        )

    def head_total(self) -> CoefficientSystem:
        if not self.head:
            return CoefficientSystem.empty()
        return self.head[0].merge(*self.head[1:])

    def to_json(self) -> dict:
        out = {"head": [c.to_json() for c in self.head]}
        if self.tail is not None:
            out["tail"] = self.tail.to_json()
        return out

    @staticmethod
    def from_json(data) -> "ProjectionSequence":
        head = tuple(CoefficientSystem.from_json(c) for c in data.get("head", []))
        tail = data.get("tail")
        return ProjectionSequence(
            head, CoefficientSystem.from_json(tail) if tail is not None else None
        )


def tail_instance(seq: ProjectionSequence, rep: int) -> CoefficientSystem:
    """Materialize repetition ``rep`` of the tail template.

    Edge indices shift by 2·rep·m within each (src, dst) family of m
    template edges.  After :func:`make_partitioned` the template holds
    contiguous even blocks, so distinct repetitions are disjoint from
    each other and from the head.
    """
    if seq.tail is None:
        raise DomainError("sequence has no tail")
    group_sizes: dict = defaultdict(int)
    for _, t, _ in seq.tail.terms:
        for e in t:
            group_sizes[(e.src, e.dst)] += 1
    items = []
    for v, t, n in seq.tail.terms:
        edges = [
            EdgeRef(e.src, e.dst, e.index + 2 * rep * group_sizes[(e.src, e.dst)])
            for e in t
        ]
        items.append((v, edges, n))
    return CoefficientSystem.make(items)


# -- queries ----------------------------------------------------------------


def _require_stably_complete(g: Graph) -> None:
    report = is_stably_complete(g)
    if not report.satisfied:
        raise DomainError(f"graph is not stably complete: {report.violations}")


def k0_class_of(g: Graph, c: CoefficientSystem) -> K0Class:
    """Canonical K₀ residue of one coefficient system."""
    c.validate(g)
    return k0_reduce(g, c.k0_vector(g))


def head_k0_class(g: Graph, seq: ProjectionSequence) -> K0Class:
    """Canonical K₀ residue of the merged finite head."""
    return k0_class_of(g, seq.head_total())


def is_full(g: Graph, seq: ProjectionSequence) -> bool:
    """Whether the support generates everything.

    True when the saturation of the hereditary closure of the support
    vertices is the whole vertex set.  Requires a stably complete graph.
    """
    _require_stably_complete(g)
    seq.validate(g)
    closure = saturate(g, hereditary_closure(g, seq.support()))
    return closure == frozenset(g.vertices)


def head_T(seq: ProjectionSequence, v: str) -> frozenset:
    """Union of the T sets at ``v`` over the head systems."""
    out = set()
    for c in seq.head:
        for u, t, _ in c.terms:
            if u == v:
                out.update(t)
    return frozenset(out)


def tail_has_nonempty_T(seq: ProjectionSequence, v: str) -> bool:
    if seq.tail is None:
        return False
    return any(u == v and t for u, t, _ in seq.tail.terms)


# -- partitioning -----------------------------------------------------------


def make_partitioned(g: Graph, seq: ProjectionSequence) -> ProjectionSequence:
    """Reindex edges so distinct terms use pairwise disjoint T sets.

    Head edges keep an even, so-far-unused index when they already have
    one and otherwise take the smallest free even index of their
    (src, dst) family; edges on finitely-parallel families instead take
    the smallest free valid index, since parity slack is neither needed
    nor available there.  The tail template is rewritten to contiguous
    blocks of fresh even indices, so each repetition occupies its own
    window.  Along every infinitely-parallel family the odd indices
    remain unused, leaving infinitely many spare parallel edges.
    Fullness is unaffected: terms keep their (src, dst) profile.
    """
    seq.validate(g)
    used = defaultdict(set)

    def alloc(e: EdgeRef) -> EdgeRef:
        sd = (e.src, e.dst)
        cap = g.a(e.src, e.dst)
        if cap.is_infinite:
            if e.index % 2 == 0 and e.index not in used[sd]:
                used[sd].add(e.index)
                return e
            i = 0
            while i in used[sd]:
                i += 2
            used[sd].add(i)
            return EdgeRef(e.src, e.dst, i)
        if e.index not in used[sd]:
            used[sd].add(e.index)
            return e
        for i in range(int(cap)):
            if i not in used[sd]:
                used[sd].add(i)
                return EdgeRef(e.src, e.dst, i)
        raise DomainError(
            f"cannot make terms disjoint: all {int(cap)} parallel edges "
            f"from {e.src!r} to {e.dst!r} are in use"
        )

    new_head = []
    for c in seq.head:
        items = []
        for v, t, n in c.terms:
            items.append((v, [alloc(e) for e in t], n))
        new_head.append(CoefficientSystem.make(items))

    new_tail = None
    if seq.tail is not None:
        base: dict = {}
        counters: dict = {}
        items = []
        for v, t, n in seq.tail.terms:
            edges = []
            for e in t:
                sd = (e.src, e.dst)
                if sd not in base:
                    start = max((i for i in used[sd]), default=-2) + 2
                    if start % 2:
                        start += 1
                    base[sd] = start
                    counters[sd] = 0
                idx = base[sd] + 2 * counters[sd]
                counters[sd] += 1
                used[sd].add(idx)
                edges.append(EdgeRef(e.src, e.dst, idx))
            items.append((v, edges, n))
        new_tail = CoefficientSystem.make(items)

    return ProjectionSequence(tuple(new_head), new_tail)


# -- making the first system full -------------------------------------------


def fullify(g: Graph, seq: ProjectionSequence) -> ProjectionSequence:
    """Rewrite a full sequence so its first system touches every vertex.

    First the shortest prefix whose support already generates everything
    is merged into a single system (materializing one tail repetition if
    the head alone does not suffice).  Then vertices are absorbed one
    edge-step at a time: a covered regular vertex w with an edge f to an
    uncovered v trades one CK relation, adding p_v and one p_{r(e)} for
    every out-edge e of w other than f and w's loop; a covered infinite
    emitter w instead enlarges one of its T sets by a fresh parallel
    edge toward v and adds the term (v, ∅).  Both rewrites preserve the
    K₀ class of the head exactly.
    """
    _require_stably_complete(g)
    if not is_full(g, seq):
        raise DomainError("sequence is not full")
    if not g.vertices:
        return seq

    everything = frozenset(g.vertices)

    def generates(support) -> bool:
        return saturate(g, hereditary_closure(g, support)) == everything

    head = list(seq.head)
    tail = seq.tail
    prefix: list = []
    support: frozenset = frozenset()
    n = 0
    while True:
        if n < len(head):
            prefix.append(head[n])
        elif tail is not None and n == len(head):
            prefix.append(tail_instance(seq, 0))
        else:
            raise InternalError("full sequence has no generating prefix")
        support |= prefix[-1].support()
        n += 1
        if generates(support):
            break
    merged = prefix[0].merge(*prefix[1:]) if prefix else CoefficientSystem.empty()
    rest = head[n:] if n <= len(head) else []

    terms = {(v, t): m for v, t, m in merged.terms}
    covered = {v for v, _, _ in merged.terms}
    while covered != everything:
        step = None
        for v in g.vertices:
            if v in covered:
                continue
            for w in g.vertices:
                if w in covered and g.a(w, v):
                    step = (w, v)
                    break
            if step:
                break
        if step is None:
            raise InternalError("coverage cannot grow despite fullness")
        w, v = step
        if g.is_regular(w):
            # trade the relation p_w = Σ s_e s_e*: keep (w, ∅), gain p_v and
            # one p_{r(e)} per out-edge other than the used edge and the loop
            if (w, ()) not in terms:
                raise InternalError(f"covered regular vertex {w!r} has no (w, ∅) term")
            terms[(v, ())] = terms.get((v, ()), 0) + 1
            for y in g.vertices:
                count = int(g.a(w, y)) - (1 if y == v else 0) - (1 if y == w else 0)
                if count > 0:
                    terms[(y, ())] = terms.get((y, ()), 0) + count
        else:
            key = min((t for (u, t) in terms if u == w), key=lambda t: (len(t), t))
            f = _fresh_parallel_edge(g, ProjectionSequence((merged,), tail), w, v, set(key))
            old = terms[(w, key)]
            if old == 1:
                del terms[(w, key)]
            else:
                terms[(w, key)] = old - 1
            new_t = tuple(sorted(key + (f,)))
            terms[(w, new_t)] = terms.get((w, new_t), 0) + 1
            terms[(v, ())] = terms.get((v, ()), 0) + 1
        covered.add(v)
        merged = CoefficientSystem.make([(v, t, m) for (v, t), m in terms.items()])
        terms = {(v, t): m for v, t, m in merged.terms}

    return ProjectionSequence(tuple([merged] + rest), tail)


def _fresh_parallel_edge(
    g: Graph, seq: ProjectionSequence, src: str, dst: str, avoid: set
) -> EdgeRef:
    """Smallest-index edge src → dst unused in the sequence and not in ``avoid``.

    Even indices at or above the tail-template window of the pair are
    skipped so later repetitions stay disjoint.
    """
    cap = g.a(src, dst)
    used = {e.index for e in _all_indices(seq, src, dst)}
    used |= {e.index for e in avoid}
    window_floor = _tail_window_floor(seq, src, dst)
    i = 0
    while True:
        if cap.is_finite and i >= int(cap):
            raise DomainError(f"no free parallel edge from {src!r} to {dst!r}")
        blocked = i in used or (
            window_floor is not None and i >= window_floor and i % 2 == 0
        )
        if not blocked:
            return EdgeRef(src, dst, i)
        i += 1


def _all_indices(seq: ProjectionSequence, src: str, dst: str):
    for c in seq.head:
        for _, t, _ in c.terms:
            for e in t:
                if e.src == src and e.dst == dst:
                    yield e
    if seq.tail is not None:
        for _, t, _ in seq.tail.terms:
            for e in t:
                if e.src == src and e.dst == dst:
                    yield e


def _tail_window_floor(seq: ProjectionSequence, src: str, dst: str):
    if seq.tail is None:
        return None
    indices = [
        e.index
        for _, t, _ in seq.tail.terms
        for e in t
        if e.src == src and e.dst == dst
    ]
    return min(indices) if indices else None


# -- the three eliminations -------------------------------------------------


def _companion_expansion(g: Graph, w: str, targets) -> list:
    """Extra vertex counts from rerouting |targets| relations through ``w``.

    ``w`` must be regular with a loop; when a target equals ``w`` a
    second loop is required (guaranteed at vertices on two cycles in a
    stably complete graph).  For each target r the contribution is one
    p_{r(e)} per out-edge e of w other than the loop and one edge toward
    r; equivalently A(w, y) minus the used edges, per y.
    """
    if not g.supports_loop(w):
        raise InternalError(f"companion {w!r} has no loop")
    out = []
    for r in targets:
        if r == w and g.a(w, w) < 2:
            raise InternalError(f"companion {w!r} needs a second loop")
        for y in g.vertices:
            count = int(g.a(w, y)) - (1 if y == w else 0) - (1 if y == r else 0)
            if count > 0:
                out.append((y, count))
    return out


def _rewrite_terms(c: CoefficientSystem, v: str, expand) -> CoefficientSystem:
    """Replace every (v, T ≠ ∅) term in ``c`` using ``expand(t, n) -> items``."""
    items = []
    for u, t, n in c.terms:
        if u == v and t:
            items.extend(expand(t, n))
        else:
            items.append((u, t, n))
    return CoefficientSystem.make(items) if items else CoefficientSystem.empty()


def eliminate_loop_emitter(g: Graph, seq: ProjectionSequence, v: str) -> ProjectionSequence:
    """Empty the T sets at an infinite emitter that supports a loop.

    Uses a regular vertex w on a common cycle with v: each term
    (v, T) ↦ n becomes (v, ∅) ↦ n plus n copies of the companion
    expansion of the T-edge targets through w.  The K₀ class of every
    system is preserved exactly.
    """
    _require_stably_complete(g)
    seq.validate(g)
    if not g.is_infinite_emitter(v):
        raise DomainError(f"{v!r} is not an infinite emitter")
    if not g.supports_loop(v):
        raise DomainError(f"{v!r} does not support a loop")
    w = _first_companion(g, v)
    if w is None:
        raise DomainError(f"no regular vertex shares a cycle with {v!r}")

    def expand(t, n):
        items = [(v, (), n)]
        for y, count in _companion_expansion(g, w, [e.dst for e in t]):
            items.append((y, (), n * count))
        return items

    head = tuple(_rewrite_terms(c, v, expand) for c in seq.head)
    tail = _rewrite_terms(seq.tail, v, expand) if seq.tail is not None else None
    return ProjectionSequence(head, tail)


def _first_companion(g: Graph, v: str):
    for w in g.vertices:
        if g.is_regular(w) and dominates(g, v, w) and dominates(g, w, v):
            return w
    return None


def eliminate_dominated_emitter(
    g: Graph, seq: ProjectionSequence, v: str
) -> ProjectionSequence:
    """Empty the T sets at a loopless infinite emitter below a regular vertex.

    The head prefix up to the last system mentioning (v, T ≠ ∅) is
    merged so that the regular dominator's (w, ∅) term coexists with
    every such term; the terms are then rerouted through w exactly as in
    the looped case.  K₀ classes are preserved exactly.
    """
    _require_stably_complete(g)
    seq.validate(g)
    if not g.is_infinite_emitter(v):
        raise DomainError(f"{v!r} is not an infinite emitter")
    if g.supports_loop(v):
        raise DomainError(f"{v!r} supports a loop")
    if tail_has_nonempty_T(seq, v):
        raise DomainError(f"the total T at {v!r} is infinite")
    if not head_T(seq, v):
        return seq
    w = next(
        (w for w in g.vertices if g.is_regular(w) and dominates(g, w, v)), None
    )
    if w is None:
        raise DomainError(f"no regular vertex dominates {v!r}")

    last = max(
        i for i, c in enumerate(seq.head) if any(u == v and t for u, t, _ in c.terms)
    )
    merged = seq.head[0].merge(*seq.head[1 : last + 1])
    if (w, ()) not in merged.as_dict():
        raise DomainError(
            f"the merged prefix has no ({w!r}, ∅) term; run fullify first"
        )

    def expand(t, n):
        items = [(v, (), n)]
        for y, count in _companion_expansion(g, w, [e.dst for e in t]):
            items.append((y, (), n * count))
        return items

    head = (_rewrite_terms(merged, v, expand),) + seq.head[last + 1 :]
    return ProjectionSequence(head, seq.tail)


def eliminate_undominated_emitter(
    g: Graph, seq: ProjectionSequence, v: str
) -> ProjectionSequence:
    """Empty the T sets at a loopless infinite emitter with no regular dominator.

    Realizes the automorphism that out-splits v along (everything else,
    T_v) and collapses the finite part back: every term (u, U) with an
    edge e ∈ U into v gains one fresh parallel edge u → r(f) for each
    f ∈ T_v (such u are necessarily infinite emitters with ∞ entries
    toward those targets), and every term (v, T') becomes (v, ∅) plus
    one (r(e), ∅) per e ∈ T_v \\ T'.  K₀ classes move by the action
    returned from :func:`undominated_k0_action`.
    """
    _require_stably_complete(g)
    seq.validate(g)
    if not g.is_infinite_emitter(v):
        raise DomainError(f"{v!r} is not an infinite emitter")
    if g.supports_loop(v):
        raise DomainError(f"{v!r} supports a loop")
    if any(g.is_regular(w) and dominates(g, w, v) for w in g.vertices):
        raise DomainError(f"{v!r} has a regular dominator; use the dominated rule")
    if tail_has_nonempty_T(seq, v):
        raise DomainError(f"the total T at {v!r} is infinite")
    T = tuple(sorted(head_T(seq, v)))
    if not T:
        return seq

    fresh_used: dict = defaultdict(set)

    def fresh(u: str, dst: str) -> EdgeRef:
        if not g.a(u, dst).is_infinite:
            raise InternalError(
                f"expected infinitely many parallels from {u!r} to {dst!r}"
            )
        e = _fresh_parallel_edge(
            g, seq, u, dst, {EdgeRef(u, dst, i) for i in fresh_used[(u, dst)]}
        )
        fresh_used[(u, dst)].add(e.index)
        return e

    def fresh_for_template(u: str, dst: str) -> EdgeRef:
        # template additions sit in a consecutive odd run above everything
        # already used for the pair, so shifted repetitions cannot collide
        if not g.a(u, dst).is_infinite:
            raise InternalError(
                f"expected infinitely many parallels from {u!r} to {dst!r}"
            )
        top = max(
            [e.index for e in _all_indices(seq, u, dst)] + list(fresh_used[(u, dst)]),
            default=-1,
        )
        i = top + 1 if (top + 1) % 2 else top + 2
        fresh_used[(u, dst)].add(i)
        return EdgeRef(u, dst, i)

    def rewrite(c: CoefficientSystem, in_template: bool) -> CoefficientSystem:
        items = []
        for u, t, n in c.terms:
            if u == v:
                items.append((v, (), n))
                for e in T:
                    if e not in t:
                        items.append((e.dst, (), n))
            elif any(e.dst == v for e in t):
                new_t = list(t)
                for e in t:
                    if e.dst == v:
                        for f in T:
                            if in_template:
                                new_t.append(fresh_for_template(u, f.dst))
                            else:
                                new_t.append(fresh(u, f.dst))
                items.append((u, new_t, n))
            else:
                items.append((u, t, n))
        return CoefficientSystem.make(items) if items else CoefficientSystem.empty()

    head = tuple(rewrite(c, False) for c in seq.head)
    tail = rewrite(seq.tail, True) if seq.tail is not None else None
    return ProjectionSequence(head, tail)


def undominated_k0_action(g: Graph, v: str, T) -> "callable":
    """K₀ action of the undominated elimination, as a map on vertex vectors.

    The action sends x to x + x_v · Σ_{f∈T} χ_{r(f)}.  It descends to
    the cokernel because no regular vertex emits into v, so every
    relation column has a zero v-entry.
    """
    j = g.index(v)
    shift = [0] * g.n
    for f in T:
        shift[g.index(f.dst)] += 1

    def act(vec):
        vec = list(vec)
        c = vec[j]
        return [x + c * s for x, s in zip(vec, shift)]

    return act


# -- collapsing to multiplicities -------------------------------------------


def to_multiplicities(g: Graph, seq: ProjectionSequence) -> dict:
    """Collapse a full partitioned sequence into a multiplicity vector.

    Writing T_v for the union of all T sets at v across the sequence
    (infinite exactly when the tail template has a (v, T ≠ ∅) term),
    every vertex must satisfy: T_v = ∅, or some w with a path to v has
    infinite T_w.  Then

    * n_v = Σ_k n_{(v,∅)} when T_w = ∅ for every w reaching v,
    * n_v = ∞ when T_v is infinite and T_w = ∅ for every other w
      reaching v,
    * n_v = 1 otherwise.
    """
    _require_stably_complete(g)
    seq.validate(g)
    if not is_full(g, seq):
        raise DomainError("sequence is not full")
    _check_partitioned(seq)

    t_nonempty = {}
    t_infinite = {}
    for v in g.vertices:
        finite_part = head_T(seq, v)
        inf_tail = tail_has_nonempty_T(seq, v)
        t_nonempty[v] = bool(finite_part) or inf_tail
        t_infinite[v] = inf_tail

    for v in g.vertices:
        if t_nonempty[v] and not any(
            t_infinite[w] and reaches(g, w, v) for w in g.vertices
        ):
            raise DomainError(
                f"finite nonempty total T at {v!r} with no infinite T above; "
                "run the elimination rules first"
            )

    out = {}
    for v in g.vertices:
        above = [w for w in g.vertices if reaches(g, w, v)]
        if not any(t_nonempty[w] for w in above):
            total = ExtNat(0)
            for c in seq.head:
                total = total + c.as_dict().get((v, ()), 0)
            if seq.tail is not None and (v, ()) in seq.tail.as_dict():
                total = INF
            out[v] = total
        elif t_infinite[v] and not any(t_nonempty[w] for w in above if w != v):
            out[v] = INF
        else:
            out[v] = ExtNat(1)
    return out


def _check_partitioned(seq: ProjectionSequence) -> None:
    seen = set()
    for c in seq.head:
        for _, t, _ in c.terms:
            for e in t:
                if e in seen:
                    raise DomainError(f"sequence is not partitioned: {e} reused")
            seen.update(t)
    if seq.tail is not None:
        inst = tail_instance(seq, 0)
        for _, t, _ in inst.terms:
            for e in t:
                if e in seen:
                    raise DomainError(f"sequence is not partitioned: {e} reused")
            seen.update(t)


def normalize_multiplicities(g: Graph, m: dict) -> dict:
    """Canonical rewrite: below an ∞ vertex every multiplicity becomes 1.

    A multiplicity vector may be rewritten at v whenever some other
    vertex with an ∞ multiplicity has a path to v; among the allowed
    rewrites this picks the constant 1.
    """
    vals = {v: ExtNat.of(m[v]) for v in g.vertices}
    if set(m) != set(g.vertices):
        raise ValidationError("multiplicity vector must cover exactly the vertices")
    out = {}
    for v in g.vertices:
        shadowed = any(
            w != v and vals[w].is_infinite and reaches(g, w, v) for w in g.vertices
        )
        out[v] = ExtNat(1) if shadowed else vals[v]
    return out


# -- the full pipeline -------------------------------------------------------


def corner_pipeline(g: Graph, seq: ProjectionSequence) -> dict:
    """Normalize a full sequence into multiplicities n_v >= 1.

    Runs fullify, make_partitioned, then the three eliminations at every
    applicable infinite emitter in vertex order, and finally
    :func:`to_multiplicities`.  The loop and dominated rules preserve
    the head's K₀ class exactly; the undominated rule twists it by the
    documented automorphism action.
    """
    _require_stably_complete(g)
    seq.validate(g)
    if not is_full(g, seq):
        raise DomainError("sequence is not full")
    if not g.vertices:
        return {}
    seq = fullify(g, seq)
    seq = make_partitioned(g, seq)
    for v in g.vertices:
        if g.is_infinite_emitter(v) and g.supports_loop(v):
            if head_T(seq, v) or tail_has_nonempty_T(seq, v):
                seq = eliminate_loop_emitter(g, seq, v)
    for v in g.vertices:
        if (
            g.is_infinite_emitter(v)
            and not g.supports_loop(v)
            and head_T(seq, v)
            and not tail_has_nonempty_T(seq, v)
            and any(g.is_regular(w) and dominates(g, w, v) for w in g.vertices)
        ):
            seq = eliminate_dominated_emitter(g, seq, v)
    for v in g.vertices:
        if (
            g.is_infinite_emitter(v)
            and not g.supports_loop(v)
            and head_T(seq, v)
            and not tail_has_nonempty_T(seq, v)
        ):
            seq = eliminate_undominated_emitter(g, seq, v)
    return to_multiplicities(g, seq)
