"""From coefficient systems to a multiplicity vector.

A coefficient system (v, T) ↦ n stands for n copies of the projection
p_v minus the range projections of the finite edge set T.  Over a
stably complete graph, a full sequence of systems normalizes to a
multiplicity vector n_v ∈ ℕ₀ ∪ {∞}, the data of a corner graph.  The
walk below shows each stage and tracks the K₀ class of the head.
"""

from graphck import (
    CoefficientSystem,
    ProjectionSequence,
    corner_pipeline,
    eliminate_loop_emitter,
    fullify,
    head_k0_class,
    is_full,
    is_stably_complete,
    make_graph,
    make_partitioned,
)

# a stably complete graph: v is an infinite emitter with loops,
# w a regular vertex sharing a cycle with it
g = make_graph(["v", "w"], [["inf", "inf"], [1, 2]])
assert is_stably_complete(g).satisfied

start = ProjectionSequence(
    (CoefficientSystem.make([("v", [("v", "w", 0), ("v", "v", 1)], 1)]),)
)
print("start:", start.to_json())
print("full  :", is_full(g, start))
print("class :", head_k0_class(g, start).to_json())
print()

full = fullify(g, start)
print("after fullify (every vertex now carries a term):")
print("  ", full.to_json())
print("   class:", head_k0_class(g, full).to_json())
print()

part = make_partitioned(g, full)
print("after partitioning (disjoint T sets on even indices):")
print("  ", part.to_json())
print()

emptied = eliminate_loop_emitter(g, part, "v")
print("after eliminating the looped infinite emitter:")
print("  ", emptied.to_json())
print("   class:", head_k0_class(g, emptied).to_json())
print("   the class is preserved exactly through every stage above")
print()

mult = corner_pipeline(g, start)
print("the whole pipeline collapses to multiplicities:",
      {v: m.to_json() for v, m in mult.items()})
