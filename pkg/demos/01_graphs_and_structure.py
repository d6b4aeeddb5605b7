"""Building graphs and reading off their structure.

A graph is a vertex list plus a square matrix counting parallel edges,
where an entry may be the symbol ∞.  Run this file to see the basic
vocabulary in action: vertex classes, dominance, hereditary and
saturated sets, and Condition (K).
"""

from graphck import (
    condition_K,
    dominates,
    hereditary_closure,
    make_graph,
    saturate,
    simple_cycle_count_at,
    vertex_class,
)

# v emits infinitely many edges to w; w carries one loop and feeds a sink
g = make_graph(
    ["v", "w", "s"],
    [
        [0, "inf", 0],
        [0, 1, 1],
        [0, 0, 0],
    ],
)

print("the graph, as DOT:")
print(g.to_dot())
print()

for name in g.vertices:
    cls = vertex_class(g, name)
    print(f"{name}: {cls.kind}, source={cls.is_source}, loop={cls.supports_loop}")
print()

print("dominance (a path of nonzero length):")
print("  v ⪰ s:", dominates(g, "v", "s"))
print("  w ⪰ w:", dominates(g, "w", "w"), "(the loop closes a cycle)")
print("  s ⪰ s:", dominates(g, "s", "s"), "(sinks dominate nothing)")
print()

print("hereditary closure of {v}:", sorted(hereditary_closure(g, {"v"})))
print("saturation of {s}:", sorted(saturate(g, {"s"})))
print("  (w is regular and emits into {w, s}, so {s} alone stays put;")
print("   saturating {w, s} would pull in nothing further)")
print()

print("simple cycles based at w:", simple_cycle_count_at(g, "w"))
print("Condition (K) for the whole graph:", condition_K(g))
print("  (w has exactly one simple cycle, so Condition (K) fails)")
