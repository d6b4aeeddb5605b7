"""Rewriting a graph into stably complete form.

A stably complete graph has loops on all regular vertices, second loops
where two simple cycles live, ∞ entries from infinite emitters to
everything they dominate, direct edges witnessing all dominance, and a
regular companion on a cycle with every looped infinite emitter.  The
pipeline reaches such a form by moves alone and hands back the trace.
"""

from graphck import canonicalize, is_stably_complete, k_groups, make_graph

# a messy input: a mixed infinite emitter, a regular source, a loopless
# regular vertex, and dominance without direct edges
g = make_graph(
    ["a", "b", "c", "d"],
    [
        [0, 1, 0, 0],        # a: regular source feeding b
        [0, 0, 1, "inf"],    # b: mixed infinite emitter
        [0, 0, 2, 0],        # c: two loops
        [0, 0, 1, 0],        # d: regular, loopless
    ],
)
report = is_stably_complete(g)
print("input violations:")
for condition, witnesses in report.violations:
    print(f"  condition {condition} at {witnesses}")
print()

out, trace = canonicalize(g)
print("move trace:", [r.kind for r in trace])
print()
print("canonical output:")
print(out.to_dot())
print()
print("stably complete:", is_stably_complete(out).satisfied)
print("K-theory preserved:", k_groups(out) == k_groups(g))
print()

# running the pipeline again changes nothing: the form is a fixed point
again, trace2 = canonicalize(out)
print("second run is a no-op:", again == out and not [r for r in trace2 if r.kind != "T"])
