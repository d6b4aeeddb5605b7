"""Hereditary saturated sets, breaking vertices, and the ideal lattice.

Admissible pairs (H, S) index the gauge-invariant ideal structure; for
finite-vertex graphs these are exactly the compact ideals, so the
lattice below is a complete invariant picture of them.
"""

from graphck import admissible_pairs, breaking_vertices, make_graph, restriction_graph

# v emits infinitely to w and twice to z; w and z carry loops
g = make_graph(
    ["v", "w", "z"],
    [
        [0, "inf", 2],
        [0, 1, 0],
        [0, 0, 1],
    ],
)

print("breaking vertices for H = {w}:", sorted(breaking_vertices(g, {"w"})))
print("  (v keeps exactly two edges out of H, finitely many but not none)")
print()

lattice = admissible_pairs(g)
print(f"{len(lattice.nodes)} admissible pairs:")
for pair in lattice.nodes:
    print("  H =", sorted(pair.h), " S =", sorted(pair.s))
print()

print("Hasse diagram:")
print(lattice.to_dot())
print()

pair = next(p for p in lattice.nodes if p.h == frozenset({"w"}) and p.s)
sub = restriction_graph(g, pair)
print(f"restriction graph of (H={sorted(pair.h)}, S={sorted(pair.s)}):")
print(sub.to_json())
print("  (the breaking vertex keeps only its edges into H)")
