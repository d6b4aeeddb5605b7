"""The integer-matrix oracle that certifies every transformation.

For each graph we form the matrix with one column per regular vertex,
(A(v,·))ᵗ − χ_v, and diagonalize it over ℤ.  The cokernel data and the
kernel rank are invariant under every move in this package; the random
harness below exercises that on a small corpus, exactly what the
command line's verify subcommand does at scale.
"""

import random

from graphck import k_groups, make_graph, reg_matrix, smith_normal_form
from graphck.corpus import verify_corpus

g = make_graph(["a", "b"], [[3, 1], [2, 0]])
m = reg_matrix(g)
print("relation matrix:", m)
s, u, v = smith_normal_form(m)
print("Smith form diagonal:", [s[i][i] for i in range(len(s[0]))])
print("K-theory pair:", k_groups(g).to_json())
print()

print("a vertex with three loops alone yields 2-torsion:")
print("  ", k_groups(make_graph(["a"], [[3]])).to_json())
print()

passed, failures = verify_corpus(count=50, max_vertices=5, seed=2024)
print(f"random harness: {passed}/50 invariance checks passed")
for index, graph_json, message in failures:
    print("  FAILED", index, message, graph_json)
