"""The gadget graphs G_alpha for T(2,2,2,2).

Builds the instance with alpha = 112..., depth 2 and five paths per H1,
then checks that it avoids T while every single subdivision creates T.
"""

from staruniv.certificates import StarPattern
from staruniv.gadgets import (alternating_sequences, build_G_alpha, check_boundary, check_claim1,
                              check_claim2, level_set, relation_R)

T = StarPattern((2, 2, 2, 2))
print("alternating words of length 4:", alternating_sequences(4))

G = build_G_alpha(T, "112", depth=2, N=5)
print(f"{G.graph.n} vertices, levels", [len(level_set(G, i)) for i in range(3)])
print("types by level:", sorted({(g["level"], g["type"]) for g in G.gadgets}))

print("T-free:", check_claim1(G)["ok"])
rep = check_claim2(G)
print(f"interior edges checked: {rep['checked']}, failures: {len(rep['failures'])}")
print("boundary edges forcing T:", sum(w is not None for w in check_boundary(G).values()))

# tree neighbours are joined by five paths of length two; vertices two
# levels apart are not
a, b = G.tree_edges[0]
print("R(root, child):", relation_R(G.graph, a, b, 2, 5)["form"])
grand = sorted(level_set(G, 2))[0]
print("R(root, grandchild):", relation_R(G.graph, 0, grand, 2, 5))
