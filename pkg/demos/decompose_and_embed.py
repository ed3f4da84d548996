"""Decompose a long T(1,1,2,2)-free caterpillar and embed it in a prefix of
the universal graph.

The true thresholds need a path with 3200 edges; this script uses the
relaxed mode (m = 4, so a path of length 32 suffices) to keep things small,
then runs one full-size graph at the end.
"""

import time

from staruniv.certificates import StarPattern
from staruniv.decomposition import decompose, verify_decomposition
from staruniv.generators import corpus_1122
from staruniv.universal import RegistryUniversal, embed_universal
from staruniv.validate import problems_topological

T = StarPattern((1, 1, 2, 2))

G = corpus_1122(1, seed=7, scale=32 / 3200)[0]["graph"]
D = decompose(G, T, relaxed_m=4)
print(f"{G.n} vertices: core {len(D.core)}, non-trivial parts {len(D.nontrivial_parts())}, "
      f"case {D.trace['case']!r}")
rep = verify_decomposition(G, T, D, relaxed_m=4)
for key in sorted(k for k in rep if k[0].isdigit()):
    print(f"  property {key}: {rep[key]['ok']}")

R = RegistryUniversal(T, relaxed_m=4)
U = embed_universal(G, T, R, relaxed_m=4)
print(f"prefix has {U.prefix.graph.n} vertices, T-free: {U.prefix.meta['t_free']}")
print("validator problems:", problems_topological(G, U.prefix.graph, U.embedding))

# the registry files every part under the class its core vertex demands
for n, i, H in R.items():
    print(f"  class n={n} #{i}: {H.n} vertices")

t0 = time.time()
big = corpus_1122(1, seed=0)[0]["graph"]
U = embed_universal(big, T, RegistryUniversal(T))
print(f"full size: {big.n} vertices embedded into {U.prefix.graph.n} in {time.time() - t0:.1f}s")
