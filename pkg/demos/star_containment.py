"""Subdivided stars inside the Petersen graph.

Run with ``python3 demos/star_containment.py``.
"""

from staruniv import documents as docs
from staruniv.certificates import StarPattern
from staruniv.containment import contains_minor, contains_star, contains_topological
from staruniv.generators import petersen
from staruniv.graph import complete_bipartite, complete_graph

P = petersen()

# The Petersen graph is 3-regular, so S_3 fits at every vertex but S_4 nowhere.
for legs in [(1, 1, 1), (1, 1, 1, 1), (2, 2, 2), (3, 3, 3)]:
    T = StarPattern(legs)
    w = contains_star(P, T)
    print(f"{T}: {'centre ' + str(w.centre) if w else 'absent'}")

# For a star, "subgraph" and "topological minor" mean the same thing; for
# other patterns they differ. K_{3,3} is a topological minor, K_5 only a minor.
emb = contains_topological(complete_bipartite(3, 3), P)
print("K33 topological minor:", emb is not None)
print("K5 topological minor:", contains_topological(complete_graph(5), P) is not None)
model = contains_minor(complete_graph(5), P)
print("K5 minor, branch sets:", model.branch_sets)

# Every positive answer comes with a certificate that the validators
# re-check without touching the search code.
doc = docs.minor_doc(complete_graph(5), P, model)
print("certificate problems:", docs.verify_document(doc))
