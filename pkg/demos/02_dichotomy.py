"""The (K1 u P2)-free dichotomy and the layered class ℵ.

Every (K1 u P2)-free graph is either hamiltonian or lies in ℵ with an
independent layer of more than half the vertices. The construction checks
each of its steps and raises ``ProofTraceViolation`` if one fails.
"""

# %% One graph from each arm.
from hamfree.aleph import in_aleph, theorem1_dichotomy
from hamfree.graph import bits, complete, complete_bipartite

for name, G in [("K5", complete(5)), ("K2,3", complete_bipartite(2, 3))]:
    res = theorem1_dichotomy(G)
    if res.hamiltonian:
        print(f"{name}: hamiltonian, cycle {res.cycle}")
    else:
        print(f"{name}: in aleph, independent layer {list(bits(res.indep))}, layers {res.aleph.to_json()}")

# %% The recognizer works on any graph, not only (K1 u P2)-free ones.
# A complete split graph with a big independent side peels in one step.
from hamfree.graph import Graph

G = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (5, 0), (5, 1)])
print("split graph certificate:", in_aleph(G).to_json())
print("path P4 in aleph:", in_aleph(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) is not None)

# %% Inputs outside the hypothesis are refused, not guessed at.
from hamfree.aleph import PreconditionError
from hamfree.graph import path

try:
    theorem1_dichotomy(path(4))
except PreconditionError as exc:
    print("P4 refused:", exc)

# %% Audit every (K1 u P2)-free graph on at most 6 vertices.
from hamfree.harness import audit_dichotomy

print(audit_dichotomy(6).to_text())
