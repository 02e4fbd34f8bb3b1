"""Sharpness gallery: K2,3, H1 and the Petersen graph.

Run with ``python3 demos/01_gallery.py``. Each cell prints one or two facts;
the final cell runs the full gallery report, which cross-checks every value
against a brute-force oracle.
"""

# %% Build the three graphs and print their graph6 strings.
from hamfree.graph import complete_bipartite, h1, petersen
from hamfree.graph6 import to_graph6

K23, H1, P = complete_bipartite(2, 3), h1(), petersen()
for name, G in [("K2,3", K23), ("H1", H1), ("Petersen", P)]:
    print(f"{name:9s} n={G.n:2d} m={G.m:2d} graph6={to_graph6(G)}")

# %% Exact toughness and connectivity. Values are Fractions with a witness set.
from hamfree.graph import bits
from hamfree.invariants import format_rational, toughness, vertex_connectivity

for name, G in [("K2,3", K23), ("H1", H1), ("Petersen", P)]:
    t = toughness(G)
    print(f"{name:9s} tau={format_rational(t.value):4s} witness={list(bits(t.witness))} kappa={vertex_connectivity(G)}")

# %% Induced pattern freeness. A match comes back as an embedding tuple.
from hamfree.patterns import contains_induced

for name, G, tokens in [
    ("K2,3", K23, ["K1+P2", "2K2"]),
    ("H1", H1, ["K2+P3", "K1+P4", "K1+P5", "2K2"]),
    ("Petersen", P, ["K1+K1,3", "K1+P5", "K1+P6"]),
]:
    for tok in tokens:
        emb = contains_induced(G, tok)
        print(f"{name:9s} {tok:8s} {'free' if emb is None else f'contains at {emb}'}")

# %% None of the three is hamiltonian.
from hamfree.cycles import hamiltonian_cycle, longest_cycle

for name, G in [("K2,3", K23), ("H1", H1), ("Petersen", P)]:
    print(f"{name:9s} hamiltonian={hamiltonian_cycle(G) is not None} longest={longest_cycle(G)}")

# %% The full gallery report. One entry is discrepant: H1 does contain an
# induced 2K2, and the report's details say where.
from hamfree.harness import gallery_check

for report in gallery_check():
    print(report.to_text())
