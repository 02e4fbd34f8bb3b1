"""Elementary segments of a longest cycle.

For a component H of G - C, the cycle vertices touching H cut C into
segments. When no path joins the interiors of two different segments,
deleting the contact vertices leaves at least s + 1 components, where s is
the number of contacts.
"""

# %% Decompose a longest cycle of H1.
from hamfree.cycles import longest_cycle
from hamfree.graph import bits, h1
from hamfree.harness import segment_decomposition

G = h1()
C = longest_cycle(G)
print("longest cycle:", C)
for d in segment_decomposition(G, C):
    print("component", list(bits(d.component)), "contacts", d.contacts, "s =", d.s)
    for seg in d.segments:
        print("  segment", seg)
    print("  intermediate paths:", [p.seq for p in d.intermediate_paths] or "none")

# %% The same on K2,3, where the lone off-cycle vertex sees two contacts.
from hamfree.graph import complete_bipartite

K = complete_bipartite(2, 3)
for d in segment_decomposition(K, longest_cycle(K)):
    print("K2,3 contacts", d.contacts, "segments", d.segments, "linked", d.has_intermediate_path)

# %% Audit both segment facts on every graph with at most 6 vertices.
from hamfree.harness import audit_segments

print(audit_segments(6).to_text())
