"""Non-isomorphic graph generation and canonical labeling.

Graphs are grown one vertex at a time by canonical augmentation, so each
isomorphism class appears exactly once without a global lookup table.
"""

# %% Counts per order match the known sequence.
from hamfree.enumeration import KNOWN_COUNTS, enumerate_graphs

for n in range(1, 8):
    count = sum(1 for _ in enumerate_graphs(n))
    print(f"n={n}  generated={count:5d}  expected={KNOWN_COUNTS[n]}")

# %% Connected graphs only, and a filter for a forbidden pattern.
from hamfree.patterns import is_free

print("connected n=6:", sum(1 for _ in enumerate_graphs(6, connected_only=True)))
print("claw-free connected n=6:", sum(1 for _ in enumerate_graphs(6, True, filter=lambda G: is_free(G, "claw"))))

# %% Relabelled copies share one canonical form.
import random

from hamfree.enumeration import canonical_form
from hamfree.graph import petersen

P = petersen()
perm = list(range(P.n))
random.Random(7).shuffle(perm)
print(canonical_form(P), canonical_form(P.relabel(perm)))

# %% graph6 files round-trip through the stream reader; sharding splits a
# stream round-robin.
import tempfile
from pathlib import Path

from hamfree.enumeration import read_graph6_stream, shard, write_graph6

with tempfile.TemporaryDirectory() as tmp:
    f = Path(tmp) / "n5.g6"
    print("written:", write_graph6(enumerate_graphs(5), f))
    with open(f) as fh:
        graphs = list(read_graph6_stream(fh))
    print("read back:", len(graphs), "shard sizes:", [sum(1 for _ in shard(graphs, i, 3)) for i in range(3)])
