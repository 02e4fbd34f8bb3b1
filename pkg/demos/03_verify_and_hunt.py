"""Exhaustive verification of the theorems and counterexample hunts.

A claim is checked on every graph of a universe: either the built-in
generator up to some order or a graph6 file. Any violation found by the
fast solvers is re-checked by independent brute-force oracles before it is
reported.
"""

# %% The claim catalogue.
from hamfree.harness import CLAIMS

for cid, claim in CLAIMS.items():
    print(f"{cid:6s} {claim.kind:10s} {claim.hypothesis}")

# %% Verify every theorem over all graphs with at most 6 vertices.
from hamfree.harness import verify_claim

for cid, claim in CLAIMS.items():
    if claim.kind != "conjecture":
        print(verify_claim(cid, 6).to_text())

# %% Hunt the open conjectures over all graphs with at most 7 vertices,
# split over two worker processes.
from hamfree.harness import hunt

for cid, claim in CLAIMS.items():
    if claim.kind == "conjecture":
        print(hunt(cid, 7, jobs=2).to_text())

# %% Reports serialise to JSON with sorted keys.
print(verify_claim("thm2", 5).to_json(with_elapsed=False))
