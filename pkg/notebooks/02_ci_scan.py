# %% [markdown]
# # CI subsets and DCI scans
#
# A connection set S is CI when every Cayley digraph isomorphic to Cay(G, S)
# comes from a group automorphism. Verdicts use Babai's criterion and are
# cross-checked against the definition.

# %%
import itertools

from schurlab import ci
from schurlab.groups import make_group

Z8 = make_group([8])
v = ci.is_ci_subset(Z8, [1, 2, 5])
print(v.ci, v.witness)

# %%
# the witness T is isomorphic to S but outside its Aut(Z8)-orbit
T = v.witness["T"]
print(sorted(ci.aut_orbit(Z8, (1, 2, 5))))
print(T in ci.aut_orbit(Z8, (1, 2, 5)))

# %% [markdown]
# Babai versus brute force on every subset of Z6.

# %%
G = make_group([6])
rest = [x for x in G.elements if x]
mismatch = [S for k in range(6) for S in itertools.combinations(rest, k)
            if ci.is_ci_subset(G, S).ci != ci.is_ci_subset_oracle(G, S)]
print("mismatches:", mismatch)

# %%
for factors in ([6], [8], [9], [2, 4]):
    ok, w = ci.is_dci_group(make_group(factors))
    print(factors, "DCI" if ok else f"non-DCI, least bad set {w['set']} with T={w['T']}")
